#pragma once

// Independent oracles and the claim battery behind `verify-claims` and the
// acceptance binary.

#include "og6/cones.hpp"
#include "og6/isometry.hpp"
#include "og6/orbits.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace og6::verify {

// ---- oracles -------------------------------------------------------------

/// Coordinate box containing every wall candidate: |w_i| <= sqrt(C (Q^-1)_ii)
/// with Q the majorant of k and C the largest majorant bound over the WallSpecs.
std::int64_t wall_box(const PicardData& pic, const RatVector& x, const RatVector& k,
                      const std::vector<WallSpec>& spec);
/// Every vector of that box tested directly against the wall conditions.
WallList brute_force_walls(const PicardData& pic, const RatVector& x, const RatVector& k,
                           const std::vector<WallSpec>& spec);

/// q values of the nonzero classes of A_L, each computed as the norm of a
/// dual vector found by searching (L-dual)/L coset lifts directly:
/// y = G^-1 z for z in a box, reduced mod 2, checked stable under |l| <= 2
/// perturbations. Sorted. Throws InternalCaseFailure if a lift disagrees.
std::vector<Rational> brute_force_q_values(const LatticePtr& l);

/// Determinant by expansion along the first row.
Integer cofactor_det(const IntMatrix& m);

// ---- generator pools -----------------------------------------------------

/// t(e, a) with e a basis vector of one of the leading hyperbolic planes and
/// a a random vector orthogonal to e with entries in [-bound, bound].
Isometry random_transvection(std::mt19937_64& rng, const LatticePtr& l, int bound = 2);
/// A word of the given length in transvections, the summand swap, R_{zeta+eps}
/// and the negation of zeta; always in O+(U^3+(-2)^2).
Isometry random_og6_element(std::mt19937_64& rng, int length);
/// The ten transvections t(e_i, x) (e_i in {e1,f1,e2,f2}, x a unit vector
/// orthogonal to it and outside its plane, plus t(e1, t), t(f1, t) for the
/// (-2) generator t) on U^2+(-2).
std::vector<Isometry> u2_minus2_generators();

// ---- claims --------------------------------------------------------------

enum class Scale { Smoke, Full };

struct ClaimResult {
  std::string id;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct ClaimContext {
  std::uint64_t seed = 0;
  Scale scale = Scale::Smoke;
  /// U^3+(-2)^2, or a copy with one Gram entry negated for the negative control.
  LatticePtr og6;
};

struct Claim {
  std::string id;
  std::string summary;
  std::function<ClaimResult(const ClaimContext&)> run;
};

/// All claims, sorted by id.
const std::vector<Claim>& claims();
/// Deterministic seed for one claim.
std::uint64_t claim_seed(std::uint64_t seed, const std::string& id);
ClaimContext make_context(std::uint64_t seed, Scale scale, bool tamper);
/// Runs every claim (in parallel), results sorted by id.
std::vector<ClaimResult> verify_claims(std::uint64_t seed, Scale scale, bool tamper = false);

}  // namespace og6::verify
