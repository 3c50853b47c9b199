#pragma once

// Wall divisors of U^3+(-2)^2, certified enumeration of the walls between
// two classes of a hyperbolic Picard lattice, the Kahler and
// birational-Kahler chamber queries, and the lagrangian fibration detector.

#include "og6/lattice.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace og6 {

enum class WallKind { StablyPrimeExceptional, WallNotExceptional, NotAWall, NotNegative };
std::string to_string(WallKind kind);

/// The table on (norm, div): (-4,2) and (-2,2) are stably prime exceptional,
/// (-2,1) is a wall that is not exceptional, other negative classes are not
/// walls.
WallKind wall_kind(const Integer& norm, const Integer& div);

struct WallClassification {
  WallKind kind;
  Integer norm;
  Integer div;
  std::string witness;
};
/// Primitive nonzero class of U^3+(-2)^2. ZeroVector, NotPrimitive, WrongLattice.
WallClassification classify_divisor(const LatticeVector& alpha);

/// The four families of negative classes that the classification rules out,
/// in OG6 coordinates:
///   A: a e1 - f1                    (a > 1)
///   B: -2a e1 + 2 f1 - zeta - eps   (a >= 1)
///   C: -2a e1 + 2 f1 - zeta
///   D: -2a e1 + 2 f1 - eps
LatticeVector proof_form(char form, long a);

/// A sublattice of an ambient lattice spanned by the columns of `basis`,
/// with hyperbolic induced form.
struct PicardData {
  LatticePtr ambient;
  IntMatrix basis;      // ambient coordinates, one column per generator
  LatticePtr lattice;   // induced Gram matrix
};
/// InvalidInput for dependent columns; NotHyperbolic unless the induced form
/// has signature (1, rho-1).
PicardData make_picard(const LatticePtr& ambient, const IntMatrix& basis);

struct WallSpec {
  Integer norm;
  Integer div;  // divisibility in the ambient lattice
  bool operator<(const WallSpec& other) const;
  bool operator==(const WallSpec& other) const = default;
};

/// Primitive classes w of the Picard lattice (pic coordinates) whose norm
/// and ambient divisibility match one of the WallSpecs, with (w,x)(w,k) < 0 in
/// `separating` and (w,x) = 0 in `through_x`. Signs are fixed by (w,k) > 0,
/// or lexicographically when (w,k) = 0. Both lists sorted.
struct WallList {
  std::vector<IntVector> separating;
  std::vector<IntVector> through_x;
};
/// x and k are in pic coordinates. NotPositive unless x^2 > 0, k^2 > 0 and
/// (x,k) > 0.
WallList enumerate_separating_walls(const PicardData& pic, const RatVector& x, const RatVector& k,
                                    const std::vector<WallSpec>& spec);

/// Upper bound for the majorant Q(w) = 2 (w,k)^2 / k^2 - w^2 over all w of
/// norm n with (w,x) <= 0 <= (w,k); every wall above satisfies it.
Rational majorant_bound(const PicardData& pic, const RatVector& x, const RatVector& k, const Integer& n);
/// Gram matrix of the positive definite majorant Q.
RatMatrix majorant_gram(const PicardData& pic, const RatVector& k);

/// All integer vectors with y^T q y <= bound, q positive definite.
std::vector<IntVector> short_vectors(const RatMatrix& q, const Rational& bound);

struct ChamberReport {
  bool in_chamber = false;
  bool on_boundary = false;
  std::vector<IntVector> separating_walls;
  std::vector<IntVector> boundary_walls;
};
std::vector<WallSpec> kahler_walls();             // (-2,1), (-2,2), (-4,2)
std::vector<WallSpec> birational_kahler_walls();  // (-2,2), (-4,2)
/// Open chamber of k: x is inside iff no wall separates it from k or passes
/// through it.
ChamberReport kahler_chamber_query(const PicardData& pic, const RatVector& x, const RatVector& k);
/// Closure semantics: walls through x do not exclude it.
ChamberReport birational_kahler_closure_query(const PicardData& pic, const RatVector& x, const RatVector& k);

struct LagrangianReport {
  LatticeVector primitive_part;
  Integer divisibility;
  bool fibration_exists = true;
  std::string base = "P3";
  std::array<int, 3> fiber_polarization{1, 2, 2};
};
/// ZeroVector, NotIsotropic, WrongLattice.
LagrangianReport detect_lagrangian(const LatticeVector& d);

struct Div2Scan {
  std::int64_t box = 0;
  std::int64_t scanned = 0;
  std::int64_t primitive_div2 = 0;
  std::int64_t isotropic_div2 = 0;
  std::array<std::int64_t, 8> residues{};  // norms mod 8
};
/// Exhaustive over U^3+(-2)^2 with coordinates in [-box, box].
Div2Scan isotropic_div2_scan(std::int64_t box);

}  // namespace og6
