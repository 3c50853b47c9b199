#pragma once

// Orbit invariants of primitive vectors in lattices with two hyperbolic
// planes, constructive transport by transvection words, and brute-force
// orbit oracles.

#include "og6/discriminant.hpp"
#include "og6/isometry.hpp"
#include "og6/lattice.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace og6 {

struct OrbitInvariants {
  Integer norm;
  Integer div;
  DiscriminantElement disc;  // class of v / div(v)

  bool operator==(const OrbitInvariants& other) const;
};

/// NotPrimitive; NoU2Decomposition unless the lattice records U^2 in front.
OrbitInvariants orbit_invariants(const LatticeVector& v);
bool same_orbit_SOtilde_plus(const LatticeVector& v, const LatticeVector& w);

/// d e1 + h f1 + d mu, where mu is the canonical lift of the class and h is
/// fixed by the norm. Has exactly the given invariants.
LatticeVector canonical_representative(const LatticePtr& l, const OrbitInvariants& inv);

/// A transvection word g with g(v) equal to the canonical representative.
IsometryWord reduce_to_canonical(const LatticeVector& v);
/// A transvection word g with g(v) = w; OrbitMismatch if invariants differ.
IsometryWord transport(const LatticeVector& v, const LatticeVector& w);

/// U^3+(-2)^2 with basis (e1,f1,e2,f2,e3,f3,zeta,eps); WrongLattice otherwise.
bool same_orbit_O_plus_og6(const LatticeVector& v, const LatticeVector& w);
/// A word in O+ mapping v to w, when same_orbit_O_plus_og6 holds.
std::optional<IsometryWord> same_orbit_O_plus_og6_witness(const LatticeVector& v, const LatticeVector& w);
/// The swap of the two (-2) summands of U^3+(-2)^2.
Isometry og6_summand_swap(const LatticePtr& og6);

/// Closure of {v} under the generators and their inverses inside the box
/// |coord| <= box, sorted lexicographically.
std::vector<std::vector<std::int64_t>> orbit_oracle_bfs(const std::vector<Isometry>& generators,
                                                        const LatticeVector& v, std::int64_t box);

/// Partition of all primitive vectors of the box into generator orbits
/// (restricted to the box). Component ids are assigned in lexicographic order.
struct OrbitPartition {
  std::vector<std::vector<std::int64_t>> vectors;
  std::vector<int> component;
  int components = 0;
};
OrbitPartition orbit_partition_bfs(const std::vector<Isometry>& generators, const LatticePtr& l,
                                   std::int64_t box);

/// t(e2,e1), t(e2,f1), t(f2,e1), t(f2,f1) on U^2.
std::vector<TransvectionAtom> u2_generators();

struct U2Decomposition {
  bool found = false;  // false: depth cap reached without a word
  IsometryWord word;
  int depth_searched = 0;
};
/// Shortest word in the four transvections and their inverses evaluating to
/// g, by bidirectional breadth-first search up to max_depth letters.
/// NotInSOPlus if g is not in SO+(U^2).
U2Decomposition decompose_SOplus_U2(const Isometry& g, int max_depth = 12);

}  // namespace og6
