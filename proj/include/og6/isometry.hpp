#pragma once

// Gram-preserving integer maps, Eichler transvections, reflections, the
// subgroup predicates O+, SO, Otilde, and the two extension constructions.

#include "og6/discriminant.hpp"
#include "og6/lattice.hpp"

#include <string>
#include <variant>
#include <vector>

namespace og6 {

/// Acts on column coordinate vectors: v -> matrix * v.
struct Isometry {
  LatticePtr lattice;
  IntMatrix matrix;

  bool operator==(const Isometry& other) const;
};

/// Checks M^T G M == G; NotIsometry otherwise.
Isometry make_isometry(const LatticePtr& l, const IntMatrix& m);
Isometry identity_isometry(const LatticePtr& l);

/// t(e,a)(v) = v - (a,v) e + (e,v) a - (a,a)/2 (e,v) e.
Isometry transvection(const LatticeVector& e, const LatticeVector& a);
/// The same map as a bare matrix, templated for the int64 scans.
template <typename Scalar>
Mat<Scalar> transvection_matrix(const Mat<Scalar>& gram, const Vec<Scalar>& e, const Vec<Scalar>& a) {
  const Index n = gram.rows();
  Vec<Scalar> ge = gram * e;
  Vec<Scalar> ga = gram * a;
  Scalar half_aa = a.dot(ga) / Scalar(2);
  Mat<Scalar> m = Mat<Scalar>::Identity(n, n);
  m -= e * ga.transpose();
  m += a * ge.transpose();
  m -= half_aa * (e * ge.transpose());
  return m;
}

/// R_D(v) = v - 2 (D,v)/(D,D) D.
Isometry reflection_in(const LatticeVector& d);

Integer det(const Isometry& g);
/// g after h.
Isometry compose(const Isometry& g, const Isometry& h);
Isometry inverse(const Isometry& g);
LatticeVector apply(const Isometry& g, const LatticeVector& v);
DiscriminantElement apply(const Isometry& g, const DiscriminantElement& x);

/// Sign of det[(g w_i, w_j)] over a positive-definite rational basis w_i
/// taken from the congruence diagonalization in the given pivot order.
bool preserves_positive_cone_orientation(const Isometry& g, const std::vector<Index>& pivot_order = {});
bool acts_trivially_on_discriminant(const Isometry& g);

struct Membership {
  bool in_O_plus = false;
  bool in_SO = false;
  bool in_SO_plus = false;
  bool in_Otilde = false;
  bool in_SOtilde_plus = false;
};
Membership membership(const Isometry& g);

/// f on the first summand of the base L (+) M of an overlattice N, extended
/// by the identity on M and rewritten in the basis of N.
/// NotInOtilde if f does not act trivially on A_L.
Isometry extend_isometry(const Isometry& f, const Overlattice& n);

/// The isometry of the ambient lattice that fixes w (of norm 2) and restricts
/// to gamma on the complement described by `complement`.
Isometry extend_fixing_square2(const Isometry& gamma, const Sublattice& complement, const LatticeVector& w);

struct TransvectionAtom {
  IntVector e;
  IntVector a;
};
struct ReflectionAtom {
  IntVector d;
};
struct OpaqueAtom {
  IntMatrix matrix;
  std::string label;
};
using Atom = std::variant<TransvectionAtom, ReflectionAtom, OpaqueAtom>;

/// atoms [A1, ..., An] evaluate to A1 o ... o An (rightmost acts first).
struct IsometryWord {
  LatticePtr lattice;
  std::vector<Atom> atoms;

  std::size_t size() const { return atoms.size(); }
  bool empty() const { return atoms.empty(); }
};

Isometry atom_isometry(const LatticePtr& l, const Atom& atom);
Isometry evaluate(const IsometryWord& w);
IsometryWord inverse(const IsometryWord& w);
/// first o second.
IsometryWord concat(const IsometryWord& first, const IsometryWord& second);
/// Merges adjacent transvections with the same isotropic vector and drops
/// trivial ones; the evaluated map is unchanged.
IsometryWord simplify(const IsometryWord& w);

}  // namespace og6
