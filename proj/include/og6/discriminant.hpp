#pragma once

// Elements of the discriminant group, the discriminant quadratic form, and
// overlattices attached to isotropic subgroups.

#include "og6/lattice.hpp"

#include <vector>

namespace og6 {

struct DiscriminantElement {
  LatticePtr lattice;
  std::vector<Integer> coeffs;  // reduced modulo the orders of the generators

  bool is_zero() const;
  bool operator==(const DiscriminantElement& other) const;
  bool operator<(const DiscriminantElement& other) const;
};

const DiscriminantGroup& discriminant_group(const Lattice& l);

DiscriminantElement zero_class(const LatticePtr& l);
DiscriminantElement generator_class(const LatticePtr& l, Index i);
DiscriminantElement operator+(const DiscriminantElement& a, const DiscriminantElement& b);
DiscriminantElement scale(const DiscriminantElement& a, const Integer& k);

/// Class of a vector of the dual lattice; NotDual otherwise.
DiscriminantElement dual_class(const RationalVector& x);
/// Class of v / div(v); NotPrimitive if v is not primitive.
DiscriminantElement disc_class(const LatticeVector& v);

/// sum of coeff_i * lift_i with every coordinate reduced into [0,1).
RationalVector canonical_lift(const DiscriminantElement& x);

/// Norm of a lift reduced into [0,2).
Rational q_value(const DiscriminantElement& x);
/// Pairing of lifts reduced into [0,1).
Rational b_value(const DiscriminantElement& x, const DiscriminantElement& y);

/// Every element of the group, in lexicographic order of coefficients.
std::vector<DiscriminantElement> all_elements(const LatticePtr& l);

struct Overlattice {
  LatticePtr base;      // L
  LatticePtr lattice;   // N, Gram in the new basis
  Integer index;        // [N : L]
  RatMatrix basis;      // basis of N in coordinates of L
  IntMatrix embedding;  // basis of L in coordinates of N (the inverse of basis)
};

/// Preimage in L^dual of the subgroup generated by H; NotIsotropic unless
/// every q value vanishes mod 2 and all mutual pairings are integral.
Overlattice overlattice_from_isotropic(const LatticePtr& l, const std::vector<DiscriminantElement>& h);

std::string to_string(const DiscriminantElement& x);

}  // namespace og6
