#pragma once

// Exact integer and rational linear algebra: Smith normal form with
// transforms, Bareiss determinants, kernels, and congruence diagonalization.

#include "og6/scalar.hpp"

#include <vector>

namespace og6 {

/// left * A * right == diag(diagonal) padded with zeros; left/right unimodular.
struct SmithForm {
  IntMatrix left;
  IntMatrix right;
  std::vector<Integer> diagonal;  // positive, each divides the next
  Index rank = 0;
};

/// Pivot rule: the nonzero entry of least absolute value, leftmost column
/// first, then topmost row. Deterministic for a given input.
SmithForm smith_normal_form(const IntMatrix& a);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& a);
Rational determinant(const RatMatrix& a);

/// Gauss-Jordan inverse; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& a);

/// Saturated basis (as columns) of {x in Z^n : a x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Basis (as columns) of the Z-span of the columns of a.
IntMatrix column_lattice_basis(const IntMatrix& a);

/// Rank over Q.
Index rank_of(const RatMatrix& a);

/// basis^T gram basis == diag(diagonal). Columns are processed in
/// pivot_order (identity order if empty).
struct Diagonalization {
  RatMatrix basis;
  std::vector<Rational> diagonal;
};
Diagonalization diagonalize(const RatMatrix& gram, const std::vector<Index>& pivot_order = {});

struct Signature {
  Index positive = 0;
  Index negative = 0;
  Index zero = 0;
  bool operator==(const Signature&) const = default;
};
Signature signature_of(const RatMatrix& gram);

}  // namespace og6
