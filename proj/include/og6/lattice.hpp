#pragma once

// Even lattices given by Gram matrices, their vectors, and the basic
// invariants: pairing, norm, divisibility, primitivity, complements.

#include "og6/errors.hpp"
#include "og6/normal_form.hpp"
#include "og6/scalar.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace og6 {

/// L^dual / L computed from the Smith form of the Gram matrix.
struct DiscriminantGroup {
  std::vector<Integer> orders;  // elementary divisors > 1
  RatMatrix lifts;              // column i lifts generator i, entries in [0,1)
  IntMatrix coefficient_map;    // class of x in L^dual: coefficient_map * (G x) mod orders

  Index size() const { return static_cast<Index>(orders.size()); }
  Integer cardinality() const;
};

class Lattice {
 public:
  const IntMatrix& gram() const { return gram_; }
  Index rank() const { return gram_.rows(); }
  /// Named summands such as "U" or "(-2)", empty if none was recorded.
  const std::vector<std::string>& summands() const { return summands_; }
  std::string tag() const;
  bool degenerate() const { return degenerate_; }
  /// Number of leading U summands of the recorded decomposition.
  Index leading_hyperbolic_planes() const;
  /// Throws Degenerate for degenerate lattices.
  const DiscriminantGroup& discriminant() const;
  Integer det() const;

  friend std::shared_ptr<const Lattice> make_lattice(const IntMatrix&, const std::string&);
  friend std::shared_ptr<const Lattice> make_possibly_degenerate(const IntMatrix&);

 private:
  IntMatrix gram_;
  std::vector<std::string> summands_;
  bool degenerate_ = false;
  std::optional<DiscriminantGroup> disc_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// Validates symmetry, evenness and nondegeneracy. A non-empty tag such as
/// "U^3+(-2)^2" must describe the Gram matrix exactly.
LatticePtr make_lattice(const IntMatrix& gram, const std::string& tag = "");
/// Symmetric and even, but possibly degenerate (orthogonal complements).
LatticePtr make_possibly_degenerate(const IntMatrix& gram);
/// k hyperbolic planes followed by m copies of (-2).
LatticePtr standard_lattice(int k, int m);
/// Block Gram matrix of a tag; throws InvalidTag.
IntMatrix gram_from_tag(const std::string& tag, std::vector<std::string>* summands = nullptr);

/// Orthogonal direct sum with the summand tags concatenated when both exist.
LatticePtr direct_sum(const LatticePtr& a, const LatticePtr& b);

bool same_lattice(const Lattice& a, const Lattice& b);

struct LatticeVector {
  LatticePtr lattice;
  IntVector coords;

  LatticeVector() = default;
  LatticeVector(LatticePtr l, IntVector c);
  bool operator==(const LatticeVector& other) const;
};

struct RationalVector {
  LatticePtr lattice;
  RatVector coords;
};

LatticeVector make_vector(const LatticePtr& l, std::initializer_list<long> coords);

Integer pair(const LatticeVector& v, const LatticeVector& w);
Integer norm(const LatticeVector& v);
Rational pair(const RationalVector& v, const RationalVector& w);
Rational norm(const RationalVector& v);

/// gcd of the pairings with all basis vectors; ZeroVector for v = 0.
Integer divisibility(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);
LatticeVector primitive_part(const LatticeVector& v);

struct Sublattice {
  LatticePtr lattice;   // induced form, possibly degenerate
  LatticePtr ambient;
  IntMatrix embedding;  // ambient coordinates of the basis, one column each
};

/// Saturated orthogonal complement of the given vectors.
Sublattice orthogonal_complement(const std::vector<LatticeVector>& vs);
Sublattice orthogonal_complement(const LatticePtr& ambient, const IntMatrix& columns);

Signature signature(const Lattice& l);

}  // namespace og6
