#include "og6/discriminant.hpp"

namespace og6 {
namespace {

DiscriminantElement reduced(const LatticePtr& l, std::vector<Integer> coeffs) {
  const auto& g = l->discriminant();
  for (Index i = 0; i < g.size(); ++i) coeffs[i] = mod_floor(coeffs[i], g.orders[i]);
  return DiscriminantElement{l, std::move(coeffs)};
}

}  // namespace

bool DiscriminantElement::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

bool DiscriminantElement::operator==(const DiscriminantElement& other) const {
  return same_lattice(*lattice, *other.lattice) && coeffs == other.coeffs;
}

bool DiscriminantElement::operator<(const DiscriminantElement& other) const {
  return coeffs < other.coeffs;
}

const DiscriminantGroup& discriminant_group(const Lattice& l) { return l.discriminant(); }

DiscriminantElement zero_class(const LatticePtr& l) {
  return DiscriminantElement{l, std::vector<Integer>(l->discriminant().size(), Integer(0))};
}

DiscriminantElement generator_class(const LatticePtr& l, Index i) {
  auto z = zero_class(l);
  require(i >= 0 && i < static_cast<Index>(z.coeffs.size()), ErrorKind::InvalidInput, "no such generator");
  z.coeffs[i] = 1;
  return z;
}

DiscriminantElement operator+(const DiscriminantElement& a, const DiscriminantElement& b) {
  require(same_lattice(*a.lattice, *b.lattice), ErrorKind::LatticeMismatch, "classes of different lattices");
  std::vector<Integer> c(a.coeffs.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs[i] + b.coeffs[i];
  return reduced(a.lattice, std::move(c));
}

DiscriminantElement scale(const DiscriminantElement& a, const Integer& k) {
  std::vector<Integer> c(a.coeffs.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs[i] * k;
  return reduced(a.lattice, std::move(c));
}

DiscriminantElement dual_class(const RationalVector& x) {
  const auto& l = x.lattice;
  require(x.coords.size() == l->rank(), ErrorKind::DimensionMismatch, "vector length mismatch");
  RatVector gx = to_rational(l->gram()) * x.coords;
  auto integral = to_integer(gx);
  require(integral.has_value(), ErrorKind::NotDual, "vector is not in the dual lattice");
  const auto& g = l->discriminant();
  IntVector c = g.coefficient_map * *integral;
  std::vector<Integer> coeffs(c.data(), c.data() + c.size());
  return reduced(l, std::move(coeffs));
}

DiscriminantElement disc_class(const LatticeVector& v) {
  require(is_primitive(v), ErrorKind::NotPrimitive, "discriminant class needs a primitive vector");
  Integer d = divisibility(v);
  RatVector x = to_rational(v.coords) / Rational(d);
  return dual_class(RationalVector{v.lattice, x});
}

RationalVector canonical_lift(const DiscriminantElement& x) {
  const auto& g = x.lattice->discriminant();
  RatVector v = RatVector::Zero(x.lattice->rank());
  for (Index i = 0; i < g.size(); ++i) v += Rational(x.coeffs[i]) * g.lifts.col(i);
  for (Index i = 0; i < v.size(); ++i) v(i) = reduce_mod(v(i), Integer(1));
  return RationalVector{x.lattice, v};
}

Rational q_value(const DiscriminantElement& x) {
  return reduce_mod(norm(canonical_lift(x)), Integer(2));
}

Rational b_value(const DiscriminantElement& x, const DiscriminantElement& y) {
  return reduce_mod(pair(canonical_lift(x), canonical_lift(y)), Integer(1));
}

std::vector<DiscriminantElement> all_elements(const LatticePtr& l) {
  const auto& g = l->discriminant();
  std::vector<DiscriminantElement> out;
  std::vector<Integer> c(g.size(), Integer(0));
  for (;;) {
    out.push_back(DiscriminantElement{l, c});
    Index i = g.size() - 1;
    while (i >= 0) {
      c[i] += 1;
      if (c[i] < g.orders[i]) break;
      c[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

Overlattice overlattice_from_isotropic(const LatticePtr& l, const std::vector<DiscriminantElement>& h) {
  for (std::size_t i = 0; i < h.size(); ++i) {
    require(same_lattice(*h[i].lattice, *l), ErrorKind::LatticeMismatch, "class of another lattice");
    require(q_value(h[i]) == 0, ErrorKind::NotIsotropic,
            "q value " + to_string(q_value(h[i])) + " of generator " + std::to_string(i) + " is not 0 mod 2");
    for (std::size_t j = i + 1; j < h.size(); ++j)
      require(b_value(h[i], h[j]) == 0, ErrorKind::NotIsotropic, "generators pair non-integrally");
  }
  const Index n = l->rank();
  RatMatrix gens(n, n + static_cast<Index>(h.size()));
  gens.leftCols(n) = RatMatrix::Identity(n, n);
  for (std::size_t j = 0; j < h.size(); ++j) gens.col(n + static_cast<Index>(j)) = canonical_lift(h[j]).coords;
  Integer den = common_denominator(gens);
  IntMatrix scaled = *to_integer(RatMatrix(gens * Rational(den)));
  IntMatrix basis_int = column_lattice_basis(scaled);

  Overlattice out;
  out.base = l;
  out.basis = to_rational(basis_int) / Rational(den);
  RatMatrix gram = out.basis.transpose() * to_rational(l->gram()) * out.basis;
  auto gram_int = to_integer(gram);
  require(gram_int.has_value(), ErrorKind::NonIntegralResult, "overlattice Gram matrix is not integral");
  out.lattice = make_lattice(*gram_int);
  auto inv = inverse(out.basis);
  require(inv.has_value(), ErrorKind::NonIntegralResult, "overlattice basis is singular");
  auto emb = to_integer(*inv);
  require(emb.has_value(), ErrorKind::NonIntegralResult, "L is not contained in the overlattice");
  out.embedding = *emb;
  Rational index = Rational(1) / abs(determinant(out.basis));
  require(is_integral(index), ErrorKind::NonIntegralResult, "non-integral index");
  out.index = boost::multiprecision::numerator(index);
  return out;
}

std::string to_string(const DiscriminantElement& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (i) s += ",";
    s += x.coeffs[i].str();
  }
  return s + "]";
}

}  // namespace og6
