#include "doctest.h"

#include "og6/lattice.hpp"

#include <random>

using namespace og6;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, Index r, Index c, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

// Cofactor expansion, independent of the Bareiss routine.
Integer cofactor_det(const IntMatrix& m) {
  const Index n = m.rows();
  if (n == 1) return m(0, 0);
  Integer total(0);
  for (Index j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (Index r = 1; r < n; ++r)
      for (Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Integer term = m(0, j) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

}  // namespace

TEST_CASE("smith form is a unimodular diagonalization with a divisor chain") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Index r = 1 + trial % 5, c = 1 + (trial / 5) % 6;
    IntMatrix a = random_matrix(rng, r, c, 6);
    if (trial % 7 == 0) a.row(0) = a.row(r - 1) * Integer(2);
    SmithForm s = smith_normal_form(a);
    IntMatrix d = s.left * a * s.right;
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) {
        if (i == j && i < s.rank) CHECK(d(i, j) == s.diagonal[i]);
        else CHECK(d(i, j) == 0);
      }
    CHECK(abs_value(determinant(s.left)) == 1);
    CHECK(abs_value(determinant(s.right)) == 1);
    for (Index i = 0; i + 1 < s.rank; ++i) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    for (const auto& x : s.diagonal) CHECK(x > 0);
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Index n = 1 + trial % 5;
    IntMatrix a = random_matrix(rng, n, n, 9);
    CHECK(determinant(a) == cofactor_det(a));
    CHECK(determinant(to_rational(a)) == Rational(cofactor_det(a)));
  }
}

TEST_CASE("integer kernel is saturated and spans the rational kernel") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix a = random_matrix(rng, 2, 5, 4);
    IntMatrix k = integer_kernel(a);
    CHECK(IntMatrix(a * k).isZero());
    CHECK(k.cols() == 5 - rank_of(to_rational(a)));
    // saturation: the columns extend to a unimodular basis, i.e. the Smith
    // diagonal of k is all ones
    SmithForm s = smith_normal_form(k);
    for (const auto& x : s.diagonal) CHECK(x == 1);
  }
}

TEST_CASE("diagonalization is a congruence") {
  RatMatrix g = to_rational(gram_from_tag("U^3+(-2)^2"));
  for (std::vector<Index> order : {std::vector<Index>{}, std::vector<Index>{7, 6, 5, 4, 3, 2, 1, 0}}) {
    Diagonalization d = diagonalize(g, order);
    RatMatrix m = d.basis.transpose() * g * d.basis;
    for (Index i = 0; i < 8; ++i)
      for (Index j = 0; j < 8; ++j) CHECK(m(i, j) == (i == j ? d.diagonal[i] : Rational(0)));
  }
  CHECK(signature_of(g) == Signature{3, 5, 0});
}

TEST_CASE("make_lattice validates its input") {
  auto u = make_lattice(int_matrix({{0, 1}, {1, 0}}));
  CHECK(u->rank() == 2);
  CHECK(make_lattice(int_matrix({{-2}}))->rank() == 1);
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidInput;
  };
  CHECK(kind_of([] { make_lattice(int_matrix({{1}})); }) == ErrorKind::NotEven);
  CHECK(kind_of([] { make_lattice(int_matrix({{0, 1}, {2, 0}})); }) == ErrorKind::NotSymmetric);
  CHECK(kind_of([] { make_lattice(int_matrix({{0, 0}, {0, 0}})); }) == ErrorKind::Degenerate);
  CHECK(kind_of([] { make_lattice(int_matrix({{0, 1}, {1, 0}}), "(-2)^2"); }) == ErrorKind::InvalidTag);
}

TEST_CASE("standard lattices") {
  auto l = standard_lattice(3, 2);
  CHECK(l->rank() == 8);
  CHECK(l->det() == -4);
  CHECK(abs_value(l->det()) == 4);
  CHECK(l->tag() == "U^3+(-2)^2");
  CHECK(l->leading_hyperbolic_planes() == 3);
  CHECK(standard_lattice(1, 0)->gram() == int_matrix({{0, 1}, {1, 0}}));
  CHECK(standard_lattice(4, 0)->det() == 1);
}

TEST_CASE("pairing, norm, divisibility") {
  auto u = standard_lattice(1, 0);
  auto e = make_vector(u, {1, 0}), f = make_vector(u, {0, 1});
  CHECK(pair(e, f) == 1);
  CHECK(norm(make_vector(u, {1, 1})) == 2);
  CHECK(divisibility(e) == 1);
  CHECK(divisibility(make_vector(standard_lattice(0, 1), {1})) == 2);

  auto l = standard_lattice(3, 2);
  auto zeta = make_vector(l, {0, 0, 0, 0, 0, 0, 1, 0});
  auto eps = make_vector(l, {0, 0, 0, 0, 0, 0, 0, 1});
  auto ze = make_vector(l, {0, 0, 0, 0, 0, 0, 1, 1});
  CHECK(norm(ze) == -4);
  CHECK(divisibility(eps) == 2);
  CHECK(divisibility(ze) == 2);
  CHECK(divisibility(zeta) == 2);
  CHECK_THROWS_AS(divisibility(make_vector(l, {0, 0, 0, 0, 0, 0, 0, 0})), Error);
  CHECK_THROWS_AS(pair(e, zeta), Error);

  // divisibility divides every pairing
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    IntVector v(8), w(8);
    for (Index i = 0; i < 8; ++i) {
      v(i) = dist(rng);
      w(i) = dist(rng);
    }
    if (v.isZero()) continue;
    LatticeVector lv(l, v), lw(l, w);
    CHECK(pair(lv, lw) % divisibility(lv) == 0);
    CHECK(pair(lv, lw) == pair(lw, lv));
    CHECK(norm(lv) % 2 == 0);
  }
}

TEST_CASE("primitivity") {
  auto u = standard_lattice(1, 0);
  CHECK(primitive_part(make_vector(u, {2, 4})).coords == int_vector({1, 2}));
  CHECK(is_primitive(make_vector(u, {1, 0})));
  auto mukai = standard_lattice(4, 0);
  auto two_w = make_vector(mukai, {2, 0, -2, 0, 0, 0, 0, 0});
  CHECK(primitive_part(two_w).coords == int_vector({1, 0, -1, 0, 0, 0, 0, 0}));
}

TEST_CASE("orthogonal complements") {
  auto u = standard_lattice(1, 0);
  auto ce = orthogonal_complement({make_vector(u, {1, 0})});
  CHECK(ce.lattice->degenerate());
  CHECK(ce.lattice->gram() == int_matrix({{0}}));
  CHECK(abs_value(content(IntVector(ce.embedding.col(0)))) == 1);
  bool unit_column = ce.embedding.col(0) == int_vector({1, 0}) || ce.embedding.col(0) == int_vector({-1, 0});
  CHECK(unit_column);

  auto cef = orthogonal_complement({make_vector(u, {1, 1})});
  CHECK(cef.lattice->gram() == int_matrix({{-2}}));

  // saturation against a brute-force search over a box: every ambient vector
  // orthogonal to the generators is an integral combination of the basis
  auto l = standard_lattice(2, 1);
  auto v = make_vector(l, {2, 4, 0, 6, 2});
  auto c = orthogonal_complement({v});
  CHECK(c.lattice->rank() == 4);
  RatMatrix e = to_rational(c.embedding);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int cc = -2; cc <= 2; ++cc)
        for (int d = -2; d <= 2; ++d)
          for (int t = -2; t <= 2; ++t) {
            auto x = make_vector(l, {a, b, cc, d, t});
            if (pair(x, v) != 0) continue;
            // solve e * y = x over Q via normal equations, then check integrality
            RatMatrix ete = e.transpose() * e;
            RatVector y = *inverse(ete) * (e.transpose() * to_rational(x.coords));
            CHECK(to_integer(y).has_value());
            CHECK(RatVector(e * y) == to_rational(x.coords));
          }
}
