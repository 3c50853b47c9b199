#include "doctest.h"

#include "og6/mukai.hpp"
#include "og6/orbits.hpp"

#include <random>

using namespace og6;

namespace {

IntVector random_vector(std::mt19937_64& rng, Index n, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = dist(rng);
  return v;
}

MukaiVector random_mukai(std::mt19937_64& rng, int bound, bool in_w_perp) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  MukaiVector x{Integer(dist(rng)), random_vector(rng, 6, bound), Integer(dist(rng))};
  if (in_w_perp) x.s = x.r;
  return x;
}

// A transvection t(e, a) with e a basis vector of a hyperbolic plane and a a
// random vector orthogonal to e.
Isometry random_transvection(std::mt19937_64& rng, const LatticePtr& l, Index planes) {
  std::uniform_int_distribution<Index> pick(0, 2 * planes - 1);
  Index i = pick(rng);
  IntVector e = unit_vector(l->rank(), i);
  IntVector a = random_vector(rng, l->rank(), 2);
  a(i ^ 1) = 0;  // orthogonal to e
  a(i) = 0;
  return transvection(LatticeVector(l, e), LatticeVector(l, a));
}

Isometry random_og6_element(std::mt19937_64& rng, int length) {
  auto l = og6_lattice();
  std::vector<Isometry> extra = {og6_summand_swap(l), reflection_zeta_eps(l)};
  IntMatrix neg = IntMatrix::Identity(8, 8);
  neg(6, 6) = -1;
  extra.push_back(make_isometry(l, neg));
  std::uniform_int_distribution<int> kind(0, 5);
  Isometry g = identity_isometry(l);
  for (int k = 0; k < length; ++k) {
    int c = kind(rng);
    g = compose(g, c < 3 ? random_transvection(rng, l, 3) : extra[c - 3]);
  }
  return g;
}

}  // namespace

TEST_CASE("Mukai pairing") {
  auto w = mukai_vector(1, {0, 0, 0, 0, 0, 0}, -1);
  CHECK(mukai_square(w) == 2);
  CHECK(mukai_square(mukai_vector(0, {1, 1, 0, 0, 0, 0}, 1)) == 2);
  CHECK(mukai_square(mukai_vector(1, {0, 0, 0, 0, 0, 0}, 1)) == -2);
  CHECK(mukai_pairing(mukai_vector(1, {0, 0, 0, 0, 0, 0}, 0), mukai_vector(0, {0, 0, 0, 0, 0, 0}, 1)) == -1);
}

TEST_CASE("complement of a square-2 vector and the OG6 lattice") {
  auto w = mukai_vector(1, {0, 0, 0, 0, 0, 0}, -1);
  auto c = w_perp(w);
  CHECK(c.lattice->gram() == gram_from_tag("U^3+(-2)"));
  CHECK(c.embedding.col(6) == int_vector({1, 0, 0, 0, 0, 0, 0, 1}));
  auto og = og6_from_w(w);
  CHECK(og.lattice->tag() == "U^3+(-2)^2");
  CHECK(og.lattice->discriminant().cardinality() == 4);

  for (auto other : {mukai_vector(0, {1, 1, 0, 0, 0, 0}, 1), mukai_vector(1, {1, 2, 0, 0, 0, 0}, 1)}) {
    auto perp = w_perp(other);
    CHECK(perp.lattice->rank() == 7);
    CHECK(IntVector(perp.embedding.transpose() * mukai_lattice()->gram() * to_lattice_vector(other).coords).isZero());
    if (mukai_square(other) != 2) continue;
    auto o = og6_from_w(other);
    CHECK(abs_value(o.lattice->det()) == 4);
    CHECK(signature(*o.lattice) == Signature{3, 5, 0});
  }
  // (1,h,1) with h^2 = 4 contains (1,0,-1) in its complement
  auto h = mukai_vector(1, {1, 2, 0, 0, 0, 0}, 1);
  CHECK(mukai_pairing(h, w) == 0);

  CHECK_THROWS_AS(og6_from_w(mukai_vector(1, {0, 0, 0, 0, 0, 0}, 1)), Error);
  CHECK_THROWS_AS(w_perp(mukai_vector(2, {0, 0, 0, 0, 0, 0}, -2)), Error);
}

TEST_CASE("phi") {
  CHECK(phi(mukai_vector(1, {0, 0, 0, 0, 0, 0}, 1)) == mukai_vector(0, {1, -1, 0, 0, 0, 0}, 1));
  CHECK(phi(mukai_vector(0, {0, 0, 3, -1, 2, 5}, 0)) == mukai_vector(0, {0, 0, 3, -1, 2, 5}, 0));
  CHECK_THROWS_AS(phi(mukai_vector(1, {0, 0, 0, 0, 0, 0}, 0)), Error);

  auto target = mukai_vector(0, {1, 1, 0, 0, 0, 0}, 1);
  auto basis = w_perp(mukai_vector(1, {0, 0, 0, 0, 0, 0}, -1)).embedding;
  for (Index i = 0; i < basis.cols(); ++i)
    CHECK(mukai_pairing(phi(to_mukai(LatticeVector(mukai_lattice(), basis.col(i)))), target) == 0);

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> small(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    auto x = random_mukai(rng, 5, true), y = random_mukai(rng, 5, true);
    CHECK(mukai_pairing(phi(x), phi(y)) == mukai_pairing(x, y));
    // specialization on (l, chi + b f, l)
    long lv = small(rng), b = small(rng);
    IntVector chi = random_vector(rng, 6, 3);
    chi(0) = chi(1) = 0;
    IntVector c = chi;
    c(1) = b;
    IntVector expected = chi;
    expected(0) = lv;
    expected(1) = -lv;
    CHECK(phi(MukaiVector{Integer(lv), c, Integer(lv)}) == MukaiVector{Integer(0), expected, Integer(lv + b)});
  }
}

TEST_CASE("varrho") {
  auto w = mukai_vector(1, {0, 0, 0, 0, 0, 0}, -1);
  CHECK(varrho(w) == w);
  std::mt19937_64 rng(19);
  auto u3 = h2_lattice();
  for (int trial = 0; trial < 20; ++trial) {
    Isometry pd = identity_isometry(u3);
    for (int k = 0; k < 4; ++k) pd = compose(pd, random_transvection(rng, u3, 3));
    for (int s = 0; s < 20; ++s) {
      auto x = random_mukai(rng, 5, false), y = random_mukai(rng, 5, false);
      CHECK(mukai_pairing(varrho(x, pd.matrix), varrho(y, pd.matrix)) == mukai_pairing(x, y));
    }
  }
  auto x = mukai_vector(2, {1, -1, 3, 0, 0, 4}, 5);
  CHECK(varrho(varrho(x)) == x);
  IntMatrix bad = IntMatrix::Identity(6, 6);
  bad(0, 0) = 2;
  CHECK_THROWS_AS(varrho(x, bad), Error);

  // the complement of (1,h,1) goes to the complement of (1,-PD(h),1)
  auto h = mukai_vector(1, {1, 2, 0, 0, 0, 0}, 1);
  auto hat = mukai_vector(1, {-1, -2, 0, 0, 0, 0}, 1);
  auto perp = w_perp(h).embedding;
  for (Index i = 0; i < perp.cols(); ++i)
    CHECK(mukai_pairing(varrho(to_mukai(LatticeVector(mukai_lattice(), perp.col(i)))), hat) == 0);
}

TEST_CASE("determinant -1 witness") {
  Isometry m = det_minus_one_witness();
  CHECK(det(m) == -1);
  CHECK(membership(m).in_O_plus);
  CHECK(acts_trivially_on_discriminant(m));
}

TEST_CASE("extensions fixing (1,0,-1) send (1,0,1) to (2m+1, 2 alpha, 2m+1)") {
  std::mt19937_64 rng(23);
  auto perp = w_perp(mukai_vector(1, {0, 0, 0, 0, 0, 0}, -1)).lattice;
  for (int trial = 0; trial < 100; ++trial) {
    Isometry gamma = identity_isometry(perp);
    for (int k = 0; k < 1 + trial % 5; ++k) gamma = compose(gamma, random_transvection(rng, perp, 3));
    if (trial % 3 == 0) gamma = compose(gamma, det_minus_one_witness());
    Isometry ext = extend_from_w_perp(gamma);
    CHECK(ext.matrix * to_lattice_vector(mukai_vector(1, {0, 0, 0, 0, 0, 0}, -1)).coords ==
          to_lattice_vector(mukai_vector(1, {0, 0, 0, 0, 0, 0}, -1)).coords);
    auto z = zeta_image(ext);
    REQUIRE(z.has_value());
    CHECK(bilinear(h2_lattice()->gram(), z->alpha, z->alpha) == 2 * z->m * (z->m + 1));
    CHECK(abs_gcd(content(z->alpha), 2 * z->m + 1) == 1);
    // image of (1,0,0) is (m+1, alpha, m)
    IntVector r = ext.matrix.col(0);
    CHECK(r(0) == z->m + 1);
    CHECK(r(7) == z->m);
    CHECK(IntVector(r.segment(1, 6)) == z->alpha);
  }
}

TEST_CASE("monodromy decomposition") {
  auto l = og6_lattice();
  Isometry r = reflection_zeta_eps(l);
  auto wr = decompose_monodromy(r);
  CHECK(evaluate(wr) == r);
  CHECK(std::holds_alternative<ReflectionAtom>(wr.atoms.front()));

  IntMatrix fix = IntMatrix::Identity(8, 8);
  fix(6, 6) = -1;
  auto wf = decompose_monodromy(make_isometry(l, fix));
  REQUIRE(wf.size() == 1);
  CHECK(std::holds_alternative<OpaqueAtom>(wf.atoms[0]));

  std::mt19937_64 rng(29);
  const IntVector eps = unit_vector(8, 7);
  for (int trial = 0; trial < 100; ++trial) {
    Isometry g = random_og6_element(rng, 1 + trial % 8);
    auto word = decompose_monodromy(g);
    CHECK(evaluate(word) == g);
    for (const auto& atom : word.atoms) {
      if (auto o = std::get_if<OpaqueAtom>(&atom)) {
        Isometry h = make_isometry(l, o->matrix);
        CHECK(IntVector(h.matrix * eps) == eps);
        CHECK(membership(h).in_O_plus);
      } else {
        CHECK(std::get<ReflectionAtom>(atom).d == int_vector({0, 0, 0, 0, 0, 0, 1, 1}));
      }
    }
  }

  Isometry minus = make_isometry(l, IntMatrix(-IntMatrix::Identity(8, 8)));
  CHECK(!is_monodromy(minus));
  CHECK_THROWS_AS(decompose_monodromy(minus), Error);
  CHECK(is_monodromy(r));
  CHECK(is_monodromy(transvection(make_vector(l, {1, 0, 0, 0, 0, 0, 0, 0}), make_vector(l, {0, 0, 1, 2, 0, 0, 1, 0}))));
}
