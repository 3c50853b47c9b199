#include "doctest.h"

#include "og6/cones.hpp"
#include "og6/errors.hpp"
#include "og6/verify.hpp"

#include <random>

using namespace og6;

namespace {

LatticePtr og6l() { return standard_lattice(3, 2); }

RatVector rv(std::initializer_list<long> xs) {
  RatVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = Rational(x);
  return v;
}

IntVector iv(std::initializer_list<long> xs) {
  IntVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = Integer(x);
  return v;
}

PicardData pic_from_columns(std::initializer_list<Index> cols) {
  IntMatrix b = IntMatrix::Zero(8, static_cast<Index>(cols.size()));
  Index j = 0;
  for (Index c : cols) b(c, j++) = 1;
  return make_picard(og6l(), b);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalCaseFailure;
}

}  // namespace

TEST_CASE("wall table on the basic classes") {
  auto l = og6l();
  auto zeta_eps = classify_divisor(make_vector(l, {0, 0, 0, 0, 0, 0, 1, 1}));
  CHECK(zeta_eps.kind == WallKind::StablyPrimeExceptional);
  CHECK(zeta_eps.norm == -4);
  CHECK(zeta_eps.div == 2);
  auto eps = classify_divisor(make_vector(l, {0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(eps.kind == WallKind::StablyPrimeExceptional);
  CHECK(eps.norm == -2);
  CHECK(eps.div == 2);
  CHECK(classify_divisor(make_vector(l, {0, 0, 0, 0, 0, 0, 1, 0})).kind == WallKind::StablyPrimeExceptional);
  auto ef = classify_divisor(make_vector(l, {1, -1, 0, 0, 0, 0, 0, 0}));
  CHECK(ef.kind == WallKind::WallNotExceptional);
  CHECK(ef.div == 1);
  CHECK(classify_divisor(make_vector(l, {1, 1, 0, 0, 0, 0, 0, 0})).kind == WallKind::NotNegative);
  CHECK(classify_divisor(make_vector(l, {1, 0, 0, 0, 0, 0, 0, 0})).kind == WallKind::NotNegative);
  CHECK(classify_divisor(make_vector(l, {1, -3, 0, 0, 0, 0, 0, 0})).kind == WallKind::NotAWall);

  CHECK(kind_of([&] { classify_divisor(make_vector(l, {2, -2, 0, 0, 0, 0, 0, 0})); }) == ErrorKind::NotPrimitive);
  CHECK(kind_of([&] { classify_divisor(make_vector(l, {0, 0, 0, 0, 0, 0, 0, 0})); }) == ErrorKind::ZeroVector);
  CHECK(kind_of([&] { classify_divisor(make_vector(standard_lattice(3, 1), {1, 0, 0, 0, 0, 0, 1})); }) ==
        ErrorKind::WrongLattice);
}

TEST_CASE("wall_kind matches the table for every small pair") {
  for (long n = -12; n <= 4; n += 2)
    for (long d = 1; d <= 4; ++d) {
      WallKind expected = WallKind::NotAWall;
      if (n >= 0) expected = WallKind::NotNegative;
      else if ((n == -4 && d == 2) || (n == -2 && d == 2)) expected = WallKind::StablyPrimeExceptional;
      else if (n == -2 && d == 1) expected = WallKind::WallNotExceptional;
      CHECK(wall_kind(Integer(n), Integer(d)) == expected);
    }
}

TEST_CASE("excluded families are never walls") {
  for (long a = 2; a <= 6; ++a) {
    auto v = proof_form('A', a);
    CHECK(norm(v) == -2 * a);
    CHECK(divisibility(v) == 1);
    CHECK(classify_divisor(v).kind == WallKind::NotAWall);
  }
  for (long a = 1; a <= 5; ++a) {
    auto b = proof_form('B', a), c = proof_form('C', a), d = proof_form('D', a);
    CHECK(norm(b) == -8 * a - 4);
    CHECK(divisibility(b) == 2);
    CHECK(norm(c) == -8 * a - 2);
    CHECK(norm(d) == -8 * a - 2);
    for (const auto& v : {b, c, d}) CHECK(classify_divisor(v).kind == WallKind::NotAWall);
  }
  // at a = 1 the first family degenerates to e1 - f1, which is a wall
  CHECK(classify_divisor(proof_form('A', 1)).kind == WallKind::WallNotExceptional);
}

TEST_CASE("picard data validation") {
  CHECK(kind_of([] { pic_from_columns({0}); }) == ErrorKind::NotHyperbolic);
  CHECK(kind_of([] { pic_from_columns({6, 7}); }) == ErrorKind::NotHyperbolic);
  IntMatrix dep = IntMatrix::Zero(8, 2);
  dep(0, 0) = 1;
  dep(0, 1) = 2;
  CHECK(kind_of([&] { make_picard(og6l(), dep); }) == ErrorKind::InvalidInput);
  auto pic = pic_from_columns({0, 1, 7});
  CHECK(pic.lattice->rank() == 3);
  CHECK(pic.lattice->gram()(2, 2) == -2);
}

TEST_CASE("short vectors agree with a box count") {
  RatMatrix q(2, 2);
  q << Rational(2), Rational(1), Rational(1), Rational(3);
  for (long bound = 0; bound <= 12; ++bound) {
    auto sv = short_vectors(q, Rational(bound));
    std::size_t expected = 0;
    for (long a = -5; a <= 5; ++a)
      for (long b = -5; b <= 5; ++b)
        if (2 * a * a + 2 * a * b + 3 * b * b <= bound) ++expected;
    CHECK(sv.size() == expected);
  }
}

TEST_CASE("hyperbolic plane: the (-2) wall e1 - f1") {
  auto pic = pic_from_columns({0, 1});
  RatVector k = rv({1, 2});

  SUBCASE("separating") {
    RatVector x = rv({3, 1});
    auto walls = enumerate_separating_walls(pic, x, k, kahler_walls());
    REQUIRE(walls.separating.size() == 1);
    CHECK(walls.separating[0] == iv({1, -1}));
    auto kr = kahler_chamber_query(pic, x, k);
    CHECK_FALSE(kr.in_chamber);
    CHECK_FALSE(kr.on_boundary);
    auto br = birational_kahler_closure_query(pic, x, k);
    CHECK(br.in_chamber);
    CHECK(br.separating_walls.empty());
  }
  SUBCASE("through x") {
    RatVector x = rv({1, 1});
    auto kr = kahler_chamber_query(pic, x, k);
    CHECK_FALSE(kr.in_chamber);
    CHECK(kr.on_boundary);
    REQUIRE(kr.boundary_walls.size() == 1);
    CHECK(kr.boundary_walls[0] == iv({1, -1}));
  }
  SUBCASE("same side") {
    auto kr = kahler_chamber_query(pic, rv({1, 3}), k);
    CHECK(kr.in_chamber);
    CHECK_FALSE(kr.on_boundary);
  }
  SUBCASE("k itself") {
    CHECK(kahler_chamber_query(pic, k, k).in_chamber);
  }
  SUBCASE("non-positive inputs") {
    CHECK(kind_of([&] { kahler_chamber_query(pic, rv({1, 0}), k); }) == ErrorKind::NotPositive);
    CHECK(kind_of([&] { kahler_chamber_query(pic, rv({-1, -1}), k); }) == ErrorKind::NotPositive);
    CHECK(kind_of([&] { kahler_chamber_query(pic, rv({1, 1, 1}), k); }) == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("the exceptional class eps separates in both chambers") {
  auto pic = pic_from_columns({0, 1, 7});
  RatVector k = rv({2, 1, -1}), x = rv({2, 1, 1});
  auto kr = kahler_chamber_query(pic, x, k);
  auto br = birational_kahler_closure_query(pic, x, k);
  auto has_eps = [](const std::vector<IntVector>& ws) {
    return std::find(ws.begin(), ws.end(), iv({0, 0, 1})) != ws.end();
  };
  CHECK(has_eps(kr.separating_walls));
  CHECK(has_eps(br.separating_walls));
  CHECK_FALSE(kr.in_chamber);
  CHECK_FALSE(br.in_chamber);
}

TEST_CASE("certified enumeration equals the box brute force") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> small(-2, 2);
  const std::vector<std::vector<Index>> shapes = {{0, 1}, {0, 1, 7}, {0, 1, 6}, {0, 1, 6, 7}};
  int instances = 0;
  for (int trial = 0; trial < 4000 && instances < 25; ++trial) {
    const auto& cols = shapes[static_cast<std::size_t>(trial) % shapes.size()];
    IntMatrix b = IntMatrix::Zero(8, static_cast<Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) b(cols[j], static_cast<Index>(j)) = 1;
    auto pic = make_picard(og6l(), b);
    const Index r = pic.lattice->rank();
    RatVector x(r), k(r);
    for (Index i = 0; i < r; ++i) {
      x(i) = Rational(small(rng));
      k(i) = Rational(small(rng));
    }
    RatMatrix g = to_rational(pic.lattice->gram());
    if (x.dot(g * x) <= 0 || k.dot(g * k) <= 0 || x.dot(g * k) <= 0) continue;
    if (verify::wall_box(pic, x, k, kahler_walls()) > 25) continue;
    ++instances;
    for (const auto& spec : {kahler_walls(), birational_kahler_walls()}) {
      auto fast = enumerate_separating_walls(pic, x, k, spec);
      auto slow = verify::brute_force_walls(pic, x, k, spec);
      CHECK(fast.separating == slow.separating);
      CHECK(fast.through_x == slow.through_x);
    }
  }
  INFO("instances: " << instances);
  CHECK(instances >= 10);
}

TEST_CASE("lagrangian detector") {
  auto l = og6l();
  auto r = detect_lagrangian(make_vector(l, {1, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(r.divisibility == 1);
  CHECK(r.base == "P3");
  CHECK(r.fiber_polarization == std::array<int, 3>{1, 2, 2});
  auto m = detect_lagrangian(make_vector(l, {3, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(m.primitive_part == make_vector(l, {1, 0, 0, 0, 0, 0, 0, 0}));
  // e1 + f1 - zeta ... isotropic: 2 - 2 = 0, odd pairing with f1
  auto z = detect_lagrangian(make_vector(l, {1, 1, 0, 0, 0, 0, 1, 0}));
  CHECK(z.divisibility == 1);
  CHECK(kind_of([&] { detect_lagrangian(make_vector(l, {0, 0, 0, 0, 0, 0, 1, 1})); }) == ErrorKind::NotIsotropic);
  CHECK(kind_of([&] { detect_lagrangian(make_vector(l, {0, 0, 0, 0, 0, 0, 0, 0})); }) == ErrorKind::ZeroVector);
  CHECK(kind_of([&] { detect_lagrangian(make_vector(standard_lattice(3, 0), {1, 0, 0, 0, 0, 0})); }) ==
        ErrorKind::WrongLattice);
}

TEST_CASE("div-2 scan on the unit box") {
  auto s = isotropic_div2_scan(1);
  CHECK(s.scanned == 6561);
  CHECK(s.isotropic_div2 == 0);
  // independent count: div 2 forces even U^3 coordinates, so with |x_i| <= 1
  // the U^3 part vanishes and (z1, z2) != 0; norm -2(z1^2 + z2^2)
  std::array<std::int64_t, 8> expected{};
  std::int64_t count = 0;
  for (long a = -1; a <= 1; ++a)
    for (long b = -1; b <= 1; ++b) {
      if (a == 0 && b == 0) continue;
      long n = -2 * (a * a + b * b);
      ++expected[static_cast<std::size_t>(((n % 8) + 8) % 8)];
      ++count;
    }
  CHECK(s.primitive_div2 == count);
  CHECK(s.residues == expected);
  CHECK(kind_of([] { isotropic_div2_scan(0); }) == ErrorKind::InvalidInput);
}
