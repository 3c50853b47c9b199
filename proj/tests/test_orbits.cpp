#include "doctest.h"

#include "og6/orbits.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace og6;

namespace {

LatticePtr og6_lattice() { return standard_lattice(3, 2); }

LatticeVector random_primitive(std::mt19937_64& rng, const LatticePtr& l, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::bernoulli_distribution keep(0.5);
  for (;;) {
    IntVector v(l->rank());
    for (Index i = 0; i < v.size(); ++i) v(i) = keep(rng) ? dist(rng) : 0;
    if (v.isZero() || content(v) != 1) continue;
    return LatticeVector(l, v);
  }
}

}  // namespace

TEST_CASE("orbit invariants") {
  auto l = og6_lattice();
  auto inv = orbit_invariants(make_vector(l, {1, 1, 0, 0, 0, 0, 0, 0}));
  CHECK(inv.norm == 2);
  CHECK(inv.div == 1);
  CHECK(inv.disc.is_zero());

  auto zeta = make_vector(l, {0, 0, 0, 0, 0, 0, 1, 0});
  auto iz = orbit_invariants(zeta);
  CHECK(iz.norm == -2);
  CHECK(iz.div == 2);
  CHECK(iz.disc == disc_class(zeta));
  CHECK(!iz.disc.is_zero());

  auto iso = orbit_invariants(make_vector(l, {1, 0, 2, 0, 0, 0, 0, 0}));
  CHECK(iso.norm == 0);
  CHECK(iso.div == 1);

  CHECK_THROWS_AS(orbit_invariants(make_vector(l, {2, 0, 0, 0, 0, 0, 2, 0})), Error);
  auto untagged = make_lattice(l->gram());
  CHECK_THROWS_AS(orbit_invariants(make_vector(untagged, {1, 0, 0, 0, 0, 0, 0, 0})), Error);
}

TEST_CASE("orbit membership predicates") {
  auto u3 = standard_lattice(3, 0);
  CHECK(same_orbit_SOtilde_plus(make_vector(u3, {1, 1, 0, 0, 0, 0}), make_vector(u3, {0, 0, 1, 1, 0, 0})));
  CHECK(same_orbit_SOtilde_plus(make_vector(u3, {1, -1, 0, 0, 0, 0}), make_vector(u3, {0, 0, 1, -1, 0, 0})));

  auto l = og6_lattice();
  auto zeta = make_vector(l, {0, 0, 0, 0, 0, 0, 1, 0});
  auto eps = make_vector(l, {0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(!same_orbit_SOtilde_plus(zeta, eps));
  CHECK(same_orbit_O_plus_og6(zeta, eps));
  CHECK(!same_orbit_O_plus_og6(make_vector(l, {1, -1, 0, 0, 0, 0, 0, 0}), zeta));
  CHECK(same_orbit_O_plus_og6(make_vector(l, {1, 0, 0, 0, 0, 0, 0, 0}), make_vector(l, {1, 1, 0, 0, 0, 0, 1, 0})));
  CHECK_THROWS_AS(same_orbit_O_plus_og6(make_vector(u3, {1, 0, 0, 0, 0, 0}), make_vector(u3, {1, 0, 0, 0, 0, 0})),
                  Error);

  auto witness = same_orbit_O_plus_og6_witness(zeta, eps);
  REQUIRE(witness.has_value());
  Isometry g = evaluate(*witness);
  CHECK(apply(g, zeta) == eps);
  CHECK(membership(g).in_O_plus);
  Isometry swap = og6_summand_swap(l);
  CHECK(apply(swap, zeta) == eps);
  CHECK(membership(swap).in_O_plus);
}

TEST_CASE("canonical representatives carry the invariants") {
  auto l = og6_lattice();
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    auto v = random_primitive(rng, l, 4);
    auto inv = orbit_invariants(v);
    auto c = canonical_representative(l, inv);
    CHECK(orbit_invariants(c) == inv);
    auto word = reduce_to_canonical(v);
    CHECK(apply(evaluate(word), v) == c);
  }
  auto v = make_vector(l, {1, 1, 1, 1, 0, 0, 0, 0});
  auto c = canonical_representative(l, orbit_invariants(v));
  CHECK(c.coords == int_vector({1, 2, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("transport maps v to w inside SOtilde+") {
  auto u3 = standard_lattice(3, 0);
  auto a = make_vector(u3, {1, 1, 0, 0, 0, 0}), b = make_vector(u3, {0, 0, 1, 1, 0, 0});
  CHECK(transport(a, a).empty());
  auto word = transport(a, b);
  CHECK(apply(evaluate(word), a) == b);
  for (const auto& atom : word.atoms) CHECK(std::holds_alternative<TransvectionAtom>(atom));

  auto l = og6_lattice();
  std::mt19937_64 rng(43);
  std::map<std::string, std::vector<LatticeVector>> buckets;
  int pairs = 0;
  for (int trial = 0; trial < 4000 && pairs < 120; ++trial) {
    auto v = random_primitive(rng, l, 3);
    Integer n = norm(v);
    if (n < -4 || n > 4) continue;
    auto inv = orbit_invariants(v);
    std::string key = n.str() + "/" + inv.div.str() + "/" + to_string(inv.disc);
    auto& bucket = buckets[key];
    for (const auto& w : bucket) {
      auto t = transport(w, v);
      Isometry g = evaluate(t);
      CHECK(apply(g, w) == v);
      CHECK(membership(g).in_SOtilde_plus);
      ++pairs;
      break;
    }
    bucket.push_back(v);
  }
  CHECK(pairs >= 100);
  CHECK_THROWS_AS(transport(make_vector(l, {0, 0, 0, 0, 0, 0, 1, 0}), make_vector(l, {0, 0, 0, 0, 0, 0, 0, 1})),
                  Error);
}

TEST_CASE("orbit oracle by breadth-first search") {
  auto u2 = standard_lattice(2, 0);
  auto v = make_vector(u2, {1, 1, 0, 0});
  CHECK(orbit_oracle_bfs({}, v, 2).size() == 1);
  std::vector<Isometry> gens;
  for (const auto& t : u2_generators()) gens.push_back(atom_isometry(u2, t));
  auto orbit = orbit_oracle_bfs(gens, v, 2);
  CHECK(std::find(orbit.begin(), orbit.end(), std::vector<std::int64_t>{0, 0, 1, 1}) != orbit.end());
  CHECK(std::is_sorted(orbit.begin(), orbit.end()));

  auto l = og6_lattice();
  std::vector<Isometry> og6_gens;
  for (Index e : {0, 1, 2, 3}) {
    for (Index a = 0; a < 8; ++a) {
      IntVector ev = unit_vector(8, e), av = unit_vector(8, a);
      if (bilinear(l->gram(), ev, av) != 0 || e == a) continue;
      og6_gens.push_back(transvection(LatticeVector(l, ev), LatticeVector(l, av)));
    }
  }
  auto zorbit = orbit_oracle_bfs(og6_gens, make_vector(l, {0, 0, 0, 0, 0, 0, 1, 0}), 2);
  CHECK(std::find(zorbit.begin(), zorbit.end(), std::vector<std::int64_t>{0, 0, 0, 0, 0, 0, 0, 1}) == zorbit.end());
  CHECK(zorbit.size() > 1);
}

TEST_CASE("decomposition of SO+(U^2) elements") {
  auto u2 = standard_lattice(2, 0);
  auto id = decompose_SOplus_U2(identity_isometry(u2));
  CHECK(id.found);
  CHECK(id.word.empty());

  auto gens = u2_generators();
  auto t1 = atom_isometry(u2, gens[1]);  // t(e2, f1)
  auto t2 = atom_isometry(u2, gens[2]);  // t(f2, e1)
  auto r = decompose_SOplus_U2(compose(t1, t2));
  CHECK(r.found);
  CHECK(r.word.size() == 2);
  CHECK(evaluate(r.word) == compose(t1, t2));

  auto e2 = make_vector(u2, {0, 0, 1, 0});
  auto p = [&](long x, long y) { return make_vector(u2, {x, y, 0, 0}); };
  auto g = compose(transvection(e2, p(1, -3)), inverse(transvection(e2, p(1, -4))));
  auto s = decompose_SOplus_U2(g);
  CHECK(s.found);
  CHECK(s.word.size() == 1);
  CHECK(g == t1);

  Isometry swap = make_isometry(u2, int_matrix({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK_THROWS_AS(decompose_SOplus_U2(swap), Error);

  // something long: the depth cap is reported rather than thrown
  Isometry big = identity_isometry(u2);
  for (int k = 0; k < 8; ++k) big = compose(big, atom_isometry(u2, gens[k % 4]));
  auto capped = decompose_SOplus_U2(big, 3);
  CHECK(!capped.found);
  CHECK(capped.depth_searched == 3);
}
