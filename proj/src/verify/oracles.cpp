#include "og6/verify.hpp"

#include "og6/discriminant.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace og6::verify {
namespace {

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

std::int64_t isqrt_floor(const Rational& v) {
  if (v < 0) return 0;
  Integer f = floor_of(v);
  Integer s = boost::multiprecision::sqrt(f);
  return *to_int64(s);
}

}  // namespace

std::int64_t wall_box(const PicardData& pic, const RatVector& x, const RatVector& k,
                      const std::vector<WallSpec>& spec) {
  Rational c(0);
  for (const auto& s : spec) c = std::max(c, majorant_bound(pic, x, k, s.norm));
  RatMatrix qinv = *inverse(majorant_gram(pic, k));
  std::int64_t box = 0;
  for (Index i = 0; i < qinv.rows(); ++i) box = std::max(box, isqrt_floor(c * qinv(i, i)));
  return box;
}

WallList brute_force_walls(const PicardData& pic, const RatVector& x, const RatVector& k,
                           const std::vector<WallSpec>& spec) {
  const Index n = pic.lattice->rank();
  const std::int64_t box = wall_box(pic, x, k, spec);
  Mat<std::int64_t> g = *to_int64(pic.lattice->gram());
  RatMatrix gr = to_rational(pic.lattice->gram());
  RatVector gx = gr * x, gk = gr * k;
  std::set<std::int64_t> norms;
  for (const auto& s : spec) norms.insert(*to_int64(s.norm));

  WallList out;
  Vec<std::int64_t> w = Vec<std::int64_t>::Constant(n, -box);
  for (;;) {
    std::int64_t nw = w.dot(g * w);
    if (norms.count(nw) && !w.isZero()) {
      IntVector wi(n);
      for (Index i = 0; i < n; ++i) wi(i) = w(i);
      Rational wk(0), wx(0);
      for (Index i = 0; i < n; ++i) {
        wk += Rational(wi(i)) * gk(i);
        wx += Rational(wi(i)) * gx(i);
      }
      bool first_positive = false;
      for (Index i = 0; i < n; ++i)
        if (w(i) != 0) {
          first_positive = w(i) > 0;
          break;
        }
      bool sign_ok = wk > 0 || (wk == 0 && first_positive);
      if (content(wi) == 1 && sign_ok && wx <= 0) {
        IntVector amb = pic.basis * wi;
        Integer dv(0);
        IntVector pairs = pic.ambient->gram() * amb;
        for (Index i = 0; i < pairs.size(); ++i) dv = abs_gcd(dv, pairs(i));
        bool match = false;
        for (const auto& s : spec) match = match || (s.norm == nw && s.div == dv);
        if (match) {
          if (wx == 0) out.through_x.push_back(wi);
          else if (wk > 0) out.separating.push_back(wi);
        }
      }
    }
    Index i = 0;
    while (i < n && w(i) == box) w(i++) = -box;
    if (i == n) break;
    ++w(i);
  }
  std::sort(out.separating.begin(), out.separating.end(), lex_less);
  std::sort(out.through_x.begin(), out.through_x.end(), lex_less);
  return out;
}

std::vector<Rational> brute_force_q_values(const LatticePtr& l) {
  const Index n = l->rank();
  const IntMatrix& gram = l->gram();
  RatMatrix ginv = *inverse(to_rational(gram));
  Integer dd = abs_value(l->det());
  std::int64_t d = *to_int64(dd);
  require(d <= 16 && n <= 10, ErrorKind::InvalidInput, "lattice too large for the brute-force discriminant oracle");

  // lifts y = G^-1 z, z in [0, d)^n, grouped by y mod L; in units of 1/d,
  // d G^-1 = adj is integral
  Mat<std::int64_t> adj(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) adj(i, j) = *to_int64(Integer(boost::multiprecision::numerator(ginv(i, j) * Rational(dd))));
  std::map<std::vector<std::int64_t>, Vec<std::int64_t>> scaled;
  Vec<std::int64_t> z = Vec<std::int64_t>::Zero(n);
  for (;;) {
    Vec<std::int64_t> y = adj * z;
    std::vector<std::int64_t> key(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) key[static_cast<std::size_t>(i)] = ((y(i) % d) + d) % d;
    scaled.emplace(key, y);
    Index i = 0;
    while (i < n && z(i) == d - 1) z(i++) = 0;
    if (i == n) break;
    z(i) += 1;
  }
  require(Integer(scaled.size()) == dd, ErrorKind::InternalCaseFailure, "coset count differs from |det|");
  std::map<std::vector<Rational>, RatVector> classes;
  for (const auto& [key, y] : scaled) {
    std::vector<Rational> k(key.size());
    RatVector yr(n);
    for (Index i = 0; i < n; ++i) {
      k[static_cast<std::size_t>(i)] = Rational(key[static_cast<std::size_t>(i)], d);
      yr(i) = Rational(y(i), d);
    }
    classes.emplace(k, yr);
  }

  std::vector<Rational> out;
  Mat<std::int64_t> g = *to_int64(gram);
  for (const auto& [key, y] : classes) {
    bool zero = std::all_of(key.begin(), key.end(), [](const Rational& q) { return q == 0; });
    if (zero) continue;
    // scale by the denominator so that the perturbation loop stays in int64
    Integer den = common_denominator(y);
    std::int64_t m = *to_int64(den);
    Vec<std::int64_t> yy(n);
    for (Index i = 0; i < n; ++i) yy(i) = *to_int64(Integer(boost::multiprecision::numerator(y(i) * Rational(den))));
    Rational q = reduce_mod(y.dot(to_rational(gram) * y), Integer(2));
    const std::int64_t modulus = 2 * m * m;
    const std::int64_t base = ((yy.dot(g * yy)) % modulus + modulus) % modulus;
    Vec<std::int64_t> l = Vec<std::int64_t>::Constant(n, -2);
    for (;;) {
      Vec<std::int64_t> p = yy + m * l;
      std::int64_t v = ((p.dot(g * p)) % modulus + modulus) % modulus;
      require(v == base, ErrorKind::InternalCaseFailure, "q value depends on the lift");
      Index i = 0;
      while (i < n && l(i) == 2) l(i++) = -2;
      if (i == n) break;
      ++l(i);
    }
    out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer cofactor_det(const IntMatrix& m) {
  const Index n = m.rows();
  if (n == 0) return Integer(1);
  if (n == 1) return m(0, 0);
  Integer total(0);
  for (Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (Index r = 1; r < n; ++r)
      for (Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Integer term = m(0, j) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

Isometry random_transvection(std::mt19937_64& rng, const LatticePtr& l, int bound) {
  const Index planes = l->leading_hyperbolic_planes();
  require(planes >= 1, ErrorKind::NoU2Decomposition, "lattice records no hyperbolic plane");
  std::uniform_int_distribution<Index> pick(0, 2 * planes - 1);
  std::uniform_int_distribution<int> dist(-bound, bound);
  const Index i = pick(rng);
  IntVector a(l->rank());
  for (Index j = 0; j < a.size(); ++j) a(j) = dist(rng);
  a(i) = 0;
  a(i ^ 1) = 0;
  return transvection(LatticeVector(l, unit_vector(l->rank(), i)), LatticeVector(l, a));
}

Isometry random_og6_element(std::mt19937_64& rng, int length) {
  LatticePtr l = standard_lattice(3, 2);
  IntMatrix neg = IntMatrix::Identity(8, 8);
  neg(6, 6) = -1;
  const std::vector<Isometry> extra = {og6_summand_swap(l), reflection_in(make_vector(l, {0, 0, 0, 0, 0, 0, 1, 1})),
                                       make_isometry(l, neg)};
  std::uniform_int_distribution<int> kind(0, 5);
  Isometry g = identity_isometry(l);
  for (int k = 0; k < length; ++k) {
    int c = kind(rng);
    g = compose(g, c < 3 ? random_transvection(rng, l) : extra[c - 3]);
  }
  return g;
}

std::vector<Isometry> u2_minus2_generators() {
  LatticePtr l = standard_lattice(2, 1);
  std::vector<Isometry> out;
  auto t = [&](Index e, Index a) {
    out.push_back(transvection(LatticeVector(l, unit_vector(5, e)), LatticeVector(l, unit_vector(5, a))));
  };
  for (Index e : {0, 1})
    for (Index a : {2, 3, 4}) t(e, a);
  for (Index e : {2, 3})
    for (Index a : {0, 1}) t(e, a);
  return out;
}

}  // namespace og6::verify
