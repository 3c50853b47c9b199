#include "og6/cones.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace og6 {
namespace {

bool is_og6_gram(const Lattice& l) {
  static const IntMatrix og6 = gram_from_tag("U^3+(-2)^2");
  return l.rank() == 8 && l.gram() == og6;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

bool lex_positive(const IntVector& w) {
  for (Index i = 0; i < w.size(); ++i)
    if (w(i) != 0) return w(i) > 0;
  return false;
}

Integer isqrt_ceil_bound(const Rational& s) {
  // an integer r with r >= sqrt(s), s >= 0
  Integer f = floor_of(s);
  if (f < 0) return Integer(0);
  return Integer(boost::multiprecision::sqrt(f) + 1);
}

Integer ceil_of(const Rational& q) { return Integer(-floor_of(Rational(-q))); }

void check_positive_pair(const PicardData& pic, const RatVector& x, const RatVector& k) {
  const Index n = pic.lattice->rank();
  require(x.size() == n && k.size() == n, ErrorKind::DimensionMismatch, "classes must have pic rank coordinates");
  RatMatrix g = to_rational(pic.lattice->gram());
  require(x.dot(g * x) > 0 && k.dot(g * k) > 0, ErrorKind::NotPositive, "classes must have positive square");
  require(x.dot(g * k) > 0, ErrorKind::NotPositive, "classes must lie in the same component of the positive cone");
}

ChamberReport query(const PicardData& pic, const RatVector& x, const RatVector& k, const std::vector<WallSpec>& spec,
                    bool closure) {
  WallList walls = enumerate_separating_walls(pic, x, k, spec);
  ChamberReport r;
  r.separating_walls = walls.separating;
  r.boundary_walls = walls.through_x;
  r.on_boundary = walls.separating.empty() && !walls.through_x.empty();
  r.in_chamber = walls.separating.empty() && (closure || walls.through_x.empty());
  return r;
}

}  // namespace

std::string to_string(WallKind kind) {
  switch (kind) {
    case WallKind::StablyPrimeExceptional: return "StablyPrimeExceptional";
    case WallKind::WallNotExceptional: return "WallNotExceptional";
    case WallKind::NotAWall: return "NotAWall";
    case WallKind::NotNegative: return "NotNegative";
  }
  return "?";
}

WallKind wall_kind(const Integer& norm, const Integer& div) {
  if (norm >= 0) return WallKind::NotNegative;
  if (div == 2 && (norm == -4 || norm == -2)) return WallKind::StablyPrimeExceptional;
  if (div == 1 && norm == -2) return WallKind::WallNotExceptional;
  return WallKind::NotAWall;
}

WallClassification classify_divisor(const LatticeVector& alpha) {
  require(is_og6_gram(*alpha.lattice), ErrorKind::WrongLattice, "not the lattice U^3+(-2)^2");
  require(!alpha.coords.isZero(), ErrorKind::ZeroVector, "class must be nonzero");
  require(is_primitive(alpha), ErrorKind::NotPrimitive, "class must be primitive");
  Integer n = norm(alpha), d = divisibility(alpha);
  WallKind kind = wall_kind(n, d);
  return WallClassification{kind, n, d, "norm " + n.str() + ", div " + d.str() + " -> " + to_string(kind)};
}

LatticeVector proof_form(char form, long a) {
  LatticePtr l = standard_lattice(3, 2);
  switch (form) {
    case 'A': return make_vector(l, {a, -1, 0, 0, 0, 0, 0, 0});
    case 'B': return make_vector(l, {-2 * a, 2, 0, 0, 0, 0, -1, -1});
    case 'C': return make_vector(l, {-2 * a, 2, 0, 0, 0, 0, -1, 0});
    case 'D': return make_vector(l, {-2 * a, 2, 0, 0, 0, 0, 0, -1});
  }
  fail(ErrorKind::InvalidInput, std::string("unknown proof form ") + form);
}

PicardData make_picard(const LatticePtr& ambient, const IntMatrix& basis) {
  require(basis.rows() == ambient->rank() && basis.cols() >= 1, ErrorKind::DimensionMismatch,
          "basis columns must be ambient vectors");
  require(rank_of(to_rational(basis)) == basis.cols(), ErrorKind::InvalidInput, "basis is linearly dependent");
  IntMatrix g = basis.transpose() * ambient->gram() * basis;
  require(signature_of(to_rational(g)) == Signature{1, basis.cols() - 1, 0},
          ErrorKind::NotHyperbolic, "induced form is not hyperbolic");
  return PicardData{ambient, basis, make_lattice(g)};
}

bool WallSpec::operator<(const WallSpec& other) const {
  return norm != other.norm ? norm < other.norm : div < other.div;
}

RatMatrix majorant_gram(const PicardData& pic, const RatVector& k) {
  RatMatrix g = to_rational(pic.lattice->gram());
  RatVector gk = g * k;
  Rational kk = k.dot(gk);
  return RatMatrix(-g + gk * gk.transpose() * (Rational(2) / kk));
}

Rational majorant_bound(const PicardData& pic, const RatVector& x, const RatVector& k, const Integer& n) {
  require(n < 0, ErrorKind::InvalidInput, "walls have negative norm");
  RatMatrix g = to_rational(pic.lattice->gram());
  Rational xx = x.dot(g * x), kk = k.dot(g * k), xk = x.dot(g * k);
  Rational xprime = xk * xk / kk - xx;  // |x'^2|, x' the part of x orthogonal to k
  Rational nn = -Rational(n);
  Rational j2 = nn * xprime / xx;  // bound for (w,k)^2 / k^2
  return 2 * j2 + nn;
}

std::vector<IntVector> short_vectors(const RatMatrix& q, const Rational& bound) {
  const Index n = q.rows();
  // q = L D L^T with L unit lower triangular
  RatMatrix lower = RatMatrix::Identity(n, n);
  std::vector<Rational> d(n);
  for (Index j = 0; j < n; ++j) {
    Rational s = q(j, j);
    for (Index k = 0; k < j; ++k) s -= lower(j, k) * lower(j, k) * d[k];
    require(s > 0, ErrorKind::InvalidInput, "form is not positive definite");
    d[j] = s;
    for (Index i = j + 1; i < n; ++i) {
      Rational t = q(i, j);
      for (Index k = 0; k < j; ++k) t -= lower(i, k) * lower(j, k) * d[k];
      lower(i, j) = t / s;
    }
  }
  std::vector<IntVector> out;
  IntVector y = IntVector::Zero(n);
  std::function<void(Index, const Rational&)> descend = [&](Index i, const Rational& remaining) {
    Rational c(0);
    for (Index j = i + 1; j < n; ++j) c += lower(j, i) * Rational(y(j));
    Integer r = isqrt_ceil_bound(remaining / d[i]);
    Integer lo = ceil_of(Rational(-c - Rational(r))), hi = floor_of(Rational(-c + Rational(r)));
    for (Integer t = lo; t <= hi; ++t) {
      Rational z = Rational(t) + c;
      Rational used = d[i] * z * z;
      if (used > remaining) continue;
      y(i) = t;
      if (i == 0) out.push_back(y);
      else descend(i - 1, remaining - used);
    }
    y(i) = 0;
  };
  if (bound >= 0) descend(n - 1, bound);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

WallList enumerate_separating_walls(const PicardData& pic, const RatVector& x, const RatVector& k,
                                    const std::vector<WallSpec>& spec) {
  check_positive_pair(pic, x, k);
  RatMatrix g = to_rational(pic.lattice->gram());
  RatVector gx = g * x, gk = g * k;
  RatMatrix q = majorant_gram(pic, k);
  std::vector<Integer> norms;
  for (const auto& s : spec) norms.push_back(s.norm);
  std::sort(norms.begin(), norms.end());
  norms.erase(std::unique(norms.begin(), norms.end()), norms.end());

  WallList out;
  for (const Integer& n : norms) {
    for (const IntVector& w : short_vectors(q, majorant_bound(pic, x, k, n))) {
      if (w.isZero() || bilinear(pic.lattice->gram(), w, w) != n || content(w) != 1) continue;
      RatVector wr = to_rational(w);
      Rational wk = wr.dot(gk), wx = wr.dot(gx);
      if (wk < 0 || (wk == 0 && !lex_positive(w))) continue;
      if (wx > 0) continue;
      Integer dv = divisibility(LatticeVector(pic.ambient, pic.basis * w));
      if (std::find(spec.begin(), spec.end(), WallSpec{n, dv}) == spec.end()) continue;
      if (wx == 0) out.through_x.push_back(w);
      else if (wk > 0) out.separating.push_back(w);
    }
  }
  std::sort(out.separating.begin(), out.separating.end(), lex_less);
  std::sort(out.through_x.begin(), out.through_x.end(), lex_less);
  return out;
}

std::vector<WallSpec> kahler_walls() { return {{Integer(-4), Integer(2)}, {Integer(-2), Integer(1)}, {Integer(-2), Integer(2)}}; }
std::vector<WallSpec> birational_kahler_walls() { return {{Integer(-4), Integer(2)}, {Integer(-2), Integer(2)}}; }

ChamberReport kahler_chamber_query(const PicardData& pic, const RatVector& x, const RatVector& k) {
  return query(pic, x, k, kahler_walls(), false);
}

ChamberReport birational_kahler_closure_query(const PicardData& pic, const RatVector& x, const RatVector& k) {
  return query(pic, x, k, birational_kahler_walls(), true);
}

LagrangianReport detect_lagrangian(const LatticeVector& d) {
  require(is_og6_gram(*d.lattice), ErrorKind::WrongLattice, "not the lattice U^3+(-2)^2");
  require(!d.coords.isZero(), ErrorKind::ZeroVector, "class must be nonzero");
  require(norm(d) == 0, ErrorKind::NotIsotropic, "class must be isotropic");
  LagrangianReport r{primitive_part(d), Integer(0)};
  r.divisibility = divisibility(r.primitive_part);
  require(r.divisibility == 1, ErrorKind::InternalCaseFailure, "isotropic primitive class of divisibility 2");
  return r;
}

Div2Scan isotropic_div2_scan(std::int64_t box) {
  require(box >= 1, ErrorKind::InvalidInput, "box must be at least 1");
  Mat<std::int64_t> g = *to_int64(gram_from_tag("U^3+(-2)^2"));
  std::vector<std::vector<std::pair<int, std::int64_t>>> rows(8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (g(i, j) != 0) rows[i].push_back({j, g(i, j)});

  Div2Scan scan;
  scan.box = box;
  std::array<std::int64_t, 8> v;
  v.fill(-box);
  for (;;) {
    ++scan.scanned;
    std::int64_t div = 0, cont = 0, nrm = 0;
    for (int i = 0; i < 8; ++i) {
      std::int64_t p = 0;
      for (auto [j, x] : rows[i]) p += x * v[j];
      div = std::gcd(div, p);
      cont = std::gcd(cont, v[i]);
      nrm += p * v[i];
    }
    if (cont == 1 && div == 2) {
      ++scan.primitive_div2;
      if (nrm == 0) ++scan.isotropic_div2;
      ++scan.residues[((nrm % 8) + 8) % 8];
    }
    int i = 0;
    while (i < 8 && v[i] == box) v[i++] = -box;
    if (i == 8) break;
    ++v[i];
  }
  return scan;
}

}  // namespace og6
