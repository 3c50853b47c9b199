#include "og6/isometry.hpp"

namespace og6 {
namespace {

void require_same(const Lattice& a, const Lattice& b) {
  require(same_lattice(a, b), ErrorKind::LatticeMismatch, "objects live in different lattices");
}

IntMatrix integral_or_fail(const RatMatrix& m, const std::string& what) {
  auto r = to_integer(m);
  require(r.has_value(), ErrorKind::NonIntegralResult, what + " is not integral");
  return *r;
}

}  // namespace

bool Isometry::operator==(const Isometry& other) const {
  return same_lattice(*lattice, *other.lattice) && matrix == other.matrix;
}

Isometry make_isometry(const LatticePtr& l, const IntMatrix& m) {
  require(m.rows() == l->rank() && m.cols() == l->rank(), ErrorKind::DimensionMismatch,
          "isometry matrix has the wrong size");
  require(IntMatrix(m.transpose() * l->gram() * m) == l->gram(), ErrorKind::NotIsometry,
          "matrix does not preserve the Gram matrix");
  return Isometry{l, m};
}

Isometry identity_isometry(const LatticePtr& l) {
  return Isometry{l, IntMatrix::Identity(l->rank(), l->rank())};
}

Isometry transvection(const LatticeVector& e, const LatticeVector& a) {
  require_same(*e.lattice, *a.lattice);
  require(norm(e) == 0, ErrorKind::NotIsotropic, "transvection needs an isotropic vector e");
  require(pair(e, a) == 0, ErrorKind::NotOrthogonal, "transvection needs a orthogonal to e");
  IntMatrix m = transvection_matrix<Integer>(e.lattice->gram(), e.coords, a.coords);
  return make_isometry(e.lattice, m);
}

Isometry reflection_in(const LatticeVector& d) {
  Integer dd = norm(d);
  require(dd != 0, ErrorKind::ZeroNorm, "reflection in a vector of norm 0");
  const auto& g = d.lattice->gram();
  IntVector gd = g * d.coords;
  for (Index i = 0; i < gd.size(); ++i)
    require((2 * gd(i)) % dd == 0, ErrorKind::NotIntegral,
            "2(D,b)/(D,D) is not integral for basis vector " + std::to_string(i));
  IntVector coef(gd.size());
  for (Index i = 0; i < gd.size(); ++i) coef(i) = 2 * gd(i) / dd;
  IntMatrix m = IntMatrix::Identity(g.rows(), g.rows());
  m -= d.coords * coef.transpose();
  return make_isometry(d.lattice, m);
}

Integer det(const Isometry& g) { return determinant(g.matrix); }

Isometry compose(const Isometry& g, const Isometry& h) {
  require_same(*g.lattice, *h.lattice);
  return Isometry{g.lattice, g.matrix * h.matrix};
}

Isometry inverse(const Isometry& g) {
  // M^-1 = G^-1 M^T G for an isometry
  auto ginv = inverse(to_rational(g.lattice->gram()));
  require(ginv.has_value(), ErrorKind::Degenerate, "inverse needs a nondegenerate lattice");
  RatMatrix inv = *ginv * to_rational(IntMatrix(g.matrix.transpose() * g.lattice->gram()));
  return Isometry{g.lattice, integral_or_fail(inv, "inverse isometry")};
}

LatticeVector apply(const Isometry& g, const LatticeVector& v) {
  require_same(*g.lattice, *v.lattice);
  return LatticeVector(v.lattice, g.matrix * v.coords);
}

DiscriminantElement apply(const Isometry& g, const DiscriminantElement& x) {
  require_same(*g.lattice, *x.lattice);
  RationalVector lift = canonical_lift(x);
  return dual_class(RationalVector{x.lattice, to_rational(g.matrix) * lift.coords});
}

bool preserves_positive_cone_orientation(const Isometry& g, const std::vector<Index>& pivot_order) {
  RatMatrix gram = to_rational(g.lattice->gram());
  Diagonalization d = diagonalize(gram, pivot_order);
  std::vector<Index> positive;
  for (Index i = 0; i < static_cast<Index>(d.diagonal.size()); ++i)
    if (d.diagonal[i] > 0) positive.push_back(i);
  require(!positive.empty(), ErrorKind::NegativeDefinite, "lattice has no positive directions");
  const Index p = static_cast<Index>(positive.size());
  RatMatrix w(gram.rows(), p);
  for (Index i = 0; i < p; ++i) w.col(i) = d.basis.col(positive[i]);
  RatMatrix gw = to_rational(g.matrix) * w;
  RatMatrix m = gw.transpose() * gram * w;
  return determinant(m) > 0;
}

bool acts_trivially_on_discriminant(const Isometry& g) {
  const auto& group = g.lattice->discriminant();
  for (Index i = 0; i < group.size(); ++i) {
    auto x = generator_class(g.lattice, i);
    if (!(apply(g, x) == x)) return false;
  }
  return true;
}

Membership membership(const Isometry& g) {
  Membership m;
  m.in_O_plus = preserves_positive_cone_orientation(g);
  m.in_SO = det(g) == 1;
  m.in_SO_plus = m.in_SO && m.in_O_plus;
  m.in_Otilde = acts_trivially_on_discriminant(g);
  m.in_SOtilde_plus = m.in_SO_plus && m.in_Otilde;
  return m;
}

Isometry extend_isometry(const Isometry& f, const Overlattice& n) {
  const Index p = f.lattice->rank();
  const Index total = n.base->rank();
  require(p <= total && IntMatrix(n.base->gram().topLeftCorner(p, p)) == f.lattice->gram(),
          ErrorKind::LatticeMismatch, "isometry does not live on the first summand of the base");
  require(n.base->gram().topRightCorner(p, total - p).isZero(), ErrorKind::LatticeMismatch,
          "base lattice is not an orthogonal sum");
  require(acts_trivially_on_discriminant(f), ErrorKind::NotInOtilde,
          "isometry acts nontrivially on the discriminant group");
  IntMatrix block = IntMatrix::Identity(total, total);
  block.topLeftCorner(p, p) = f.matrix;
  auto binv = inverse(n.basis);
  require(binv.has_value(), ErrorKind::NonIntegralResult, "singular overlattice basis");
  RatMatrix ext = *binv * to_rational(block) * n.basis;
  return make_isometry(n.lattice, integral_or_fail(ext, "extended isometry"));
}

Isometry extend_fixing_square2(const Isometry& gamma, const Sublattice& complement, const LatticeVector& w) {
  require(norm(w) == 2, ErrorKind::NormNotTwo, "w must have norm 2");
  require_same(*complement.ambient, *w.lattice);
  const Index n = w.lattice->rank();
  const IntMatrix& e = complement.embedding;
  require(e.cols() == n - 1 && gamma.lattice->rank() == n - 1 &&
              gamma.lattice->gram() == complement.lattice->gram(),
          ErrorKind::NotIsometryOfComplement, "gamma is not an isometry of the complement lattice");
  require(IntVector(e.transpose() * w.lattice->gram() * w.coords).isZero(), ErrorKind::NotIsometryOfComplement,
          "complement is not orthogonal to w");
  require(IntMatrix(gamma.matrix.transpose() * gamma.lattice->gram() * gamma.matrix) == gamma.lattice->gram(),
          ErrorKind::NotIsometryOfComplement, "gamma does not preserve the complement form");
  IntMatrix j(n, n);
  j.leftCols(n - 1) = e;
  j.col(n - 1) = w.coords;
  IntMatrix block = IntMatrix::Identity(n, n);
  block.topLeftCorner(n - 1, n - 1) = gamma.matrix;
  auto jinv = inverse(to_rational(j));
  require(jinv.has_value(), ErrorKind::NotIsometryOfComplement, "complement and w do not span");
  RatMatrix ext = to_rational(j) * to_rational(block) * *jinv;
  return make_isometry(w.lattice, integral_or_fail(ext, "extension fixing w"));
}

Isometry atom_isometry(const LatticePtr& l, const Atom& atom) {
  if (auto t = std::get_if<TransvectionAtom>(&atom))
    return transvection(LatticeVector(l, t->e), LatticeVector(l, t->a));
  if (auto r = std::get_if<ReflectionAtom>(&atom)) return reflection_in(LatticeVector(l, r->d));
  return make_isometry(l, std::get<OpaqueAtom>(atom).matrix);
}

Isometry evaluate(const IsometryWord& w) {
  Isometry out = identity_isometry(w.lattice);
  for (const Atom& a : w.atoms) out = compose(out, atom_isometry(w.lattice, a));
  return out;
}

IsometryWord inverse(const IsometryWord& w) {
  IsometryWord out{w.lattice, {}};
  for (auto it = w.atoms.rbegin(); it != w.atoms.rend(); ++it) {
    if (auto t = std::get_if<TransvectionAtom>(&*it)) {
      out.atoms.push_back(TransvectionAtom{t->e, IntVector(-t->a)});
    } else if (std::holds_alternative<ReflectionAtom>(*it)) {
      out.atoms.push_back(*it);
    } else {
      const auto& o = std::get<OpaqueAtom>(*it);
      Isometry inv = inverse(make_isometry(w.lattice, o.matrix));
      out.atoms.push_back(OpaqueAtom{inv.matrix, o.label + "^-1"});
    }
  }
  return out;
}

IsometryWord concat(const IsometryWord& first, const IsometryWord& second) {
  require_same(*first.lattice, *second.lattice);
  IsometryWord out = first;
  out.atoms.insert(out.atoms.end(), second.atoms.begin(), second.atoms.end());
  return out;
}

IsometryWord simplify(const IsometryWord& w) {
  IsometryWord out{w.lattice, {}};
  for (const Atom& a : w.atoms) {
    if (auto t = std::get_if<TransvectionAtom>(&a)) {
      if (!out.atoms.empty()) {
        if (auto prev = std::get_if<TransvectionAtom>(&out.atoms.back()); prev && prev->e == t->e) {
          prev->a += t->a;
          if (prev->a.isZero()) out.atoms.pop_back();
          continue;
        }
      }
      if (t->a.isZero()) continue;
    }
    out.atoms.push_back(a);
  }
  return out;
}

}  // namespace og6
