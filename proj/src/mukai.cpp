#include "og6/mukai.hpp"

#include "og6/discriminant.hpp"
#include "og6/orbits.hpp"

namespace og6 {
namespace {

const MukaiVector& w0() {
  static const MukaiVector w = mukai_vector(1, {0, 0, 0, 0, 0, 0}, -1);
  return w;
}

bool is_og6_gram(const Lattice& l) {
  static const IntMatrix og6 = gram_from_tag("U^3+(-2)^2");
  return l.rank() == 8 && l.gram() == og6;
}

LatticePtr w_perp_model() {
  static const LatticePtr m = standard_lattice(3, 1);
  return m;
}

}  // namespace

bool MukaiVector::operator==(const MukaiVector& other) const {
  return r == other.r && s == other.s && c == other.c;
}

MukaiVector mukai_vector(long r, std::initializer_list<long> c, long s) {
  require(c.size() == 6, ErrorKind::DimensionMismatch, "a Mukai vector has six H^2 coordinates");
  IntVector cv(6);
  Index i = 0;
  for (long x : c) cv(i++) = x;
  return MukaiVector{Integer(r), cv, Integer(s)};
}

LatticePtr mukai_lattice() {
  static const LatticePtr l = [] {
    IntMatrix g = IntMatrix::Zero(8, 8);
    g.block(1, 1, 6, 6) = gram_from_tag("U^3");
    g(0, 7) = g(7, 0) = -1;
    return make_lattice(g);
  }();
  return l;
}

LatticePtr h2_lattice() {
  static const LatticePtr l = standard_lattice(3, 0);
  return l;
}

LatticePtr og6_lattice() {
  static const LatticePtr l = standard_lattice(3, 2);
  return l;
}

LatticeVector to_lattice_vector(const MukaiVector& x) {
  require(x.c.size() == 6, ErrorKind::DimensionMismatch, "a Mukai vector has six H^2 coordinates");
  IntVector v(8);
  v(0) = x.r;
  v.segment(1, 6) = x.c;
  v(7) = x.s;
  return LatticeVector(mukai_lattice(), v);
}

MukaiVector to_mukai(const LatticeVector& v) {
  require(v.coords.size() == 8, ErrorKind::DimensionMismatch, "a Mukai vector has eight coordinates");
  return MukaiVector{v.coords(0), IntVector(v.coords.segment(1, 6)), v.coords(7)};
}

Integer mukai_pairing(const MukaiVector& x, const MukaiVector& y) {
  return pair(to_lattice_vector(x), to_lattice_vector(y));
}

Integer mukai_square(const MukaiVector& x) { return mukai_pairing(x, x); }

Sublattice w_perp(const MukaiVector& w) {
  LatticeVector lw = to_lattice_vector(w);
  require(!lw.coords.isZero(), ErrorKind::ZeroVector, "w must be nonzero");
  require(is_primitive(lw), ErrorKind::NotPrimitive, "w must be primitive");
  if (w == w0()) {
    IntMatrix e = IntMatrix::Zero(8, 7);
    for (Index i = 0; i < 6; ++i) e(i + 1, i) = 1;
    e(0, 6) = 1;  // zeta = (1,0,1)
    e(7, 6) = 1;
    Sublattice out{w_perp_model(), mukai_lattice(), e};
    require(IntMatrix(e.transpose() * mukai_lattice()->gram() * e) == out.lattice->gram(),
            ErrorKind::InternalCaseFailure, "named basis of the complement has the wrong Gram matrix");
    return out;
  }
  return orthogonal_complement({lw});
}

OG6Lattice og6_from_w(const MukaiVector& w) {
  require(mukai_square(w) == 2, ErrorKind::SquareNotTwo, "w must have Mukai square 2");
  Sublattice c = w_perp(w);
  if (w == w0()) return OG6Lattice{og6_lattice(), c, w};
  LatticePtr perp = make_lattice(c.lattice->gram());
  return OG6Lattice{direct_sum(perp, standard_lattice(0, 1)), c, w};
}

MukaiVector phi(const MukaiVector& x) {
  require(x.c.size() == 6, ErrorKind::DimensionMismatch, "a Mukai vector has six H^2 coordinates");
  require(x.r == x.s, ErrorKind::NotInDomain, "phi is defined on (1,0,-1)-perp, i.e. r = s");
  Integer a = x.c(0), b = x.c(1);
  IntVector c = x.c;
  c(0) = x.r;
  c(1) = -(x.s + a);
  return MukaiVector{Integer(-a), c, Integer(x.r + b)};
}

MukaiVector varrho(const MukaiVector& x, const IntMatrix& pd) {
  const IntMatrix& u3 = h2_lattice()->gram();
  require(pd.rows() == 6 && pd.cols() == 6 && IntMatrix(pd.transpose() * u3 * pd) == u3,
          ErrorKind::PDNotIsometry, "PD is not an isometry of U^3");
  return MukaiVector{Integer(-x.s), IntVector(pd * x.c), Integer(-x.r)};
}

MukaiVector varrho(const MukaiVector& x) { return varrho(x, IntMatrix::Identity(6, 6)); }

Isometry det_minus_one_witness() {
  IntMatrix m = IntMatrix::Identity(7, 7);
  m(6, 6) = -1;
  return make_isometry(w_perp_model(), m);
}

Isometry extend_from_w_perp(const Isometry& gamma) {
  return extend_fixing_square2(gamma, w_perp(w0()), to_lattice_vector(w0()));
}

std::optional<ZetaImage> zeta_image(const Isometry& extended) {
  IntVector zeta = IntVector::Zero(8);
  zeta(0) = zeta(7) = 1;
  IntVector y = extended.matrix * zeta;
  if (y(0) != y(7) || mod_floor(y(0), Integer(2)) != 1) return std::nullopt;
  ZetaImage out{Integer((y(0) - 1) / 2), IntVector(6)};
  for (Index i = 0; i < 6; ++i) {
    if (y(i + 1) % 2 != 0) return std::nullopt;
    out.alpha(i) = y(i + 1) / 2;
  }
  return out;
}

Isometry reflection_zeta_eps(const LatticePtr& og6) {
  require(is_og6_gram(*og6), ErrorKind::WrongLattice, "not the lattice U^3+(-2)^2");
  return reflection_in(make_vector(og6, {0, 0, 0, 0, 0, 0, 1, 1}));
}

namespace {

// Left-multiplies f by generators until it fixes eps, recording the inverse
// of every factor so that f = (recorded word) o (residual).
class MonodromyReducer {
 public:
  explicit MonodromyReducer(const Isometry& g)
      : l_(g.lattice),
        f_(g),
        r_(reflection_zeta_eps(og6_lattice())),
        sum_(overlattice_from_isotropic(og6_lattice(), {})) {}

  IsometryWord run() {
    for (int step = 0; step < 12; ++step) {
      IntVector fe = f_.matrix.col(7);
      if (fe == unit_vector(8, 7)) return finish();
      IntVector u2 = fe.head(6);
      Integer a = fe(6), b = fe(7);
      require(content(u2) % 2 == 0, ErrorKind::InternalCaseFailure,
              "image of eps has an odd U^3 part");
      IntVector u = u2 / Integer(2);
      require(mod_floor(a * a + b * b, Integer(4)) == 1, ErrorKind::InternalCaseFailure,
              "image of eps has the wrong parity");
      if (b == 0) {
        // 2u + a zeta -> -zeta, then R sends -zeta to eps
        transport_in_perp(fe.head(7), -unit_vector(7, 6));
        reflect();
      } else if (a == 0) {
        reflect();
      } else if (!u.isZero() && content(u) % 2 != 0) {
        if (mod_floor(a, Integer(2)) == 1) {
          reflect();
          continue;
        }
        // u + c zeta has divisibility one after dividing by its content
        IntVector v(7);
        v.head(6) = u;
        v(6) = a / 2;
        Integer k = content(v);
        IntVector p = v / k;
        Integer n = bilinear(w_perp_model()->gram(), p, p);
        IntVector target = IntVector::Zero(7);
        target(0) = 1;
        target(1) = n / 2;
        transport_in_perp(p, target);
      } else {
        if (mod_floor(b, Integer(2)) == 1) {
          reflect();
          continue;
        }
        // 2u' + a' zeta -> 2(e1 + (u'^2/2) f1) + a' zeta, whose U^3 half is
        // not divisible by 2
        IntVector v = fe.head(7);
        Integer k = content(v);
        IntVector p = v / k;
        IntVector uh = p.head(6) / Integer(2);
        Integer uu = bilinear(h2_lattice()->gram(), uh, uh);
        IntVector target = IntVector::Zero(7);
        target(0) = 2;
        target(1) = uu;
        target(6) = p(6);
        transport_in_perp(p, target);
      }
    }
    fail(ErrorKind::InternalCaseFailure, "monodromy reduction did not terminate");
  }

 private:
  void reflect() {
    f_ = compose(r_, f_);
    prefix_.push_back(ReflectionAtom{make_vector(og6_lattice(), {0, 0, 0, 0, 0, 0, 1, 1}).coords});
  }

  void transport_in_perp(const IntVector& from, const IntVector& to) {
    if (from == to) return;
    LatticePtr m = w_perp_model();
    IsometryWord word = transport(LatticeVector(m, from), LatticeVector(m, to));
    Isometry ext = extend_isometry(evaluate(word), sum_);
    f_ = compose(ext, f_);
    prefix_.push_back(OpaqueAtom{inverse(ext).matrix, "w-perp"});
  }

  IsometryWord finish() {
    if (prefix_.empty() || !f_.matrix.isIdentity()) prefix_.push_back(OpaqueAtom{f_.matrix, "eps-fixing"});
    IsometryWord out{l_, prefix_};
    const IntVector eps = unit_vector(8, 7);
    for (const Atom& atom : out.atoms) {
      if (auto o = std::get_if<OpaqueAtom>(&atom)) {
        Isometry h = make_isometry(og6_lattice(), o->matrix);
        require(IntVector(h.matrix * eps) == eps && membership(h).in_O_plus, ErrorKind::InternalCaseFailure,
                "factor does not lie in O+ of the eps-complement");
      }
    }
    return out;
  }

  LatticePtr l_;
  Isometry f_;
  Isometry r_;
  Overlattice sum_;
  std::vector<Atom> prefix_;
};

}  // namespace

IsometryWord decompose_monodromy(const Isometry& g) {
  require(is_og6_gram(*g.lattice), ErrorKind::WrongLattice, "not the lattice U^3+(-2)^2");
  require(membership(g).in_O_plus, ErrorKind::NotInOPlus, "isometry reverses the positive cone orientation");
  Isometry tagged = make_isometry(og6_lattice(), g.matrix);
  IsometryWord word = MonodromyReducer(tagged).run();
  word.lattice = g.lattice;
  require(evaluate(word).matrix == g.matrix, ErrorKind::InternalCaseFailure,
          "decomposition does not evaluate to the input");
  return word;
}

bool is_monodromy(const Isometry& g) {
  require(is_og6_gram(*g.lattice), ErrorKind::WrongLattice, "not the lattice U^3+(-2)^2");
  return membership(g).in_O_plus;
}

}  // namespace og6
