#include "og6/orbits.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

namespace og6 {
namespace {

bool is_og6_gram(const Lattice& l) {
  static const IntMatrix og6 = gram_from_tag("U^3+(-2)^2");
  return l.rank() == 8 && l.gram() == og6;
}

// Rounded quotient: a - q b has absolute value at most |b| / 2.
Integer nearest_quotient(const Integer& a, const Integer& b) {
  Integer q = floor_div(a, b);
  Integer r = a - q * b;
  if (2 * abs_value(r) > abs_value(b)) q += 1;
  return q;
}

// Walks a vector to its canonical representative, recording transvections.
class Reducer {
 public:
  Reducer(const LatticeVector& v) : l_(v.lattice), v_(v.coords), planes_(v.lattice->leading_hyperbolic_planes()) {}

  void run(const OrbitInvariants& inv, const LatticeVector& target) {
    for (Index j = 1; j < planes_; ++j) snf_planes(j);
    const Index n = l_->rank();
    for (Index b = 2 * planes_; b < n; ++b) {
      Integer pb = (l_->gram().row(b) * v_)(0);
      if (pb == 0 || (v_(0) != 0 && pb % v_(0) == 0)) continue;
      apply(unit(2), unit(b));
      snf_planes(1);
    }
    require(v_(0) == inv.div, ErrorKind::InternalCaseFailure,
            "reduction left e1-coefficient " + v_(0).str() + " instead of the divisibility");
    IntVector diff = target.coords - v_;
    IntVector a = IntVector::Zero(n);
    for (Index i = 2 * planes_; i < n; ++i) {
      require(diff(i) % inv.div == 0, ErrorKind::InternalCaseFailure, "non-integral final shift");
      a(i) = diff(i) / inv.div;
    }
    if (!a.isZero()) apply(unit(1), a);
    require(v_ == target.coords, ErrorKind::InternalCaseFailure, "reduction missed the canonical representative");
  }

  IsometryWord word() const {
    IsometryWord w{l_, {}};
    for (auto it = applied_.rbegin(); it != applied_.rend(); ++it) w.atoms.push_back(*it);
    return simplify(w);
  }

 private:
  IntVector unit(Index i) const { return unit_vector(l_->rank(), i); }

  void apply(const IntVector& e, const IntVector& a) {
    const IntMatrix& g = l_->gram();
    Integer av = a.dot(g * v_), ev = e.dot(g * v_), aa = a.dot(g * a);
    v_ = v_ - av * e + ev * a - (aa / 2) * ev * e;
    applied_.push_back(TransvectionAtom{e, a});
  }

  // The 2x2 matrix [[x1, -xj], [yj, y1]] of planes 0 and j.
  Integer m00() const { return v_(0); }
  Integer m01(Index j) const { return -v_(2 * j); }
  Integer m10(Index j) const { return v_(2 * j + 1); }
  Integer m11() const { return v_(1); }

  void row1_add(Index j, const Integer& m) {
    if (m != 0) apply(unit(2 * j), IntVector(m * unit(0)));
  }
  void row2_add(Index j, const Integer& m) {
    if (m != 0) apply(unit(2 * j + 1), IntVector(-m * unit(1)));
  }
  void col2_add(Index j, const Integer& m) {
    if (m != 0) apply(unit(2 * j), IntVector(m * unit(1)));
  }
  void col1_add(Index j, const Integer& m) {
    if (m != 0) apply(unit(2 * j + 1), IntVector(-m * unit(0)));
  }

  // Smith form of the plane-(0,j) matrix by SL2 x SL2 elementary moves:
  // afterwards xj = yj = 0 and x1 = gcd of the four entries.
  void snf_planes(Index j) {
    for (;;) {
      // Euclid on the first column, keeping |x1| from growing
      while (m10(j) != 0) {
        if (m00() == 0) {
          row1_add(j, Integer(1));
          continue;
        }
        row2_add(j, -nearest_quotient(m10(j), m00()));
        if (m10(j) == 0) break;
        row1_add(j, -nearest_quotient(m00(), m10(j)));
      }
      if (m01(j) != 0) {
        while (m01(j) != 0) {
          if (m00() == 0) {
            col1_add(j, Integer(1));
            continue;
          }
          col2_add(j, -nearest_quotient(m01(j), m00()));
          if (m01(j) == 0) break;
          col1_add(j, -nearest_quotient(m00(), m01(j)));
        }
        continue;
      }
      if (m00() == 0) {
        if (m11() == 0) break;
        row1_add(j, Integer(1));
        continue;
      }
      if (m11() % m00() != 0) {
        row1_add(j, Integer(1));
        continue;
      }
      break;
    }
    if (m00() < 0) {
      // -1 on both rows as the square of (r1, r2) -> (r2, -r1)
      for (int rep = 0; rep < 2; ++rep) {
        row1_add(j, Integer(1));
        row2_add(j, Integer(-1));
        row1_add(j, Integer(1));
      }
    }
  }

  LatticePtr l_;
  IntVector v_;
  Index planes_;
  std::vector<Atom> applied_;
};

using Key = std::vector<std::int64_t>;

std::vector<Mat<std::int64_t>> int64_generators(const std::vector<Isometry>& generators) {
  std::vector<Mat<std::int64_t>> out;
  for (const auto& g : generators) {
    auto m = to_int64(g.matrix);
    auto mi = to_int64(inverse(g).matrix);
    require(m && mi, ErrorKind::InvalidInput, "generator entries exceed 64 bits");
    out.push_back(*m);
    out.push_back(*mi);
  }
  return out;
}

bool in_box(const Vec<std::int64_t>& x, std::int64_t box) {
  for (Index i = 0; i < x.size(); ++i)
    if (x(i) > box || x(i) < -box) return false;
  return true;
}

}  // namespace

bool OrbitInvariants::operator==(const OrbitInvariants& other) const {
  return norm == other.norm && div == other.div && disc == other.disc;
}

OrbitInvariants orbit_invariants(const LatticeVector& v) {
  require(is_primitive(v), ErrorKind::NotPrimitive, "orbit invariants need a primitive vector");
  require(v.lattice->leading_hyperbolic_planes() >= 2, ErrorKind::NoU2Decomposition,
          "lattice does not record two leading hyperbolic planes");
  return OrbitInvariants{norm(v), divisibility(v), disc_class(v)};
}

bool same_orbit_SOtilde_plus(const LatticeVector& v, const LatticeVector& w) {
  require(same_lattice(*v.lattice, *w.lattice), ErrorKind::LatticeMismatch, "vectors live in different lattices");
  return orbit_invariants(v) == orbit_invariants(w);
}

LatticeVector canonical_representative(const LatticePtr& l, const OrbitInvariants& inv) {
  RationalVector mu = canonical_lift(inv.disc);
  RatVector lambda = mu.coords * Rational(inv.div);
  Rational lambda_sq = lambda.dot(to_rational(l->gram()) * lambda);
  Rational h = (Rational(inv.norm) - lambda_sq) / Rational(2 * inv.div);
  auto li = to_integer(lambda);
  require(li.has_value() && is_integral(h), ErrorKind::InternalCaseFailure,
          "canonical representative is not integral");
  IntVector c = *li;
  c(0) += inv.div;
  c(1) += boost::multiprecision::numerator(h);
  return LatticeVector(l, c);
}

IsometryWord reduce_to_canonical(const LatticeVector& v) {
  OrbitInvariants inv = orbit_invariants(v);
  LatticeVector target = canonical_representative(v.lattice, inv);
  Reducer r(v);
  r.run(inv, target);
  return r.word();
}

IsometryWord transport(const LatticeVector& v, const LatticeVector& w) {
  require(same_orbit_SOtilde_plus(v, w), ErrorKind::OrbitMismatch, "orbit invariants differ");
  IsometryWord word = simplify(concat(inverse(reduce_to_canonical(w)), reduce_to_canonical(v)));
  require(apply(evaluate(word), v) == w, ErrorKind::InternalCaseFailure, "transport word does not map v to w");
  return word;
}

Isometry og6_summand_swap(const LatticePtr& og6) {
  require(is_og6_gram(*og6), ErrorKind::WrongLattice, "not the lattice U^3+(-2)^2");
  IntMatrix m = IntMatrix::Identity(8, 8);
  m(6, 6) = 0;
  m(7, 7) = 0;
  m(6, 7) = 1;
  m(7, 6) = 1;
  return make_isometry(og6, m);
}

bool same_orbit_O_plus_og6(const LatticeVector& v, const LatticeVector& w) {
  require(is_og6_gram(*v.lattice) && is_og6_gram(*w.lattice), ErrorKind::WrongLattice,
          "not the lattice U^3+(-2)^2");
  require(is_primitive(v) && is_primitive(w), ErrorKind::NotPrimitive, "vectors must be primitive");
  return norm(v) == norm(w) && divisibility(v) == divisibility(w);
}

std::optional<IsometryWord> same_orbit_O_plus_og6_witness(const LatticeVector& v, const LatticeVector& w) {
  if (!same_orbit_O_plus_og6(v, w)) return std::nullopt;
  LatticePtr tagged = standard_lattice(3, 2);
  LatticeVector tv(tagged, v.coords), tw(tagged, w.coords);
  IsometryWord prefix{tagged, {}};
  if (!(disc_class(tv) == disc_class(tw))) {
    Isometry swap = og6_summand_swap(tagged);
    prefix.atoms.push_back(OpaqueAtom{swap.matrix, "swap(zeta,eps)"});
    tv = apply(swap, tv);
  }
  IsometryWord word = concat(transport(tv, tw), prefix);
  word.lattice = v.lattice;
  require(apply(evaluate(word), v) == w, ErrorKind::InternalCaseFailure, "witness does not map v to w");
  return word;
}

std::vector<std::vector<std::int64_t>> orbit_oracle_bfs(const std::vector<Isometry>& generators,
                                                        const LatticeVector& v, std::int64_t box) {
  auto gens = int64_generators(generators);
  auto start = to_int64(IntMatrix(v.coords));
  require(start.has_value(), ErrorKind::InvalidInput, "vector entries exceed 64 bits");
  Vec<std::int64_t> s = start->col(0);
  require(in_box(s, box), ErrorKind::InvalidInput, "box smaller than the start vector");
  auto key = [](const Vec<std::int64_t>& x) { return Key(x.data(), x.data() + x.size()); };
  std::map<Key, bool> seen;
  std::deque<Vec<std::int64_t>> queue{s};
  seen[key(s)] = true;
  while (!queue.empty()) {
    Vec<std::int64_t> x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Vec<std::int64_t> y = g * x;
      if (!in_box(y, box)) continue;
      if (seen.emplace(key(y), true).second) queue.push_back(y);
    }
  }
  std::vector<Key> out;
  for (const auto& [k, unused] : seen) out.push_back(k);
  return out;
}

OrbitPartition orbit_partition_bfs(const std::vector<Isometry>& generators, const LatticePtr& l,
                                   std::int64_t box) {
  auto gens = int64_generators(generators);
  const Index n = l->rank();
  const std::int64_t side = 2 * box + 1;
  std::int64_t total = 1;
  for (Index i = 0; i < n; ++i) total *= side;

  auto decode = [&](std::int64_t code) {
    Vec<std::int64_t> x(n);
    for (Index i = n - 1; i >= 0; --i) {
      x(i) = code % side - box;
      code /= side;
    }
    return x;
  };
  auto encode = [&](const Vec<std::int64_t>& x) {
    std::int64_t code = 0;
    for (Index i = 0; i < n; ++i) code = code * side + (x(i) + box);
    return code;
  };
  auto primitive = [&](const Vec<std::int64_t>& x) {
    std::int64_t g = 0;
    for (Index i = 0; i < n; ++i) g = std::gcd(g, x(i));
    return g == 1;
  };

  OrbitPartition out;
  std::vector<int> comp(static_cast<std::size_t>(total), -1);
  for (std::int64_t code = 0; code < total; ++code) {
    if (comp[code] >= 0) continue;
    Vec<std::int64_t> x = decode(code);
    if (!primitive(x)) continue;
    int id = out.components++;
    comp[code] = id;
    std::deque<std::int64_t> queue{code};
    while (!queue.empty()) {
      Vec<std::int64_t> y = decode(queue.front());
      queue.pop_front();
      for (const auto& g : gens) {
        Vec<std::int64_t> z = g * y;
        if (!in_box(z, box)) continue;
        std::int64_t c = encode(z);
        if (comp[c] < 0) {
          comp[c] = id;
          queue.push_back(c);
        }
      }
    }
  }
  for (std::int64_t code = 0; code < total; ++code) {
    if (comp[code] < 0) continue;
    Vec<std::int64_t> x = decode(code);
    out.vectors.emplace_back(x.data(), x.data() + n);
    out.component.push_back(comp[code]);
  }
  return out;
}

std::vector<TransvectionAtom> u2_generators() {
  auto u = [](Index i) { return unit_vector(4, i); };
  return {TransvectionAtom{u(2), u(0)}, TransvectionAtom{u(2), u(1)}, TransvectionAtom{u(3), u(0)},
          TransvectionAtom{u(3), u(1)}};
}

U2Decomposition decompose_SOplus_U2(const Isometry& g, int max_depth) {
  static const IntMatrix u2 = gram_from_tag("U^2");
  require(g.lattice->rank() == 4 && g.lattice->gram() == u2, ErrorKind::WrongLattice, "not the lattice U^2");
  Membership m = membership(g);
  require(m.in_SO_plus, ErrorKind::NotInSOPlus, "isometry is not in SO+(U^2)");

  using Node = std::array<std::int64_t, 16>;
  struct NodeHash {
    std::size_t operator()(const Node& n) const {
      std::size_t h = 1469598103934665603ull;
      for (auto x : n) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
      return h;
    }
  };
  struct Visit {
    Node parent;
    int letter;  // -1 at the root
    int depth;
  };

  std::vector<TransvectionAtom> letters;
  for (const auto& t : u2_generators()) {
    letters.push_back(t);
    letters.push_back(TransvectionAtom{t.e, IntVector(-t.a)});
  }
  auto lattice = g.lattice;
  std::vector<Mat<std::int64_t>> mats;
  for (const auto& t : letters) mats.push_back(*to_int64(atom_isometry(lattice, t).matrix));
  auto to_node = [](const Mat<std::int64_t>& x) {
    Node n;
    for (int i = 0; i < 16; ++i) n[i] = x(i / 4, i % 4);
    return n;
  };
  auto from_node = [](const Node& n) {
    Mat<std::int64_t> x(4, 4);
    for (int i = 0; i < 16; ++i) x(i / 4, i % 4) = n[i];
    return x;
  };
  auto target = to_int64(g.matrix);
  require(target.has_value(), ErrorKind::InvalidInput, "matrix entries exceed 64 bits");

  // forward nodes: A1...Ak; backward nodes: g B1...Bm with B letters
  std::unordered_map<Node, Visit, NodeHash> fwd, bwd;
  Node id = to_node(Mat<std::int64_t>::Identity(4, 4));
  Node tg = to_node(*target);
  fwd[id] = Visit{id, -1, 0};
  bwd[tg] = Visit{tg, -1, 0};
  std::vector<Node> ffront{id}, bfront{tg};

  auto path = [](const std::unordered_map<Node, Visit, NodeHash>& side, Node n) {
    std::vector<int> out;  // letters from the root outward
    while (side.at(n).letter >= 0) {
      out.push_back(side.at(n).letter);
      n = side.at(n).parent;
    }
    std::reverse(out.begin(), out.end());
    return out;
  };
  auto build = [&](const Node& meet) {
    U2Decomposition r;
    r.found = true;
    r.word.lattice = lattice;
    for (int k : path(fwd, meet)) r.word.atoms.push_back(letters[k]);
    auto back = path(bwd, meet);
    for (auto it = back.rbegin(); it != back.rend(); ++it) r.word.atoms.push_back(letters[*it ^ 1]);
    return r;
  };

  if (id == tg) {
    U2Decomposition r;
    r.found = true;
    r.word.lattice = lattice;
    return r;
  }
  int fdepth = 0, bdepth = 0;
  while (fdepth + bdepth < max_depth) {
    bool forward = fdepth <= bdepth;
    auto& side = forward ? fwd : bwd;
    auto& other = forward ? bwd : fwd;
    auto& front = forward ? ffront : bfront;
    std::vector<Node> next;
    std::optional<Node> best;
    int best_len = 0;
    for (const Node& n : front) {
      Mat<std::int64_t> x = from_node(n);
      for (int k = 0; k < static_cast<int>(mats.size()); ++k) {
        Node y = to_node(Mat<std::int64_t>(x * mats[k]));
        if (side.count(y)) continue;
        side[y] = Visit{n, k, side.at(n).depth + 1};
        next.push_back(y);
        auto hit = other.find(y);
        if (hit != other.end()) {
          int len = side[y].depth + hit->second.depth;
          if (!best || len < best_len) {
            best = y;
            best_len = len;
          }
        }
      }
    }
    (forward ? fdepth : bdepth) += 1;
    front = std::move(next);
    if (best) {
      U2Decomposition r = build(*best);
      r.depth_searched = fdepth + bdepth;
      require(evaluate(r.word) == g, ErrorKind::InternalCaseFailure, "recovered word does not evaluate to g");
      return r;
    }
  }
  U2Decomposition r;
  r.word.lattice = lattice;
  r.depth_searched = fdepth + bdepth;
  return r;
}

}  // namespace og6
