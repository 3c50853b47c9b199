#include "og6/lattice.hpp"

#include <regex>

namespace og6 {
namespace {

void check_symmetric_even(const IntMatrix& gram) {
  require(gram.rows() == gram.cols() && gram.rows() > 0, ErrorKind::DimensionMismatch,
          "Gram matrix must be square and non-empty");
  for (Index i = 0; i < gram.rows(); ++i) {
    for (Index j = i + 1; j < gram.cols(); ++j)
      require(gram(i, j) == gram(j, i), ErrorKind::NotSymmetric,
              "entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs from its transpose");
    require(gram(i, i) % 2 == 0, ErrorKind::NotEven,
            "diagonal entry " + std::to_string(i) + " is odd");
  }
}

DiscriminantGroup compute_discriminant(const IntMatrix& gram) {
  SmithForm s = smith_normal_form(gram);
  DiscriminantGroup g;
  const Index n = gram.rows();
  std::vector<Index> idx;
  for (Index i = 0; i < s.rank; ++i)
    if (s.diagonal[i] > 1) idx.push_back(i);
  g.lifts = RatMatrix::Zero(n, static_cast<Index>(idx.size()));
  g.coefficient_map = IntMatrix::Zero(static_cast<Index>(idx.size()), n);
  for (Index k = 0; k < static_cast<Index>(idx.size()); ++k) {
    Index i = idx[k];
    const Integer& d = s.diagonal[i];
    g.orders.push_back(d);
    for (Index r = 0; r < n; ++r) {
      Rational x(s.right(r, i), d);
      g.lifts(r, k) = reduce_mod(x, Integer(1));
    }
    g.coefficient_map.row(k) = s.left.row(i);
  }
  return g;
}

std::string compress(const std::vector<std::string>& summands) {
  std::string out;
  for (std::size_t i = 0; i < summands.size();) {
    std::size_t j = i;
    while (j < summands.size() && summands[j] == summands[i]) ++j;
    if (!out.empty()) out += "+";
    out += summands[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

Integer DiscriminantGroup::cardinality() const {
  Integer c(1);
  for (const auto& o : orders) c *= o;
  return c;
}

std::string Lattice::tag() const { return compress(summands_); }

Index Lattice::leading_hyperbolic_planes() const {
  Index k = 0;
  while (k < static_cast<Index>(summands_.size()) && summands_[k] == "U") ++k;
  return k;
}

const DiscriminantGroup& Lattice::discriminant() const {
  require(disc_.has_value(), ErrorKind::Degenerate, "discriminant group of a degenerate lattice");
  return *disc_;
}

Integer Lattice::det() const { return determinant(gram_); }

IntMatrix gram_from_tag(const std::string& tag, std::vector<std::string>* summands) {
  static const std::regex token(R"(^\s*(U|\((-?\d+)\))\s*(?:\^\s*(\d+))?\s*$)");
  std::vector<std::string> names;
  std::vector<Integer> diag;  // 0 marks a hyperbolic plane
  std::size_t start = 0;
  while (start <= tag.size()) {
    std::size_t end = tag.find('+', start);
    if (end == std::string::npos) end = tag.size();
    std::string part = tag.substr(start, end - start);
    std::smatch m;
    require(std::regex_match(part, m, token), ErrorKind::InvalidTag, "cannot parse summand '" + part + "'");
    int count = m[3].matched ? std::stoi(m[3].str()) : 1;
    require(count >= 1, ErrorKind::InvalidTag, "summand multiplicity must be positive");
    std::string name;
    Integer value(0);
    if (m[1].str() == "U") {
      name = "U";
    } else {
      value = Integer(m[2].str());
      require(value != 0 && value % 2 == 0, ErrorKind::InvalidTag,
              "rank-one summand must be even and nonzero");
      name = "(" + value.str() + ")";
    }
    for (int c = 0; c < count; ++c) {
      names.push_back(name);
      diag.push_back(value);
    }
    start = end + 1;
  }
  Index n = 0;
  for (const auto& v : diag) n += (v == 0) ? 2 : 1;
  IntMatrix g = IntMatrix::Zero(n, n);
  Index pos = 0;
  for (const auto& v : diag) {
    if (v == 0) {
      g(pos, pos + 1) = 1;
      g(pos + 1, pos) = 1;
      pos += 2;
    } else {
      g(pos, pos) = v;
      pos += 1;
    }
  }
  if (summands) *summands = names;
  return g;
}

LatticePtr make_lattice(const IntMatrix& gram, const std::string& tag) {
  check_symmetric_even(gram);
  require(determinant(gram) != 0, ErrorKind::Degenerate, "Gram matrix has zero determinant");
  auto l = std::make_shared<Lattice>();
  l->gram_ = gram;
  if (!tag.empty()) {
    IntMatrix expected = gram_from_tag(tag, &l->summands_);
    require(expected.rows() == gram.rows() && expected == gram, ErrorKind::InvalidTag,
            "tag '" + tag + "' does not describe the Gram matrix");
  }
  l->disc_ = compute_discriminant(gram);
  return l;
}

LatticePtr make_possibly_degenerate(const IntMatrix& gram) {
  if (gram.rows() > 0) check_symmetric_even(gram);
  auto l = std::make_shared<Lattice>();
  l->gram_ = gram;
  l->degenerate_ = gram.rows() > 0 && determinant(gram) == 0;
  if (!l->degenerate_ && gram.rows() > 0) l->disc_ = compute_discriminant(gram);
  return l;
}

LatticePtr standard_lattice(int k, int m) {
  require(k >= 0 && m >= 0 && k + m >= 1, ErrorKind::InvalidInput, "need at least one summand");
  std::string tag;
  if (k > 0) tag = "U^" + std::to_string(k);
  if (m > 0) tag += (tag.empty() ? "" : "+") + std::string("(-2)^") + std::to_string(m);
  std::vector<std::string> names;
  IntMatrix g = gram_from_tag(tag, &names);
  return make_lattice(g, tag);
}

LatticePtr direct_sum(const LatticePtr& a, const LatticePtr& b) {
  const Index p = a->rank(), q = b->rank();
  IntMatrix g = IntMatrix::Zero(p + q, p + q);
  g.topLeftCorner(p, p) = a->gram();
  g.bottomRightCorner(q, q) = b->gram();
  std::string tag;
  if (!a->summands().empty() && !b->summands().empty()) tag = a->tag() + "+" + b->tag();
  return make_lattice(g, tag);
}

bool same_lattice(const Lattice& a, const Lattice& b) {
  return &a == &b || (a.rank() == b.rank() && a.gram() == b.gram());
}

LatticeVector::LatticeVector(LatticePtr l, IntVector c) : lattice(std::move(l)), coords(std::move(c)) {
  require(lattice != nullptr, ErrorKind::InvalidInput, "vector without lattice");
  require(coords.size() == lattice->rank(), ErrorKind::DimensionMismatch,
          "vector length " + std::to_string(coords.size()) + " does not match rank " +
              std::to_string(lattice->rank()));
}

bool LatticeVector::operator==(const LatticeVector& other) const {
  return same_lattice(*lattice, *other.lattice) && coords == other.coords;
}

LatticeVector make_vector(const LatticePtr& l, std::initializer_list<long> coords) {
  return LatticeVector(l, int_vector(coords));
}

Integer pair(const LatticeVector& v, const LatticeVector& w) {
  require(same_lattice(*v.lattice, *w.lattice), ErrorKind::LatticeMismatch, "vectors live in different lattices");
  return bilinear(v.lattice->gram(), v.coords, w.coords);
}

Integer norm(const LatticeVector& v) { return pair(v, v); }

Rational pair(const RationalVector& v, const RationalVector& w) {
  require(same_lattice(*v.lattice, *w.lattice), ErrorKind::LatticeMismatch, "vectors live in different lattices");
  return v.coords.dot(to_rational(v.lattice->gram()) * w.coords);
}

Rational norm(const RationalVector& v) { return pair(v, v); }

Integer divisibility(const LatticeVector& v) {
  require(!v.coords.isZero(), ErrorKind::ZeroVector, "divisibility of the zero vector");
  IntVector gv = v.lattice->gram() * v.coords;
  Integer d = content(gv);
  require(d != 0, ErrorKind::Degenerate, "vector lies in the radical");
  return d;
}

bool is_primitive(const LatticeVector& v) {
  require(!v.coords.isZero(), ErrorKind::ZeroVector, "primitivity of the zero vector");
  return content(v.coords) == 1;
}

LatticeVector primitive_part(const LatticeVector& v) {
  require(!v.coords.isZero(), ErrorKind::ZeroVector, "primitive part of the zero vector");
  Integer c = content(v.coords);
  IntVector out = v.coords;
  for (Index i = 0; i < out.size(); ++i) out(i) /= c;
  return LatticeVector(v.lattice, out);
}

Sublattice orthogonal_complement(const LatticePtr& ambient, const IntMatrix& columns) {
  require(columns.rows() == ambient->rank(), ErrorKind::DimensionMismatch, "generator length mismatch");
  Sublattice out;
  out.ambient = ambient;
  if (columns.cols() == 0) {
    out.embedding = IntMatrix::Identity(ambient->rank(), ambient->rank());
  } else {
    IntMatrix pairing_map = columns.transpose() * ambient->gram();
    out.embedding = integer_kernel(pairing_map);
  }
  IntMatrix g = out.embedding.transpose() * ambient->gram() * out.embedding;
  out.lattice = make_possibly_degenerate(g);
  return out;
}

Sublattice orthogonal_complement(const std::vector<LatticeVector>& vs) {
  require(!vs.empty(), ErrorKind::InvalidInput, "need at least one vector to know the ambient lattice");
  LatticePtr ambient = vs.front().lattice;
  IntMatrix cols(ambient->rank(), static_cast<Index>(vs.size()));
  for (Index i = 0; i < static_cast<Index>(vs.size()); ++i) {
    require(same_lattice(*vs[i].lattice, *ambient), ErrorKind::LatticeMismatch, "vectors live in different lattices");
    cols.col(i) = vs[i].coords;
  }
  return orthogonal_complement(ambient, cols);
}

Signature signature(const Lattice& l) { return signature_of(to_rational(l.gram())); }

}  // namespace og6
