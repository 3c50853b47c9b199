#include "og6/scalar.hpp"

#include <limits>
#include <regex>
#include <stdexcept>

namespace og6 {

std::optional<IntMatrix> to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) return std::nullopt;
      out(i, j) = boost::multiprecision::numerator(m(i, j));
    }
  return out;
}

std::optional<IntVector> to_integer(const RatVector& v) {
  auto m = to_integer(RatMatrix(v));
  if (!m) return std::nullopt;
  return IntVector(m->col(0));
}

Integer common_denominator(const RatMatrix& m) {
  Integer l(1);
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      Integer d = boost::multiprecision::denominator(m(i, j));
      l = boost::multiprecision::lcm(l, d);
    }
  return l;
}

IntVector int_vector(std::initializer_list<long> values) {
  IntVector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (long x : values) v(i++) = Integer(x);
  return v;
}

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  Index r = static_cast<Index>(rows.size());
  Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) throw std::invalid_argument("ragged matrix literal");
    Index j = 0;
    for (long x : row) m(i, j++) = Integer(x);
    ++i;
  }
  return m;
}

IntVector unit_vector(Index size, Index i) {
  IntVector v = IntVector::Zero(size);
  v(i) = 1;
  return v;
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& v) {
  Integer n = boost::multiprecision::numerator(v);
  Integer d = boost::multiprecision::denominator(v);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern))
    throw std::invalid_argument("not a rational number: '" + text + "'");
  Integer num(match[1].str());
  Integer den(1);
  if (match[2].matched) den = Integer(match[2].str());
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return Rational(num, den);
}

std::optional<Mat<std::int64_t>> to_int64(const IntMatrix& m) {
  const Integer lo(std::numeric_limits<std::int64_t>::min());
  const Integer hi(std::numeric_limits<std::int64_t>::max());
  Mat<std::int64_t> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) < lo || m(i, j) > hi) return std::nullopt;
      out(i, j) = m(i, j).convert_to<std::int64_t>();
    }
  return out;
}

std::optional<std::int64_t> to_int64(const Integer& v) {
  if (v < Integer(std::numeric_limits<std::int64_t>::min()) || v > Integer(std::numeric_limits<std::int64_t>::max()))
    return std::nullopt;
  return v.convert_to<std::int64_t>();
}

}  // namespace og6
