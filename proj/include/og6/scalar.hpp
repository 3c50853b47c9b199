#pragma once

// Exact scalar types and the dense matrix aliases used throughout the library.
// Everything is templated on the scalar where it matters: the exact routines
// use Integer/Rational (GMP), the exhaustive scans instantiate with int64_t.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace og6 {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Mat<Integer>;
using IntVector = Vec<Integer>;
using RatMatrix = Mat<Rational>;
using RatVector = Vec<Rational>;
using Index = Eigen::Index;

inline Integer abs_gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}
inline std::int64_t abs_gcd(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

inline Integer abs_value(const Integer& a) { return boost::multiprecision::abs(a); }
inline std::int64_t abs_value(std::int64_t a) { return a < 0 ? -a : a; }

/// gcd of all entries (0 for the zero vector).
template <typename Derived>
typename Derived::Scalar content(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  Scalar g(0);
  for (Index i = 0; i < v.size(); ++i) g = abs_gcd(g, Scalar(v(i)));
  return g;
}

/// v^T gram w, the bilinear form in coordinates.
template <typename Scalar>
Scalar bilinear(const Mat<Scalar>& gram, const Vec<Scalar>& v, const Vec<Scalar>& w) {
  return v.dot(gram * w);
}

/// Floor division and the matching non-negative remainder.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += abs_value(m);
  return r;
}

inline Integer floor_of(const Rational& q) {
  return floor_div(boost::multiprecision::numerator(q),
                   boost::multiprecision::denominator(q));
}
inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Reduces a rational into [0, modulus).
inline Rational reduce_mod(const Rational& q, const Integer& modulus) {
  Rational scaled = q / Rational(modulus);
  return q - Rational(floor_of(scaled) * modulus);
}

inline RatMatrix to_rational(const IntMatrix& m) { return m.cast<Rational>(); }
inline RatVector to_rational(const IntVector& v) { return v.cast<Rational>(); }

/// Exact conversion back to integers; nullopt if some entry is fractional.
std::optional<IntMatrix> to_integer(const RatMatrix& m);
std::optional<IntVector> to_integer(const RatVector& v);

/// Least common multiple of all denominators.
Integer common_denominator(const RatMatrix& m);

IntVector int_vector(std::initializer_list<long> values);
IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows);
IntVector unit_vector(Index size, Index i);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
/// "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// int64 copies for the exhaustive scans; nullopt on overflow.
std::optional<Mat<std::int64_t>> to_int64(const IntMatrix& m);
std::optional<std::int64_t> to_int64(const Integer& v);

}  // namespace og6
