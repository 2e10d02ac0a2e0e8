#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace conerep {

/// Exact scalar: arbitrary-precision rational, always in canonical form
/// (coprime numerator/denominator, positive denominator).
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

using Vector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

using Eigen::Index;

/// Thrown on violated operation preconditions (dimension mismatches,
/// failed hypotheses). CLI maps this to exit status 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown on malformed input text. CLI maps this to exit status 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError(what);
}

inline void requireSameDim(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), "dimension mismatch");
}

/// Duality pairing <x,y> = sum_i x_i y_i, exact.
inline Rational pairing(const Vector& x, const Vector& y) {
  requireSameDim(x, y);
  return x.dot(y);
}

inline bool isZero(const Vector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

inline Vector zeroVector(Index dim) { return Vector::Zero(dim); }

inline Vector unitVector(Index dim, Index k) {
  Vector v = Vector::Zero(dim);
  v[k] = 1;
  return v;
}

/// Scales v by the positive rational that makes all coordinates coprime
/// integers. The zero vector is returned unchanged. Direction is preserved
/// (no sign normalization: a ray and its opposite stay distinct).
inline Vector primitive(const Vector& v) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  Integer den = 1;
  for (Index i = 0; i < v.size(); ++i) den = lcm(den, denominator(v[i]));
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i)
    g = gcd(g, Integer(numerator(v[i]) * (den / denominator(v[i]))));
  if (g == 0) return v;
  Vector out(v.size());
  for (Index i = 0; i < v.size(); ++i)
    out[i] = Rational(numerator(v[i]) * (den / denominator(v[i])), g);
  return out;
}

/// Lexicographic order on coordinates; ties broken nowhere (total order
/// on equal-dimension vectors).
inline bool lexLess(const Vector& a, const Vector& b) {
  for (Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

inline bool vecEq(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

/// Sorts vectors lexicographically and drops exact duplicates.
inline std::vector<Vector> sortedUnique(std::vector<Vector> vs) {
  std::sort(vs.begin(), vs.end(), lexLess);
  vs.erase(std::unique(vs.begin(), vs.end(), vecEq), vs.end());
  return vs;
}

inline Vector makeVector(std::initializer_list<Rational> coords) {
  Vector v(static_cast<Index>(coords.size()));
  Index i = 0;
  for (const auto& c : coords) v[i++] = c;
  return v;
}

}  // namespace conerep
