#pragma once

// Exact-or-floating scalar used for flat-surface coordinates.
//
// Values built from integers and rationals stay exact under + - * /.  As soon
// as an operand is a double (a transcendental such as 2*pi entered the
// computation) the result is a double, and comparisons on it use a relative
// tolerance of kTolerance.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace teichdisk {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class Scalar {
 public:
  static constexpr double kTolerance = 1e-12;

  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t v) : value_(Rational(v)) {}  // NOLINT
  Scalar(Rational v) : value_(std::move(v)) {}  // NOLINT
  explicit Scalar(double v) : value_(v) {}

  static Scalar ratio(std::int64_t num, std::int64_t den);
  static Scalar real(double v) { return Scalar(v); }

  bool exact() const { return std::holds_alternative<Rational>(value_); }
  /// Exact value; throws InvalidInput when the scalar is a double.
  const Rational& rational() const;
  double to_double() const;

  /// Sign with tolerance for doubles: -1, 0 or +1.
  int sign() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Exact equality when both sides are exact, tolerant otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Strict ordering; for doubles "less" means less by more than the tolerance.
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  /// Bitwise identity: same representation and same value.
  bool identical(const Scalar& o) const { return value_ == o.value_; }

  std::string to_string() const;

 private:
  std::variant<Rational, double> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

struct DivMod {
  std::int64_t quotient;
  Scalar remainder;  // in [0, m)
};

/// Floor division of x by m > 0 with the remainder in [0, m).  For doubles a
/// remainder within tolerance of m wraps to 0 and bumps the quotient.
DivMod divmod(const Scalar& x, const Scalar& m);

Scalar abs(const Scalar& s);

/// Parses "3", "-3/4", "0.125" (all exact), or "pi", "2pi", "1.5e-3",
/// "0.5pi" (double).
Scalar parse_scalar(std::string_view text);

struct Vec2 {
  Scalar x;
  Scalar y;

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) = default;
};

Scalar cross(const Vec2& a, const Vec2& b);

/// Row-major 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
  Scalar a = 1;
  Scalar b = 0;
  Scalar c = 0;
  Scalar d = 1;

  Scalar det() const { return a * d - b * c; }
  Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;

  static Mat2 identity() { return {}; }
  static Mat2 shear(const Scalar& t) { return {1, t, 0, 1}; }
  static Mat2 stretch(const Scalar& s) { return {1, 0, 0, s}; }
};

}  // namespace teichdisk
