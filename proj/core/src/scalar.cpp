#include "teichdisk/scalar.hpp"

#include "teichdisk/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

namespace teichdisk {
namespace {

double tolerance_scale(double a, double b) {
  return Scalar::kTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  // den > 0 for normalized rationals
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

}  // namespace

Scalar Scalar::ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  return Scalar(Rational(num, den));
}

const Rational& Scalar::rational() const {
  if (!exact()) throw InvalidInput("scalar " + to_string() + " is not exact");
  return std::get<Rational>(value_);
}

double Scalar::to_double() const {
  if (exact()) return std::get<Rational>(value_).convert_to<double>();
  return std::get<double>(value_);
}

int Scalar::sign() const {
  if (exact()) {
    const auto& r = std::get<Rational>(value_);
    return r < 0 ? -1 : (r > 0 ? 1 : 0);
  }
  double v = std::get<double>(value_);
  if (std::abs(v) <= kTolerance) return 0;
  return v < 0 ? -1 : 1;
}

Scalar Scalar::operator-() const {
  if (exact()) return Scalar(Rational(-std::get<Rational>(value_)));
  return Scalar(-std::get<double>(value_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return Scalar(Rational(a.rational() + b.rational()));
  return Scalar(a.to_double() + b.to_double());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return Scalar(Rational(a.rational() - b.rational()));
  return Scalar(a.to_double() - b.to_double());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return Scalar(Rational(a.rational() * b.rational()));
  return Scalar(a.to_double() * b.to_double());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.exact() && b.rational() == 0) throw InvalidInput("division by exact zero");
  if (a.exact() && b.exact()) return Scalar(Rational(a.rational() / b.rational()));
  return Scalar(a.to_double() / b.to_double());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return a.rational() == b.rational();
  double x = a.to_double();
  double y = b.to_double();
  return std::abs(x - y) <= tolerance_scale(x, y);
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return a.rational() < b.rational();
  double x = a.to_double();
  double y = b.to_double();
  return x < y - tolerance_scale(x, y);
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  if (s.exact()) return os << s.rational();
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), s.to_double());
  return os << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
}

DivMod divmod(const Scalar& x, const Scalar& m) {
  if (m.sign() <= 0) throw InvalidInput("divmod modulus must be positive");
  if (x.exact() && m.exact()) {
    Rational q = x.rational() / m.rational();
    BigInt fl = floor_div(numerator(q), denominator(q));
    Rational rem = x.rational() - Rational(fl) * m.rational();
    return {fl.convert_to<std::int64_t>(), Scalar(rem)};
  }
  double xv = x.to_double();
  double mv = m.to_double();
  double fl = std::floor(xv / mv);
  double rem = xv - fl * mv;
  if (rem < 0) {
    rem += mv;
    fl -= 1;
  }
  if (std::abs(rem - mv) <= tolerance_scale(rem, mv)) {
    rem = 0;
    fl += 1;
  } else if (std::abs(rem) <= tolerance_scale(rem, mv)) {
    rem = 0;
  }
  return {static_cast<std::int64_t>(fl), Scalar(rem)};
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

Scalar cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) throw InvalidInput("empty number");

  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    std::string coeff = s.substr(0, s.size() - 2);
    double k = 1.0;
    if (coeff == "-") {
      k = -1.0;
    } else if (!coeff.empty()) {
      k = parse_scalar(coeff).to_double();
    }
    return Scalar(k * M_PI);
  }

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Scalar num = parse_scalar(s.substr(0, slash));
    Scalar den = parse_scalar(s.substr(slash + 1));
    return num / den;
  }

  bool plain_decimal = std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == '.' || ch == '-' || ch == '+';
  });
  if (plain_decimal) {
    bool neg = s[0] == '-';
    std::string body = (s[0] == '-' || s[0] == '+') ? s.substr(1) : s;
    auto dot = body.find('.');
    std::string digits = body;
    std::size_t frac_len = 0;
    if (dot != std::string::npos) {
      digits = body.substr(0, dot) + body.substr(dot + 1);
      frac_len = body.size() - dot - 1;
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidInput("malformed number '" + std::string(text) + "'");
    }
    // a leading 0 would make cpp_int read octal
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    BigInt num(digits);
    BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_len));
    Rational r(num, den);
    return Scalar(neg ? Rational(-r) : r);
  }

  double v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw InvalidInput("malformed number '" + std::string(text) + "'");
  }
  return Scalar(v);
}

}  // namespace teichdisk
