#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "qegs/error.hpp"

namespace qegs {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over Boost.Multiprecision's cpp_rational; the wrapper
/// pins down the text format ("p" or "p/q") and keeps the rest of the
/// library independent of the backend.
class Rational {
 public:
  using backend_type = boost::multiprecision::cpp_rational;

  Rational() = default;
  template <std::integral I>
  Rational(I v) : v_(static_cast<long long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator");
    v_ = backend_type(num, den);
  }
  explicit Rational(backend_type v) : v_(std::move(v)) {}

  /// Parses "[+-]digits[/digits]". No whitespace, no decimals.
  static Rational parse(std::string_view s) {
    auto digits = [](std::string_view d) {
      if (d.empty()) return false;
      for (char c : d)
        if (c < '0' || c > '9') return false;
      return true;
    };
    std::string_view body = s;
    bool neg = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
      neg = body.front() == '-';
      body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
      throw Error(ErrorKind::Parse, "malformed rational '" + std::string(s) + "'");
    BigInt n{std::string(num)};
    BigInt d = slash == std::string_view::npos ? BigInt(1) : BigInt(std::string(den));
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(s) + "'");
    if (neg) n = -n;
    return Rational(n, d);
  }

  /// Like parse() but also accepts finite decimals ("0.24" == 6/25).
  static Rational parse_lenient(std::string_view s) {
    auto dot = s.find('.');
    if (dot == std::string_view::npos) return parse(s);
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string_view::npos)
      throw Error(ErrorKind::Parse, "malformed decimal '" + std::string(s) + "'");
    bool neg = !whole.empty() && whole.front() == '-';
    std::string w(whole);
    if (w.empty() || w == "-" || w == "+") w += "0";
    Rational ip = parse(w);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    Rational fp(BigInt(std::string(frac)), scale);
    return neg ? ip - fp : ip + fp;
  }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }
  const backend_type& backend() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  double to_double() const { return v_.convert_to<double>(); }

  std::string to_string() const {
    BigInt d = denominator();
    if (d == 1) return numerator().str();
    return numerator().str() + "/" + d.str();
  }

  Rational operator-() const { return Rational(backend_type(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::Param, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  backend_type v_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Largest integer <= r.
inline BigInt floor(const Rational& r) {
  BigInt n = r.numerator(), d = r.denominator();
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

/// Exact dyadic value of a finite double.
inline Rational from_double_exact(double x) {
  return Rational(Rational::backend_type(x));
}

/// Best rational approximation of x with denominator <= max_den
/// (continued-fraction convergents).
inline Rational approximate(double x, std::int64_t max_den = 1'000'000'000'000LL) {
  Rational target = from_double_exact(x);
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational rest = target;
  for (int iter = 0; iter < 64; ++iter) {
    BigInt a = floor(rest);
    BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    Rational frac = rest - Rational(a);
    if (frac.is_zero()) break;
    rest = Rational(1) / frac;
  }
  return Rational(p1, q1);
}

}  // namespace qegs

template <>
struct std::hash<qegs::Rational> {
  std::size_t operator()(const qegs::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
  }
};
