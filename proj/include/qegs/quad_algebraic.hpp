#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qegs/error.hpp"
#include "qegs/polynomial.hpp"
#include "qegs/rational.hpp"

namespace qegs {

namespace detail {

inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
  if (n < 0) return false;
  BigInt r = isqrt(n);
  if (root) *root = r;
  return r * r == n;
}

// Trial division stops here; cofactors above kTrialLimit^3 may keep a square
// factor made of two large primes. Ordering and arithmetic stay exact either way.
inline constexpr std::uint64_t kTrialLimit = 1'000'000;

/// Splits n > 0 as k^2 * m with m square-free (see kTrialLimit).
inline void square_free_split(BigInt n, BigInt& k, BigInt& m) {
  k = 1;
  m = 1;
  if (n <= 1) {
    m = n;
    return;
  }
  auto strip = [&](const BigInt& p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) k *= p;
    if (e % 2 == 1) m *= p;
  };
  strip(2);
  for (std::uint64_t p = 3; p <= kTrialLimit; p += 2) {
    BigInt bp(p);
    if (bp * bp * bp > n) break;
    strip(bp);
  }
  BigInt r;
  if (n > 1 && is_perfect_square(n, &r)) {
    k *= r;
  } else {
    m *= n;
  }
}

/// Sign of p + q*sqrt(d), d >= 0.
inline int sign_surd(const Rational& p, const Rational& q, const BigInt& d) {
  int sp = p.sign();
  int sq = (d == 0) ? 0 : q.sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  Rational lhs = p * p;
  Rational rhs = q * q * Rational(d);
  if (lhs > rhs) return sp;
  if (lhs < rhs) return sq;
  return 0;
}

/// Sign of p + q*sqrt(d1) + r*sqrt(d2).
inline int sign_two_surds(const Rational& p, const Rational& q, const BigInt& d1, const Rational& r,
                          const BigInt& d2) {
  if (d1 == d2) return sign_surd(p, q + r, d1);
  int sa = sign_surd(p, q, d1);
  int sb = (d2 == 0) ? 0 : r.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
  // opposite signs: compare squares, A^2 - B^2 = (p^2 + q^2 d1 - r^2 d2) + 2pq sqrt(d1)
  int cmp = sign_surd(p * p + q * q * Rational(d1) - r * r * Rational(d2), Rational(2) * p * q, d1);
  if (cmp > 0) return sa;
  if (cmp < 0) return sb;
  return 0;
}

}  // namespace detail

/// Exact real number rational_part + surd_coefficient * sqrt(radicand).
///
/// Radicand is square-free and zero iff the value is rational. Ordering is
/// exact across different radicands; ring operations require a shared
/// radicand (or a rational operand) and throw ErrorKind::MixedRadicands
/// otherwise.
class QuadAlgebraic {
 public:
  QuadAlgebraic() = default;
  QuadAlgebraic(const Rational& r) : rational_(r) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  QuadAlgebraic(I r) : rational_(r) {}  // NOLINT(google-explicit-constructor)
  QuadAlgebraic(const Rational& r, const Rational& s, const BigInt& d) : rational_(r), surd_(s), radicand_(d) {
    if (d < 0) throw Error(ErrorKind::Param, "negative radicand");
    normalize();
  }

  const Rational& rational_part() const { return rational_; }
  const Rational& surd_coefficient() const { return surd_; }
  const BigInt& radicand() const { return radicand_; }
  bool is_rational() const { return radicand_ == 0; }

  double to_double() const {
    if (is_rational()) return rational_.to_double();
    return rational_.to_double() + surd_.to_double() * std::sqrt(radicand_.convert_to<double>());
  }

  /// Rational bounds lo <= value <= hi with hi - lo <= 2^-bits * |surd|.
  std::pair<Rational, Rational> bounds(unsigned bits) const {
    if (is_rational()) return {rational_, rational_};
    BigInt scale = BigInt(1) << bits;
    BigInt root = detail::isqrt(radicand_ * scale * scale);
    Rational lo_root(root, scale), hi_root(root + 1, scale);
    Rational a = rational_ + surd_ * lo_root, b = rational_ + surd_ * hi_root;
    return a <= b ? std::pair{a, b} : std::pair{b, a};
  }

  std::string to_string() const {
    if (is_rational()) return rational_.to_string();
    std::string out = rational_.is_zero() ? "" : rational_.to_string();
    Rational mag = abs(surd_);
    std::string surd = (mag == Rational(1) ? "" : mag.to_string() + "*") + "sqrt(" + radicand_.str() + ")";
    if (out.empty()) return (surd_.sign() < 0 ? "-" : "") + surd;
    return out + (surd_.sign() < 0 ? " - " : " + ") + surd;
  }

  QuadAlgebraic operator-() const { return QuadAlgebraic(-rational_, -surd_, radicand_); }

  QuadAlgebraic& operator+=(const QuadAlgebraic& o) {
    BigInt d = shared(o);
    *this = QuadAlgebraic(rational_ + o.rational_, surd_ + o.surd_, d);
    return *this;
  }
  QuadAlgebraic& operator-=(const QuadAlgebraic& o) { return *this += -o; }
  QuadAlgebraic& operator*=(const QuadAlgebraic& o) {
    BigInt d = shared(o);
    Rational r = rational_ * o.rational_ + surd_ * o.surd_ * Rational(d);
    Rational s = rational_ * o.surd_ + surd_ * o.rational_;
    *this = QuadAlgebraic(r, s, d);
    return *this;
  }

  friend QuadAlgebraic operator+(QuadAlgebraic a, const QuadAlgebraic& b) { return a += b; }
  friend QuadAlgebraic operator-(QuadAlgebraic a, const QuadAlgebraic& b) { return a -= b; }
  friend QuadAlgebraic operator*(QuadAlgebraic a, const QuadAlgebraic& b) { return a *= b; }

  friend bool operator==(const QuadAlgebraic& a, const QuadAlgebraic& b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const QuadAlgebraic& a, const QuadAlgebraic& b) {
    int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  static int compare(const QuadAlgebraic& a, const QuadAlgebraic& b) {
    return detail::sign_two_surds(a.rational_ - b.rational_, a.surd_, a.radicand_, -b.surd_, b.radicand_);
  }

 private:
  BigInt shared(const QuadAlgebraic& o) const {
    if (radicand_ == 0) return o.radicand_;
    if (o.radicand_ == 0 || o.radicand_ == radicand_) return radicand_;
    throw Error(ErrorKind::MixedRadicands, "arithmetic across different radicands");
  }

  void normalize() {
    if (radicand_ == 0 || surd_.is_zero()) {
      surd_ = Rational(0);
      radicand_ = 0;
      return;
    }
    BigInt k, m;
    detail::square_free_split(radicand_, k, m);
    surd_ *= Rational(k);
    radicand_ = m;
    if (radicand_ == 1) {
      rational_ += surd_;
      surd_ = Rational(0);
      radicand_ = 0;
    }
  }

  Rational rational_{0};
  Rational surd_{0};
  BigInt radicand_{0};
};

/// sqrt of a nonnegative rational as surd * sqrt(radicand).
inline QuadAlgebraic sqrt_rational(const Rational& v) {
  if (v.sign() < 0) throw Error(ErrorKind::Param, "sqrt of negative rational");
  // sqrt(p/q) = sqrt(p*q)/q
  BigInt p = v.numerator(), q = v.denominator();
  return QuadAlgebraic(Rational(0), Rational(BigInt(1), q), p * q);
}

/// Real roots of a polynomial of degree 1 or 2, ascending, without duplicates.
/// Constant polynomials (including zero) have no roots.
inline std::vector<QuadAlgebraic> real_roots_quadratic(const PayoffPoly& p) {
  if (p.degree() > 2) throw Error(ErrorKind::DegreeTooHigh, "exact roots need degree <= 2");
  if (p.is_constant()) return {};
  if (p.degree() == 1) return {QuadAlgebraic(-p.coeff(0) / p.coeff(1))};
  const Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
  Rational disc = b * b - Rational(4) * a * c;
  if (disc.sign() < 0) return {};
  Rational center = -b / (Rational(2) * a);
  if (disc.is_zero()) return {QuadAlgebraic(center)};
  QuadAlgebraic root = sqrt_rational(disc);
  Rational half = root.surd_coefficient() / (Rational(2) * abs(a));
  if (root.is_rational()) {
    Rational h = root.rational_part() / (Rational(2) * abs(a));
    return {QuadAlgebraic(center - h), QuadAlgebraic(center + h)};
  }
  return {QuadAlgebraic(center, -half, root.radicand()), QuadAlgebraic(center, half, root.radicand())};
}

/// Simplest rational (smallest denominator, then smallest magnitude) strictly
/// inside the open interval (lo, hi); lo < hi required.
inline Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo.sign() < 0 && hi.sign() > 0) return Rational(0);
  if (hi.sign() <= 0) return -simplest_between(-hi, -lo);
  // 0 <= lo < hi
  BigInt fl = floor(lo);
  Rational next(BigInt(fl + 1));
  if (next < hi) return next;
  // (lo, hi) sits inside [fl, fl+1]
  Rational flr(fl);
  Rational x = lo - flr, y = hi - flr;  // 0 <= x < y <= 1
  if (x.is_zero()) {
    // 1/(fl + 1/z) with z > 1/y: simplest z is floor(1/y) + 1
    Rational z(BigInt(floor(Rational(1) / y) + 1));
    return flr + Rational(1) / z;
  }
  return flr + Rational(1) / simplest_between(Rational(1) / y, Rational(1) / x);
}

/// A rational strictly between two quadratic algebraic numbers a < b.
inline Rational rational_between(const QuadAlgebraic& a, const QuadAlgebraic& b) {
  for (unsigned bits = 8;; bits *= 2) {
    Rational hi_a = a.bounds(bits).second;
    Rational lo_b = b.bounds(bits).first;
    if (hi_a < lo_b) {
      // hi_a >= a and lo_b <= b, so the open interval is inside (a, b)
      return simplest_between(hi_a, lo_b);
    }
    if (bits > 4096) throw Error(ErrorKind::Param, "rational_between: interval is empty");
  }
}

}  // namespace qegs
