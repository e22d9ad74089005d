#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qegs/bimatrix.hpp"
#include "qegs/error.hpp"
#include "qegs/quad_algebraic.hpp"
#include "qegs/rational.hpp"

namespace qegs {

/// An angle, either an exact rational multiple of pi or a float in radians.
class Angle {
 public:
  static Angle pi_times(const Rational& m) { return Angle(m); }
  static Angle radians(double r) { return Angle(r); }

  const std::optional<Rational>& pi_multiple() const { return pi_multiple_; }
  double to_radians() const { return pi_multiple_ ? pi_multiple_->to_double() * std::numbers::pi : radians_; }

  Angle operator+(const Angle& o) const { return combine(o, 1); }
  Angle operator-(const Angle& o) const { return combine(o, -1); }
  Angle half() const { return pi_multiple_ ? Angle(*pi_multiple_ / Rational(2)) : Angle(radians_ / 2); }

 private:
  explicit Angle(Rational m) : pi_multiple_(std::move(m)), radians_(pi_multiple_->to_double() * std::numbers::pi) {}
  explicit Angle(double r) : radians_(r) {}

  Angle combine(const Angle& o, int s) const {
    if (pi_multiple_ && o.pi_multiple_) return Angle(s > 0 ? *pi_multiple_ + *o.pi_multiple_ : *pi_multiple_ - *o.pi_multiple_);
    return Angle(s > 0 ? to_radians() + o.to_radians() : to_radians() - o.to_radians());
  }

  std::optional<Rational> pi_multiple_;
  double radians_ = 0.0;
};

/// EWL strategy U(theta, alpha, beta) with theta in [0, pi] and alpha, beta
/// reduced into [0, 2pi).
class UnitaryParams {
 public:
  /// Angles given as multiples of pi: exact(1/3, 1/2, 1) is U(pi/3, pi/2, pi).
  static UnitaryParams exact(const Rational& theta, const Rational& alpha, const Rational& beta) {
    if (theta < Rational(0) || theta > Rational(1)) throw Error(ErrorKind::ParamOutOfRange, "theta must lie in [0, pi]");
    return UnitaryParams(Angle::pi_times(theta), Angle::pi_times(wrap(alpha)), Angle::pi_times(wrap(beta)));
  }

  static UnitaryParams radians(double theta, double alpha, double beta) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
      throw Error(ErrorKind::ParamOutOfRange, "theta must lie in [0, pi]");
    auto wrapd = [](double a) {
      double r = std::fmod(a, 2 * std::numbers::pi);
      return r < 0 ? r + 2 * std::numbers::pi : r;
    };
    return UnitaryParams(Angle::radians(theta), Angle::radians(wrapd(alpha)), Angle::radians(wrapd(beta)));
  }

  static UnitaryParams identity() { return exact(0, 0, 0); }
  static UnitaryParams flip() { return exact(1, 0, 0); }  // iX

  const Angle& theta() const { return theta_; }
  const Angle& alpha() const { return alpha_; }
  const Angle& beta() const { return beta_; }

 private:
  UnitaryParams(Angle t, Angle a, Angle b) : theta_(std::move(t)), alpha_(std::move(a)), beta_(std::move(b)) {}

  static Rational wrap(const Rational& m) {
    Rational two(2);
    Rational q(floor(m / two));
    return m - q * two;
  }

  Angle theta_;
  Angle alpha_;
  Angle beta_;
};

/// Squared amplitudes of the four measurement outcomes (11, 12, 21, 22).
struct OutcomeWeights {
  std::array<double, 4> values{};
  std::optional<std::array<Rational, 4>> exact;

  bool is_exact() const { return exact.has_value(); }
};

struct EwlPayoff {
  std::array<double, 2> values{};
  std::optional<std::array<Rational, 2>> exact;

  bool is_exact() const { return exact.has_value(); }
};

namespace detail {

/// sign * sqrt(square) with square a nonnegative rational.
struct SignedSqrt {
  int sign = 0;
  Rational square;

  SignedSqrt operator*(const SignedSqrt& o) const { return {sign * o.sign, square * o.square}; }
};

/// cos(pi*m) and sin(pi*m) as signed square roots, available exactly when
/// cos^2(pi*m) is rational (reduced denominator of m in {1,2,3,4,6}).
inline std::optional<std::pair<SignedSqrt, SignedSqrt>> exact_trig(const Rational& m) {
  Rational two(2);
  Rational r = m - Rational(floor(m / two)) * two;  // [0, 2)
  Rational twelfths = r * Rational(12);
  if (!twelfths.is_integer()) return std::nullopt;
  int k = static_cast<int>(twelfths.numerator());  // 0..23
  int mod = k % 12;
  if (mod % 2 != 0 && mod % 3 != 0) return std::nullopt;
  // cos(2*pi*m) = cos(pi*k/6); rational for the admitted residues.
  static const std::array<std::pair<int, int>, 12> cos_double{{
      {1, 1}, {0, 1}, {1, 2}, {0, 1}, {-1, 2}, {0, 1}, {-1, 1}, {0, 1}, {-1, 2}, {0, 1}, {1, 2}, {0, 1}}};
  auto [cn, cd] = cos_double[static_cast<std::size_t>(mod)];
  Rational cos2 = (Rational(1) + Rational(cn) / Rational(cd)) / two;
  Rational sin2 = Rational(1) - cos2;
  // Signs on [0, 2): cos > 0 on [0, 1/2) and (3/2, 2); sin > 0 on (0, 1).
  int cs = (k < 6 || k > 18) ? 1 : (k == 6 || k == 18) ? 0 : -1;
  int ss = (k == 0 || k == 12) ? 0 : (k < 12 ? 1 : -1);
  if (cos2.is_zero()) cs = 0;
  if (sin2.is_zero()) ss = 0;
  return std::pair{SignedSqrt{cs, cos2}, SignedSqrt{ss, sin2}};
}

/// (x + y)^2 for signed square roots, if rational.
inline std::optional<Rational> square_of_sum(const SignedSqrt& x, const SignedSqrt& y) {
  Rational sx = x.sign == 0 ? Rational(0) : x.square;
  Rational sy = y.sign == 0 ? Rational(0) : y.square;
  if (x.sign == 0 || y.sign == 0 || sx.is_zero() || sy.is_zero()) return sx + sy;
  Rational prod = sx * sy;
  BigInt rn, rd;
  if (!is_perfect_square(prod.numerator(), &rn) || !is_perfect_square(prod.denominator(), &rd)) return std::nullopt;
  Rational cross = Rational(2 * x.sign * y.sign) * Rational(rn, rd);
  return sx + sy + cross;
}

inline std::optional<std::array<Rational, 4>> exact_weights(const UnitaryParams& u1, const UnitaryParams& u2) {
  const Angle th1 = u1.theta().half(), th2 = u2.theta().half();
  const Angle apa = u1.alpha() + u2.alpha();
  const Angle bpb = u1.beta() + u2.beta();
  const Angle a1b2 = u1.alpha() - u2.beta();
  const Angle a2b1 = u2.alpha() - u1.beta();
  std::array<const Angle*, 6> all{&th1, &th2, &apa, &bpb, &a1b2, &a2b1};
  std::array<std::pair<SignedSqrt, SignedSqrt>, 6> trig;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!all[i]->pi_multiple()) return std::nullopt;
    auto t = exact_trig(*all[i]->pi_multiple());
    if (!t) return std::nullopt;
    trig[i] = *t;
  }
  const auto& [c1, s1] = trig[0];
  const auto& [c2, s2] = trig[1];
  const auto& [cos_apa, sin_apa] = trig[2];
  const auto& [cos_bpb, sin_bpb] = trig[3];
  const auto& [cos_a1b2, sin_a1b2] = trig[4];
  const auto& [cos_a2b1, sin_a2b1] = trig[5];
  auto neg = [](SignedSqrt v) { v.sign = -v.sign; return v; };

  auto w11 = square_of_sum(cos_apa * c1 * c2, sin_bpb * s1 * s2);
  auto w12 = square_of_sum(cos_a1b2 * c1 * s2, sin_a2b1 * s1 * c2);
  auto w21 = square_of_sum(sin_a1b2 * c1 * s2, cos_a2b1 * s1 * c2);
  auto w22 = square_of_sum(sin_apa * c1 * c2, neg(cos_bpb * s1 * s2));
  if (!w11 || !w12 || !w21 || !w22) return std::nullopt;
  return std::array<Rational, 4>{*w11, *w12, *w21, *w22};
}

inline void require_constant_two_by_two(const Bimatrix& g) {
  if (!g.is_two_by_two()) throw Error(ErrorKind::NotTwoByTwo, std::string(kMsgNotTwoByTwo));
  if (g.is_parametric()) throw Error(ErrorKind::ParametricInput, std::string(kMsgNotNumeric));
}

}  // namespace detail

/// The four outcome weights of the EWL payoff for the profile (u1, u2).
/// Exact when every angle involved has a rational squared cosine and the
/// cross terms stay rational; double precision otherwise.
inline OutcomeWeights ewl_weights(const UnitaryParams& u1, const UnitaryParams& u2) {
  OutcomeWeights out;
  if (auto ex = detail::exact_weights(u1, u2)) {
    out.exact = ex;
    for (std::size_t i = 0; i < 4; ++i) out.values[i] = (*ex)[i].to_double();
    return out;
  }
  const double t1 = u1.theta().to_radians() / 2, t2 = u2.theta().to_radians() / 2;
  const double a1 = u1.alpha().to_radians(), a2 = u2.alpha().to_radians();
  const double b1 = u1.beta().to_radians(), b2 = u2.beta().to_radians();
  const double c1 = std::cos(t1), s1 = std::sin(t1), c2 = std::cos(t2), s2 = std::sin(t2);
  auto sq = [](double v) { return v * v; };
  out.values = {
      sq(std::cos(a1 + a2) * c1 * c2 + std::sin(b1 + b2) * s1 * s2),
      sq(std::cos(a1 - b2) * c1 * s2 + std::sin(a2 - b1) * s1 * c2),
      sq(std::sin(a1 - b2) * c1 * s2 + std::cos(a2 - b1) * s1 * c2),
      sq(std::sin(a1 + a2) * c1 * c2 - std::cos(b1 + b2) * s1 * s2),
  };
  return out;
}

/// Expected payoff pair of a constant 2x2 game under the EWL scheme.
inline EwlPayoff ewl_payoff(const Bimatrix& g, const UnitaryParams& u1, const UnitaryParams& u2) {
  detail::require_constant_two_by_two(g);
  const OutcomeWeights w = ewl_weights(u1, u2);
  const std::array<const PayoffPair*, 4> cells{&g.at(0, 0), &g.at(0, 1), &g.at(1, 0), &g.at(1, 1)};
  EwlPayoff out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.values[0] += w.values[k] * cells[k]->u1.constant_value().to_double();
    out.values[1] += w.values[k] * cells[k]->u2.constant_value().to_double();
  }
  if (w.exact) {
    std::array<Rational, 2> ex{Rational(0), Rational(0)};
    for (std::size_t k = 0; k < 4; ++k) {
      ex[0] += (*w.exact)[k] * cells[k]->u1.constant_value();
      ex[1] += (*w.exact)[k] * cells[k]->u2.constant_value();
    }
    out.exact = ex;
    out.values = {ex[0].to_double(), ex[1].to_double()};
  }
  return out;
}

/// Payoffs for every profile of a finite strategy list, row-major.
struct EwlTable {
  std::size_t size = 0;
  std::vector<EwlPayoff> cells;
  std::vector<std::string> labels;

  const EwlPayoff& at(std::size_t i, std::size_t j) const { return cells[i * size + j]; }

  bool is_exact() const {
    for (const auto& c : cells)
      if (!c.is_exact()) return false;
    return true;
  }

  /// Exact entries where available; inexact entries become the closest
  /// rational with denominator <= 10^12.
  Bimatrix to_bimatrix() const {
    std::vector<std::vector<PayoffPair>> grid(size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        const auto& c = at(i, j);
        if (c.exact)
          grid[i].push_back({PayoffPoly((*c.exact)[0]), PayoffPoly((*c.exact)[1])});
        else
          grid[i].push_back({PayoffPoly(approximate(c.values[0])), PayoffPoly(approximate(c.values[1]))});
      }
    return Bimatrix(std::move(grid), std::nullopt, labels, labels);
  }
};

inline EwlTable ewl_table(const Bimatrix& g, const std::vector<UnitaryParams>& strategies,
                          std::vector<std::string> labels) {
  detail::require_constant_two_by_two(g);
  EwlTable t{strategies.size(), {}, std::move(labels)};
  t.cells.reserve(t.size * t.size);
  for (const auto& s1 : strategies)
    for (const auto& s2 : strategies) t.cells.push_back(ewl_payoff(g, s1, s2));
  return t;
}

/// The bordered 3x3 game over {I, iX, U}. The top-left block reproduces g.
inline Bimatrix extension3x3_from_u(const Bimatrix& g, const UnitaryParams& u) {
  return ewl_table(g, {UnitaryParams::identity(), UnitaryParams::flip(), u}, {"I", "iX", "U"}).to_bimatrix();
}

}  // namespace qegs
