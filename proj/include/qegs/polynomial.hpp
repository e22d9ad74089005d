#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qegs/error.hpp"
#include "qegs/rational.hpp"

namespace qegs {

/// Univariate polynomial with exact rational coefficients (constant term
/// first) in at most one named parameter.
///
/// Canonical form: no trailing zero coefficients, the zero polynomial has an
/// empty coefficient list, and a degree-0 polynomial carries no parameter
/// name. Binary operations on two polynomials with different parameter names
/// throw ErrorKind::Param.
class PayoffPoly {
 public:
  PayoffPoly() = default;
  PayoffPoly(const Rational& c) : coeffs_{c} { normalize(); }  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  PayoffPoly(I c) : PayoffPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  PayoffPoly(std::vector<Rational> coeffs, std::optional<std::string> parameter)
      : coeffs_(std::move(coeffs)), parameter_(std::move(parameter)) {
    if (!parameter_ && coeffs_.size() > 1) {
      // Only legal when the higher coefficients are all zero.
      trim();
      if (coeffs_.size() > 1) throw Error(ErrorKind::Param, "non-constant polynomial needs a parameter name");
    }
    normalize();
  }

  /// The monomial x.
  static PayoffPoly variable(const std::string& name) { return PayoffPoly({Rational(0), Rational(1)}, name); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const std::optional<std::string>& parameter() const { return parameter_; }

  /// Degree; the zero polynomial reports 0.
  int degree() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational constant_value() const { return coeff(0); }

  /// Horner evaluation over any ring that accepts Rational coefficients.
  template <typename T>
  T evaluate_at(const T& x) const {
    T acc = T(Rational(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  Rational evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  double evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
  }

  PayoffPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Rational(static_cast<std::int64_t>(i)));
    return PayoffPoly(std::move(d), parameter_);
  }

  PayoffPoly operator-() const {
    PayoffPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  PayoffPoly& operator+=(const PayoffPoly& o) {
    parameter_ = merge_names(parameter_, o.parameter_);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  PayoffPoly& operator-=(const PayoffPoly& o) { return *this += -o; }
  PayoffPoly& operator*=(const PayoffPoly& o) {
    auto name = merge_names(parameter_, o.parameter_);
    if (is_zero() || o.is_zero()) {
      *this = PayoffPoly();
      return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    parameter_ = std::move(name);
    normalize();
    return *this;
  }

  friend PayoffPoly operator+(PayoffPoly a, const PayoffPoly& b) { return a += b; }
  friend PayoffPoly operator-(PayoffPoly a, const PayoffPoly& b) { return a -= b; }
  friend PayoffPoly operator*(PayoffPoly a, const PayoffPoly& b) { return a *= b; }

  friend bool operator==(const PayoffPoly&, const PayoffPoly&) = default;

  /// Human text such as "3 - 2a + a^2". Constant polynomials print as a bare rational.
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    const std::string name = parameter_.value_or("x");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Rational& c = coeffs_[i];
      if (c.is_zero()) continue;
      Rational mag = abs(c);
      std::string term;
      if (i == 0 || mag != Rational(1)) term = mag.to_string();
      if (i >= 1) term += name;
      if (i >= 2) term += "^" + std::to_string(i);
      if (out.empty()) {
        out = (c.sign() < 0 ? "-" : "") + term;
      } else {
        out += (c.sign() < 0 ? " - " : " + ") + term;
      }
    }
    return out;
  }

 private:
  static std::optional<std::string> merge_names(const std::optional<std::string>& a,
                                                const std::optional<std::string>& b) {
    if (a && b && *a != *b) throw Error(ErrorKind::Param, "payoffs mix parameters '" + *a + "' and '" + *b + "'");
    return a ? a : b;
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  void normalize() {
    trim();
    if (coeffs_.size() <= 1) parameter_.reset();
  }

  std::vector<Rational> coeffs_;
  std::optional<std::string> parameter_;
};

/// Polynomial long division over Q. Throws on a zero divisor.
inline std::pair<PayoffPoly, PayoffPoly> divmod(const PayoffPoly& num, const PayoffPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::Param, "polynomial division by zero");
  auto name = num.parameter() ? num.parameter() : den.parameter();
  std::vector<Rational> rem = num.coeffs();
  const auto& d = den.coeffs();
  if (rem.size() < d.size()) return {PayoffPoly(), num};
  std::vector<Rational> quot(rem.size() - d.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + d.size() - 1] / d.back();
    quot[k] = q;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q * d[j];
  }
  rem.resize(d.size() - 1);
  return {PayoffPoly(std::move(quot), name), PayoffPoly(std::move(rem), name)};
}

inline PayoffPoly poly_gcd(PayoffPoly a, PayoffPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  // monic
  Rational lead = a.coeffs().back();
  std::vector<Rational> c = a.coeffs();
  for (auto& x : c) x /= lead;
  return PayoffPoly(std::move(c), a.parameter());
}

}  // namespace qegs
