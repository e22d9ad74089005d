#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qegs/bimatrix.hpp"
#include "qegs/error.hpp"
#include "qegs/polynomial.hpp"

namespace qegs {

enum class ExtensionClass { A0, B0, C0, A1, A2, B1, C1, D1, D2, E1, E2 };

enum class ParamKind { None, A, T };

inline constexpr std::array<ExtensionClass, 11> kAllClasses{
    ExtensionClass::A0, ExtensionClass::B0, ExtensionClass::C0, ExtensionClass::A1,
    ExtensionClass::A2, ExtensionClass::B1, ExtensionClass::C1, ExtensionClass::D1,
    ExtensionClass::D2, ExtensionClass::E1, ExtensionClass::E2};

inline constexpr std::array<ExtensionClass, 8> kFourStrategyClasses{
    ExtensionClass::A1, ExtensionClass::A2, ExtensionClass::B1, ExtensionClass::C1,
    ExtensionClass::D1, ExtensionClass::D2, ExtensionClass::E1, ExtensionClass::E2};

inline std::string_view class_name(ExtensionClass c) {
  static constexpr std::array<std::string_view, 11> names{"A0", "B0", "C0", "A1", "A2", "B1",
                                                          "C1", "D1", "D2", "E1", "E2"};
  return names[static_cast<std::size_t>(c)];
}

inline ExtensionClass parse_class(std::string_view s) {
  for (auto c : kAllClasses)
    if (class_name(c) == s) return c;
  throw Error(ErrorKind::Param, "unknown extension class '" + std::string(s) + "'");
}

inline ParamKind param_kind(ExtensionClass c) {
  switch (c) {
    case ExtensionClass::A1:
    case ExtensionClass::A2: return ParamKind::A;
    case ExtensionClass::C1:
    case ExtensionClass::D1:
    case ExtensionClass::D2:
    case ExtensionClass::E1:
    case ExtensionClass::E2: return ParamKind::T;
    default: return ParamKind::None;
  }
}

inline std::size_t class_size(ExtensionClass c) {
  return (c == ExtensionClass::A0 || c == ExtensionClass::B0 || c == ExtensionClass::C0) ? 3 : 4;
}

inline std::optional<std::string> param_name(ExtensionClass c) {
  switch (param_kind(c)) {
    case ParamKind::A: return "a";
    case ParamKind::T: return "t";
    default: return std::nullopt;
  }
}

// ---- row/column swaps ---------------------------------------------------

namespace detail {
inline void require_two_by_two(const Bimatrix& g) {
  if (!g.is_two_by_two()) throw Error(ErrorKind::NotTwoByTwo, std::string(kMsgNotTwoByTwo));
}
inline Bimatrix permuted(const Bimatrix& g, bool swap_rows, bool swap_cols) {
  require_two_by_two(g);
  std::vector<std::vector<PayoffPair>> grid(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) grid[i].push_back(g.at(swap_rows ? 1 - i : i, swap_cols ? 1 - j : j));
  return Bimatrix(std::move(grid), g.parameter());
}
}  // namespace detail

inline Bimatrix gamma1(const Bimatrix& g) { return detail::permuted(g, true, false); }
inline Bimatrix gamma2(const Bimatrix& g) { return detail::permuted(g, false, true); }
inline Bimatrix gamma3(const Bimatrix& g) { return detail::permuted(g, true, true); }

// ---- extension templates ------------------------------------------------

/// Each extension entry is a linear combination of the four base cells
/// (11, 12, 21, 22) with weights that are polynomials in the class parameter.
using CellWeights = std::array<PayoffPoly, 4>;

struct ExtensionTemplate {
  ExtensionClass cls;
  std::size_t size;
  std::vector<CellWeights> weights;  // row-major size x size
  std::vector<std::string> labels;

  const CellWeights& at(std::size_t i, std::size_t j) const { return weights[i * size + j]; }
};

namespace detail {

// Base cell index of Gamma_k[i][j]; k = 0 is Gamma itself.
inline std::size_t gamma_cell(int k, std::size_t i, std::size_t j) {
  bool swap_rows = (k == 1 || k == 3), swap_cols = (k == 2 || k == 3);
  std::size_t r = swap_rows ? 1 - i : i, c = swap_cols ? 1 - j : j;
  return r * 2 + c;
}

struct Term {
  PayoffPoly coeff;
  int gamma;
};

/// Weights of the 2x2 block sum_k coeff_k * Gamma_k.
inline std::array<CellWeights, 4> block(const std::vector<Term>& terms) {
  std::array<CellWeights, 4> out{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (const auto& t : terms) out[i * 2 + j][gamma_cell(t.gamma, i, j)] += t.coeff;
  return out;
}

inline ExtensionTemplate assemble(ExtensionClass cls, std::size_t size,
                                  const std::vector<std::pair<std::pair<std::size_t, std::size_t>,
                                                              std::array<CellWeights, 4>>>& blocks,
                                  std::vector<std::string> labels) {
  ExtensionTemplate t{cls, size, std::vector<CellWeights>(size * size), std::move(labels)};
  auto identity = block({{PayoffPoly(1), 0}});
  auto place = [&](std::size_t r0, std::size_t c0, const std::array<CellWeights, 4>& b) {
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        if (r0 + i < size && c0 + j < size) t.weights[(r0 + i) * size + (c0 + j)] = b[i * 2 + j];
  };
  place(0, 0, identity);
  for (const auto& [pos, b] : blocks) place(pos.first, pos.second, b);
  return t;
}

}  // namespace detail

/// Weight template of a class. `param` is the class parameter: a constant
/// (rational in [0,1]) or the monomial a / t for symbolic output.
inline ExtensionTemplate extension_template(ExtensionClass cls, const PayoffPoly& param) {
  using detail::block;
  const PayoffPoly one(1);
  const Rational half(BigInt(1), BigInt(2)), quarter(BigInt(1), BigInt(4));
  const PayoffPoly p = param, pp = one - param;  // a, a' or t, t'

  if (class_size(cls) == 3) {
    // Third row/column: averages of base cells. A0 pairs (11,12)/(21,22) and
    // (11,21)/(12,22); B0 swaps which pair lands on which strategy; C0 uses the
    // full average everywhere.
    ExtensionTemplate t{cls, 3, std::vector<CellWeights>(9), {"I", "iX", "U"}};
    auto set = [&](std::size_t i, std::size_t j, std::initializer_list<std::size_t> cells, const Rational& w) {
      for (auto c : cells) t.weights[i * 3 + j][c] += PayoffPoly(w);
    };
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) set(i, j, {i * 2 + j}, Rational(1));
    set(2, 2, {0, 1, 2, 3}, quarter);
    switch (cls) {
      case ExtensionClass::A0:
        set(0, 2, {0, 1}, half);
        set(1, 2, {2, 3}, half);
        set(2, 0, {0, 2}, half);
        set(2, 1, {1, 3}, half);
        break;
      case ExtensionClass::B0:
        set(0, 2, {2, 3}, half);
        set(1, 2, {0, 1}, half);
        set(2, 0, {1, 3}, half);
        set(2, 1, {0, 2}, half);
        break;
      default:
        for (auto [i, j] : {std::pair<std::size_t, std::size_t>{0, 2}, {1, 2}, {2, 0}, {2, 1}})
          set(i, j, {0, 1, 2, 3}, quarter);
        break;
    }
    return t;
  }

  std::array<CellWeights, 4> b12, b21, b22;
  switch (cls) {
    case ExtensionClass::A1: {
      PayoffPoly b = PayoffPoly(4) * p * p - PayoffPoly(4) * p + one;  // cos^2(2 alpha) = (2a - 1)^2
      b12 = b21 = block({{p, 0}, {pp, 3}});
      b22 = block({{b, 0}, {one - b, 3}});
      break;
    }
    case ExtensionClass::A2: {
      PayoffPoly b = PayoffPoly(4) * p * p - PayoffPoly(4) * p + one;
      b12 = block({{p, 2}, {pp, 1}});
      b21 = block({{p, 1}, {pp, 2}});
      b22 = block({{b, 3}, {one - b, 0}});
      break;
    }
    case ExtensionClass::B1: {
      PayoffPoly q(quarter);
      b12 = b21 = b22 = block({{q, 0}, {q, 1}, {q, 2}, {q, 3}});
      break;
    }
    case ExtensionClass::C1: {
      PayoffPoly h = PayoffPoly(half) * p, hp = PayoffPoly(half) * pp;
      b12 = b21 = block({{h, 0}, {h, 3}, {hp, 1}, {hp, 2}});
      b22 = block({{pp * pp, 0}, {p * pp, 1}, {p * pp, 2}, {p * p, 3}});
      break;
    }
    case ExtensionClass::D1:
    case ExtensionClass::D2:
    case ExtensionClass::E1:
    case ExtensionClass::E2: {
      b22 = block({{p * p, 0}, {p * pp, 1}, {p * pp, 2}, {pp * pp, 3}});
      if (cls == ExtensionClass::D1) {
        b12 = block({{p, 0}, {pp, 2}});
        b21 = block({{p, 0}, {pp, 1}});
      } else if (cls == ExtensionClass::D2) {
        b12 = block({{p, 3}, {pp, 1}});
        b21 = block({{p, 3}, {pp, 2}});
      } else if (cls == ExtensionClass::E1) {
        b12 = block({{p, 0}, {pp, 1}});
        b21 = block({{p, 0}, {pp, 2}});
      } else {
        b12 = block({{p, 3}, {pp, 2}});
        b21 = block({{p, 3}, {pp, 1}});
      }
      break;
    }
    default: break;
  }
  return detail::assemble(cls, 4, {{{0, 2}, b12}, {{2, 0}, b21}, {{2, 2}, b22}}, {"I", "iX", "U1", "U2"});
}

/// Entry (i, j) = sum over base cells of weight * payoff.
inline Bimatrix apply_template(const Bimatrix& base, const ExtensionTemplate& t) {
  detail::require_two_by_two(base);
  const std::array<const PayoffPair*, 4> cells{&base.at(0, 0), &base.at(0, 1), &base.at(1, 0), &base.at(1, 1)};
  std::vector<std::vector<PayoffPair>> grid(t.size);
  std::optional<std::string> name = base.parameter();
  for (std::size_t i = 0; i < t.size; ++i)
    for (std::size_t j = 0; j < t.size; ++j) {
      PayoffPair e;
      for (std::size_t k = 0; k < 4; ++k) {
        const auto& w = t.at(i, j)[k];
        if (w.is_zero()) continue;
        e = e + w * *cells[k];
      }
      if (!name) name = e.u1.parameter() ? e.u1.parameter() : e.u2.parameter();
      grid[i].push_back(std::move(e));
    }
  return Bimatrix(std::move(grid), name, t.labels, t.labels);
}

/// One-strategy extensions A0, B0, C0. Parametric base games are allowed.
inline Bimatrix extend3(const Bimatrix& g, ExtensionClass cls) {
  if (class_size(cls) != 3) throw Error(ErrorKind::Param, std::string(class_name(cls)) + " is not a 3x3 class");
  detail::require_two_by_two(g);
  return apply_template(g, extension_template(cls, PayoffPoly()));
}

/// Two-strategy extensions A1 .. E2. With `param` unset the result is
/// symbolic in "a" (A1, A2) or "t" (C1, D1, D2, E1, E2); B1 has no parameter.
inline Bimatrix extend4(const Bimatrix& g, ExtensionClass cls, const std::optional<Rational>& param) {
  if (class_size(cls) != 4) throw Error(ErrorKind::Param, std::string(class_name(cls)) + " is not a 4x4 class");
  detail::require_two_by_two(g);
  PayoffPoly p;
  Bimatrix base = g;
  if (param) {
    if (*param < Rational(0) || *param > Rational(1))
      throw Error(ErrorKind::ParamOutOfRange, "class parameter must lie in [0, 1], got " + param->to_string());
    p = PayoffPoly(*param);
  } else if (auto name = param_name(cls)) {
    if (g.is_parametric())
      throw Error(ErrorKind::ParametricBase, "symbolic " + std::string(class_name(cls)) +
                                                 " needs a constant base game (one parameter only)");
    if (g.parameter()) base = Bimatrix(g.grid(), std::nullopt, g.row_labels(), g.col_labels());
    p = PayoffPoly::variable(*name);
  }
  Bimatrix out = apply_template(base, extension_template(cls, p));
  if (!param && param_name(cls) && !out.parameter()) {
    // Degenerate bases (all payoffs equal) lose the symbol; keep the name anyway.
    out = Bimatrix(out.grid(), param_name(cls), out.row_labels(), out.col_labels());
  }
  return out;
}

/// Dispatches on class size. `param` must be unset for parameterless classes.
inline Bimatrix extend(const Bimatrix& g, ExtensionClass cls, const std::optional<Rational>& param = std::nullopt) {
  if (param && param_kind(cls) == ParamKind::None)
    throw Error(ErrorKind::Param, std::string(class_name(cls)) + " takes no parameter");
  if (class_size(cls) == 3) return extend3(g, cls);
  return extend4(g, cls, param);
}

}  // namespace qegs
