#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qegs/error.hpp"
#include "qegs/polynomial.hpp"
#include "qegs/rational.hpp"

namespace qegs {

struct PayoffPair {
  PayoffPoly u1;  // row player
  PayoffPoly u2;  // column player

  friend bool operator==(const PayoffPair&, const PayoffPair&) = default;
};

inline PayoffPair operator+(const PayoffPair& a, const PayoffPair& b) { return {a.u1 + b.u1, a.u2 + b.u2}; }
inline PayoffPair operator*(const PayoffPoly& w, const PayoffPair& p) { return {w * p.u1, w * p.u2}; }

/// n x m two-player game whose entries are payoff polynomials in at most one
/// parameter. Immutable after construction.
class Bimatrix {
 public:
  Bimatrix() = default;

  /// Builds from a row-major grid. Throws ShapeError for empty or ragged
  /// input, ParamError when entries mix parameter names or disagree with
  /// `parameter`.
  Bimatrix(std::vector<std::vector<PayoffPair>> grid, std::optional<std::string> parameter = std::nullopt,
           std::vector<std::string> row_labels = {}, std::vector<std::string> col_labels = {})
      : parameter_(std::move(parameter)), row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
    if (grid.empty() || grid.front().empty()) throw Error(ErrorKind::Shape, "game needs at least one row and column");
    rows_ = grid.size();
    cols_ = grid.front().size();
    entries_.reserve(rows_ * cols_);
    for (auto& row : grid) {
      if (row.size() != cols_) throw Error(ErrorKind::Shape, "ragged payoff rows");
      for (auto& e : row) entries_.push_back(std::move(e));
    }
    if (!row_labels_.empty() && row_labels_.size() != rows_) throw Error(ErrorKind::Shape, "row label count mismatch");
    if (!col_labels_.empty() && col_labels_.size() != cols_) throw Error(ErrorKind::Shape, "column label count mismatch");
    for (const auto& e : entries_) {
      for (const auto* p : {&e.u1, &e.u2}) {
        if (!p->parameter()) continue;
        if (!parameter_) parameter_ = p->parameter();
        if (*parameter_ != *p->parameter())
          throw Error(ErrorKind::Param, "payoffs use parameters '" + *parameter_ + "' and '" + *p->parameter() + "'");
      }
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PayoffPair& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw Error(ErrorKind::IndexOutOfRange, "payoff index out of range");
    return entries_[i * cols_ + j];
  }
  const std::vector<PayoffPair>& entries() const { return entries_; }
  const std::optional<std::string>& parameter() const { return parameter_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  std::string row_label(std::size_t i) const { return row_labels_.empty() ? std::to_string(i + 1) : row_labels_[i]; }
  std::string col_label(std::size_t j) const { return col_labels_.empty() ? std::to_string(j + 1) : col_labels_[j]; }

  bool is_two_by_two() const { return rows_ == 2 && cols_ == 2; }

  /// True when some entry actually depends on the parameter.
  bool is_parametric() const {
    for (const auto& e : entries_)
      if (!e.u1.is_constant() || !e.u2.is_constant()) return true;
    return false;
  }

  int max_degree() const {
    int d = 0;
    for (const auto& e : entries_) d = std::max({d, e.u1.degree(), e.u2.degree()});
    return d;
  }

  std::vector<std::vector<PayoffPair>> grid() const {
    std::vector<std::vector<PayoffPair>> g(rows_);
    for (std::size_t i = 0; i < rows_; ++i) g[i].assign(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
    return g;
  }

  friend bool operator==(const Bimatrix&, const Bimatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<PayoffPair> entries_;
  std::optional<std::string> parameter_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

/// Convenience constructor for constant integer games: {{{3,3},{0,5}},{{5,0},{1,1}}}.
inline Bimatrix make_game(const std::vector<std::vector<std::pair<Rational, Rational>>>& payoffs,
                          std::vector<std::string> row_labels = {}, std::vector<std::string> col_labels = {}) {
  std::vector<std::vector<PayoffPair>> grid;
  for (const auto& row : payoffs) {
    auto& out = grid.emplace_back();
    for (const auto& [a, b] : row) out.push_back({PayoffPoly(a), PayoffPoly(b)});
  }
  return Bimatrix(std::move(grid), std::nullopt, std::move(row_labels), std::move(col_labels));
}

/// Substitutes x for the parameter. The result is constant; labels are kept.
inline Bimatrix evaluate(const Bimatrix& g, const Rational& x) {
  auto grid = g.grid();
  for (auto& row : grid)
    for (auto& e : row) e = {PayoffPoly(e.u1.evaluate(x)), PayoffPoly(e.u2.evaluate(x))};
  return Bimatrix(std::move(grid), std::nullopt, g.row_labels(), g.col_labels());
}

/// Square and u2[i][j] == u1[j][i] as polynomials.
inline bool is_symmetric(const Bimatrix& g) {
  if (g.rows() != g.cols()) return false;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (g.at(i, j).u2 != g.at(j, i).u1) return false;
  return true;
}

/// Dense numeric payoff table over an ordered field T (Rational,
/// QuadAlgebraic). This is what the solvers consume.
template <typename T>
struct PayoffTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> p1;
  std::vector<T> p2;

  const T& u1(std::size_t i, std::size_t j) const { return p1[i * cols + j]; }
  const T& u2(std::size_t i, std::size_t j) const { return p2[i * cols + j]; }
};

/// Table of a constant game. Throws ParametricInput if any entry is non-constant.
inline PayoffTable<Rational> constant_table(const Bimatrix& g) {
  if (g.is_parametric()) throw Error(ErrorKind::ParametricInput, std::string(kMsgNotNumeric));
  PayoffTable<Rational> t{g.rows(), g.cols(), {}, {}};
  t.p1.reserve(g.entries().size());
  t.p2.reserve(g.entries().size());
  for (const auto& e : g.entries()) {
    t.p1.push_back(e.u1.constant_value());
    t.p2.push_back(e.u2.constant_value());
  }
  return t;
}

/// Table of g with the parameter set to x (any ring accepting Rationals).
template <typename T>
PayoffTable<T> table_at(const Bimatrix& g, const T& x) {
  PayoffTable<T> t{g.rows(), g.cols(), {}, {}};
  t.p1.reserve(g.entries().size());
  t.p2.reserve(g.entries().size());
  for (const auto& e : g.entries()) {
    t.p1.push_back(e.u1.template evaluate_at<T>(x));
    t.p2.push_back(e.u2.template evaluate_at<T>(x));
  }
  return t;
}

template <>
inline PayoffTable<Rational> table_at<Rational>(const Bimatrix& g, const Rational& x) {
  PayoffTable<Rational> t{g.rows(), g.cols(), {}, {}};
  t.p1.reserve(g.entries().size());
  t.p2.reserve(g.entries().size());
  for (const auto& e : g.entries()) {
    t.p1.push_back(e.u1.evaluate(x));
    t.p2.push_back(e.u2.evaluate(x));
  }
  return t;
}

}  // namespace qegs
