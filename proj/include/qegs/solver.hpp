#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qegs/bimatrix.hpp"
#include "qegs/error.hpp"

namespace qegs {

/// Which analyses to run.
struct Analyses {
  bool ne = true;
  bool dominated = true;
  bool maximin = true;

  static Analyses all() { return {}; }
  static Analyses only_ne() { return {true, false, false}; }
  static Analyses only_dominated() { return {false, true, false}; }
  static Analyses only_maximin() { return {false, false, true}; }

  friend bool operator==(const Analyses&, const Analyses&) = default;
};

using Profile = std::pair<std::size_t, std::size_t>;  // 0-based (row, col)

/// Index sets produced by the analyses; these are what a parameter sweep
/// tracks. Security levels are values, not sets, and live in SolveResult.
struct SolutionSets {
  std::vector<Profile> nash;
  std::vector<std::size_t> dominated_rows;
  std::vector<std::size_t> dominated_cols;
  std::vector<std::size_t> maximin_rows;
  std::vector<std::size_t> maximin_cols;

  friend bool operator==(const SolutionSets&, const SolutionSets&) = default;
};

template <typename T>
struct SolveResult {
  Analyses analyses;
  SolutionSets sets;
  std::optional<std::pair<T, T>> security_levels;  // present when maximin ran
};

/// Nash inequalities at (i, j): no profitable unilateral deviation (ties allowed).
template <typename T>
bool check_profile(const PayoffTable<T>& g, std::size_t i, std::size_t j) {
  if (i >= g.rows || j >= g.cols) throw Error(ErrorKind::IndexOutOfRange, "profile index out of range");
  for (std::size_t k = 0; k < g.rows; ++k)
    if (g.u1(k, j) > g.u1(i, j)) return false;
  for (std::size_t l = 0; l < g.cols; ++l)
    if (g.u2(i, l) > g.u2(i, j)) return false;
  return true;
}

/// All pure NE, row-major order. O(n*m) after column/row maxima.
template <typename T>
std::vector<Profile> find_pure_ne(const PayoffTable<T>& g) {
  std::vector<std::size_t> best_row_for_col(g.cols, 0);  // argmax of u1 in column j
  for (std::size_t j = 0; j < g.cols; ++j)
    for (std::size_t i = 1; i < g.rows; ++i)
      if (g.u1(i, j) > g.u1(best_row_for_col[j], j)) best_row_for_col[j] = i;
  std::vector<std::size_t> best_col_for_row(g.rows, 0);
  for (std::size_t i = 0; i < g.rows; ++i)
    for (std::size_t j = 1; j < g.cols; ++j)
      if (g.u2(i, j) > g.u2(i, best_col_for_row[i])) best_col_for_row[i] = j;

  std::vector<Profile> out;
  for (std::size_t i = 0; i < g.rows; ++i)
    for (std::size_t j = 0; j < g.cols; ++j)
      if (!(g.u1(best_row_for_col[j], j) > g.u1(i, j)) && !(g.u2(i, best_col_for_row[i]) > g.u2(i, j)))
        out.emplace_back(i, j);
  return out;
}

/// Strategies beaten strictly, against every opponent strategy, by a single
/// alternative. One pass, no iterated elimination.
template <typename T>
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> dominated_strategies(const PayoffTable<T>& g) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < g.rows; ++i) {
    for (std::size_t k = 0; k < g.rows; ++k) {
      if (k == i) continue;
      bool strict = true;
      for (std::size_t j = 0; j < g.cols && strict; ++j) strict = g.u1(k, j) > g.u1(i, j);
      if (strict) {
        rows.push_back(i);
        break;
      }
    }
  }
  for (std::size_t j = 0; j < g.cols; ++j) {
    for (std::size_t l = 0; l < g.cols; ++l) {
      if (l == j) continue;
      bool strict = true;
      for (std::size_t i = 0; i < g.rows && strict; ++i) strict = g.u2(i, l) > g.u2(i, j);
      if (strict) {
        cols.push_back(j);
        break;
      }
    }
  }
  return {rows, cols};
}

template <typename T>
struct MaximinResult {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  T level1;
  T level2;
};

/// Maximin strategies of both players with all ties, plus security levels.
template <typename T>
MaximinResult<T> maximin(const PayoffTable<T>& g) {
  std::vector<T> row_min;
  row_min.reserve(g.rows);
  for (std::size_t i = 0; i < g.rows; ++i) {
    T m = g.u1(i, 0);
    for (std::size_t j = 1; j < g.cols; ++j)
      if (g.u1(i, j) < m) m = g.u1(i, j);
    row_min.push_back(std::move(m));
  }
  std::vector<T> col_min;
  col_min.reserve(g.cols);
  for (std::size_t j = 0; j < g.cols; ++j) {
    T m = g.u2(0, j);
    for (std::size_t i = 1; i < g.rows; ++i)
      if (g.u2(i, j) < m) m = g.u2(i, j);
    col_min.push_back(std::move(m));
  }
  T best1 = *std::max_element(row_min.begin(), row_min.end());
  T best2 = *std::max_element(col_min.begin(), col_min.end());
  MaximinResult<T> out{{}, {}, best1, best2};
  for (std::size_t i = 0; i < g.rows; ++i)
    if (row_min[i] == best1) out.rows.push_back(i);
  for (std::size_t j = 0; j < g.cols; ++j)
    if (col_min[j] == best2) out.cols.push_back(j);
  return out;
}

template <typename T>
SolveResult<T> solve(const PayoffTable<T>& g, Analyses analyses = Analyses::all()) {
  SolveResult<T> r{analyses, {}, std::nullopt};
  if (analyses.ne) r.sets.nash = find_pure_ne(g);
  if (analyses.dominated) {
    auto [rows, cols] = dominated_strategies(g);
    r.sets.dominated_rows = std::move(rows);
    r.sets.dominated_cols = std::move(cols);
  }
  if (analyses.maximin) {
    auto m = maximin(g);
    r.sets.maximin_rows = std::move(m.rows);
    r.sets.maximin_cols = std::move(m.cols);
    r.security_levels = std::pair{std::move(m.level1), std::move(m.level2)};
  }
  return r;
}

// Bimatrix entry points: the game must be constant (ParametricInput otherwise).

inline std::vector<Profile> find_pure_ne(const Bimatrix& g) { return find_pure_ne(constant_table(g)); }
inline bool check_profile(const Bimatrix& g, std::size_t i, std::size_t j) {
  return check_profile(constant_table(g), i, j);
}
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> dominated_strategies(const Bimatrix& g) {
  return dominated_strategies(constant_table(g));
}
inline MaximinResult<Rational> maximin(const Bimatrix& g) { return maximin(constant_table(g)); }
inline SolveResult<Rational> solve(const Bimatrix& g, Analyses analyses = Analyses::all()) {
  return solve(constant_table(g), analyses);
}

}  // namespace qegs
