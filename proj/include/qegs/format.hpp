#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "qegs/bimatrix.hpp"
#include "qegs/solver.hpp"
#include "qegs/sweep.hpp"

namespace qegs {

inline std::string cell_text(const PayoffPair& p) { return "(" + p.u1.to_string() + ", " + p.u2.to_string() + ")"; }

inline std::string profile_text(const Bimatrix& g, const Profile& p) {
  return "(" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + ") [" + g.row_label(p.first) + "," +
         g.col_label(p.second) + "]";
}

inline std::string index_list(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k] + 1);
  return out + "}";
}

/// Aligned plain-text matrix. With `sets`: NE cells get '*', maximin
/// strategies '+', strictly dominated strategies 'x' next to their label.
inline std::string game_text(const Bimatrix& g, const SolutionSets* sets = nullptr) {
  auto has = [](const std::vector<std::size_t>& v, std::size_t i) { return std::find(v.begin(), v.end(), i) != v.end(); };
  auto label = [&](std::string base, bool maximin, bool dominated) {
    if (maximin) base += "+";
    if (dominated) base += "x";
    return base;
  };
  std::vector<std::vector<std::string>> cells(g.rows() + 1, std::vector<std::string>(g.cols() + 1));
  for (std::size_t j = 0; j < g.cols(); ++j)
    cells[0][j + 1] = sets ? label(g.col_label(j), has(sets->maximin_cols, j), has(sets->dominated_cols, j)) : g.col_label(j);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    cells[i + 1][0] = sets ? label(g.row_label(i), has(sets->maximin_rows, i), has(sets->dominated_rows, i)) : g.row_label(i);
    for (std::size_t j = 0; j < g.cols(); ++j) {
      std::string c = cell_text(g.at(i, j));
      if (sets && std::find(sets->nash.begin(), sets->nash.end(), Profile{i, j}) != sets->nash.end()) c += "*";
      cells[i + 1][j + 1] = c;
    }
  }
  std::vector<std::size_t> width(g.cols() + 1, 0);
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      line += row[j] + std::string(width[j] - row[j].size(), ' ');
      if (j + 1 < row.size()) line += "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

inline std::string sets_text(const Bimatrix& g, const SolutionSets& s, const Analyses& an) {
  std::ostringstream os;
  if (an.ne) {
    os << "Nash equilibria:";
    if (s.nash.empty()) os << " none";
    for (const auto& p : s.nash) os << " " << profile_text(g, p);
    os << "\n";
  }
  if (an.dominated)
    os << "Dominated rows: " << index_list(s.dominated_rows) << "  cols: " << index_list(s.dominated_cols) << "\n";
  if (an.maximin)
    os << "Maximin rows: " << index_list(s.maximin_rows) << "  cols: " << index_list(s.maximin_cols) << "\n";
  return os.str();
}

inline std::string solve_text(const Bimatrix& g, const SolveResult<Rational>& r) {
  std::string out = game_text(g, &r.sets) + "\n" + sets_text(g, r.sets, r.analyses);
  if (r.security_levels)
    out += "Security levels: (" + r.security_levels->first.to_string() + ", " + r.security_levels->second.to_string() + ")\n";
  return out;
}

inline std::string sweep_text(const Bimatrix& g, const SweepResult& r) {
  std::ostringstream os;
  os << "Sweep of " << r.parameter << " over [" << r.lo << ", " << r.hi << "]"
     << (r.approximate ? " (approximate breakpoints)" : "") << "\n";
  os << "Breakpoints:";
  if (r.breakpoints.empty()) os << " none";
  for (const auto& b : r.breakpoints) os << " " << b.to_string();
  os << "\n";
  auto line = [&](const std::string& head, const Segment& s) {
    std::string body = sets_text(g, s.sets, r.analyses);
    std::string indented;
    std::istringstream in(body);
    for (std::string l; std::getline(in, l);) indented += "    " + l + "\n";
    os << head << "\n" << indented;
  };
  line(r.parameter + " = " + r.lo.to_string(), r.at_lo);
  for (const auto& s : r.segments) {
    if (s.kind == Segment::Kind::Point)
      line(r.parameter + " = " + s.from.to_string(), s);
    else
      line(s.from.to_string() + " < " + r.parameter + " < " + s.to.to_string(), s);
  }
  line(r.parameter + " = " + r.hi.to_string(), r.at_hi);
  return os.str();
}

}  // namespace qegs
