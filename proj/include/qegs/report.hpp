#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "qegs/bimatrix.hpp"
#include "qegs/error.hpp"
#include "qegs/extensions.hpp"
#include "qegs/format.hpp"
#include "qegs/solver.hpp"
#include "qegs/version.hpp"

namespace qegs {

enum class ReportKind { Full2x2Numeric, ExtensionsOnlySymbolic2x2, PropertiesOnlyNumericNxM, None };

inline std::string_view to_string(ReportKind k) {
  switch (k) {
    case ReportKind::Full2x2Numeric: return "Full2x2Numeric";
    case ReportKind::ExtensionsOnlySymbolic2x2: return "ExtensionsOnlySymbolic2x2";
    case ReportKind::PropertiesOnlyNumericNxM: return "PropertiesOnlyNumericNxM";
    case ReportKind::None: return "None";
  }
  return "None";
}

struct ReportPlan {
  ReportKind kind = ReportKind::None;
  std::string file_name;  // empty when kind == None
};

inline void validate_report_name(const std::string& name) {
  bool ok = !name.empty();
  for (char c : name) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-');
  if (!ok) throw Error(ErrorKind::Param, "report name must match [A-Za-z0-9_-]+");
}

/// Parametric games count as symbolic.
inline ReportPlan plan_report(const Bimatrix& g, const std::string& name) {
  const bool numeric = !g.is_parametric();
  if (g.is_two_by_two()) {
    if (numeric) return {ReportKind::Full2x2Numeric, "Report_" + name + ".md"};
    return {ReportKind::ExtensionsOnlySymbolic2x2, "Report_" + name + "_extensions.md"};
  }
  if (numeric) return {ReportKind::PropertiesOnlyNumericNxM, "Report_" + name + "_properties.md"};
  return {};
}

namespace detail {

inline std::string md_table(const std::vector<std::string>& row_labels, const std::vector<std::string>& col_labels,
                            const std::vector<std::vector<std::string>>& cells) {
  std::string out = "|   |";
  for (const auto& c : col_labels) out += " " + c + " |";
  out += "\n|---|";
  for (std::size_t j = 0; j < col_labels.size(); ++j) out += "---|";
  out += "\n";
  for (std::size_t i = 0; i < row_labels.size(); ++i) {
    out += "| " + row_labels[i] + " |";
    for (const auto& c : cells[i]) out += " " + c + " |";
    out += "\n";
  }
  return out;
}

inline std::string md_game(const Bimatrix& g) {
  std::vector<std::string> rl, cl;
  for (std::size_t i = 0; i < g.rows(); ++i) rl.push_back(g.row_label(i));
  for (std::size_t j = 0; j < g.cols(); ++j) cl.push_back(g.col_label(j));
  std::vector<std::vector<std::string>> cells(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) cells[i].push_back(cell_text(g.at(i, j)));
  return md_table(rl, cl, cells);
}

// Symbolic base with a symbolic class parameter: entries stay as weighted
// sums of the base payoffs, e.g. "a·(3 + x) + (1 - a)·5".
inline std::string factor(const PayoffPoly& p) {
  std::string s = p.to_string();
  bool compound = s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos;
  return compound ? "(" + s + ")" : s;
}

inline std::string weighted_sum(const CellWeights& w, const Bimatrix& base, bool first_player) {
  const std::array<const PayoffPair*, 4> cells{&base.at(0, 0), &base.at(0, 1), &base.at(1, 0), &base.at(1, 1)};
  std::string out;
  std::size_t terms = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const PayoffPoly& v = first_player ? cells[k]->u1 : cells[k]->u2;
    if (w[k].is_zero() || v.is_zero()) continue;
    std::string term = w[k] == PayoffPoly(1) ? factor(v) : factor(w[k]) + "·" + factor(v);
    out += (terms++ ? " + " : "") + term;
  }
  if (terms == 1 && out.front() == '(' && out.back() == ')' && out.find("·") == std::string::npos)
    out = out.substr(1, out.size() - 2);
  return out.empty() ? "0" : out;
}

inline std::string md_symbolic_extension(const Bimatrix& base, ExtensionClass cls) {
  auto t = extension_template(cls, PayoffPoly::variable(*param_name(cls)));
  std::vector<std::vector<std::string>> cells(t.size);
  for (std::size_t i = 0; i < t.size; ++i)
    for (std::size_t j = 0; j < t.size; ++j)
      cells[i].push_back("(" + weighted_sum(t.at(i, j), base, true) + ", " + weighted_sum(t.at(i, j), base, false) + ")");
  return md_table(t.labels, t.labels, cells);
}

inline std::string class_blurb(ExtensionClass cls) {
  switch (param_kind(cls)) {
    case ParamKind::A: return "Two unitary strategies; entries in a = cos^2(alpha), 0 <= a <= 1, with b = (2a - 1)^2 expanded.";
    case ParamKind::T: return "Two unitary strategies; entries in t = cos^2(theta1/2), 0 <= t <= 1.";
    default:
      return class_size(cls) == 3 ? "One unitary strategy U." : "Two unitary strategies; no free parameter.";
  }
}

inline std::string extension_sections(const Bimatrix& g) {
  std::string out;
  for (auto cls : kAllClasses) {
    out += "## " + std::string(class_name(cls)) + "\n\n" + class_blurb(cls) + "\n\n";
    if (class_size(cls) == 3 || !param_name(cls) || !g.is_parametric())
      out += md_game(extend(g, cls));
    else
      out += md_symbolic_extension(g, cls);
    out += "\n";
  }
  return out;
}

inline std::string property_sections(const Bimatrix& g) {
  const auto r = solve(g);
  std::ostringstream os;
  os << "## Nash Equilibria\n\n";
  if (r.sets.nash.empty()) os << "No pure Nash equilibrium.\n";
  for (const auto& p : r.sets.nash)
    os << "- " << profile_text(g, p) << " with payoff " << cell_text(g.at(p.first, p.second)) << "\n";
  os << "\n## Maximin\n\n";
  os << "- Player 1: rows " << index_list(r.sets.maximin_rows) << ", security level " << r.security_levels->first << "\n";
  os << "- Player 2: columns " << index_list(r.sets.maximin_cols) << ", security level " << r.security_levels->second
     << "\n";
  os << "\n## Dominated Strategies\n\n";
  os << "- Player 1: rows " << index_list(r.sets.dominated_rows) << "\n";
  os << "- Player 2: columns " << index_list(r.sets.dominated_cols) << "\n";
  os << "\n### Highlighted game\n\n```\n" << game_text(g, &r.sets) << "```\n";
  return os.str();
}

}  // namespace detail

/// Report body for a plan, or nullopt when the plan is None. Pure and
/// deterministic: identical input gives identical bytes.
inline std::optional<std::string> render_report(const Bimatrix& g, const std::string& name) {
  validate_report_name(name);
  const ReportPlan plan = plan_report(g, name);
  if (plan.kind == ReportKind::None) return std::nullopt;
  std::ostringstream os;
  os << "# Game analysis report: " << name << "\n\n";
  os << "<!-- generator: qegs " << kVersion << " -->\n\n";
  os << "Input game (" << g.rows() << "x" << g.cols() << ", "
     << (g.is_parametric() ? "symbolic in " + *g.parameter() : std::string("numeric")) << "):\n\n";
  os << detail::md_game(g) << "\n";
  if (plan.kind != ReportKind::PropertiesOnlyNumericNxM) os << detail::extension_sections(g);
  if (plan.kind != ReportKind::ExtensionsOnlySymbolic2x2) os << detail::property_sections(g);
  return os.str();
}

/// Writes the planned report into out_dir and returns its path. Throws
/// NoReport for symbolic non-2x2 input and Io when writing fails.
inline std::filesystem::path generate_report(const Bimatrix& g, const std::string& name,
                                             const std::filesystem::path& out_dir) {
  auto body = render_report(g, name);
  if (!body)
    throw Error(ErrorKind::NoReport, "input matrix must be either numerical or 2x2, otherwise no report is created");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  const auto path = out_dir / plan_report(g, name).file_name;
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::Io, "cannot write " + path.string());
  f << *body;
  f.close();
  if (!f) throw Error(ErrorKind::Io, "write failed for " + path.string());
  return path;
}

}  // namespace qegs
