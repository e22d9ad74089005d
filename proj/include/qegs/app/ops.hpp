#pragma once

// Request-level operations shared by the CLI and the HTTP service, so both
// front ends produce the same result payloads for the same inputs.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qegs/qegs.hpp"

namespace qegs::app {

inline constexpr std::size_t kMaxDimension = 100;

inline Analyses parse_analysis(const std::string& s) {
  if (s == "all") return Analyses::all();
  if (s == "ne") return Analyses::only_ne();
  if (s == "maximin") return Analyses::only_maximin();
  if (s == "dominated") return Analyses::only_dominated();
  throw Error(ErrorKind::Param, "analysis must be one of ne, maximin, dominated, all; got '" + s + "'");
}

inline void check_dimension(const Bimatrix& g) {
  if (g.rows() > kMaxDimension || g.cols() > kMaxDimension)
    throw Error(ErrorKind::Param, "games larger than 100x100 are not accepted");
}

/// Solves g, or g evaluated at `param` when given.
inline SolveResult<Rational> run_solve(const Bimatrix& g, Analyses an, const std::optional<Rational>& param) {
  if (!param) return solve(g, an);
  if (!g.parameter()) throw Error(ErrorKind::Param, "--param given but the game has no parameter");
  return solve(evaluate(g, *param), an);
}

/// Without a parameter value, parametric classes come out symbolic.
inline Bimatrix run_extend(const Bimatrix& g, const std::string& cls_name, const std::optional<Rational>& param,
                           bool symbolic) {
  const ExtensionClass cls = parse_class(cls_name);
  if (symbolic && param) throw Error(ErrorKind::Param, "param and symbolic are mutually exclusive");
  return extend(g, cls, param);
}

/// "T,A,B" as multiples of pi (exact) or as radians.
inline UnitaryParams parse_unitary(const std::string& text, bool radians) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
  if (parts.size() != 3) throw Error(ErrorKind::Param, "unitary must be given as THETA,ALPHA,BETA; got '" + text + "'");
  if (!radians)
    return UnitaryParams::exact(Rational::parse_lenient(parts[0]), Rational::parse_lenient(parts[1]),
                                Rational::parse_lenient(parts[2]));
  std::array<double, 3> v{};
  for (std::size_t k = 0; k < 3; ++k) {
    std::size_t used = 0;
    try {
      v[k] = std::stod(parts[k], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != parts[k].size()) throw Error(ErrorKind::Param, "bad angle '" + parts[k] + "'");
  }
  return UnitaryParams::radians(v[0], v[1], v[2]);
}

inline json run_ewl(const Bimatrix& g, const UnitaryParams& u1, const UnitaryParams& u2) {
  return ewl_result_json(ewl_payoff(g, u1, u2), ewl_weights(u1, u2));
}

inline std::string ewl_text(const json& r) {
  auto s = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  std::string out = "Payoff: (" + s(r["payoff"][0]) + ", " + s(r["payoff"][1]) + ")";
  out += r["exact"].get<bool>() ? "\n" : "  (numeric)\n";
  out += "Outcome weights:";
  for (const auto& w : r["weights"]) out += " " + s(w);
  return out + "\n";
}

}  // namespace qegs::app
