#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qegs/bimatrix.hpp"
#include "qegs/error.hpp"

namespace qegs {

using json = nlohmann::ordered_json;

namespace detail {

inline PayoffPoly payoff_from_json(const json& v, const std::optional<std::string>& parameter) {
  if (v.is_string()) return PayoffPoly(Rational::parse(v.get<std::string>()));
  if (v.is_object() && v.contains("coeffs") && v.at("coeffs").is_array()) {
    std::vector<Rational> coeffs;
    for (const auto& c : v.at("coeffs")) {
      if (!c.is_string()) throw Error(ErrorKind::Parse, "coefficients must be rational strings");
      coeffs.push_back(Rational::parse(c.get<std::string>()));
    }
    return PayoffPoly(std::move(coeffs), parameter);
  }
  throw Error(ErrorKind::Parse, "payoff must be a rational string or {\"coeffs\": [...]}");
}

inline json payoff_to_json(const PayoffPoly& p) {
  if (p.is_constant()) return p.constant_value().to_string();
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string());
  return json{{"coeffs", coeffs}};
}

inline std::vector<std::string> labels_from_json(const json& doc, const char* key) {
  std::vector<std::string> out;
  if (!doc.contains(key) || doc.at(key).is_null()) return out;
  if (!doc.at(key).is_array()) throw Error(ErrorKind::Parse, std::string(key) + " must be an array");
  for (const auto& l : doc.at(key)) {
    if (!l.is_string()) throw Error(ErrorKind::Parse, std::string(key) + " entries must be strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

inline bool valid_parameter_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace detail

/// Builds a game from an already-parsed Game File document.
inline Bimatrix game_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "game must be a JSON object");
  if (!doc.contains("payoffs") || !doc.at("payoffs").is_array()) throw Error(ErrorKind::Parse, "missing payoffs array");
  std::optional<std::string> parameter;
  if (doc.contains("parameter") && !doc.at("parameter").is_null()) {
    if (!doc.at("parameter").is_string()) throw Error(ErrorKind::Parse, "parameter must be a string or null");
    parameter = doc.at("parameter").get<std::string>();
    if (!detail::valid_parameter_name(*parameter)) throw Error(ErrorKind::Param, "invalid parameter name '" + *parameter + "'");
  }
  std::vector<std::vector<PayoffPair>> grid;
  for (const auto& row : doc.at("payoffs")) {
    if (!row.is_array()) throw Error(ErrorKind::Parse, "each payoff row must be an array");
    auto& out = grid.emplace_back();
    for (const auto& cell : row) {
      if (!cell.is_array() || cell.size() != 2) throw Error(ErrorKind::Parse, "each cell must be a [u1, u2] pair");
      out.push_back({detail::payoff_from_json(cell[0], parameter), detail::payoff_from_json(cell[1], parameter)});
    }
  }
  Bimatrix g(std::move(grid), parameter, detail::labels_from_json(doc, "rowLabels"),
             detail::labels_from_json(doc, "colLabels"));
  auto check_dim = [&](const char* key, std::size_t actual) {
    if (!doc.contains(key)) return;
    const auto& v = doc.at(key);
    if (!v.is_number_integer()) throw Error(ErrorKind::Parse, std::string(key) + " must be an integer");
    if (v.get<long long>() != static_cast<long long>(actual))
      throw Error(ErrorKind::Shape, std::string(key) + " disagrees with payoffs");
  };
  check_dim("rows", g.rows());
  check_dim("cols", g.cols());
  return g;
}

inline Bimatrix parse_game(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  return game_from_json(doc);
}

inline json game_to_json(const Bimatrix& g) {
  json doc;
  doc["rows"] = g.rows();
  doc["cols"] = g.cols();
  doc["parameter"] = g.parameter() ? json(*g.parameter()) : json(nullptr);
  if (!g.row_labels().empty()) doc["rowLabels"] = g.row_labels();
  if (!g.col_labels().empty()) doc["colLabels"] = g.col_labels();
  json payoffs = json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.cols(); ++j)
      row.push_back(json::array({detail::payoff_to_json(g.at(i, j).u1), detail::payoff_to_json(g.at(i, j).u2)}));
    payoffs.push_back(std::move(row));
  }
  doc["payoffs"] = std::move(payoffs);
  return doc;
}

/// Canonical Game File text (two-space indent, trailing newline).
inline std::string serialize_game(const Bimatrix& g) { return game_to_json(g).dump(2) + "\n"; }

}  // namespace qegs
