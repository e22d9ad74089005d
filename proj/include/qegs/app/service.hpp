#pragma once

#include <cstdlib>
#include <filesystem>
#include <string>

#include <spdlog/spdlog.h>

#include "httplib.h"
#include "qegs/app/ops.hpp"

namespace qegs::app {

inline constexpr std::size_t kMaxPayload = 1 << 20;

struct HttpResponse {
  int status = 200;
  std::string body;
};

namespace detail {

struct ApiError {
  int status;
  std::string code;
  std::string message;
};

inline ApiError classify(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
    case ErrorKind::Shape: return {400, "PARSE_ERROR", e.what()};
    case ErrorKind::ParametricInput:
    case ErrorKind::ParametricBase: return {400, "INPUT_NOT_NUMERIC", e.what()};
    case ErrorKind::NotTwoByTwo: return {400, "SIZE_NOT_2X2", e.what()};
    case ErrorKind::Io:
    case ErrorKind::MixedRadicands: return {500, "INTERNAL", e.what()};
    default: return {400, "PARAM_ERROR", e.what()};
  }
}

inline HttpResponse error_response(const ApiError& e) {
  json body;
  body["ok"] = false;
  body["error"] = json{{"code", e.code}, {"message", e.message}};
  return {e.status, body.dump()};
}

inline HttpResponse ok_response(json result) {
  json body;
  body["ok"] = true;
  body["result"] = std::move(result);
  return {200, body.dump()};
}

// Rationals arrive as strings ("24/100", "0.24") or JSON integers.
inline Rational rational_option(const json& opts, const char* key) {
  const json& v = opts.at(key);
  if (v.is_string()) return Rational::parse_lenient(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw Error(ErrorKind::Param, std::string(key) + " must be a rational string");
}

inline std::optional<Rational> optional_rational(const json& opts, const char* key) {
  if (!opts.contains(key) || opts.at(key).is_null()) return std::nullopt;
  return rational_option(opts, key);
}

inline std::string string_option(const json& opts, const char* key, const std::string& fallback) {
  if (!opts.contains(key)) return fallback;
  if (!opts.at(key).is_string()) throw Error(ErrorKind::Param, std::string(key) + " must be a string");
  return opts.at(key).get<std::string>();
}

inline UnitaryParams unitary_option(const json& opts, const char* key, bool radians) {
  if (!opts.contains(key)) throw Error(ErrorKind::Param, std::string("missing option ") + key);
  const json& v = opts.at(key);
  if (v.is_string()) return parse_unitary(v.get<std::string>(), radians);
  if (!v.is_array() || v.size() != 3) throw Error(ErrorKind::Param, std::string(key) + " must be [theta, alpha, beta]");
  std::string joined;
  for (std::size_t k = 0; k < 3; ++k) {
    if (!v[k].is_string() && !v[k].is_number()) throw Error(ErrorKind::Param, std::string(key) + " angles must be strings or numbers");
    joined += (k ? "," : "") + (v[k].is_string() ? v[k].get<std::string>() : v[k].dump());
  }
  return parse_unitary(joined, radians);
}

inline json dispatch(const std::string& endpoint, const json& req) {
  if (!req.is_object() || !req.contains("game")) throw Error(ErrorKind::Parse, "request must be {\"game\": ..., \"options\": ...}");
  const Bimatrix g = game_from_json(req.at("game"));
  check_dimension(g);
  const json opts = req.contains("options") && !req.at("options").is_null() ? req.at("options") : json::object();
  if (!opts.is_object()) throw Error(ErrorKind::Param, "options must be an object");

  if (endpoint == "solve")
    return solve_result_json(
        run_solve(g, parse_analysis(string_option(opts, "analysis", "all")), optional_rational(opts, "param")));
  if (endpoint == "extend") {
    bool symbolic = opts.contains("symbolic") && opts.at("symbolic").is_boolean() && opts.at("symbolic").get<bool>();
    if (!opts.contains("class")) throw Error(ErrorKind::Param, "missing option class");
    return game_to_json(run_extend(g, string_option(opts, "class", ""), optional_rational(opts, "param"), symbolic));
  }
  if (endpoint == "sweep") {
    if (!opts.contains("min") || !opts.contains("max")) throw Error(ErrorKind::Param, "sweep needs min and max");
    return sweep_result_json(sweep(g, rational_option(opts, "min"), rational_option(opts, "max"),
                                   parse_analysis(string_option(opts, "analysis", "all"))));
  }
  if (endpoint == "ewl") {
    bool radians = opts.contains("radians") && opts.at("radians").is_boolean() && opts.at("radians").get<bool>();
    return run_ewl(g, unitary_option(opts, "u1", radians), unitary_option(opts, "u2", radians));
  }
  throw Error(ErrorKind::Param, "unknown endpoint");
}

}  // namespace detail

/// Pure request handler: no I/O, no shared state. Identical requests give
/// byte-identical responses.
inline HttpResponse handle(const std::string& method, const std::string& path, const std::string& body) {
  static constexpr std::string_view prefix = "/api/v1/";
  if (path.rfind(prefix, 0) != 0) return detail::error_response({404, "PARAM_ERROR", "no such endpoint: " + path});
  const std::string endpoint = path.substr(prefix.size());

  if (endpoint == "health") {
    if (method != "GET") return detail::error_response({405, "PARAM_ERROR", "health expects GET"});
    return {200, json{{"ok", true}, {"version", kVersion}}.dump()};
  }
  if (endpoint != "solve" && endpoint != "extend" && endpoint != "sweep" && endpoint != "ewl")
    return detail::error_response({404, "PARAM_ERROR", "no such endpoint: " + path});
  if (method != "POST") return detail::error_response({405, "PARAM_ERROR", endpoint + " expects POST"});
  if (body.size() > kMaxPayload) return detail::error_response({413, "PARAM_ERROR", "request body exceeds 1 MiB"});

  try {
    json req;
    try {
      req = json::parse(body);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
    return detail::ok_response(detail::dispatch(endpoint, req));
  } catch (const Error& e) {
    return detail::error_response(detail::classify(e));
  } catch (const json::exception& e) {
    return detail::error_response({400, "PARSE_ERROR", e.what()});
  } catch (const std::exception& e) {
    spdlog::error("internal error on {}: {}", path, e.what());
    return detail::error_response({500, "INTERNAL", e.what()});
  }
}

/// Registers the API routes, CORS headers and the /ui static mount on an
/// httplib server. Static assets come from QEGS_UI_DIR (or ./ui if present).
inline void install_routes(httplib::Server& srv) {
  srv.set_payload_max_length(kMaxPayload);
  srv.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                           {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                           {"Access-Control-Allow-Headers", "Content-Type"}});
  auto forward = [](const httplib::Request& req, httplib::Response& res) {
    HttpResponse r = handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
    spdlog::debug("{} {} -> {}", req.method, req.path, r.status);
  };
  srv.Get(R"(/api/v1/.*)", forward);
  srv.Post(R"(/api/v1/.*)", forward);
  srv.Options(R"(/api/v1/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  std::string ui_dir = "ui";
  if (const char* env = std::getenv("QEGS_UI_DIR")) ui_dir = env;
  std::error_code ec;
  if (std::filesystem::is_directory(ui_dir, ec)) {
    srv.set_mount_point("/ui", ui_dir);
    spdlog::info("serving static assets from {} under /ui", ui_dir);
  }
}

/// Blocks until the server stops. Returns false if the socket cannot be bound.
inline bool serve(const std::string& bind, int port) {
  httplib::Server srv;
  install_routes(srv);
  spdlog::info("listening on {}:{}", bind, port);
  return srv.listen(bind, port);
}

}  // namespace qegs::app
