#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "qegs/app/ops.hpp"
#include "qegs/app/service.hpp"

namespace qegs::app {

enum ExitCode : int { kOk = 0, kInternal = 1, kValidation = 2 };

/// QEGS_LOG={error|warn|info|debug}; warnings and up by default, on stderr.
inline void configure_logging() {
  static bool done = false;
  if (done) return;
  done = true;
  auto logger = spdlog::stderr_logger_st("qegs");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* lvl = std::getenv("QEGS_LOG")) {
    auto parsed = spdlog::level::from_str(lvl);
    if (parsed != spdlog::level::off || std::string_view(lvl) == "off") spdlog::set_level(parsed);
  }
}

namespace detail {

inline Bimatrix load_game(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::Parse, "cannot open game file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  spdlog::debug("read {} bytes from {}", text.size(), path);
  Bimatrix g = parse_game(text);
  check_dimension(g);
  return g;
}

inline std::optional<Rational> opt_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return Rational::parse_lenient(s);
}

}  // namespace detail

/// Full command line (argv[0] is the program name). Output goes to `out`,
/// diagnostics to `err`; `in` backs "--game -".
inline int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err) {
  configure_logging();
  CLI::App app{"Quantum extensions and pure-strategy analysis of bimatrix games", "qegs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  std::string game_path, cls, param, min_s, max_s, analysis = "all", out_path, name, u1_s, u2_s, bind = "127.0.0.1";
  bool symbolic = false, as_json = false, radians = false;
  int port = 8080;
  const std::vector<std::string> analyses{"ne", "maximin", "dominated", "all"};

  auto* extend_cmd = app.add_subcommand("extend", "Quantum extension of a 2x2 game");
  extend_cmd->add_option("--game", game_path, "Game file, '-' for stdin")->required();
  extend_cmd->add_option("--class", cls, "Extension class A0..E2")->required();
  auto* ext_param = extend_cmd->add_option("--param", param, "Class parameter value in [0,1]");
  extend_cmd->add_flag("--symbolic", symbolic, "Keep the class parameter symbolic")->excludes(ext_param);
  extend_cmd->add_option("--out", out_path, "Write the extended game file here");
  extend_cmd->add_flag("--json", as_json, "Game JSON on stdout");

  auto* solve_cmd = app.add_subcommand("solve", "Pure NE, dominated and maximin strategies");
  solve_cmd->add_option("--game", game_path, "Game file, '-' for stdin")->required();
  solve_cmd->add_option("--analysis", analysis)->check(CLI::IsMember(analyses));
  solve_cmd->add_option("--param", param, "Evaluate a parametric game here first");
  solve_cmd->add_flag("--json", as_json);

  auto* sweep_cmd = app.add_subcommand("sweep", "Exact breakpoints of a one-parameter game");
  sweep_cmd->add_option("--game", game_path)->required();
  sweep_cmd->add_option("--min", min_s)->required();
  sweep_cmd->add_option("--max", max_s)->required();
  sweep_cmd->add_option("--analysis", analysis)->check(CLI::IsMember(analyses));
  sweep_cmd->add_flag("--json", as_json);

  auto* ewl_cmd = app.add_subcommand("ewl", "EWL payoff of a strategy profile");
  ewl_cmd->add_option("--game", game_path)->required();
  ewl_cmd->add_option("--u1", u1_s, "THETA,ALPHA,BETA as multiples of pi")->required();
  ewl_cmd->add_option("--u2", u2_s, "THETA,ALPHA,BETA as multiples of pi")->required();
  ewl_cmd->add_flag("--radians", radians, "Angles are plain radians (numeric result)");
  ewl_cmd->add_flag("--json", as_json);

  auto* report_cmd = app.add_subcommand("report", "Markdown analysis report");
  report_cmd->add_option("--game", game_path)->required();
  report_cmd->add_option("--name", name)->required();
  report_cmd->add_option("--out", out_path, "Output directory (default: current)");

  auto* serve_cmd = app.add_subcommand("serve", "HTTP service");
  serve_cmd->add_option("--port", port)->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--bind", bind);

  std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
  std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (extend_cmd->parsed()) {
      Bimatrix g = detail::load_game(game_path, in);
      Bimatrix ext = run_extend(g, cls, detail::opt_rational(param), symbolic);
      if (out_path.empty()) {
        out << serialize_game(ext);
      } else {
        std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
        if (!f || !(f << serialize_game(ext))) throw Error(ErrorKind::Io, "cannot write '" + out_path + "'");
        out << (as_json ? serialize_game(ext) : game_text(ext));
      }
    } else if (solve_cmd->parsed()) {
      Bimatrix g = detail::load_game(game_path, in);
      auto r = run_solve(g, parse_analysis(analysis), detail::opt_rational(param));
      if (as_json) {
        out << solve_result_json(r).dump() << "\n";
      } else {
        out << solve_text(detail::opt_rational(param) ? evaluate(g, *detail::opt_rational(param)) : g, r);
      }
    } else if (sweep_cmd->parsed()) {
      Bimatrix g = detail::load_game(game_path, in);
      auto r = sweep(g, Rational::parse_lenient(min_s), Rational::parse_lenient(max_s), parse_analysis(analysis));
      if (r.approximate) spdlog::warn("degree > 2 differences: breakpoints located numerically");
      out << (as_json ? sweep_result_json(r).dump() + "\n" : sweep_text(g, r));
    } else if (ewl_cmd->parsed()) {
      Bimatrix g = detail::load_game(game_path, in);
      json r = run_ewl(g, parse_unitary(u1_s, radians), parse_unitary(u2_s, radians));
      out << (as_json ? r.dump() + "\n" : ewl_text(r));
    } else if (report_cmd->parsed()) {
      Bimatrix g = detail::load_game(game_path, in);
      auto path = generate_report(g, name, out_path.empty() ? std::filesystem::path(".") : std::filesystem::path(out_path));
      out << path.string() << "\n";
    } else if (serve_cmd->parsed()) {
      if (!serve(bind, port)) {
        err << "qegs: cannot listen on " << bind << ":" << port << "\n";
        return kInternal;
      }
    }
  } catch (const Error& e) {
    err << "qegs: " << e.what() << "\n";
    spdlog::debug("error kind {}", to_string(e.kind()));
    return e.kind() == ErrorKind::Io || e.kind() == ErrorKind::MixedRadicands ? kInternal : kValidation;
  } catch (const std::exception& e) {
    err << "qegs: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

inline int run(int argc, const char* const* argv, std::istream& in = std::cin, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv, argv + argc), in, out, err);
}

}  // namespace qegs::app
