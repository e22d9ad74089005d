#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "qegs/app/cli.hpp"
#include "qegs/app/service.hpp"
#include "support.hpp"

using namespace testing;
using qegs::app::handle;
using qegs::json;

namespace {

std::string request(const Bimatrix& g, const json& options) {
  return json{{"game", game_to_json(g)}, {"options", options}}.dump();
}

json ok_result(const qegs::app::HttpResponse& r) {
  INFO(r.body);
  REQUIRE(r.status == 200);
  auto j = json::parse(r.body);
  REQUIRE(j["ok"] == true);
  return j["result"];
}

std::string error_code(const qegs::app::HttpResponse& r) { return json::parse(r.body)["error"]["code"]; }

std::string cli_stdout(std::vector<std::string> args) {
  args.insert(args.begin(), "qegs");
  std::istringstream in;
  std::ostringstream out, err;
  REQUIRE(qegs::app::run(args, in, out, err) == 0);
  return out.str();
}

}  // namespace

TEST_CASE("health") {
  auto r = handle("GET", "/api/v1/health", "");
  CHECK(r.status == 200);
  CHECK(r.body == R"({"ok":true,"version":"1.0.0"})");
}

TEST_CASE("solve matches the CLI payload") {
  auto res = ok_result(handle("POST", "/api/v1/solve", request(pd(), {{"analysis", "ne"}})));
  CHECK(res == json::parse(R"({"ne":[[2,2]]})"));
  auto all = ok_result(handle("POST", "/api/v1/solve", request(g23(), json::object())));
  CHECK(all.dump() + "\n" == cli_stdout({"solve", "--game", game_path("g23.json"), "--json"}));
}

TEST_CASE("extend then solve matches the CLI pipeline") {
  auto ext = ok_result(handle("POST", "/api/v1/extend", request(pd(), {{"class", "D1"}, {"param", "24/100"}})));
  CHECK(game_from_json(ext) == extend(pd(), ExtensionClass::D1, q("6/25")));
  std::string cli_ext = cli_stdout({"extend", "--game", game_path("pd.json"), "--class", "D1", "--param", "24/100"});
  CHECK(game_from_json(json::parse(cli_ext)) == game_from_json(ext));
  auto res = ok_result(handle("POST", "/api/v1/solve", json{{"game", ext}, {"options", {{"analysis", "ne"}}}}.dump()));
  CHECK(res == json::parse(R"({"ne":[[2,2]]})"));
}

TEST_CASE("symbolic extension and sweep") {
  auto ext = ok_result(handle("POST", "/api/v1/extend", request(pd(), {{"class", "A1"}, {"symbolic", true}})));
  CHECK(ext["parameter"] == "a");
  auto sw = ok_result(
      handle("POST", "/api/v1/sweep", json{{"game", ext}, {"options", {{"min", "0"}, {"max", 1}, {"analysis", "ne"}}}}.dump()));
  CHECK(sw["breakpoints"].size() == 5);
  CHECK(sw == sweep_result_json(sweep(extend(pd(), ExtensionClass::A1), q("0"), q("1"), qegs::app::parse_analysis("ne"))));
}

TEST_CASE("ewl payoff") {
  auto res = ok_result(handle("POST", "/api/v1/ewl", request(pd(), {{"u1", "1/3,1/2,1"}, {"u2", {"1/3", "1/2", 1}}})));
  CHECK(res == json::parse(R"({"exact":true,"payoff":["43/16","43/16"],"weights":["9/16","3/16","3/16","1/16"]})"));
}

TEST_CASE("identical requests give identical bytes") {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 20; ++k) {
    std::string body = request(random_game(rng, 3, 4), {{"analysis", "all"}});
    auto a = handle("POST", "/api/v1/solve", body), b = handle("POST", "/api/v1/solve", body);
    CHECK(a.status == 200);
    CHECK(a.body == b.body);
  }
}

TEST_CASE("error codes") {
  Bimatrix sym = parse_game(read_file(game_path("sym22.json")));
  auto r = handle("POST", "/api/v1/solve", request(sym, json::object()));
  CHECK(r.status == 400);
  CHECK(error_code(r) == "INPUT_NOT_NUMERIC");
  CHECK(json::parse(r.body)["error"]["message"].get<std::string>().find("input matrix must be numerical") != std::string::npos);

  r = handle("POST", "/api/v1/extend", request(g23(), {{"class", "A0"}}));
  CHECK(r.status == 400);
  CHECK(error_code(r) == "SIZE_NOT_2X2");

  r = handle("POST", "/api/v1/solve", "{\"game\": [1,");
  CHECK(r.status == 400);
  CHECK(error_code(r) == "PARSE_ERROR");
  CHECK(error_code(handle("POST", "/api/v1/solve", R"({"game":{"rows":2,"cols":2,"payoffs":[]}})")) == "PARSE_ERROR");

  CHECK(error_code(handle("POST", "/api/v1/extend", request(pd(), {{"class", "A1"}, {"param", "3/2"}}))) == "PARAM_ERROR");
  CHECK(error_code(handle("POST", "/api/v1/solve", request(pd(), {{"analysis", "mixed"}}))) == "PARAM_ERROR");
  CHECK(error_code(handle("POST", "/api/v1/sweep", request(pd(), {{"min", "0"}, {"max", "1"}}))) == "PARAM_ERROR");

  std::mt19937_64 rng(72);
  r = handle("POST", "/api/v1/solve", request(random_game(rng, 101, 2, 0, 1), json::object()));
  CHECK(r.status == 400);
  CHECK(error_code(r) == "PARAM_ERROR");

  r = handle("POST", "/api/v1/solve", std::string(qegs::app::kMaxPayload + 1, ' '));
  CHECK(r.status == 413);
  CHECK(handle("POST", "/api/v1/nothing", "{}").status == 404);
  CHECK(handle("GET", "/elsewhere", "").status == 404);
  CHECK(handle("GET", "/api/v1/solve", "").status == 405);
}

TEST_CASE("served over HTTP") {
  auto ui = std::filesystem::temp_directory_path() / ("qegs_ui_" + std::to_string(::getpid()));
  std::filesystem::create_directories(ui);
  { std::ofstream(ui / "index.html") << "<html>qegs</html>"; }
  ::setenv("QEGS_UI_DIR", ui.c_str(), 1);
  httplib::Server srv;
  qegs::app::install_routes(srv);
  ::unsetenv("QEGS_UI_DIR");
  int port = srv.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread t([&] { srv.listen_after_bind(); });
  srv.wait_until_ready();

  httplib::Client cli("127.0.0.1", port);
  auto h = cli.Get("/api/v1/health");
  REQUIRE(h);
  CHECK(h->status == 200);
  CHECK(h->get_header_value("Access-Control-Allow-Origin") == "*");

  std::string body = request(pd(), {{"analysis", "ne"}});
  auto s = cli.Post("/api/v1/solve", body, "application/json");
  REQUIRE(s);
  CHECK(s->status == 200);
  CHECK(s->body == handle("POST", "/api/v1/solve", body).body);

  auto bad = cli.Post("/api/v1/extend", request(g23(), {{"class", "A0"}}), "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  CHECK(error_code({bad->status, bad->body}) == "SIZE_NOT_2X2");

  auto pre = cli.Options("/api/v1/solve");
  REQUIRE(pre);
  CHECK(pre->status == 204);

  auto page = cli.Get("/ui/index.html");
  REQUIRE(page);
  CHECK(page->status == 200);
  CHECK(page->body == "<html>qegs</html>");

  srv.stop();
  t.join();
  std::filesystem::remove_all(ui);
}
