#include <catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace testing;

namespace {

// Independent brute force straight from the definitions.
std::vector<Profile> brute_ne(const Bimatrix& g) {
  std::vector<Profile> out;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      bool ok = true;
      for (std::size_t k = 0; k < g.rows(); ++k) ok = ok && g.at(k, j).u1.constant_value() <= g.at(i, j).u1.constant_value();
      for (std::size_t l = 0; l < g.cols(); ++l) ok = ok && g.at(i, l).u2.constant_value() <= g.at(i, j).u2.constant_value();
      if (ok) out.emplace_back(i, j);
    }
  return out;
}

Bimatrix affine(const Bimatrix& g, const Rational& s1, const Rational& c1, const Rational& s2, const Rational& c2) {
  std::vector<std::vector<PayoffPair>> grid(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      grid[i].push_back({PayoffPoly(s1) * g.at(i, j).u1 + PayoffPoly(c1), PayoffPoly(s2) * g.at(i, j).u2 + PayoffPoly(c2)});
  return Bimatrix(grid, std::nullopt);
}

}  // namespace

TEST_CASE("prisoner's dilemma") {
  auto r = solve(pd());
  CHECK(r.sets.nash == profiles({{2, 2}}));
  CHECK(r.sets.dominated_rows == idx({1}));
  CHECK(r.sets.dominated_cols == idx({1}));
  CHECK(r.sets.maximin_rows == idx({2}));
  CHECK(r.sets.maximin_cols == idx({2}));
  CHECK(*r.security_levels == std::pair{Rational(1), Rational(1)});
}

TEST_CASE("the 2x3 game") {
  auto r = solve(g23());
  // (T, M) is stable too: player 1 would drop to -100, player 2 to 1 or 0.
  CHECK(r.sets.nash == profiles({{1, 2}, {2, 3}}));
  CHECK(check_profile(g23(), 0, 1));
  CHECK(r.sets.dominated_rows.empty());
  CHECK(r.sets.dominated_cols == idx({1}));
  CHECK(r.sets.maximin_rows == idx({1}));
  CHECK(r.sets.maximin_cols == idx({2}));
  CHECK(*r.security_levels == std::pair{Rational(2), Rational(2)});
  // the maximin profile pays (2, 3)
  CHECK(g23().at(0, 1) == PayoffPair{PayoffPoly(2), PayoffPoly(3)});
}

TEST_CASE("selected analyses only") {
  auto r = solve(pd(), Analyses::only_ne());
  CHECK_FALSE(r.security_levels.has_value());
  CHECK(r.sets.maximin_rows.empty());
  CHECK(r.sets.nash.size() == 1);
}

TEST_CASE("one-strategy extensions") {
  CHECK(find_pure_ne(extension3x3_from_u(pd(), UnitaryParams::exact(q("1/3"), q("1/2"), q("1")))) == profiles({{3, 3}}));
  auto [rows, cols] = dominated_strategies(extend(pd(), ExtensionClass::A0));
  CHECK(rows == idx({1, 3}));
  CHECK(cols == idx({1, 3}));
  auto c0 = dominated_strategies(extend(pd(), ExtensionClass::C0));
  CHECK(c0.first.empty());
  CHECK(c0.second.empty());
}

TEST_CASE("extension slider points") {
  CHECK(find_pure_ne(evaluate(extend(pd(), ExtensionClass::A1), q("28/100"))).empty());
  CHECK(find_pure_ne(evaluate(extend(pd(), ExtensionClass::A1), q("65/100"))) == profiles({{2, 3}, {3, 2}}));
  Bimatrix d1 = evaluate(extend(pd(), ExtensionClass::D1), q("24/100"));
  CHECK(find_pure_ne(d1) == profiles({{2, 2}}));
}

TEST_CASE("ties everywhere") {
  Bimatrix flat = make_game({{{1, 1}, {1, 1}, {1, 1}}, {{1, 1}, {1, 1}, {1, 1}}});
  auto r = solve(flat);
  CHECK(r.sets.nash.size() == 6);
  CHECK(r.sets.dominated_rows.empty());
  CHECK(r.sets.dominated_cols.empty());
  CHECK(r.sets.maximin_rows == idx({1, 2}));
  CHECK(r.sets.maximin_cols == idx({1, 2, 3}));
}

TEST_CASE("profile checks") {
  CHECK(check_profile(pd(), 1, 1));
  CHECK_FALSE(check_profile(pd(), 0, 0));
  CHECK_FALSE(check_profile(pd(), 0, 1));
  CHECK_THROWS_AS(check_profile(pd(), 2, 0), qegs::Error);
  Bimatrix sym = parse_game(read_file(game_path("sym22.json")));
  try {
    solve(sym);
    FAIL("parametric game solved");
  } catch (const qegs::Error& e) {
    CHECK(e.kind() == ErrorKind::ParametricInput);
    CHECK(std::string(e.what()) == "input matrix must be numerical");
  }
}

TEST_CASE("agreement with brute force on random games") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> dim(1, 8), narrow(1, 3);
  for (int k = 0; k < 500; ++k) {
    int range = narrow(rng);  // small payoff ranges produce many ties
    Bimatrix g = random_game(rng, dim(rng), dim(rng), -range, range);
    auto r = solve(g);
    CHECK(r.sets.nash == brute_ne(g));
    for (auto [i, j] : r.sets.nash) {
      CHECK(std::find(r.sets.dominated_rows.begin(), r.sets.dominated_rows.end(), i) == r.sets.dominated_rows.end());
      CHECK(std::find(r.sets.dominated_cols.begin(), r.sets.dominated_cols.end(), j) == r.sets.dominated_cols.end());
      CHECK(check_profile(g, i, j));
    }
  }
}

TEST_CASE("positive affine rescaling leaves every set unchanged") {
  std::mt19937_64 rng(72);
  std::uniform_int_distribution<int> dim(1, 6), s(1, 7), c(-5, 5);
  for (int k = 0; k < 200; ++k) {
    Bimatrix g = random_game(rng, dim(rng), dim(rng), -3, 3);
    Rational s1(BigInt(s(rng)), BigInt(s(rng))), s2(BigInt(s(rng)), BigInt(s(rng)));
    CHECK(solve(g).sets == solve(affine(g, s1, Rational(c(rng)), s2, Rational(c(rng)))).sets);
  }
}

TEST_CASE("exact algebraic tables") {
  // same analyses over QuadAlgebraic entries
  PayoffTable<QuadAlgebraic> t{2, 2, {}, {}};
  QuadAlgebraic r2(Rational(0), Rational(1), BigInt(2));
  t.p1 = {r2, QuadAlgebraic(1), QuadAlgebraic(q("3/2")), QuadAlgebraic(0)};
  t.p2 = {QuadAlgebraic(1), r2, QuadAlgebraic(0), QuadAlgebraic(q("7/5"))};
  auto r = solve(t);
  CHECK(r.sets.nash == profiles({{1, 2}}));
  CHECK(r.sets.dominated_rows.empty());
  CHECK(r.sets.dominated_cols == idx({1}));
  CHECK(r.sets.maximin_rows == idx({1}));
  CHECK(r.sets.maximin_cols == idx({2}));
  CHECK(r.security_levels->second == QuadAlgebraic(q("7/5")));
}
