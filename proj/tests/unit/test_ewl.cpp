#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "support.hpp"

using namespace testing;

namespace {

UnitaryParams U(const char* t, const char* a, const char* b) { return UnitaryParams::exact(q(t), q(a), q(b)); }

std::array<Rational, 4> exact_weights(const UnitaryParams& a, const UnitaryParams& b) {
  auto w = ewl_weights(a, b);
  REQUIRE(w.is_exact());
  return *w.exact;
}

std::array<Rational, 2> exact_payoff(const Bimatrix& g, const UnitaryParams& a, const UnitaryParams& b) {
  auto p = ewl_payoff(g, a, b);
  REQUIRE(p.is_exact());
  return *p.exact;
}

std::array<Rational, 4> R4(const char* a, const char* b, const char* c, const char* d) { return {q(a), q(b), q(c), q(d)}; }

}  // namespace

TEST_CASE("classical strategies select single outcomes") {
  auto I = UnitaryParams::identity(), iX = UnitaryParams::flip();
  CHECK(exact_weights(I, I) == R4("1", "0", "0", "0"));
  CHECK(exact_weights(I, iX) == R4("0", "1", "0", "0"));
  CHECK(exact_weights(iX, I) == R4("0", "0", "1", "0"));
  CHECK(exact_weights(iX, iX) == R4("0", "0", "0", "1"));
}

TEST_CASE("weights at (pi/3, pi/2, pi) for both players") {
  auto u = U("1/3", "1/2", "1");
  CHECK(exact_weights(u, u) == R4("9/16", "3/16", "3/16", "1/16"));
}

TEST_CASE("prisoner's dilemma payoffs against U(pi/3, pi/2, pi)") {
  auto u = U("1/3", "1/2", "1");
  auto I = UnitaryParams::identity(), iX = UnitaryParams::flip();
  CHECK(exact_payoff(pd(), u, I) == std::array<Rational, 2>{q("2"), q("3/4")});
  CHECK(exact_payoff(pd(), iX, u) == std::array<Rational, 2>{q("1/4"), q("4")});
  CHECK(exact_payoff(pd(), u, u) == std::array<Rational, 2>{q("43/16"), q("43/16")});
}

TEST_CASE("3x3 extension from U reproduces the classical game") {
  Bimatrix e = extension3x3_from_u(pd(), U("1/3", "1/2", "1"));
  auto cell = [&](int i, int j) { return std::pair{e.at(i, j).u1.constant_value(), e.at(i, j).u2.constant_value()}; };
  CHECK(cell(0, 0) == std::pair{q("3"), q("3")});
  CHECK(cell(1, 1) == std::pair{q("1"), q("1")});
  CHECK(cell(0, 2) == std::pair{q("3/4"), q("2")});
  CHECK(cell(1, 2) == std::pair{q("1/4"), q("4")});
  CHECK(cell(2, 0) == std::pair{q("2"), q("3/4")});
  CHECK(cell(2, 1) == std::pair{q("4"), q("1/4")});
  CHECK(cell(2, 2) == std::pair{q("43/16"), q("43/16")});
  CHECK(e.row_label(2) == "U");
  CHECK(find_pure_ne(e) == profiles({{3, 3}}));
}

TEST_CASE("input checks") {
  auto u = UnitaryParams::identity();
  CHECK_THROWS_AS(ewl_payoff(g23(), u, u), qegs::Error);
  Bimatrix sym = parse_game(read_file(game_path("sym22.json")));
  try {
    ewl_payoff(sym, u, u);
    FAIL("parametric game accepted");
  } catch (const qegs::Error& e) {
    CHECK(e.kind() == ErrorKind::ParametricInput);
  }
  CHECK_THROWS_AS(U("3/2", "0", "0"), qegs::Error);
  CHECK_THROWS_AS(UnitaryParams::radians(-0.1, 0, 0), qegs::Error);
}

TEST_CASE("irrational squares fall back to doubles") {
  auto u = U("1/5", "0", "0");
  auto w = ewl_weights(u, UnitaryParams::identity());
  CHECK_FALSE(w.is_exact());
  CHECK(w.values[0] == Catch::Approx(std::pow(std::cos(std::numbers::pi / 10), 2)).epsilon(1e-14));
}

TEST_CASE("weights always sum to one") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> th(0, std::numbers::pi), ang(-10, 10);
  double worst = 0;
  for (int k = 0; k < 100'000; ++k) {
    auto a = UnitaryParams::radians(th(rng), ang(rng), ang(rng));
    auto b = UnitaryParams::radians(th(rng), ang(rng), ang(rng));
    auto w = ewl_weights(a, b);
    worst = std::max(worst, std::abs(w.values[0] + w.values[1] + w.values[2] + w.values[3] - 1.0));
  }
  CHECK(worst <= 1e-12);
  std::uniform_int_distribution<int> twelfths(0, 23), th12(0, 12);
  for (int k = 0; k < 2000; ++k) {
    auto draw = [&] {
      return UnitaryParams::exact(Rational(BigInt(th12(rng)), BigInt(12)), Rational(BigInt(twelfths(rng)), BigInt(12)),
                                  Rational(BigInt(twelfths(rng)), BigInt(12)));
    };
    auto w = ewl_weights(draw(), draw());
    if (w.is_exact()) CHECK((*w.exact)[0] + (*w.exact)[1] + (*w.exact)[2] + (*w.exact)[3] == Rational(1));
  }
}

TEST_CASE("closed-form payoffs against I, iX and U") {
  // With c = cos(theta/2), s = sin(theta/2) and base payoffs (x_ij, y_ij):
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> th(0, std::numbers::pi), ang(0, 2 * std::numbers::pi);
  std::uniform_int_distribution<int> pay(-9, 9);
  auto I = UnitaryParams::identity(), iX = UnitaryParams::flip();
  for (int k = 0; k < 10'000; ++k) {
    double t = th(rng), a = ang(rng), b = ang(rng), t2 = th(rng), a2 = ang(rng), b2 = ang(rng);
    Bimatrix g = make_game({{{pay(rng), pay(rng)}, {pay(rng), pay(rng)}}, {{pay(rng), pay(rng)}, {pay(rng), pay(rng)}}});
    auto x = [&](int i, int j) { return g.at(i, j).u1.constant_value().to_double(); };
    auto y = [&](int i, int j) { return g.at(i, j).u2.constant_value().to_double(); };
    auto u = UnitaryParams::radians(t, a, b), v = UnitaryParams::radians(t2, a2, b2);
    double c = std::cos(t / 2), s = std::sin(t / 2), cc = c * c, ss = s * s;
    auto sq = [](double z) { return z * z; };
    double ca = std::cos(a) * std::cos(a), sa = 1 - ca, cb = std::cos(b) * std::cos(b), sb = 1 - cb;

    auto p = ewl_payoff(g, u, I).values;  // (U, I)
    CHECK(p[0] == Catch::Approx(cc * ca * x(0, 0) + ss * sb * x(0, 1) + ss * cb * x(1, 0) + cc * sa * x(1, 1)).margin(1e-9));
    p = ewl_payoff(g, u, iX).values;  // (U, iX)
    CHECK(p[1] == Catch::Approx(ss * sb * y(0, 0) + cc * ca * y(0, 1) + cc * sa * y(1, 0) + ss * cb * y(1, 1)).margin(1e-9));
    p = ewl_payoff(g, I, u).values;  // (I, U)
    CHECK(p[0] == Catch::Approx(cc * ca * x(0, 0) + ss * cb * x(0, 1) + ss * sb * x(1, 0) + cc * sa * x(1, 1)).margin(1e-9));
    p = ewl_payoff(g, iX, u).values;  // (iX, U)
    CHECK(p[1] == Catch::Approx(ss * sb * y(0, 0) + cc * sa * y(0, 1) + cc * ca * y(1, 0) + ss * cb * y(1, 1)).margin(1e-9));

    p = ewl_payoff(g, u, u).values;  // (U, U)
    double m = 0.25 * sq(std::cos(a - b) + std::sin(a - b)) * sq(std::sin(t));
    CHECK(p[0] == Catch::Approx(sq(std::cos(2 * a) * cc + std::sin(2 * b) * ss) * x(0, 0) + m * (x(0, 1) + x(1, 0)) +
                                sq(std::sin(2 * a) * cc - std::cos(2 * b) * ss) * x(1, 1))
                      .margin(1e-9));

    // (U, V) straight from the amplitude formula
    double c1 = c, s1 = s, c2 = std::cos(t2 / 2), s2 = std::sin(t2 / 2);
    double w11 = sq(std::cos(a + a2) * c1 * c2 + std::sin(b + b2) * s1 * s2);
    double w12 = sq(std::cos(a - b2) * c1 * s2 + std::sin(a2 - b) * s1 * c2);
    double w21 = sq(std::sin(a - b2) * c1 * s2 + std::cos(a2 - b) * s1 * c2);
    double w22 = sq(std::sin(a + a2) * c1 * c2 - std::cos(b + b2) * s1 * s2);
    p = ewl_payoff(g, u, v).values;
    CHECK(p[0] == Catch::Approx(w11 * x(0, 0) + w12 * x(0, 1) + w21 * x(1, 0) + w22 * x(1, 1)).margin(1e-9));
  }
}

TEST_CASE("classical profiles recover the base game") {
  std::mt19937_64 rng(53);
  auto I = UnitaryParams::identity(), iX = UnitaryParams::flip();
  for (int k = 0; k < 100; ++k) {
    Bimatrix g = random_game(rng, 2, 2);
    auto t = ewl_table(g, {I, iX}, {"I", "iX"}).to_bimatrix();
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(t.at(i, j) == g.at(i, j));
  }
}

TEST_CASE("one-strategy classes match their unitary representatives") {
  std::mt19937_64 rng(54);
  for (int k = 0; k < 100; ++k) {
    Bimatrix g = random_game(rng, 2, 2);
    auto strip = [](const Bimatrix& b) { return Bimatrix(b.grid(), std::nullopt); };
    CHECK(strip(extend(g, ExtensionClass::A0)) == strip(extension3x3_from_u(g, U("1/2", "0", "0"))));
    CHECK(strip(extend(g, ExtensionClass::B0)) == strip(extension3x3_from_u(g, U("1/2", "1/2", "1/2"))));
    CHECK(strip(extend(g, ExtensionClass::C0)) == strip(extension3x3_from_u(g, U("1/2", "1/4", "1/4"))));
  }
}

TEST_CASE("other representatives of the same class give the same matrix") {
  std::mt19937_64 rng(55);
  auto strip = [](const Bimatrix& b) { return Bimatrix(b.grid(), std::nullopt); };
  for (int k = 0; k < 20; ++k) {
    Bimatrix g = random_game(rng, 2, 2);
    // A0: alpha, beta in {0, pi}; B0: in {pi/2, 3pi/2}; C0: in {pi/4, 3pi/4, 5pi/4, 7pi/4}.
    for (const char* a : {"0", "1"})
      for (const char* b : {"0", "1"})
        CHECK(strip(extension3x3_from_u(g, U("1/2", a, b))) == strip(extend(g, ExtensionClass::A0)));
    for (const char* a : {"1/2", "3/2"})
      for (const char* b : {"1/2", "3/2"})
        CHECK(strip(extension3x3_from_u(g, U("1/2", a, b))) == strip(extend(g, ExtensionClass::B0)));
    for (const char* a : {"1/4", "5/4"})
      for (const char* b : {"1/4", "5/4"})
        CHECK(strip(extension3x3_from_u(g, U("1/2", a, b))) == strip(extend(g, ExtensionClass::C0)));
  }
}
