#include <catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace testing;

TEST_CASE("parse and print") {
  CHECK(q("3").to_string() == "3");
  CHECK(q("-1/2").to_string() == "-1/2");
  CHECK(q("6/4").to_string() == "3/2");
  CHECK(q("+4/2").to_string() == "2");
  CHECK_THROWS_AS(q("4/-2"), qegs::Error);
}

TEST_CASE("malformed rationals are rejected") {
  for (const char* bad : {"", "1.5", "1/", "/2", "a", "1 /2", "1/0", "--1"})
    CHECK_THROWS_AS(Rational::parse(bad), qegs::Error);
}

TEST_CASE("lenient parse accepts decimals") {
  CHECK(Rational::parse_lenient("0.24") == q("6/25"));
  CHECK(Rational::parse_lenient("-1.5") == q("-3/2"));
  CHECK(Rational::parse_lenient(".5") == q("1/2"));
  CHECK(Rational::parse_lenient("24/100") == q("6/25"));
  CHECK_THROWS(Rational::parse_lenient("1."));
}

TEST_CASE("division by zero") { CHECK_THROWS_AS(q("1") / q("0"), qegs::Error); }

TEST_CASE("floor and approximate") {
  CHECK(qegs::floor(q("-1/2")) == -1);
  CHECK(qegs::floor(q("7/2")) == 3);
  CHECK(qegs::floor(q("-4")) == -4);
  CHECK(qegs::approximate(0.75) == q("3/4"));
  CHECK(qegs::approximate(-2.0 / 3.0) == q("-2/3"));
}

TEST_CASE("field laws hold on random rationals") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> num(-1'000'000, 1'000'000), den(1, 1'000'000);
  auto draw = [&] { return Rational(BigInt(num(rng)), BigInt(den(rng))); };
  for (int k = 0; k < 2000; ++k) {
    Rational a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    // lowest terms with a positive denominator
    Rational s = a * b + c;
    CHECK(s.denominator() > 0);
    CHECK(boost::multiprecision::gcd(s.numerator(), s.denominator()) == 1);
  }
}

TEST_CASE("ordering is total and matches doubles on small values") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 50);
  for (int k = 0; k < 1000; ++k) {
    Rational a(BigInt(num(rng)), BigInt(den(rng))), b(BigInt(num(rng)), BigInt(den(rng)));
    CHECK(((a < b) + (a == b) + (a > b)) == 1);
    if (a < b) CHECK(a.to_double() < b.to_double());
  }
}
