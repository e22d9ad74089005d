#pragma once

#include <fstream>
#include <iterator>
#include <random>
#include <string>

#include "qegs/qegs.hpp"

namespace testing {

using namespace qegs;

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

inline std::string game_path(const std::string& name) { return std::string(QEGS_GAMES_DIR) + "/" + name; }

inline Bimatrix pd() { return make_game({{{3, 3}, {0, 5}}, {{5, 0}, {1, 1}}}); }

inline Bimatrix g23() { return make_game({{{3, 1}, {2, 3}, {2, 0}}, {{-100, 1}, {-100, 2}, {3, 3}}}); }

inline Rational q(const char* s) { return Rational::parse(s); }

inline Bimatrix random_game(std::mt19937_64& rng, std::size_t n, std::size_t m, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::vector<std::pair<Rational, Rational>>> p(n);
  for (auto& row : p)
    for (std::size_t j = 0; j < m; ++j) row.emplace_back(d(rng), d(rng));
  return make_game(p);
}

inline Bimatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (auto& row : a)
    for (auto& x : row) x = d(rng);
  std::vector<std::vector<std::pair<Rational, Rational>>> p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p[i].emplace_back(a[i][j], a[j][i]);
  return make_game(p);
}

inline std::vector<Profile> profiles(std::initializer_list<std::pair<int, int>> one_based) {
  std::vector<Profile> out;
  for (auto [i, j] : one_based) out.emplace_back(i - 1, j - 1);
  return out;
}

inline std::vector<std::size_t> idx(std::initializer_list<int> one_based) {
  std::vector<std::size_t> out;
  for (int i : one_based) out.push_back(static_cast<std::size_t>(i - 1));
  return out;
}

/// Game at x = k / n as an integer table: every payoff is scaled by the same
/// positive D * n^deg, which leaves all comparisons, and so all solution
/// sets, unchanged. Independent of the rational evaluation path.
struct GridOracle {
  using Int = __int128;
  std::size_t rows, cols;
  int deg;
  std::vector<std::vector<long long>> p1, p2;  // scaled integer coefficients per entry
  long long n;

  GridOracle(const Bimatrix& g, long long n_) : rows(g.rows()), cols(g.cols()), deg(g.max_degree()), n(n_) {
    BigInt d = 1;
    for (const auto& row : g.grid())
      for (const auto& e : row)
        for (const auto* p : {&e.u1, &e.u2})
          for (const auto& c : p->coeffs()) d = boost::multiprecision::lcm(d, c.denominator());
    auto ints = [&](const PayoffPoly& p) {
      std::vector<long long> out;
      for (int i = 0; i <= deg; ++i) out.push_back((p.coeff(i) * Rational(d)).numerator().convert_to<long long>());
      return out;
    };
    for (const auto& row : g.grid())
      for (const auto& e : row) {
        p1.push_back(ints(e.u1));
        p2.push_back(ints(e.u2));
      }
  }

  PayoffTable<Int> at(long long k) const {
    auto value = [&](const std::vector<long long>& c) {
      Int acc = 0, kp = 1;
      std::vector<Int> npow(deg + 1, 1);
      for (int i = 1; i <= deg; ++i) npow[i] = npow[i - 1] * n;
      for (int i = 0; i <= deg; ++i) {
        acc += Int(c[i]) * kp * npow[deg - i];
        kp *= k;
      }
      return acc;
    };
    PayoffTable<Int> t{rows, cols, {}, {}};
    for (std::size_t e = 0; e < p1.size(); ++e) {
      t.p1.push_back(value(p1[e]));
      t.p2.push_back(value(p2[e]));
    }
    return t;
  }
};

}  // namespace testing
