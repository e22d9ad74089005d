#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qegs/bimatrix.hpp"
#include "qegs/error.hpp"
#include "qegs/polynomial.hpp"
#include "qegs/quad_algebraic.hpp"
#include "qegs/solver.hpp"

namespace qegs {

struct SweepOptions {
  // Differences of degree > 2 are located numerically (bisection to
  // root_width) and the result is flagged approximate. When false such
  // inputs raise DegreeTooHigh.
  bool allow_approximate = true;
  Rational root_width = Rational(BigInt(1), BigInt(1'000'000'000'000LL));
};

/// One piece of the parameter domain: an open interval (from, to) solved at
/// a rational sample, or a single breakpoint solved exactly at that point.
struct Segment {
  enum class Kind { Interval, Point };
  Kind kind = Kind::Interval;
  QuadAlgebraic from;
  QuadAlgebraic to;  // == from for points
  Rational sample;   // intervals only
  SolutionSets sets;

  bool contains(const QuadAlgebraic& x) const { return kind == Kind::Point ? x == from : (from < x && x < to); }
};

struct SweepResult {
  std::string parameter;
  Rational lo;
  Rational hi;
  Analyses analyses;
  bool approximate = false;
  std::vector<QuadAlgebraic> breakpoints;  // strictly increasing, inside (lo, hi)
  std::vector<Segment> segments;           // 2 * breakpoints + 1, alternating interval / point
  Segment at_lo;                           // closed-domain boundaries, solved exactly
  Segment at_hi;

  /// Segment whose solution sets hold at x; boundaries resolve to at_lo / at_hi.
  const Segment& locate(const Rational& x) const {
    if (x == lo) return at_lo;
    if (x == hi) return at_hi;
    if (x < lo || x > hi) throw Error(ErrorKind::ParamOutOfRange, "point outside sweep domain");
    QuadAlgebraic q(x);
    auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), q);
    std::size_t k = static_cast<std::size_t>(it - breakpoints.begin());
    if (it != breakpoints.end() && *it == q) return segments[2 * k + 1];
    return segments[2 * k];
  }
};

namespace detail {

struct PolyKey {
  std::vector<std::string> coeffs;
  friend bool operator<(const PolyKey& a, const PolyKey& b) { return a.coeffs < b.coeffs; }
};

/// Monic form for dedupe: p and c*p share roots.
inline PolyKey monic_key(const PayoffPoly& p) {
  PolyKey k;
  const Rational lead = p.coeffs().back();
  for (const auto& c : p.coeffs()) k.coeffs.push_back((c / lead).to_string());
  return k;
}

inline int sign_at(const PayoffPoly& p, const Rational& x) { return p.evaluate(x).sign(); }

inline std::vector<PayoffPoly> sturm_chain(const PayoffPoly& p) {
  std::vector<PayoffPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

inline int sign_variations(const std::vector<PayoffPoly>& chain, const Rational& x) {
  int changes = 0, prev = 0;
  for (const auto& q : chain) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

/// Roots of a square-free polynomial inside the open interval (a, b),
/// isolated by Sturm counts and refined by bisection to `width`.
inline void isolate_roots(const PayoffPoly& p, const std::vector<PayoffPoly>& chain, const Rational& a,
                          const Rational& b, const Rational& width, std::vector<Rational>& out) {
  int count = sign_variations(chain, a) - sign_variations(chain, b) - (sign_at(p, b) == 0 ? 1 : 0);
  if (count <= 0) return;
  const Rational two(2);
  int sa = sign_at(p, a), sb = sign_at(p, b);
  if (count == 1 && sa != 0 && sb != 0) {
    Rational lo = a, hi = b;
    while (hi - lo > width) {
      Rational mid = (lo + hi) / two;
      int sm = sign_at(p, mid);
      if (sm == 0) {
        out.push_back(mid);
        return;
      }
      (sm == sa ? lo : hi) = mid;
    }
    out.push_back((lo + hi) / two);
    return;
  }
  Rational mid = (a + b) / two;
  isolate_roots(p, chain, a, mid, width, out);
  if (sign_at(p, mid) == 0) out.push_back(mid);
  isolate_roots(p, chain, mid, b, width, out);
}

class BreakpointCollector {
 public:
  BreakpointCollector(Rational lo, Rational hi, const SweepOptions& opts) : lo_(std::move(lo)), hi_(std::move(hi)), opts_(opts) {}

  /// Adds the roots of p that lie strictly inside (from, to).
  void add_roots(const PayoffPoly& p, const QuadAlgebraic& from, const QuadAlgebraic& to) {
    if (p.is_constant()) return;
    auto key = monic_key(p);
    auto& roots = cache_[key];
    if (!roots) roots = compute_roots(p);
    for (const auto& r : *roots)
      if (from < r && r < to) points_.push_back(r);
  }

  void add_roots(const PayoffPoly& p) { add_roots(p, QuadAlgebraic(lo_), QuadAlgebraic(hi_)); }

  bool approximate() const { return approximate_; }

  std::vector<QuadAlgebraic> sorted() const {
    std::vector<QuadAlgebraic> pts = points_;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
  }

 private:
  std::vector<QuadAlgebraic> compute_roots(const PayoffPoly& p) {
    std::vector<QuadAlgebraic> out;
    if (p.degree() <= 2) {
      for (auto& r : real_roots_quadratic(p))
        if (QuadAlgebraic(lo_) < r && r < QuadAlgebraic(hi_)) out.push_back(std::move(r));
      return out;
    }
    if (!opts_.allow_approximate)
      throw Error(ErrorKind::DegreeTooHigh, "payoff difference of degree " + std::to_string(p.degree()) +
                                                " has no exact breakpoint path");
    approximate_ = true;
    PayoffPoly sqf = divmod(p, poly_gcd(p, p.derivative())).first;
    std::vector<Rational> approx;
    if (sqf.degree() <= 2) {
      for (auto& r : real_roots_quadratic(sqf))
        if (QuadAlgebraic(lo_) < r && r < QuadAlgebraic(hi_)) out.push_back(std::move(r));
      return out;
    }
    isolate_roots(sqf, sturm_chain(sqf), lo_, hi_, opts_.root_width, approx);
    for (auto& r : approx) out.emplace_back(r);
    return out;
  }

  Rational lo_, hi_;
  SweepOptions opts_;
  bool approximate_ = false;
  std::map<PolyKey, std::optional<std::vector<QuadAlgebraic>>> cache_;
  std::vector<QuadAlgebraic> points_;
};

template <typename T>
SolutionSets sets_at(const Bimatrix& g, const T& x, Analyses analyses) {
  return solve(table_at<T>(g, x), analyses).sets;
}

/// Index of a minimizing entry of the polynomials `row` at x.
inline std::size_t argmin_at(const std::vector<const PayoffPoly*>& row, const Rational& x) {
  std::size_t best = 0;
  Rational bv = row[0]->evaluate(x);
  for (std::size_t k = 1; k < row.size(); ++k) {
    Rational v = row[k]->evaluate(x);
    if (v < bv) {
      bv = std::move(v);
      best = k;
    }
  }
  return best;
}

/// Crossings of the lower envelopes min_k lines[s][k] between different s.
/// `inner` are the points where some envelope may switch branches.
inline void add_envelope_crossings(BreakpointCollector& bc, const std::vector<std::vector<const PayoffPoly*>>& lines,
                                   const std::vector<QuadAlgebraic>& inner, const Rational& lo, const Rational& hi) {
  std::vector<QuadAlgebraic> edges;
  edges.emplace_back(lo);
  edges.insert(edges.end(), inner.begin(), inner.end());
  edges.emplace_back(hi);
  for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
    Rational sample = rational_between(edges[e], edges[e + 1]);
    std::vector<const PayoffPoly*> branch;
    for (const auto& l : lines) branch.push_back(l[argmin_at(l, sample)]);
    for (std::size_t s = 0; s < branch.size(); ++s)
      for (std::size_t r = s + 1; r < branch.size(); ++r) bc.add_roots(*branch[s] - *branch[r], edges[e], edges[e + 1]);
  }
}

}  // namespace detail

/// Exact decomposition of [lo, hi] into pieces on which the requested
/// solution sets are constant.
///
/// Candidate breakpoints are the roots of every payoff difference the
/// analyses compare (row pairs within a column for player 1 and column pairs
/// within a row for player 2 for NE and dominance; entries within a row,
/// then the lower envelopes across rows, for maximin). Each open interval is
/// solved at a rational sample and each candidate exactly at the algebraic
/// point; neighbours with identical sets are merged, so the surviving
/// breakpoints are exactly where something changes.
inline SweepResult sweep(const Bimatrix& g, const Rational& lo, const Rational& hi,
                         Analyses analyses = Analyses::all(), const SweepOptions& opts = {}) {
  if (!g.parameter()) throw Error(ErrorKind::NoParameter, "game has no parameter to sweep");
  if (!(lo < hi)) throw Error(ErrorKind::EmptyDomain, "sweep domain is empty: need min < max");

  detail::BreakpointCollector bc(lo, hi, opts);
  const std::size_t n = g.rows(), m = g.cols();
  auto u1 = [&](std::size_t i, std::size_t j) -> const PayoffPoly& { return g.at(i, j).u1; };
  auto u2 = [&](std::size_t i, std::size_t j) -> const PayoffPoly& { return g.at(i, j).u2; };

  if (analyses.ne || analyses.dominated) {
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k) bc.add_roots(u1(i, j) - u1(k, j));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = j + 1; l < m; ++l) bc.add_roots(u2(i, j) - u2(i, l));
  }
  if (analyses.maximin) {
    // Player 1: envelope of each row over columns; player 2: of each column over rows.
    detail::BreakpointCollector switches(lo, hi, opts);
    std::vector<std::vector<const PayoffPoly*>> rows(n), cols(m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        rows[i].push_back(&u1(i, j));
        cols[j].push_back(&u2(i, j));
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = j + 1; l < m; ++l) {
          switches.add_roots(u1(i, j) - u1(i, l));
          bc.add_roots(u1(i, j) - u1(i, l));
        }
    auto row_switch = switches.sorted();
    detail::BreakpointCollector col_switches(lo, hi, opts);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k) {
          col_switches.add_roots(u2(i, j) - u2(k, j));
          bc.add_roots(u2(i, j) - u2(k, j));
        }
    auto col_switch = col_switches.sorted();
    detail::add_envelope_crossings(bc, rows, row_switch, lo, hi);
    detail::add_envelope_crossings(bc, cols, col_switch, lo, hi);
  }

  SweepResult out;
  out.parameter = *g.parameter();
  out.lo = lo;
  out.hi = hi;
  out.analyses = analyses;
  out.approximate = bc.approximate();

  const std::vector<QuadAlgebraic> candidates = bc.sorted();
  std::vector<QuadAlgebraic> edges;
  edges.emplace_back(lo);
  edges.insert(edges.end(), candidates.begin(), candidates.end());
  edges.emplace_back(hi);

  auto interval = [&](std::size_t e) {
    Segment s;
    s.kind = Segment::Kind::Interval;
    s.from = edges[e];
    s.to = edges[e + 1];
    s.sample = rational_between(edges[e], edges[e + 1]);
    s.sets = detail::sets_at<Rational>(g, s.sample, analyses);
    return s;
  };
  auto point = [&](const QuadAlgebraic& x) {
    Segment s;
    s.kind = Segment::Kind::Point;
    s.from = s.to = x;
    if (x.is_rational())
      s.sets = detail::sets_at<Rational>(g, x.rational_part(), analyses);
    else
      s.sets = detail::sets_at<QuadAlgebraic>(g, x, analyses);
    return s;
  };

  out.segments.push_back(interval(0));
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    Segment p = point(candidates[k]);
    Segment next = interval(k + 1);
    Segment& last = out.segments.back();
    if (last.sets == p.sets && p.sets == next.sets) {
      last.to = next.to;
      continue;
    }
    out.breakpoints.push_back(p.from);
    out.segments.push_back(std::move(p));
    out.segments.push_back(std::move(next));
  }
  out.at_lo = point(QuadAlgebraic(lo));
  out.at_hi = point(QuadAlgebraic(hi));
  return out;
}

}  // namespace qegs
