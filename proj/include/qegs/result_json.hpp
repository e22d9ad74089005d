#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "qegs/ewl.hpp"
#include "qegs/game_io.hpp"
#include "qegs/quad_algebraic.hpp"
#include "qegs/solver.hpp"
#include "qegs/sweep.hpp"

namespace qegs {

// Result JSON: 1-based indices, exact numbers as strings.

namespace detail {

inline json indices_json(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (auto i : v) a.push_back(i + 1);
  return a;
}

inline void sets_into(json& out, const SolutionSets& s, const Analyses& an) {
  if (an.ne) {
    json ne = json::array();
    for (const auto& [i, j] : s.nash) ne.push_back(json::array({i + 1, j + 1}));
    out["ne"] = std::move(ne);
  }
  if (an.dominated) {
    out["dominatedRows"] = indices_json(s.dominated_rows);
    out["dominatedCols"] = indices_json(s.dominated_cols);
  }
  if (an.maximin) {
    out["maximinRows"] = indices_json(s.maximin_rows);
    out["maximinCols"] = indices_json(s.maximin_cols);
  }
}

}  // namespace detail

inline json quad_to_json(const QuadAlgebraic& q) {
  json j;
  j["rational"] = q.rational_part().to_string();
  if (q.is_rational()) {
    j["surd"] = nullptr;
  } else {
    json d = q.radicand() <= BigInt(std::numeric_limits<std::int64_t>::max())
                 ? json(q.radicand().convert_to<std::int64_t>())
                 : json(q.radicand().str());
    j["surd"] = json{{"q", q.surd_coefficient().to_string()}, {"d", d}};
  }
  return j;
}

inline json solve_result_json(const SolveResult<Rational>& r) {
  json out = json::object();
  detail::sets_into(out, r.sets, r.analyses);
  if (r.analyses.maximin && r.security_levels)
    out["securityLevels"] = json::array({r.security_levels->first.to_string(), r.security_levels->second.to_string()});
  return out;
}

inline json segment_json(const Segment& s, const Analyses& an) {
  json j;
  if (s.kind == Segment::Kind::Point) {
    j["kind"] = "point";
    j["at"] = quad_to_json(s.from);
    j["approx"] = s.from.to_double();
  } else {
    j["kind"] = "interval";
    j["from"] = quad_to_json(s.from);
    j["to"] = quad_to_json(s.to);
    j["sample"] = s.sample.to_string();
  }
  detail::sets_into(j, s.sets, an);
  return j;
}

inline json sweep_result_json(const SweepResult& r) {
  json out;
  out["parameter"] = r.parameter;
  out["domain"] = json::array({r.lo.to_string(), r.hi.to_string()});
  out["approximate"] = r.approximate;
  json bps = json::array();
  for (const auto& b : r.breakpoints) bps.push_back(quad_to_json(b));
  out["breakpoints"] = std::move(bps);
  json segs = json::array();
  for (const auto& s : r.segments) segs.push_back(segment_json(s, r.analyses));
  out["segments"] = std::move(segs);
  out["boundaries"] = json::array({segment_json(r.at_lo, r.analyses), segment_json(r.at_hi, r.analyses)});
  return out;
}

inline json ewl_result_json(const EwlPayoff& p, const OutcomeWeights& w) {
  json out;
  out["exact"] = p.is_exact();
  if (p.exact) {
    out["payoff"] = json::array({(*p.exact)[0].to_string(), (*p.exact)[1].to_string()});
    json ws = json::array();
    for (const auto& x : *w.exact) ws.push_back(x.to_string());
    out["weights"] = std::move(ws);
  } else {
    out["payoff"] = json::array({p.values[0], p.values[1]});
    out["weights"] = json::array({w.values[0], w.values[1], w.values[2], w.values[3]});
  }
  return out;
}

}  // namespace qegs
