#pragma once

// Two-sided escape for complements of finite measure. Given G (a finite union
// of half-open intervals) with measure(G) < xi, every point of
//
//   I = (0, 2xi) minus the union over all integers k of the closures of
//       (G cap [2k xi, 2(k+1) xi)) - 2k xi
//
// avoids G along the whole two-sided progression x + 2 xi Z: the lattice
// cells [2k xi, 2(k+1) xi) tile the line, so any hit x + 2k xi in G would pull
// back into a removed piece. Removing closures instead of the half-open
// pieces costs measure zero and keeps every component of the residual open,
// this module's local convention (open intervals, unlike the half-open
// algebra everywhere else). The residual has measure exactly 2xi - |pullback|
// >= 2xi - measure(G) > xi > 0, so a witness always exists; the reported
// witness is the midpoint of the first component.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "errors.hpp"
#include "interval_set.hpp"
#include "rational.hpp"

namespace apfree {

struct open_segment {
  rational lo;
  rational hi;  // (lo, hi)
};

struct ap_witness {
  rational x;                          // witness start
  rational gap;                        // 2 xi
  rational xi;
  std::vector<open_segment> residual;  // components of I, open, sorted
  rational residual_measure;
  rational measure_lower_bound;        // 2 xi - measure(G)
};

// Folds G into the fundamental cell [0, 2xi) and subtracts the closed images
// from the open interval (0, 2xi).
inline ap_witness find_two_sided_ap(const interval_set& g, const rational& xi) {
  if (xi.sign() <= 0) throw std::invalid_argument("xi must be positive");
  rational mg = g.measure();
  if (!(mg < xi))
    throw measure_too_large_error("measure(G) = " + mg.str() + " is not below xi = " + xi.str());
  rational period = rational(2) * xi;

  // Pull every piece of G back into [0, period), splitting at lattice points.
  std::vector<interval<rational>> pulled;
  for (const auto& p : g.intervals()) {
    rational cur = p.lo;
    while (cur < p.hi) {
      integer k = (cur / period).floor();
      rational cell_end = rational(k + 1) * period;
      rational end = p.hi < cell_end ? p.hi : cell_end;
      rational shift = rational(k) * period;
      pulled.push_back({cur - shift, end - shift});
      cur = end;
    }
  }
  interval_set folded = interval_set::from_pieces(std::move(pulled));

  ap_witness w;
  w.xi = xi;
  w.gap = period;
  w.measure_lower_bound = period - mg;
  w.residual_measure = period - folded.measure();

  // Sweep: subtract the closure [lo, hi] of each folded piece from (0, period).
  rational cursor(0);
  for (const auto& p : folded.intervals()) {
    if (cursor < p.lo) w.residual.push_back({cursor, p.lo});
    cursor = p.hi;
  }
  if (cursor < period) w.residual.push_back({cursor, period});
  if (w.residual.empty())
    throw std::logic_error("residual empty despite measure(G) < xi");

  w.x = (w.residual.front().lo + w.residual.front().hi) / rational(2);
  return w;
}

// Exhaustive check of the witness over |k| <= range: no term x + 2k xi of the
// two-sided progression lies in G.
inline bool verify_ap_avoids(const interval_set& g, const ap_witness& w, std::int64_t range) {
  if (range < 0) throw std::invalid_argument("range must be >= 0");
  for (std::int64_t k = -range; k <= range; ++k) {
    if (g.contains(w.x + rational(k) * w.gap)) return false;
  }
  return true;
}

}  // namespace apfree
