#pragma once

// The staircase construction. For subdivision parameter N >= 1:
//
//   Q_i = [i/N, (i+1)/N) subdivides [0,1); R_i = [0,1) \ Q_i.
//   beta_k = sum_{j<k} (N+1)^j, so beta_0 = 0, beta_{k+1} = (N+1)*beta_k + 1.
//   Integers m with beta_k <= |m| < beta_{k+1} form block k; the block's
//   residue is k mod N.
//   cell(N, m) = m + R_{residue(|m|)} for every integer m. (For m < 0 this is
//   the reflected copy: translating the cell of |m| by 2m lands at m + R_i.)
//
// The union of all cells has a hole of width exactly 1/N in every unit
// interval, placed so that the hole's subinterval index cycles with the block
// index. window() materializes any spec over [a, b); contains() decides
// membership pointwise.

#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "certified_real.hpp"
#include "interval_set.hpp"
#include "rational.hpp"
#include "set_spec.hpp"

namespace apfree {

// beta_k via the integer recurrence; exact for any k >= 0.
inline integer beta(std::int64_t n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("beta requires N >= 1");
  if (k < 0) throw std::invalid_argument("beta requires k >= 0");
  integer b = 0;
  for (std::int64_t i = 0; i < k; ++i) b = b * (n + 1) + 1;
  return b;
}

struct block_info {
  std::int64_t level;   // k with beta_k <= m < beta_{k+1}
  integer beta_k;
  integer beta_k1;
  std::int64_t residue;  // k mod N
};

inline block_info block_index(std::int64_t n, const integer& m) {
  if (n < 1) throw std::invalid_argument("block_index requires N >= 1");
  if (m < 0) throw std::invalid_argument("block_index requires m >= 0");
  std::int64_t k = 0;
  integer bk = 0, bk1 = 1;
  while (m >= bk1) {
    bk = bk1;
    bk1 = bk1 * (n + 1) + 1;
    ++k;
  }
  return {k, bk, bk1, k % n};
}

// R_i = [0,1) with the i-th of N equal subintervals removed. Empty for N = 1.
inline interval_set base_cell(std::int64_t n, std::int64_t i) {
  if (n < 1) throw std::invalid_argument("base_cell requires N >= 1");
  if (i < 0 || i >= n) throw std::invalid_argument("subinterval index out of range");
  rational lo{integer(i), integer(n)};
  rational hi{integer(i + 1), integer(n)};
  return set_subtract(interval_set(rational(0), rational(1)), interval_set(lo, hi));
}

inline std::int64_t cell_residue(std::int64_t n, const integer& m) {
  return block_index(n, m < 0 ? integer(-m) : m).residue;
}

// The portion of the set inside [m, m+1).
inline interval_set cell(std::int64_t n, const integer& m) {
  return base_cell(n, cell_residue(n, m)).translated(rational(m));
}

namespace detail {

inline real_interval_set window_impl(const set_spec& spec, const certified_real& a,
                                     const certified_real& b);

inline real_interval_set basic_window(std::int64_t n, const certified_real& a,
                                      const certified_real& b) {
  std::vector<interval<certified_real>> pieces;
  real_interval_set box(a, b);
  for (integer m = a.floor(); compare(certified_real(rational(m)), b) < 0; ++m) {
    real_interval_set clipped = set_intersect(lift(cell(n, m)), box);
    for (const auto& p : clipped.intervals()) pieces.push_back(p);
  }
  return real_interval_set::from_pieces(std::move(pieces));
}

}  // namespace detail

// Exact trace of the spec'd set on [a, b). Products have no linear window.
inline real_interval_set window(const set_spec& spec, const certified_real& a,
                                const certified_real& b) {
  return detail::window_impl(spec, a, b);
}

inline interval_set window_rational(const set_spec& spec, const rational& a, const rational& b) {
  auto w = to_rational(window(spec, certified_real(a), certified_real(b)));
  if (!w) throw std::logic_error("window has irrational endpoints; use window()");
  return *w;
}

// Membership for one-dimensional specs. For basic specs this reduces to an
// index comparison: x lies in the set iff the subinterval index of frac(x)
// differs from the residue of the block of |floor(x)|.
inline bool contains(const set_spec& spec, const certified_real& x) {
  if (const auto* b = std::get_if<set_spec::basic>(&spec.node())) {
    integer m = x.floor();
    return locate_subinterval(x, b->n) != cell_residue(b->n, m);
  }
  if (const auto* s = std::get_if<set_spec::scaled>(&spec.node())) {
    return contains(*s->inner, x) && contains(*s->inner, x / s->r);
  }
  if (const auto* c = std::get_if<set_spec::complement>(&spec.node())) {
    return !c->g.contains(x);
  }
  throw unsupported_spec_error("pointwise contains needs a one-dimensional spec");
}

// Membership for any spec; the point's dimension must match the spec's.
inline bool contains(const set_spec& spec, const std::vector<certified_real>& x) {
  std::vector<const set_spec*> parts;
  spec.flatten(parts);
  if (parts.size() != x.size())
    throw std::invalid_argument("point dimension does not match spec dimension");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!contains(*parts[i], x[i])) return false;
  }
  return true;
}

namespace detail {

inline real_interval_set window_impl(const set_spec& spec, const certified_real& a,
                                     const certified_real& b) {
  if (const auto* bs = std::get_if<set_spec::basic>(&spec.node())) {
    return basic_window(bs->n, a, b);
  }
  if (const auto* s = std::get_if<set_spec::scaled>(&spec.node())) {
    // S cap rS on [a,b): trace S there, trace S on [a/r, b/r), push the
    // latter forward by r and intersect.
    real_interval_set outer = window_impl(*s->inner, a, b);
    real_interval_set inner = window_impl(*s->inner, a / s->r, b / s->r);
    return set_intersect(outer, inner.scaled(s->r));
  }
  if (const auto* c = std::get_if<set_spec::complement>(&spec.node())) {
    return set_subtract(real_interval_set(a, b), lift(c->g));
  }
  throw unsupported_spec_error("window needs a one-dimensional spec");
}

}  // namespace detail

// Smallest N for which every length-1 window of the staircase set keeps
// measure >= lambda. A unit window can straddle two cells and so meet two
// holes of width 1/N each; 2/N <= 1 - lambda suffices, N = ceil(2/(1-lambda)).
inline std::int64_t choose_n_for_lambda(const rational& lambda) {
  if (lambda.sign() < 0 || lambda >= rational(1))
    throw std::invalid_argument("lambda must lie in [0, 1)");
  integer n = ceil_div(rational(2), rational(1) - lambda);
  return static_cast<std::int64_t>(n);
}

// A rational mu with (lambda + r) / (1 + r) <= mu < 1, certifying the density
// of S cap rS relative to lambda. Refines the irrational bound until a
// rational strictly below 1 separates it.
inline rational choose_mu_for_lambda(const rational& lambda, const certified_real& r) {
  if (lambda.sign() < 0 || lambda >= rational(1))
    throw std::invalid_argument("lambda must lie in [0, 1)");
  if (compare(r, certified_real(1)) <= 0)
    throw std::invalid_argument("scale factor must exceed 1");
  certified_real c = (certified_real(lambda) + r) / (certified_real(1) + r);
  // c < 1 always: refine until the upper bound drops below 1.
  rational w(integer(1), integer(8));
  for (;;) {
    auto e = c.refined(w).enclosure();
    if (e.second < rational(1)) return (e.second + rational(1)) / rational(2);
    w /= 2;
    if (w < default_max_refine_width())
      throw undecidable_boundary("could not separate density bound from 1");
  }
}

}  // namespace apfree
