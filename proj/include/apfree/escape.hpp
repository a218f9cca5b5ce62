#pragma once

// Escape certificates: proofs that an arithmetic progression x0 + n*delta
// leaves a spec'd set at a concrete index.
//
// For a basic set and rational data there is a closed-form bound. Write
// delta = p/q in lowest terms and let j be the subinterval index of frac(x0).
// Every term of the sub-progression x0 + t*p (t integer) keeps fractional
// part frac(x0), so such a term is outside the set exactly when the block
// residue of its integer part equals j. Choosing the smallest k with
//
//   k = j (mod N),   beta_k > x0,   (N+1)^k > p          (p > 0)
//
// the first sub-progression term at or above beta_k has integer part in block
// k (the block is longer than the step), and block k's residue is j. For
// p < 0 the mirrored conditions beta_k > |x0| + 1 and (N+1)^k > |p| put the
// first term below 1 - beta_k in block k of the negative side.
//
// That t is only an upper bound: a multiple can land in an earlier aligned
// block whose length does not exceed the step (no jump is guaranteed there).
// The certificate returned is therefore the first sub-progression term that
// actually escapes, found by scanning integer parts up to the bound; n = q*t
// re-indexes it into the original progression. Every earlier sub-progression
// term is contained, which is what makes the certificate independently
// auditable by a prefix scan.
//
// For irrational gaps no closed form is attempted; certify_escape_search
// scans n = 0..depth with exact membership tests and returns the least
// escaping index, which the equidistribution of the gap makes overwhelmingly
// likely to exist at small n. Products search along one coordinate whose gap
// component is nonzero.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "certified_real.hpp"
#include "construction.hpp"
#include "errors.hpp"
#include "interval_set.hpp"
#include "rational.hpp"
#include "set_spec.hpp"

namespace apfree {

struct progression {
  certified_real x0;
  certified_real delta;
};

enum class escape_method { constructive_rational, bounded_search };

struct escape_certificate {
  integer n;                         // escaping index of the progression
  certified_real x_n;                // the escaping term
  integer m;                         // floor(x_n)
  std::optional<std::int64_t> block_level;  // k, when derived constructively
  std::optional<std::int64_t> residue;      // j = subinterval index certifying the miss
  interval_set forbidden;            // the hole [m + j/N, m + (j+1)/N) containing x_n
  escape_method method;
  std::optional<std::size_t> coordinate;    // projection axis for product specs
};

namespace detail {

inline interval_set hole_at(std::int64_t n, const integer& m, std::int64_t j) {
  rational lo = rational(m) + rational(integer(j), integer(n));
  rational hi = rational(m) + rational(integer(j + 1), integer(n));
  return interval_set(lo, hi);
}

}  // namespace detail

// Closed-form certificate for a basic set and rational progression data.
// Requires x0 in the set (NotInSet otherwise) and delta != 0 (ZeroGap).
inline escape_certificate certify_escape_rational(std::int64_t n, const rational& x0,
                                                  const rational& delta) {
  if (n < 1) throw std::invalid_argument("certify_escape_rational requires N >= 1");
  if (delta.is_zero()) throw zero_gap_error("progression gap is zero");
  set_spec spec = set_spec::make_basic(n);
  if (!contains(spec, certified_real(x0)))
    throw not_in_set_error("x0 = " + x0.str() + " is not in the set");

  integer p = delta.num();  // signed
  integer q = delta.den();
  std::int64_t j = locate_subinterval(certified_real(x0), n);
  integer ap = p < 0 ? integer(-p) : p;

  // Smallest k = j (mod N) with beta_k above the start and the block longer
  // than the integer step.
  rational start_bound = p > 0 ? x0 : abs(x0) + rational(1);
  std::int64_t k = 0;
  integer bk = 0, pw = 1;  // beta_k and (N+1)^k
  for (;;) {
    if (k % n == j && rational(bk) > start_bound && pw > ap) break;
    bk = bk * (n + 1) + 1;
    pw *= (n + 1);
    ++k;
  }

  integer t_bound;
  if (p > 0) {
    t_bound = ceil_div(rational(bk) - x0, rational(p));  // first multiple landing in [beta_k, ...)
  } else {
    rational c = (rational(1) - rational(bk) - x0) / rational(p);
    t_bound = c.floor() + 1;  // first multiple strictly below 1 - beta_k
  }

  // First actual escape of the sub-progression; the bound above guarantees
  // the scan stops. frac(x0 + t*p) = frac(x0), so membership of a term is
  // decided by the block residue of its integer part alone.
  integer t = t_bound;
  integer mt = x0.floor();
  for (integer tp = 1; tp <= t_bound; ++tp) {
    mt += p;
    if (cell_residue(n, mt) == j) {
      t = tp;
      break;
    }
  }
  rational xn = x0 + rational(t) * rational(p);
  integer m = xn.floor();

  escape_certificate cert;
  cert.n = q * t;
  cert.x_n = certified_real(xn);
  cert.m = m;
  cert.block_level = block_index(n, m < 0 ? integer(-m) : m).level;
  cert.residue = j;
  cert.forbidden = detail::hole_at(n, m, j);
  cert.method = escape_method::constructive_rational;
  return cert;
}

namespace detail {

// Diagnosis fields for a term already known to escape a scalar spec.
inline escape_certificate diagnose_escape(const set_spec& spec, const integer& idx,
                                          const certified_real& term) {
  escape_certificate cert;
  cert.n = idx;
  cert.x_n = term;
  cert.m = term.floor();
  cert.method = escape_method::bounded_search;
  if (const auto* b = std::get_if<set_spec::basic>(&spec.node())) {
    std::int64_t j = locate_subinterval(term, b->n);
    cert.residue = j;
    cert.block_level = block_index(b->n, cert.m < 0 ? integer(-cert.m) : cert.m).level;
    cert.forbidden = hole_at(b->n, cert.m, j);
  }
  return cert;
}

}  // namespace detail

// Least n <= depth with x0 + n*delta outside the scalar spec, or nullopt if
// every examined term is inside.
inline std::optional<escape_certificate> certify_escape_search(const set_spec& spec,
                                                               const progression& pr,
                                                               std::int64_t depth) {
  if (depth < 1) throw std::invalid_argument("search depth must be >= 1");
  if (pr.delta.sign() == 0) throw zero_gap_error("progression gap is zero");
  certified_real term = pr.x0;
  for (std::int64_t i = 0; i <= depth; ++i) {
    if (!contains(spec, term)) return detail::diagnose_escape(spec, integer(i), term);
    term = term + pr.delta;
  }
  return std::nullopt;
}

// Product-aware search: projects onto the first coordinate with a nonzero gap
// component and certifies the projection's escape, which already forces the
// full vector outside the product.
inline std::optional<escape_certificate> certify_escape_search(
    const set_spec& spec, const std::vector<certified_real>& x0,
    const std::vector<certified_real>& delta, std::int64_t depth) {
  if (depth < 1) throw std::invalid_argument("search depth must be >= 1");
  std::vector<const set_spec*> parts;
  spec.flatten(parts);
  if (parts.size() != x0.size() || parts.size() != delta.size())
    throw std::invalid_argument("progression dimension does not match spec dimension");
  std::size_t axis = parts.size();
  for (std::size_t c = 0; c < delta.size(); ++c) {
    if (delta[c].sign() != 0) {
      axis = c;
      break;
    }
  }
  if (axis == parts.size()) throw zero_gap_error("progression gap is the zero vector");
  auto cert = certify_escape_search(*parts[axis], progression{x0[axis], delta[axis]}, depth);
  if (cert) cert->coordinate = axis;
  return cert;
}

// Number of progression terms x0 + n*delta (n >= 0) strictly below a:
// ceil((a - x0)/delta) when a > x0, else 0. Requires x0 >= 0 and delta > 0 so
// the count is over [0, a).
inline integer count_in_half_open(const rational& x0, const rational& delta, const rational& a) {
  if (x0.sign() < 0) throw std::invalid_argument("count_in_half_open requires x0 >= 0");
  if (delta.sign() <= 0) throw std::invalid_argument("count_in_half_open requires delta > 0");
  if (!(a > x0)) return 0;
  return ceil_div(a - x0, delta);
}

// Counting-based check that among progression terms below beta_k, more than
// an N/(N+1) fraction already lies in the top slice [beta_k/(N+1), beta_k).
// All quantities are exact; `holds` carries the verdict and `unmet` lists any
// failed hypothesis by name.
struct claim1_report {
  std::int64_t n;
  std::int64_t k;
  integer beta_k;
  rational x0;
  rational delta;
  integer count_total;   // terms in [0, beta_k) by index count below beta_k
  integer count_in_top;  // terms in [beta_k/(N+1), beta_k)
  rational fraction;     // count_in_top / count_total (0 when empty)
  rational threshold;    // N/(N+1)
  bool x0_above_gap_bound;     // x0 > ((2N+1)/N) delta
  bool block_exceeds_gap;      // (N/(N+1)) beta_k > delta
  bool beta_exceeds_x0;        // beta_k > x0
  bool holds;                  // fraction > threshold
  std::vector<std::string> unmet;
};

inline claim1_report claim1_verify(std::int64_t n, const rational& x0, const rational& delta,
                                   std::int64_t k) {
  if (n < 1) throw std::invalid_argument("claim1_verify requires N >= 1");
  if (delta.sign() <= 0) throw std::invalid_argument("claim1_verify requires delta > 0");
  if (x0.sign() < 0) throw std::invalid_argument("claim1_verify requires x0 >= 0");
  if (k < 1) throw std::invalid_argument("claim1_verify requires k >= 1");

  claim1_report r;
  r.n = n;
  r.k = k;
  r.beta_k = beta(n, k);
  r.x0 = x0;
  r.delta = delta;
  rational bk(r.beta_k);
  rational cut = bk / rational(n + 1);
  r.count_total = count_in_half_open(x0, delta, bk);
  integer below_cut = count_in_half_open(x0, delta, cut);
  r.count_in_top = r.count_total - below_cut;
  r.threshold = rational(integer(n), integer(n + 1));
  r.fraction = r.count_total == 0 ? rational(0)
                                  : rational(r.count_in_top) / rational(r.count_total);
  r.x0_above_gap_bound = x0 > rational(integer(2 * n + 1), integer(n)) * delta;
  r.block_exceeds_gap = r.threshold * bk > delta;
  r.beta_exceeds_x0 = bk > x0;
  if (!r.x0_above_gap_bound) r.unmet.push_back("x0_above_gap_bound");
  if (!r.block_exceeds_gap) r.unmet.push_back("block_exceeds_gap");
  if (!r.beta_exceeds_x0) r.unmet.push_back("beta_exceeds_x0");
  r.holds = r.fraction > r.threshold;
  return r;
}

// Visit tallies of frac(x0 + n*delta) across the N subintervals for
// n = 0..terms-1, plus the stabilization index of the first cell's frequency:
// L is the least index such that |count_0(n)/(n+1) - 1/N| < epsilon for every
// n >= L in range, or nullopt if the deviation still violates epsilon at the
// final examined index.
struct equidist_diagnostics {
  std::int64_t n;
  integer terms;
  std::vector<integer> counts;       // per subinterval, sums to terms
  std::vector<rational> frequency;   // counts / terms
  std::vector<rational> deviation;   // |frequency - 1/N|
  rational epsilon;
  std::optional<integer> stable_from;  // L
};

inline equidist_diagnostics equidist_stats(std::int64_t n, const progression& pr,
                                           std::int64_t count, const rational& epsilon) {
  if (n < 1) throw std::invalid_argument("equidist_stats requires N >= 1");
  if (count < 0) throw std::invalid_argument("equidist_stats requires count >= 0");
  if (epsilon.sign() <= 0) throw std::invalid_argument("epsilon must be positive");

  equidist_diagnostics d;
  d.n = n;
  d.terms = count + 1;
  d.counts.assign(static_cast<std::size_t>(n), integer(0));
  d.epsilon = epsilon;
  rational inv_n(integer(1), integer(n));

  certified_real term = pr.x0;
  integer c0 = 0;
  std::int64_t last_bad = -1;
  for (std::int64_t i = 0; i <= count; ++i) {
    std::int64_t cell_idx = locate_subinterval(term, n);
    ++d.counts[static_cast<std::size_t>(cell_idx)];
    if (cell_idx == 0) ++c0;
    rational dev = abs(rational(c0, integer(i + 1)) - inv_n);
    if (!(dev < epsilon)) last_bad = i;
    if (i < count) term = term + pr.delta;
  }
  for (const integer& c : d.counts) {
    d.frequency.push_back(rational(c, d.terms));
    d.deviation.push_back(abs(rational(c, d.terms) - inv_n));
  }
  if (last_bad < count) d.stable_from = integer(last_bad + 1);
  return d;
}

}  // namespace apfree
