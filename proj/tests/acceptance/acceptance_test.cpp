// Acceptance gate. Each criterion is an independent check with its tolerance
// and (where applicable) runtime budget pinned in code; the harness prints
// exactly one PASS/FAIL line per criterion and exits nonzero if any fail.
// Everything numeric is exact arithmetic; the only tolerances are the spec'd
// equidistribution band (0.01) and the wall-clock budgets.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "apfree/apfree.hpp"
#include "oracle.hpp"

namespace {

using apfree::beta;
using apfree::certified_real;
using apfree::integer;
using apfree::interval_set;
using apfree::rational;
using apfree::set_spec;

struct failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define CHECK(cond)                                                                       \
  do {                                                                                    \
    if (!(cond)) {                                                                        \
      std::ostringstream os_;                                                             \
      os_ << "check failed at line " << __LINE__ << ": " << #cond;                        \
      throw failure(os_.str());                                                           \
    }                                                                                     \
  } while (0)

using clock_t_ = std::chrono::steady_clock;

double elapsed_s(clock_t_::time_point start) {
  return std::chrono::duration<double>(clock_t_::now() - start).count();
}

// 1. Every unit cell keeps measure exactly 1 - 1/N. Budget: 1 s.
void criterion1() {
  auto t0 = clock_t_::now();
  for (std::int64_t n : {2, 3, 5, 20}) {
    rational expect(integer(n - 1), integer(n));
    for (std::int64_t m = -100; m <= 100; ++m) {
      CHECK(apfree::cell(n, integer(m)).measure() == expect);
    }
  }
  CHECK(elapsed_s(t0) < 1.0);
}

// 2. Constructive rational escapes are sound and minimal over their
// sub-progression, against the independent membership oracle. Budget: 30 s.
void criterion2() {
  auto t0 = clock_t_::now();
  std::mt19937_64 rng(20260815);
  const std::int64_t ns[] = {2, 3, 5};
  for (int i = 0; i < 1000; ++i) {
    std::int64_t n = ns[i % 3];
    rational x0;
    do {
      x0 = oracle::random_rational(rng, 0, 100, 50);
    } while (!oracle::contains_basic(n, x0));
    rational delta;
    do {
      delta = oracle::random_rational(rng, 0, 10, 50);
    } while (delta.sign() <= 0);

    auto cert = apfree::certify_escape_rational(n, x0, delta);
    CHECK(cert.x_n.is_rational());
    rational xn = cert.x_n.as_rational();
    CHECK(xn == x0 + rational(cert.n) * delta);
    CHECK(!oracle::contains_basic(n, xn));

    // n = q*t; earlier sub-progression terms x0 + t'*p must all be inside.
    integer q = delta.den(), p = delta.num();
    CHECK(cert.n % q == 0);
    integer t = cert.n / q;
    CHECK(t >= 1);
    for (integer tp = 0; tp < t; ++tp) {
      CHECK(oracle::contains_basic(n, x0 + rational(tp * p)));
    }
  }
  CHECK(elapsed_s(t0) < 30.0);
}

// 3. Bounded search certifies escape for quadratic-irrational gaps at depth
// 10^6, with an exact membership re-check of each witness term. Budget: 60 s.
void criterion3() {
  auto t0 = clock_t_::now();
  std::mt19937_64 rng(3);
  set_spec s3 = set_spec::make_basic(3);
  const char* gaps[] = {"sqrt(2)", "sqrt(3)", "(1+sqrt(5))/2", "sqrt(2)/10"};
  std::vector<rational> xs;
  while (xs.size() < 100) {
    rational x = oracle::random_rational(rng, 0, 20, 40);
    if (oracle::contains_basic(3, x)) xs.push_back(x);
  }
  for (const char* gap : gaps) {
    certified_real delta = apfree::parse_exact(gap);
    for (const rational& x : xs) {
      auto cert = apfree::certify_escape_search(
          s3, apfree::progression{certified_real(x), delta}, 1000000);
      CHECK(cert.has_value());
      CHECK(!apfree::contains(s3, cert->x_n));
      CHECK(compare(cert->x_n, certified_real(x) + certified_real(rational(cert->n)) * delta) ==
            0);
    }
  }
  CHECK(elapsed_s(t0) < 60.0);
}

// 4. The closed-form term count below a threshold matches explicit
// enumeration, exactly, on instances with up to 10^4 terms.
void criterion4() {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    rational x0 = oracle::random_rational(rng, 0, 100, 30);
    rational delta;
    do {
      delta = oracle::random_rational(rng, 0, 10, 30);
    } while (delta.sign() <= 0);
    std::int64_t target = static_cast<std::int64_t>(rng() % 10000);
    rational a = x0 + delta * rational(target) + oracle::random_rational(rng, -1, 1, 9);

    integer expect = 0;
    for (rational term = x0; term < a; term = term + delta) ++expect;
    CHECK(apfree::count_in_half_open(x0, delta, a) == expect);
  }
  // degenerate thresholds at or below the start count zero terms
  CHECK(apfree::count_in_half_open(rational(5), rational(1), rational(5)) == 0);
  CHECK(apfree::count_in_half_open(rational(5), rational(1), rational(-3)) == 0);
}

// 5. Under the three checked hypotheses the top-slice fraction strictly
// exceeds N/(N+1); zero tolerance.
void criterion5() {
  std::mt19937_64 rng(5);
  for (std::int64_t n : {2, 3, 5}) {
    for (int i = 0; i < 50; ++i) {
      rational delta;
      do {
        delta = oracle::random_rational(rng, 0, 10, 20);
      } while (delta.sign() <= 0);
      rational slack = oracle::random_rational(rng, 0, 1, 20) + rational(1, 13);
      rational x0 = rational(integer(2 * n + 1), integer(n)) * delta * (rational(1) + slack);
      std::int64_t k = 1;
      while (!(rational(beta(n, k)) > x0 &&
               rational(integer(n), integer(n + 1)) * rational(beta(n, k)) > delta))
        ++k;
      k += static_cast<std::int64_t>(rng() % 3);

      auto report = apfree::claim1_verify(n, x0, delta, k);
      CHECK(report.unmet.empty());
      CHECK(report.holds);
      CHECK(report.fraction > report.threshold);
      CHECK(report.count_total > 0);
    }
  }
}

// 6. Block-boundary identity beta_k/(N+1) = 1/(N+1) + beta_{k-1}, exactly,
// with arbitrary-precision integers.
void criterion6() {
  for (std::int64_t n : {2, 3, 5, 20}) {
    for (std::int64_t k = 1; k <= 60; ++k) {
      rational lhs = rational(beta(n, k)) / rational(integer(n + 1));
      rational rhs = rational(integer(1), integer(n + 1)) + rational(beta(n, k - 1));
      CHECK(lhs == rhs);
    }
  }
}

// 7. With N chosen for a density target, every unit window keeps measure at
// least lambda, exactly.
void criterion7() {
  std::mt19937_64 rng(7);
  for (const char* lam_s : {"1/2", "9/10", "99/100"}) {
    rational lambda = apfree::parse_rational(lam_s);
    std::int64_t n = apfree::choose_n_for_lambda(lambda);
    set_spec spec = set_spec::make_basic(n);
    for (int i = 0; i < 200; ++i) {
      rational t = oracle::random_rational(rng, -50, 50, 40);
      rational m = apfree::window_rational(spec, t, t + rational(1)).measure();
      CHECK(m >= lambda);
    }
  }
}

// 8. For random small obstacle sets the two-sided witness leaves residual
// measure >= 2*xi - measure(G) exactly and verifiably avoids G for |k| <= 10^4.
void criterion8() {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    interval_set g = oracle::random_interval_set(rng, 5, -5, 5, 12);
    rational xi = g.measure() + oracle::random_rational(rng, 0, 1, 10) + rational(1, 17);
    auto w = apfree::find_two_sided_ap(g, xi);

    rational total(0);
    for (const auto& seg : w.residual) {
      CHECK(seg.lo < seg.hi);
      total = total + (seg.hi - seg.lo);
    }
    CHECK(total == w.residual_measure);
    CHECK(w.residual_measure >= rational(2) * xi - g.measure());
    CHECK(apfree::verify_ap_avoids(g, w, 10000));
  }
}

// 9. Product specs: the projected escape search certifies an index at which
// the full vector term leaves the product set.
void criterion9() {
  std::mt19937_64 rng(9);
  set_spec s3 = set_spec::make_basic(3);
  const char* gap_pool[] = {"sqrt(2)", "sqrt(3)", "(1+sqrt(5))/2", "-sqrt(2)",
                            "1/3",     "2",       "5/6",           "sqrt(2)/10"};
  for (int dim : {2, 3}) {
    set_spec prod = set_spec::make_product(std::vector<set_spec>(dim, s3));
    for (int i = 0; i < 50; ++i) {
      std::vector<certified_real> x0, delta;
      for (int c = 0; c < dim; ++c) {
        x0.push_back(certified_real(oracle::random_rational(rng, 0, 10, 20)));
        bool zero = (rng() % 3 == 0) && c + 1 < dim;  // never zero out the last slot
        delta.push_back(zero ? certified_real(rational(0))
                             : apfree::parse_exact(gap_pool[rng() % 8]));
      }
      auto cert = apfree::certify_escape_search(prod, x0, delta, 1000000);
      CHECK(cert.has_value());
      CHECK(cert->coordinate.has_value());

      std::vector<certified_real> term;
      for (int c = 0; c < dim; ++c)
        term.push_back(x0[c] + certified_real(rational(cert->n)) * delta[c]);
      CHECK(!apfree::contains(prod, term));
    }
  }
}

// 10. sqrt(2)-gap tallies over 10^5 steps land within 0.01 of 1/3 in every
// subinterval. Budget: 10 s.
void criterion10() {
  auto t0 = clock_t_::now();
  auto d = apfree::equidist_stats(
      3, apfree::progression{certified_real(rational(0)), apfree::parse_exact("sqrt(2)")},
      100000, rational(1, 100));
  rational band(integer(1), integer(100));
  integer sum = 0;
  for (const auto& c : d.counts) sum += c;
  CHECK(sum == d.terms);
  for (const auto& dev : d.deviation) CHECK(dev <= band);
  CHECK(elapsed_s(t0) < 10.0);
}

}  // namespace

int main() {
  struct entry {
    int id;
    const char* name;
    std::function<void()> fn;
  };
  const std::vector<entry> criteria = {
      {1, "unit cell measure", criterion1},
      {2, "rational escape soundness", criterion2},
      {3, "irrational escape search", criterion3},
      {4, "half-open term counting", criterion4},
      {5, "top-slice fraction bound", criterion5},
      {6, "block boundary identity", criterion6},
      {7, "unit window density", criterion7},
      {8, "two-sided witness", criterion8},
      {9, "product projection escape", criterion9},
      {10, "equidistribution tallies", criterion10},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = clock_t_::now();
    try {
      c.fn();
      std::printf("criterion %d (%s): PASS (%.2fs)\n", c.id, c.name, elapsed_s(t0));
    } catch (const std::exception& e) {
      ++failures;
      std::printf("criterion %d (%s): FAIL (%.2fs) %s\n", c.id, c.name, elapsed_s(t0), e.what());
    }
    std::fflush(stdout);
  }
  if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  else std::printf("all %zu criteria passed\n", criteria.size());
  return failures ? 1 : 0;
}
