#pragma once

// certified_real: a real number that answers sign/floor/comparison queries
// with proofs rather than rounding. Three kinds:
//
//   rational_kind  - exact rational; every query is exact.
//   quad_irr_kind  - a + b*sqrt(d) with a,b rational, b != 0, d >= 2 squarefree
//                    after normalization. sign/floor/compare are exact via
//                    integer arithmetic (compare squares; isqrt for floor).
//   enclosure_kind - a refiner callback producing rational enclosures
//                    [lo, hi] of any requested positive width. Queries refine
//                    until decidable or the value's max refinement width is
//                    reached, then throw undecidable_error.
//
// Values are immutable; all operators return new values. Operations closed in
// one Q(sqrt(d)) stay exact (conjugate arithmetic); anything else degrades to
// an enclosure whose refiner recursively refines the operands.

#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "errors.hpp"
#include "rational.hpp"

namespace apfree {

// floor(sqrt(v)) for v >= 0.
inline integer isqrt(const integer& v) {
  if (v < 0) throw std::domain_error("isqrt of negative");
  return boost::multiprecision::sqrt(v);
}

inline bool is_perfect_square(const integer& v, integer* root = nullptr) {
  if (v < 0) return false;
  integer r = isqrt(v);
  if (root) *root = r;
  return r * r == v;
}

namespace detail {

// Splits d = s^2 * d' with d' squarefree as far as trial division reaches.
// Small square factors are divided out; if the remainder is itself a perfect
// square the split is complete regardless of size.
inline integer extract_square_part(integer& d) {
  integer s = 1;
  for (integer f = 2; f * f <= d && f <= 100000; ++f) {
    integer ff = f * f;
    while (d % ff == 0) {
      d /= ff;
      s *= f;
    }
  }
  integer r;
  if (is_perfect_square(d, &r)) {
    s *= r;
    d = 1;
  }
  return s;
}

// Exact sign of a + b*sqrt(d) for d >= 2 non-square. Never needs refinement:
// when a and b disagree in sign the answer is the sign of a^2 - b^2*d, which
// cannot vanish because sqrt(d) is irrational.
inline int quad_sign(const rational& a, const rational& b, const integer& d) {
  int sa = a.sign(), sb = b.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  rational diff = a * a - b * b * rational(d);
  int s = diff.sign();
  if (s == 0) throw std::logic_error("quad_sign: a^2 == b^2 d with non-square d");
  return sa > 0 ? s : -s;
}

// Exact floor of a + b*sqrt(d), b != 0, d non-square. Writes the value as
// (A + B*sqrt(d))/D with D > 0 and uses floor(B*sqrt(d)) = isqrt(B^2 d) for
// B > 0 and -isqrt(B^2 d) - 1 for B < 0 (no integer boundary can be hit).
inline integer quad_floor(const rational& a, const rational& b, const integer& d) {
  integer A = a.num() * b.den();
  integer B = b.num() * a.den();
  integer D = a.den() * b.den();
  integer t = B * B * d;
  integer r = isqrt(t);
  integer fB = (B >= 0) ? r : -r - 1;
  return floor_div(A + fB, D);
}

}  // namespace detail

// Process-wide default refinement cutoff (2^-256). The CLI may lower or raise
// it once at startup from the config file; library code only reads it.
inline rational& default_max_refine_width() {
  static rational w = rational(integer(1), integer(1) << 256);
  return w;
}

class certified_real {
 public:
  enum class kind_t { rational_kind, quad_irr_kind, enclosure_kind };
  using refiner = std::function<std::pair<rational, rational>(const rational& width)>;

  certified_real() : certified_real(rational(0)) {}
  certified_real(const rational& q)  // NOLINT: implicit embedding of Q
      : kind_(kind_t::rational_kind), a_(q), lo_(q), hi_(q),
        max_width_(default_max_refine_width()) {}
  certified_real(long long n) : certified_real(rational(n)) {}  // NOLINT
  certified_real(const integer& n) : certified_real(rational(n)) {}  // NOLINT

  // a + b*sqrt(d), d >= 0. Normalizes the radicand (extracts square factors)
  // and collapses to rational_kind when the irrational part vanishes.
  static certified_real quad(const rational& a, const rational& b, integer d) {
    if (d < 0) throw std::domain_error("negative radicand");
    if (b.is_zero() || d == 0) return certified_real(a);
    integer s = detail::extract_square_part(d);
    rational b2 = b * rational(s);
    if (d == 1) return certified_real(a + b2);
    certified_real x;
    x.kind_ = kind_t::quad_irr_kind;
    x.a_ = a;
    x.b_ = b2;
    x.d_ = d;
    x.set_quad_enclosure(rational(integer(1), integer(8)));
    return x;
  }

  static certified_real sqrt_integer(const integer& d) {
    return quad(rational(0), rational(1), d);
  }

  // sqrt of a nonnegative rational: sqrt(p/q) = sqrt(p*q)/q.
  static certified_real sqrt_rational(const rational& r) {
    if (r.sign() < 0) throw std::domain_error("sqrt of negative value");
    return quad(rational(0), rational(integer(1), r.den()), r.num() * r.den());
  }

  static certified_real with_refiner(refiner f,
                                     const rational& max_width = default_max_refine_width()) {
    if (!f) throw std::invalid_argument("null refiner");
    if (max_width.sign() <= 0) throw std::invalid_argument("max refinement width must be positive");
    certified_real x;
    x.kind_ = kind_t::enclosure_kind;
    x.ref_ = std::make_shared<refiner>(std::move(f));
    auto e = (*x.ref_)(rational(1));
    if (e.second < e.first) throw std::invalid_argument("refiner returned empty enclosure");
    x.lo_ = e.first;
    x.hi_ = e.second;
    x.max_width_ = max_width;
    return x;
  }

  kind_t kind() const { return kind_; }
  bool is_rational() const { return kind_ == kind_t::rational_kind; }
  bool is_quad() const { return kind_ == kind_t::quad_irr_kind; }
  bool is_enclosure() const { return kind_ == kind_t::enclosure_kind; }

  const rational& as_rational() const {
    if (!is_rational()) throw std::logic_error("as_rational on non-rational value");
    return a_;
  }
  const rational& quad_a() const { return a_; }
  const rational& quad_b() const { return b_; }
  const integer& radicand() const { return d_; }
  const rational& max_refine_width() const { return max_width_; }

  std::pair<rational, rational> enclosure() const { return {lo_, hi_}; }
  rational enclosure_width() const { return hi_ - lo_; }

  // A copy whose cached enclosure has width <= width. Exact kinds tighten by
  // recomputation; enclosure kind calls the refiner. Successive enclosures are
  // intersected so refinement is monotone.
  certified_real refined(const rational& width) const {
    if (width.sign() <= 0) throw std::invalid_argument("refinement width must be positive");
    if (hi_ - lo_ <= width) return *this;
    certified_real x = *this;
    switch (kind_) {
      case kind_t::rational_kind:
        break;
      case kind_t::quad_irr_kind:
        x.set_quad_enclosure(width);
        break;
      case kind_t::enclosure_kind: {
        auto e = (*ref_)(width);
        if (e.second - e.first > width)
          throw std::logic_error("refiner violated its width contract");
        x.lo_ = e.first < lo_ ? lo_ : e.first;
        x.hi_ = e.second < hi_ ? e.second : hi_;
        if (x.hi_ < x.lo_) throw std::logic_error("refiner produced disjoint enclosures");
        break;
      }
    }
    return x;
  }

  int sign() const {
    switch (kind_) {
      case kind_t::rational_kind:
        return a_.sign();
      case kind_t::quad_irr_kind:
        return detail::quad_sign(a_, b_, d_);
      case kind_t::enclosure_kind: {
        certified_real cur = *this;
        for (;;) {
          if (cur.lo_.sign() > 0) return 1;
          if (cur.hi_.sign() < 0) return -1;
          if (cur.lo_.sign() == 0 && cur.hi_.sign() == 0) return 0;
          rational w = cur.enclosure_width();
          if (w <= max_width_)
            throw undecidable_sign("sign undecided at max refinement width " + max_width_.str());
          cur = cur.refined(w / 2);
        }
      }
    }
    throw std::logic_error("bad kind");
  }

  integer floor() const {
    switch (kind_) {
      case kind_t::rational_kind:
        return a_.floor();
      case kind_t::quad_irr_kind:
        return detail::quad_floor(a_, b_, d_);
      case kind_t::enclosure_kind: {
        certified_real cur = *this;
        for (;;) {
          integer f = cur.lo_.floor();
          if (cur.hi_ < rational(f + 1)) return f;
          rational w = cur.enclosure_width();
          if (w <= max_width_)
            throw undecidable_floor("enclosure straddles an integer at max refinement width");
          cur = cur.refined(w / 2);
        }
      }
    }
    throw std::logic_error("bad kind");
  }

  certified_real operator-() const {
    switch (kind_) {
      case kind_t::rational_kind:
        return certified_real(-a_);
      case kind_t::quad_irr_kind:
        return quad(-a_, -b_, d_);
      case kind_t::enclosure_kind: {
        certified_real x = *this;
        auto self = *this;
        x.ref_ = std::make_shared<refiner>([self](const rational& w) {
          auto e = self.refined(w).enclosure();
          return std::pair<rational, rational>(-e.second, -e.first);
        });
        x.lo_ = -hi_;
        x.hi_ = -lo_;
        return x;
      }
    }
    throw std::logic_error("bad kind");
  }

  friend certified_real operator+(const certified_real& x, const certified_real& y);
  friend certified_real operator-(const certified_real& x, const certified_real& y);
  friend certified_real operator*(const certified_real& x, const certified_real& y);
  friend certified_real operator/(const certified_real& x, const certified_real& y);

  // Exact where possible; otherwise refines both sides until the enclosures
  // separate. Equal values of enclosure kind cannot separate and throw.
  friend int compare(const certified_real& x, const certified_real& y) {
    using k = kind_t;
    if (x.kind_ != k::enclosure_kind && y.kind_ != k::enclosure_kind) {
      if (x.kind_ == k::rational_kind && y.kind_ == k::rational_kind)
        return compare3(x.a_, y.a_);
      if (x.kind_ == k::quad_irr_kind && y.kind_ == k::quad_irr_kind && x.d_ == y.d_) {
        if (x.b_ == y.b_) return compare3(x.a_, y.a_);
        return detail::quad_sign(x.a_ - y.a_, x.b_ - y.b_, x.d_);
      }
      if (x.kind_ == k::quad_irr_kind && y.kind_ == k::rational_kind)
        return detail::quad_sign(x.a_ - y.a_, x.b_, x.d_);
      if (x.kind_ == k::rational_kind && y.kind_ == k::quad_irr_kind)
        return -detail::quad_sign(y.a_ - x.a_, y.b_, y.d_);
      // quad vs quad over different radicands: fall through to enclosures.
    }
    certified_real cx = x, cy = y;
    rational budget = cx.max_width_ < cy.max_width_ ? cx.max_width_ : cy.max_width_;
    for (;;) {
      if (cx.hi_ < cy.lo_) return -1;
      if (cy.hi_ < cx.lo_) return 1;
      if (cx.lo_ == cx.hi_ && cy.lo_ == cy.hi_ && cx.lo_ == cy.lo_) return 0;
      rational wx = cx.enclosure_width(), wy = cy.enclosure_width();
      rational w = wx < wy ? wy : wx;
      if (w <= budget)
        throw undecidable_boundary("comparison undecided at max refinement width");
      cx = cx.refined(w / 2);
      cy = cy.refined(w / 2);
    }
  }

  friend bool operator==(const certified_real& x, const certified_real& y) {
    return compare(x, y) == 0;
  }
  friend bool operator<(const certified_real& x, const certified_real& y) {
    return compare(x, y) < 0;
  }
  friend bool operator<=(const certified_real& x, const certified_real& y) {
    return compare(x, y) <= 0;
  }
  friend bool operator>(const certified_real& x, const certified_real& y) {
    return compare(x, y) > 0;
  }
  friend bool operator>=(const certified_real& x, const certified_real& y) {
    return compare(x, y) >= 0;
  }

  // Canonical text: "p/q" for rationals, "a+b*sqrt(d)" (with b == +-1
  // abbreviated) for quadratic irrationals. Enclosures are not round-trippable
  // and render as enclosure[lo,hi].
  std::string str() const {
    switch (kind_) {
      case kind_t::rational_kind:
        return a_.str();
      case kind_t::quad_irr_kind: {
        std::string root = "sqrt(" + d_.str() + ")";
        rational ab = apfree::abs(b_);
        std::string bpart = (ab == rational(1)) ? root : ab.str() + "*" + root;
        if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + bpart;
        return a_.str() + (b_.sign() < 0 ? "-" : "+") + bpart;
      }
      case kind_t::enclosure_kind:
        return "enclosure[" + lo_.str() + "," + hi_.str() + "]";
    }
    throw std::logic_error("bad kind");
  }

  double to_double() const {
    switch (kind_) {
      case kind_t::rational_kind:
        return a_.to_double();
      default: {
        auto e = refined(rational(integer(1), integer(1) << 80)).enclosure();
        return ((e.first + e.second) / rational(2)).to_double();
      }
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const certified_real& x) {
    return os << x.str();
  }

 private:
  // Enclosure of b*sqrt(d) to the requested width via dyadic isqrt bounds:
  // sqrt(d) lies in [s, s+1]/2^k with s = isqrt(d*4^k).
  void set_quad_enclosure(const rational& width) {
    rational target = width / apfree::abs(b_);
    // smallest k with 2^-k <= target, i.e. 2^k >= 1/target
    integer need = ceil_div_int(target.den(), target.num());
    std::int64_t k = 0;
    integer p = 1;
    while (p < need) {
      p <<= 1;
      ++k;
    }
    integer s = isqrt(d_ << (2 * k));
    rational denom(integer(1), integer(1) << k);
    rational root_lo = rational(s) * denom, root_hi = rational(s + 1) * denom;
    if (b_.sign() > 0) {
      lo_ = a_ + b_ * root_lo;
      hi_ = a_ + b_ * root_hi;
    } else {
      lo_ = a_ + b_ * root_hi;
      hi_ = a_ + b_ * root_lo;
    }
  }

  static std::pair<rational, rational> enclose_to(const certified_real& v, const rational& w) {
    return v.refined(w).enclosure();
  }

  enum class binop { add, sub, mul, div };

  static std::pair<rational, rational> interval_binop(binop op,
                                                      const std::pair<rational, rational>& a,
                                                      const std::pair<rational, rational>& b) {
    switch (op) {
      case binop::add:
        return {a.first + b.first, a.second + b.second};
      case binop::sub:
        return {a.first - b.second, a.second - b.first};
      case binop::mul: {
        rational c[4] = {a.first * b.first, a.first * b.second, a.second * b.first,
                         a.second * b.second};
        rational lo = c[0], hi = c[0];
        for (int i = 1; i < 4; ++i) {
          if (c[i] < lo) lo = c[i];
          if (hi < c[i]) hi = c[i];
        }
        return {lo, hi};
      }
      case binop::div: {
        rational c[4] = {a.first / b.first, a.first / b.second, a.second / b.first,
                         a.second / b.second};
        rational lo = c[0], hi = c[0];
        for (int i = 1; i < 4; ++i) {
          if (c[i] < lo) lo = c[i];
          if (hi < c[i]) hi = c[i];
        }
        return {lo, hi};
      }
    }
    throw std::logic_error("bad op");
  }

  // Composed enclosure for results outside every exact closure. The refiner
  // re-refines the captured operands until the image interval is narrow
  // enough; for division the divisor's sign must already be certified so the
  // straddling-zero case is transient.
  static certified_real compose(binop op, const certified_real& x, const certified_real& y) {
    if (op == binop::div && y.sign() == 0) throw std::domain_error("division by zero");
    rational budget = x.max_width_ < y.max_width_ ? x.max_width_ : y.max_width_;
    auto fn = [op, x, y](const rational& w) {
      rational part = w / 2;
      for (;;) {
        auto ea = enclose_to(x, part);
        auto eb = enclose_to(y, part);
        if (op != binop::div || eb.first.sign() * eb.second.sign() > 0) {
          auto r = interval_binop(op, ea, eb);
          if (r.second - r.first <= w) return r;
        }
        part /= 2;
      }
    };
    return with_refiner(fn, budget);
  }

  kind_t kind_ = kind_t::rational_kind;
  rational a_, b_;
  integer d_ = 0;
  std::shared_ptr<const refiner> ref_;
  rational lo_, hi_;
  rational max_width_;
};

inline certified_real operator+(const certified_real& x, const certified_real& y) {
  using k = certified_real::kind_t;
  if (x.kind_ == k::rational_kind && y.kind_ == k::rational_kind)
    return certified_real(x.a_ + y.a_);
  if (x.kind_ == k::rational_kind && y.kind_ == k::quad_irr_kind)
    return certified_real::quad(x.a_ + y.a_, y.b_, y.d_);
  if (x.kind_ == k::quad_irr_kind && y.kind_ == k::rational_kind)
    return certified_real::quad(x.a_ + y.a_, x.b_, x.d_);
  if (x.kind_ == k::quad_irr_kind && y.kind_ == k::quad_irr_kind && x.d_ == y.d_)
    return certified_real::quad(x.a_ + y.a_, x.b_ + y.b_, x.d_);
  return certified_real::compose(certified_real::binop::add, x, y);
}

inline certified_real operator-(const certified_real& x, const certified_real& y) {
  using k = certified_real::kind_t;
  if (x.kind_ == k::enclosure_kind || y.kind_ == k::enclosure_kind ||
      (x.kind_ == k::quad_irr_kind && y.kind_ == k::quad_irr_kind && x.d_ != y.d_))
    return certified_real::compose(certified_real::binop::sub, x, y);
  return x + (-y);
}

inline certified_real operator*(const certified_real& x, const certified_real& y) {
  using k = certified_real::kind_t;
  if (x.kind_ == k::rational_kind && y.kind_ == k::rational_kind)
    return certified_real(x.a_ * y.a_);
  if (x.kind_ == k::rational_kind && y.kind_ == k::quad_irr_kind)
    return certified_real::quad(x.a_ * y.a_, x.a_ * y.b_, y.d_);
  if (x.kind_ == k::quad_irr_kind && y.kind_ == k::rational_kind)
    return certified_real::quad(x.a_ * y.a_, x.b_ * y.a_, x.d_);
  if (x.kind_ == k::quad_irr_kind && y.kind_ == k::quad_irr_kind && x.d_ == y.d_)
    return certified_real::quad(x.a_ * y.a_ + x.b_ * y.b_ * rational(x.d_),
                                x.a_ * y.b_ + x.b_ * y.a_, x.d_);
  return certified_real::compose(certified_real::binop::mul, x, y);
}

inline certified_real operator/(const certified_real& x, const certified_real& y) {
  using k = certified_real::kind_t;
  if (y.kind_ == k::rational_kind) {
    if (y.a_.is_zero()) throw std::domain_error("division by zero");
    return x * certified_real(rational(1) / y.a_);
  }
  if (y.kind_ == k::quad_irr_kind &&
      (x.kind_ == k::rational_kind ||
       (x.kind_ == k::quad_irr_kind && x.d_ == y.d_))) {
    // 1/(a+b sqrt(d)) = (a - b sqrt(d)) / (a^2 - b^2 d); the norm is nonzero
    // because sqrt(d) is irrational and b != 0.
    rational norm = y.a_ * y.a_ - y.b_ * y.b_ * rational(y.d_);
    certified_real inv = certified_real::quad(y.a_ / norm, -y.b_ / norm, y.d_);
    return x * inv;
  }
  return certified_real::compose(certified_real::binop::div, x, y);
}

// Fractional part of x in [0, 1), refined to at most `precision` enclosure
// width. Exact for rational and quadratic-irrational kinds. Throws
// UndecidableFloor when an enclosure straddles an integer at max refinement.
inline certified_real frac(const certified_real& x, const rational& precision) {
  if (precision.sign() <= 0) throw std::invalid_argument("precision must be positive");
  integer m = x.floor();
  certified_real f = x - certified_real(rational(m));
  return f.refined(precision);
}

// Index i in [0, N) with x - floor(x) in [i/N, (i+1)/N). Boundary failures on
// enclosure-kind inputs surface as UndecidableBoundary.
inline std::int64_t locate_subinterval(const certified_real& x, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("subdivision count must be >= 1");
  try {
    integer m = x.floor();
    certified_real scaled = (x - certified_real(rational(m))) * certified_real(rational(n));
    integer i = scaled.floor();
    if (i < 0 || i >= n) throw std::logic_error("locate_subinterval out of range");
    return static_cast<std::int64_t>(i);
  } catch (const undecidable_error& e) {
    throw undecidable_boundary(std::string("cell boundary: ") + e.what());
  }
}

inline int compare3(const certified_real& a, const certified_real& b) { return compare(a, b); }
inline int compare3(const certified_real& a, const rational& b) {
  return compare(a, certified_real(b));
}
inline int compare3(const rational& a, const certified_real& b) {
  return -compare(b, certified_real(a));
}

inline int sign_of(const certified_real& x) { return x.sign(); }

}  // namespace apfree
