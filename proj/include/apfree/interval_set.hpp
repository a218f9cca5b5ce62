#pragma once

// Finite unions of half-open intervals [lo, hi), kept normalized: nonempty
// pieces, sorted, pairwise disjoint, adjacent pieces merged. The endpoint type
// is a template parameter so the same algebra serves exact rational sets and
// certified-real sets (windows of scaled constructions have irrational
// endpoints). Endpoint comparisons go through compare3(), which for
// enclosure-backed endpoints may throw undecidable_error rather than guess.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "certified_real.hpp"
#include "rational.hpp"

namespace apfree {

template <class E>
struct interval {
  E lo;
  E hi;  // [lo, hi)
};

template <class E>
class interval_set_t {
 public:
  interval_set_t() = default;

  interval_set_t(E lo, E hi) {
    if (compare3(lo, hi) < 0) iv_.push_back({std::move(lo), std::move(hi)});
  }

  static interval_set_t from_pieces(std::vector<interval<E>> pieces) {
    interval_set_t s;
    s.iv_ = normalize(std::move(pieces));
    return s;
  }

  const std::vector<interval<E>>& intervals() const { return iv_; }
  bool empty() const { return iv_.empty(); }
  std::size_t size() const { return iv_.size(); }

  E measure() const {
    E total{};
    for (const auto& p : iv_) total = total + (p.hi - p.lo);
    return total;
  }

  // Half-open membership; works for any point type comparable against E.
  template <class Q>
  bool contains(const Q& x) const {
    std::size_t lo = 0, hi = iv_.size();
    while (lo < hi) {  // first piece with x < piece.hi
      std::size_t mid = (lo + hi) / 2;
      if (compare3(x, iv_[mid].hi) < 0) hi = mid;
      else lo = mid + 1;
    }
    return lo < iv_.size() && compare3(iv_[lo].lo, x) <= 0;
  }

  interval_set_t translated(const E& t) const {
    interval_set_t s;
    s.iv_.reserve(iv_.size());
    for (const auto& p : iv_) s.iv_.push_back({p.lo + t, p.hi + t});
    return s;
  }

  // Image under multiplication by f > 0 (order preserving, so the pieces stay
  // sorted and disjoint).
  interval_set_t scaled(const E& f) const {
    if (sign_of(f) <= 0) throw std::invalid_argument("scale factor must be positive");
    interval_set_t s;
    s.iv_.reserve(iv_.size());
    for (const auto& p : iv_) s.iv_.push_back({p.lo * f, p.hi * f});
    return s;
  }

  friend interval_set_t set_union(const interval_set_t& a, const interval_set_t& b) {
    std::vector<interval<E>> pieces = a.iv_;
    pieces.insert(pieces.end(), b.iv_.begin(), b.iv_.end());
    return from_pieces(std::move(pieces));
  }

  friend interval_set_t set_intersect(const interval_set_t& a, const interval_set_t& b) {
    interval_set_t s;
    std::size_t i = 0, j = 0;
    while (i < a.iv_.size() && j < b.iv_.size()) {
      const auto& p = a.iv_[i];
      const auto& q = b.iv_[j];
      const E& lo = compare3(p.lo, q.lo) >= 0 ? p.lo : q.lo;
      int hc = compare3(p.hi, q.hi);
      const E& hi = hc <= 0 ? p.hi : q.hi;
      if (compare3(lo, hi) < 0) s.iv_.push_back({lo, hi});
      if (hc <= 0) ++i;
      else ++j;
    }
    return s;
  }

  friend interval_set_t set_subtract(const interval_set_t& a, const interval_set_t& b) {
    interval_set_t s;
    std::size_t j = 0;
    for (const auto& p : a.iv_) {
      E cur = p.lo;
      while (j < b.iv_.size() && compare3(b.iv_[j].hi, cur) <= 0) ++j;
      std::size_t k = j;
      bool open = true;
      while (k < b.iv_.size() && compare3(b.iv_[k].lo, p.hi) < 0) {
        if (compare3(cur, b.iv_[k].lo) < 0) s.iv_.push_back({cur, b.iv_[k].lo});
        if (compare3(p.hi, b.iv_[k].hi) <= 0) { open = false; break; }
        cur = b.iv_[k].hi;
        ++k;
      }
      if (open && compare3(cur, p.hi) < 0) s.iv_.push_back({cur, p.hi});
    }
    return s;
  }

  friend bool operator==(const interval_set_t& a, const interval_set_t& b) {
    if (a.iv_.size() != b.iv_.size()) return false;
    for (std::size_t i = 0; i < a.iv_.size(); ++i) {
      if (compare3(a.iv_[i].lo, b.iv_[i].lo) != 0) return false;
      if (compare3(a.iv_[i].hi, b.iv_[i].hi) != 0) return false;
    }
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const interval_set_t& s) {
    os << "{";
    for (std::size_t i = 0; i < s.iv_.size(); ++i) {
      if (i) os << " u ";
      os << "[" << s.iv_[i].lo << "," << s.iv_[i].hi << ")";
    }
    return os << "}";
  }

 private:
  static std::vector<interval<E>> normalize(std::vector<interval<E>> pieces) {
    std::erase_if(pieces, [](const interval<E>& p) { return compare3(p.lo, p.hi) >= 0; });
    std::sort(pieces.begin(), pieces.end(), [](const interval<E>& x, const interval<E>& y) {
      int c = compare3(x.lo, y.lo);
      return c != 0 ? c < 0 : compare3(x.hi, y.hi) < 0;
    });
    std::vector<interval<E>> out;
    for (auto& p : pieces) {
      if (!out.empty() && compare3(p.lo, out.back().hi) <= 0) {
        if (compare3(out.back().hi, p.hi) < 0) out.back().hi = std::move(p.hi);
      } else {
        out.push_back(std::move(p));
      }
    }
    return out;
  }

  std::vector<interval<E>> iv_;
};

using interval_set = interval_set_t<rational>;
using real_interval_set = interval_set_t<certified_real>;

inline real_interval_set lift(const interval_set& s) {
  std::vector<interval<certified_real>> pieces;
  pieces.reserve(s.size());
  for (const auto& p : s.intervals())
    pieces.push_back({certified_real(p.lo), certified_real(p.hi)});
  return real_interval_set::from_pieces(std::move(pieces));
}

// Exact demotion when every endpoint is rational-kind; nullopt otherwise.
inline std::optional<interval_set> to_rational(const real_interval_set& s) {
  std::vector<interval<rational>> pieces;
  pieces.reserve(s.size());
  for (const auto& p : s.intervals()) {
    if (!p.lo.is_rational() || !p.hi.is_rational()) return std::nullopt;
    pieces.push_back({p.lo.as_rational(), p.hi.as_rational()});
  }
  return interval_set::from_pieces(std::move(pieces));
}

}  // namespace apfree
