#pragma once

// Symbolic descriptions of the sets the library reasons about:
//
//   basic        - the full-measure staircase set with parameter N
//   scaled       - intersection of an inner set with its image under
//                  multiplication by an irrational r > 1
//   product      - finite Cartesian product (dimension = sum of factors)
//   complement   - everything outside an explicit finite union G of
//                  half-open intervals
//
// Specs are immutable values; evaluation lives in construction.hpp.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <variant>
#include <vector>

#include "certified_real.hpp"
#include "interval_set.hpp"

namespace apfree {

class set_spec {
 public:
  struct basic {
    std::int64_t n;
  };
  struct scaled {
    std::shared_ptr<const set_spec> inner;
    certified_real r;
  };
  struct product {
    std::vector<set_spec> factors;
  };
  struct complement {
    interval_set g;
  };
  using node_t = std::variant<basic, scaled, product, complement>;

  static set_spec make_basic(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("basic spec requires N >= 1");
    return set_spec(basic{n});
  }

  // r must certify r > 1 and be irrational; the scaled-copy intersection is
  // only interesting (and the membership test only terminates in the exact
  // kinds) for quadratic irrationals, so that is what we accept.
  static set_spec make_scaled(set_spec inner, certified_real r) {
    if (inner.dimension() != 1)
      throw std::invalid_argument("scaled spec requires a one-dimensional inner spec");
    if (!r.is_quad()) throw std::invalid_argument("scale factor must be a quadratic irrational");
    if (compare(r, certified_real(1)) <= 0)
      throw std::invalid_argument("scale factor must exceed 1");
    return set_spec(scaled{std::make_shared<set_spec>(std::move(inner)), std::move(r)});
  }

  static set_spec make_product(std::vector<set_spec> factors) {
    if (factors.empty()) throw std::invalid_argument("product spec requires factors");
    return set_spec(product{std::move(factors)});
  }

  static set_spec make_complement(interval_set g) { return set_spec(complement{std::move(g)}); }

  const node_t& node() const { return node_; }

  bool is_basic() const { return std::holds_alternative<basic>(node_); }
  bool is_scaled() const { return std::holds_alternative<scaled>(node_); }
  bool is_product() const { return std::holds_alternative<product>(node_); }
  bool is_complement() const { return std::holds_alternative<complement>(node_); }

  std::size_t dimension() const {
    if (const auto* p = std::get_if<product>(&node_)) {
      std::size_t d = 0;
      for (const auto& f : p->factors) d += f.dimension();
      return d;
    }
    return 1;
  }

  // Scalar factors in coordinate order; products flatten recursively.
  void flatten(std::vector<const set_spec*>& out) const {
    if (const auto* p = std::get_if<product>(&node_)) {
      for (const auto& f : p->factors) f.flatten(out);
    } else {
      out.push_back(this);
    }
  }

 private:
  explicit set_spec(node_t n) : node_(std::move(n)) {}
  node_t node_;
};

}  // namespace apfree
