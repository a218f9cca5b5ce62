#pragma once

// JSON (and CSV, for tabular diagnostics) serialization. All numbers are
// carried as exact strings ("p/q" or "a+b*sqrt(d)"); nothing is rounded.
// Every to_json here has a matching from_json so emitted objects parse back
// into equivalent domain values.
//
// Depends on the single-header nlohmann/json from vendor/ (include path set
// by the build).

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "certified_real.hpp"
#include "escape.hpp"
#include "finite_complement.hpp"
#include "interval_set.hpp"
#include "parse.hpp"
#include "rational.hpp"
#include "set_spec.hpp"

namespace apfree {

using json = nlohmann::json;

inline json to_json(const interval_set& s) {
  json arr = json::array();
  for (const auto& p : s.intervals()) arr.push_back(json::array({p.lo.str(), p.hi.str()}));
  return arr;
}

inline interval_set interval_set_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("interval set JSON must be an array");
  std::vector<interval<rational>> pieces;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("interval must be a [lo, hi] pair");
    pieces.push_back({parse_rational(e[0].get<std::string>()),
                      parse_rational(e[1].get<std::string>())});
  }
  return interval_set::from_pieces(std::move(pieces));
}

// Windows of scaled specs have quadratic-irrational endpoints; serialize the
// exact expression strings.
inline json to_json(const real_interval_set& s) {
  json arr = json::array();
  for (const auto& p : s.intervals()) arr.push_back(json::array({p.lo.str(), p.hi.str()}));
  return arr;
}

inline json to_json(const set_spec& spec) {
  if (const auto* b = std::get_if<set_spec::basic>(&spec.node()))
    return json{{"type", "basic"}, {"N", b->n}};
  if (const auto* s = std::get_if<set_spec::scaled>(&spec.node()))
    return json{{"type", "scaled"}, {"inner", to_json(*s->inner)}, {"r", s->r.str()}};
  if (const auto* p = std::get_if<set_spec::product>(&spec.node())) {
    json factors = json::array();
    for (const auto& f : p->factors) factors.push_back(to_json(f));
    return json{{"type", "product"}, {"factors", factors}};
  }
  const auto& c = std::get<set_spec::complement>(spec.node());
  return json{{"type", "complement"}, {"G", to_json(c.g)}};
}

inline set_spec set_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw std::invalid_argument("spec JSON must be an object with a type");
  std::string type = j.at("type").get<std::string>();
  if (type == "basic") return set_spec::make_basic(j.at("N").get<std::int64_t>());
  if (type == "scaled")
    return set_spec::make_scaled(set_spec_from_json(j.at("inner")),
                                 parse_exact(j.at("r").get<std::string>()));
  if (type == "product") {
    std::vector<set_spec> factors;
    for (const auto& f : j.at("factors")) factors.push_back(set_spec_from_json(f));
    return set_spec::make_product(std::move(factors));
  }
  if (type == "complement") return set_spec::make_complement(interval_set_from_json(j.at("G")));
  throw std::invalid_argument("unknown spec type \"" + type + "\"");
}

inline json to_json(const escape_certificate& c) {
  json j{{"n", c.n.str()},
         {"x_n", c.x_n.str()},
         {"m", c.m.str()},
         {"forbidden", to_json(c.forbidden)},
         {"method", c.method == escape_method::constructive_rational ? "constructive_rational"
                                                                     : "bounded_search"}};
  if (c.block_level) j["k"] = *c.block_level;
  if (c.residue) j["j"] = *c.residue;
  if (c.coordinate) j["coordinate"] = *c.coordinate;
  return j;
}

inline escape_certificate certificate_from_json(const json& j) {
  escape_certificate c;
  c.n = parse_integer(j.at("n").get<std::string>());
  c.x_n = parse_exact(j.at("x_n").get<std::string>());
  c.m = parse_integer(j.at("m").get<std::string>());
  c.forbidden = interval_set_from_json(j.at("forbidden"));
  std::string method = j.at("method").get<std::string>();
  if (method == "constructive_rational") c.method = escape_method::constructive_rational;
  else if (method == "bounded_search") c.method = escape_method::bounded_search;
  else throw std::invalid_argument("unknown certificate method \"" + method + "\"");
  if (j.contains("k")) c.block_level = j.at("k").get<std::int64_t>();
  if (j.contains("j")) c.residue = j.at("j").get<std::int64_t>();
  if (j.contains("coordinate")) c.coordinate = j.at("coordinate").get<std::size_t>();
  return c;
}

inline json to_json(const claim1_report& r) {
  return json{{"N", r.n},
              {"k", r.k},
              {"beta_k", r.beta_k.str()},
              {"x0", r.x0.str()},
              {"delta", r.delta.str()},
              {"count_total", r.count_total.str()},
              {"count_in_top", r.count_in_top.str()},
              {"fraction", r.fraction.str()},
              {"threshold", r.threshold.str()},
              {"x0_above_gap_bound", r.x0_above_gap_bound},
              {"block_exceeds_gap", r.block_exceeds_gap},
              {"beta_exceeds_x0", r.beta_exceeds_x0},
              {"holds", r.holds},
              {"unmet", r.unmet}};
}

inline claim1_report claim1_report_from_json(const json& j) {
  claim1_report r;
  r.n = j.at("N").get<std::int64_t>();
  r.k = j.at("k").get<std::int64_t>();
  r.beta_k = parse_integer(j.at("beta_k").get<std::string>());
  r.x0 = parse_rational(j.at("x0").get<std::string>());
  r.delta = parse_rational(j.at("delta").get<std::string>());
  r.count_total = parse_integer(j.at("count_total").get<std::string>());
  r.count_in_top = parse_integer(j.at("count_in_top").get<std::string>());
  r.fraction = parse_rational(j.at("fraction").get<std::string>());
  r.threshold = parse_rational(j.at("threshold").get<std::string>());
  r.x0_above_gap_bound = j.at("x0_above_gap_bound").get<bool>();
  r.block_exceeds_gap = j.at("block_exceeds_gap").get<bool>();
  r.beta_exceeds_x0 = j.at("beta_exceeds_x0").get<bool>();
  r.holds = j.at("holds").get<bool>();
  r.unmet = j.at("unmet").get<std::vector<std::string>>();
  return r;
}

inline json to_json(const equidist_diagnostics& d) {
  json counts = json::array(), freq = json::array(), dev = json::array();
  for (const auto& c : d.counts) counts.push_back(c.str());
  for (const auto& f : d.frequency) freq.push_back(f.str());
  for (const auto& e : d.deviation) dev.push_back(e.str());
  json j{{"N", d.n},        {"terms", d.terms.str()}, {"counts", counts},
         {"frequency", freq}, {"deviation", dev},     {"epsilon", d.epsilon.str()}};
  if (d.stable_from) j["stable_from"] = d.stable_from->str();
  else j["stable_from"] = nullptr;
  return j;
}

inline equidist_diagnostics equidist_from_json(const json& j) {
  equidist_diagnostics d;
  d.n = j.at("N").get<std::int64_t>();
  d.terms = parse_integer(j.at("terms").get<std::string>());
  for (const auto& c : j.at("counts")) d.counts.push_back(parse_integer(c.get<std::string>()));
  for (const auto& f : j.at("frequency")) d.frequency.push_back(parse_rational(f.get<std::string>()));
  for (const auto& e : j.at("deviation")) d.deviation.push_back(parse_rational(e.get<std::string>()));
  d.epsilon = parse_rational(j.at("epsilon").get<std::string>());
  if (!j.at("stable_from").is_null())
    d.stable_from = parse_integer(j.at("stable_from").get<std::string>());
  return d;
}

// CSV with one row per subinterval: cell,count,frequency,deviation. Metadata
// rides in leading comment lines so the table itself stays rectangular.
inline std::string to_csv(const equidist_diagnostics& d) {
  std::ostringstream out;
  out << "# schema=1 terms=" << d.terms.str() << " epsilon=" << d.epsilon.str()
      << " stable_from=" << (d.stable_from ? d.stable_from->str() : "none") << "\n";
  out << "cell,count,frequency,deviation\n";
  for (std::size_t i = 0; i < d.counts.size(); ++i) {
    out << i << "," << d.counts[i].str() << "," << d.frequency[i].str() << ","
        << d.deviation[i].str() << "\n";
  }
  return out.str();
}

inline json to_json(const ap_witness& w) {
  json residual = json::array();
  for (const auto& seg : w.residual)
    residual.push_back(json::array({seg.lo.str(), seg.hi.str()}));
  return json{{"x", w.x.str()},
              {"gap", w.gap.str()},
              {"xi", w.xi.str()},
              {"residual_open", residual},
              {"residual_measure", w.residual_measure.str()},
              {"measure_lower_bound", w.measure_lower_bound.str()}};
}

inline ap_witness witness_from_json(const json& j) {
  ap_witness w;
  w.x = parse_rational(j.at("x").get<std::string>());
  w.gap = parse_rational(j.at("gap").get<std::string>());
  w.xi = parse_rational(j.at("xi").get<std::string>());
  for (const auto& seg : j.at("residual_open")) {
    w.residual.push_back({parse_rational(seg[0].get<std::string>()),
                          parse_rational(seg[1].get<std::string>())});
  }
  w.residual_measure = parse_rational(j.at("residual_measure").get<std::string>());
  w.measure_lower_bound = parse_rational(j.at("measure_lower_bound").get<std::string>());
  return w;
}

}  // namespace apfree
