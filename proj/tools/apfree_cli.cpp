// apfree: exact-arithmetic queries against progression-avoiding staircase
// sets. Subcommands construct window traces, decide membership, certify
// escapes of arithmetic progressions, and run the counting/equidistribution
// diagnostics. All numeric input is exact ("p/q", "a+b*sqrt(d)", small
// expressions); decimals are rejected so results stay certifiable end to end.
//
// Exit codes: 0 success, 1 domain error (machine-readable JSON object on
// stdout), 2 argument or usage error (message on stderr).

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "apfree/apfree.hpp"

namespace {

using apfree::certified_real;
using apfree::integer;
using apfree::interval_set;
using apfree::json;
using apfree::rational;
using apfree::set_spec;

void warn_if_trivial(std::int64_t n) {
  if (n == 1) std::cerr << "warning: N=1 yields the empty set\n";
}

void warn_trivial_spec(const set_spec& spec) {
  if (const auto* b = std::get_if<set_spec::basic>(&spec.node())) {
    warn_if_trivial(b->n);
  } else if (const auto* s = std::get_if<set_spec::scaled>(&spec.node())) {
    warn_trivial_spec(*s->inner);
  } else if (const auto* p = std::get_if<set_spec::product>(&spec.node())) {
    for (const auto& f : p->factors) warn_trivial_spec(f);
  }
}

// Spec arguments: "basic:K", inline JSON, or "@path" to a JSON file.
json read_json_arg(const std::string& text) {
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw std::invalid_argument("cannot open file " + text.substr(1));
    return json::parse(in);
  }
  return json::parse(text);
}

set_spec parse_spec_arg(const std::string& text) {
  if (text.rfind("basic:", 0) == 0) {
    auto n = apfree::parse_integer(text.substr(6)).convert_to<std::int64_t>();
    return set_spec::make_basic(n);
  }
  return apfree::set_spec_from_json(read_json_arg(text));
}

std::string point_str(const std::vector<certified_real>& pt) {
  if (pt.size() == 1) return pt[0].str();
  std::string s = "(";
  for (std::size_t i = 0; i < pt.size(); ++i) {
    if (i) s += ",";
    s += pt[i].str();
  }
  return s + ")";
}

void emit(json j) {
  j["schema"] = "1";
  std::cout << j.dump(2) << "\n";
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  apfree::config cfg;
  try {
    cfg = apfree::load_config_from_env();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"Exact construction, membership, and escape certification for "
               "progression-avoiding staircase sets"};
  app.require_subcommand(1);

  std::string refine_width = cfg.max_refine_width.str();
  app.add_option("--max-refine-width", refine_width,
                 "Refinement floor for boundary decisions, as an exact rational");

  auto* win = app.add_subcommand("window", "Exact trace of S(N) on [from, to) with its measure");
  std::int64_t win_n = cfg.default_n;
  std::string win_from, win_to;
  win->add_option("--N", win_n, "Subdivision parameter")->capture_default_str();
  win->add_option("--from", win_from, "Left endpoint (exact expression)")->required();
  win->add_option("--to", win_to, "Right endpoint (exact expression)")->required();

  auto* chk = app.add_subcommand("check", "Membership verdict for a point");
  std::string chk_spec, chk_x;
  chk->add_option("--spec", chk_spec, "Set spec: basic:K, inline JSON, or @file")->required();
  chk->add_option("--x", chk_x, "Point: scalar expression or tuple \"(e1,...,ek)\"")->required();

  auto* esc = app.add_subcommand("escape", "Escape certificate for a progression");
  std::string esc_spec, esc_x0, esc_delta, esc_method = "auto";
  std::int64_t esc_depth = cfg.search_depth;
  esc->add_option("--spec", esc_spec, "Set spec: basic:K, inline JSON, or @file")->required();
  esc->add_option("--x0", esc_x0, "Progression start (scalar or tuple)")->required();
  esc->add_option("--delta", esc_delta, "Progression gap (scalar or tuple)")->required();
  esc->add_option("--depth", esc_depth, "Search depth bound")->capture_default_str();
  esc->add_option("--method", esc_method, "Certification route")
      ->check(CLI::IsMember({"auto", "constructive", "search"}))
      ->capture_default_str();

  auto* cl1 = app.add_subcommand("claim1", "Counting report for the top-slice fraction bound");
  std::int64_t c1_n = cfg.default_n, c1_k = 0;
  std::string c1_x0, c1_delta;
  cl1->add_option("--N", c1_n, "Subdivision parameter")->capture_default_str();
  cl1->add_option("--x0", c1_x0, "Progression start (rational)")->required();
  cl1->add_option("--delta", c1_delta, "Progression gap (positive rational)")->required();
  cl1->add_option("--k", c1_k, "Block level")->required();

  auto* eq = app.add_subcommand("equidist", "Fractional-part tallies over the N subintervals");
  std::int64_t eq_n = cfg.default_n, eq_m = 0;
  std::string eq_x0, eq_delta, eq_eps, eq_format = cfg.output_format;
  eq->add_option("--N", eq_n, "Number of subintervals")->capture_default_str();
  eq->add_option("--x0", eq_x0, "Progression start (exact expression)")->required();
  eq->add_option("--delta", eq_delta, "Progression gap (exact expression)")->required();
  eq->add_option("--M", eq_m, "Number of steps (terms n = 0..M)")->required();
  eq->add_option("--eps", eq_eps, "Deviation threshold for the stability index")->required();
  eq->add_option("--format", eq_format, "Output rendering")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  auto* fap = app.add_subcommand("find-ap", "Two-sided progression avoiding a small obstacle set");
  std::string fa_g, fa_xi;
  std::int64_t fa_verify = 0;
  fap->add_option("--G", fa_g, "Obstacle set: JSON interval list or @file")->required();
  fap->add_option("--xi", fa_xi, "Measure threshold (rational, > measure(G))")->required();
  fap->add_option("--verify-range", fa_verify, "Re-check avoidance for |k| up to this bound")
      ->capture_default_str();

  auto* cn = app.add_subcommand("choose-N", "Smallest N whose unit windows keep measure >= lambda");
  std::string cn_lambda;
  cn->add_option("--lambda", cn_lambda, "Density target in [0, 1)")->required();

  auto* pw = app.add_subcommand("plot-window", "CSV segment list of the trace, for plotting");
  std::int64_t pw_n = cfg.default_n;
  std::string pw_from, pw_to;
  pw->add_option("--N", pw_n, "Subdivision parameter")->capture_default_str();
  pw->add_option("--from", pw_from, "Left endpoint (exact expression)")->required();
  pw->add_option("--to", pw_to, "Right endpoint (exact expression)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    rational width = apfree::parse_rational(refine_width);
    if (width.sign() <= 0) throw std::invalid_argument("--max-refine-width must be positive");
    apfree::default_max_refine_width() = width;

    if (win->parsed()) {
      warn_if_trivial(win_n);
      certified_real a = apfree::parse_exact(win_from);
      certified_real b = apfree::parse_exact(win_to);
      auto trace = apfree::window(set_spec::make_basic(win_n), a, b);
      emit(json{{"N", win_n},
                {"from", a.str()},
                {"to", b.str()},
                {"intervals", apfree::to_json(trace)},
                {"measure", trace.measure().str()}});
    } else if (chk->parsed()) {
      set_spec spec = parse_spec_arg(chk_spec);
      warn_trivial_spec(spec);
      auto pt = apfree::parse_point(chk_x);
      bool inside = pt.size() == 1 && spec.dimension() == 1 ? apfree::contains(spec, pt[0])
                                                            : apfree::contains(spec, pt);
      emit(json{{"spec", apfree::to_json(spec)}, {"x", point_str(pt)}, {"contains", inside}});
    } else if (esc->parsed()) {
      set_spec spec = parse_spec_arg(esc_spec);
      warn_trivial_spec(spec);
      auto x0 = apfree::parse_point(esc_x0);
      auto delta = apfree::parse_point(esc_delta);
      std::string method = esc_method;
      if (method == "auto") {
        bool constructive_fits = spec.is_basic() && x0.size() == 1 && delta.size() == 1 &&
                                 x0[0].is_rational() && delta[0].is_rational() &&
                                 delta[0].sign() != 0 && apfree::contains(spec, x0[0]);
        method = constructive_fits ? "constructive" : "search";
      }
      if (method == "constructive") {
        if (!spec.is_basic() || x0.size() != 1 || delta.size() != 1 || !x0[0].is_rational() ||
            !delta[0].is_rational())
          throw std::invalid_argument(
              "constructive method needs a basic spec and rational scalar x0/delta");
        auto n = std::get<set_spec::basic>(spec.node()).n;
        auto cert =
            apfree::certify_escape_rational(n, x0[0].as_rational(), delta[0].as_rational());
        emit(apfree::to_json(cert));
      } else {
        std::optional<apfree::escape_certificate> cert;
        if (x0.size() == 1 && spec.dimension() == 1)
          cert = apfree::certify_escape_search(spec, apfree::progression{x0[0], delta[0]},
                                               esc_depth);
        else
          cert = apfree::certify_escape_search(spec, x0, delta, esc_depth);
        if (cert) emit(apfree::to_json(*cert));
        else emit(json{{"result", "no_witness_within_depth"}, {"depth", esc_depth}});
      }
    } else if (cl1->parsed()) {
      warn_if_trivial(c1_n);
      auto report = apfree::claim1_verify(c1_n, apfree::parse_rational(c1_x0),
                                          apfree::parse_rational(c1_delta), c1_k);
      emit(apfree::to_json(report));
    } else if (eq->parsed()) {
      warn_if_trivial(eq_n);
      apfree::progression pr{apfree::parse_exact(eq_x0), apfree::parse_exact(eq_delta)};
      auto diag = apfree::equidist_stats(eq_n, pr, eq_m, apfree::parse_rational(eq_eps));
      if (eq_format == "csv") std::cout << apfree::to_csv(diag);
      else emit(apfree::to_json(diag));
    } else if (fap->parsed()) {
      interval_set g = apfree::interval_set_from_json(read_json_arg(fa_g));
      auto witness = apfree::find_two_sided_ap(g, apfree::parse_rational(fa_xi));
      json j = apfree::to_json(witness);
      if (fa_verify > 0) {
        j["verified_range"] = fa_verify;
        j["verified"] = apfree::verify_ap_avoids(g, witness, fa_verify);
      }
      emit(std::move(j));
    } else if (cn->parsed()) {
      rational lambda = apfree::parse_rational(cn_lambda);
      emit(json{{"lambda", lambda.str()}, {"N", apfree::choose_n_for_lambda(lambda)}});
    } else if (pw->parsed()) {
      warn_if_trivial(pw_n);
      certified_real a = apfree::parse_exact(pw_from);
      certified_real b = apfree::parse_exact(pw_to);
      std::cout << "# schema=1 N=" << pw_n << " from=" << a.str() << " to=" << b.str() << "\n";
      std::cout << "lo,hi,cell,residue,lo_float,hi_float\n";
      if (compare(a, b) < 0) {
        apfree::real_interval_set box(a, b);
        for (integer m = a.floor(); apfree::compare3(rational(m), b) < 0; ++m) {
          apfree::real_interval_set clipped =
              set_intersect(apfree::lift(apfree::cell(pw_n, m)), box);
          std::int64_t res = apfree::cell_residue(pw_n, m);
          for (const auto& p : clipped.intervals()) {
            std::cout << p.lo.str() << "," << p.hi.str() << "," << m.str() << "," << res << ","
                      << fmt_double(p.lo.to_double()) << "," << fmt_double(p.hi.to_double())
                      << "\n";
          }
        }
      }
    }
  } catch (const apfree::error& e) {
    emit(json{{"error", {{"type", e.code()}, {"message", e.what()}}}});
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
