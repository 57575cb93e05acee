#ifndef GLAB_SUITE_HPP_
#define GLAB_SUITE_HPP_

// Verification suites: which checks run on which groups and classes. The
// default instances are the catalog groups up to a per-suite order bound
// plus a few spot instances above the lattice cap. Enumeration order is
// fixed, so a suite run is reproducible up to timing.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "catalog.hpp"
#include "error.hpp"
#include "verify.hpp"
#include "xclass.hpp"

namespace glab {

  struct SuiteOptions {
    std::optional<std::string> group;    // run on this expression only
    std::optional<ClassSpec>   x_class;  // instead of the standard family
    Limits                     lim;
  };

  using ReportSink = std::function<void(VerificationReport const&)>;

  inline std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names{
        "wh-normal",    "wh-subnormal", "projections", "subnormality",
        "chunikhin",    "intersection", "factor",      "centralizer",
        "socle",        "wreath",       "sylow",       "direct"};
    return names;
  }

  inline bool is_suite(std::string const& name) {
    if (name == "all") {
      return true;
    }
    for (auto const& s : suite_names()) {
      if (s == name) {
        return true;
      }
    }
    return false;
  }

  namespace detail {
    struct SuiteShape {
      std::uint64_t            max_order;  // catalog bound
      std::vector<std::string> spot;       // extra groups above the bound
    };

    inline SuiteShape suite_shape(std::string const& suite) {
      std::string const wreath = "wreath(alt(5), cyclic(2))";
      std::string const a5a5   = "direct(alt(5), alt(5))";
      if (suite == "wh-normal") {
        return {UINT64_MAX, {}};
      }
      if (suite == "subnormality") {
        return {200, {}};
      }
      if (suite == "intersection" || suite == "centralizer") {
        return {UINT64_MAX, {a5a5}};
      }
      if (suite == "factor") {
        return {400, {a5a5}};
      }
      if (suite == "sylow") {
        return {400, {wreath}};
      }
      if (suite == "socle") {
        return {2000, {"pgl27", "aut_a6"}};
      }
      return {400, {}};
    }

    inline std::vector<std::pair<std::string, PermGroup>> suite_groups(
        std::string const& suite, SuiteOptions const& opt) {
      std::vector<std::pair<std::string, PermGroup>> out;
      if (opt.group) {
        out.emplace_back(*opt.group, make_group(*opt.group));
        return out;
      }
      auto shape = suite_shape(suite);
      for (auto const& name : default_catalog_names()) {
        auto g = make_group(name);
        if (g.order() <= shape.max_order) {
          out.emplace_back(name, std::move(g));
        }
      }
      for (auto const& name : shape.spot) {
        out.emplace_back(name, make_group(name));
      }
      return out;
    }

    inline std::vector<ClassSpec> suite_classes(SuiteOptions const& opt,
                                                PermGroup const&    g) {
      if (opt.x_class) {
        return {*opt.x_class};
      }
      return standard_family(g);
    }

    // Pairs G <= G* for the direct_product_submax examples, as expressions.
    inline std::vector<std::vector<std::pair<std::string, std::string>>>
    submax_examples() {
      return {{{"alt(5)", "sym(5)"}, {"cyclic(3)", "sym(3)"}},
              {{"alt(4)", "sym(4)"}, {"v4", "sym(4)"}},
              {{"cyclic(3)", "sym(3)"}, {"cyclic(3)", "sym(3)"}}};
    }

    // G = G_1 x ... x G_n and G* = G_1* x ... x G_n* placed on disjoint
    // blocks of points, with G_i* acting on the same block as G_i.
    inline std::vector<std::pair<PermGroup, PermGroup>> embed_pairs(
        std::vector<std::pair<std::string, std::string>> const& example) {
      std::vector<std::pair<PermGroup, PermGroup>> raw;
      std::size_t                                  degree = 0;
      for (auto const& [g, amb] : example) {
        raw.emplace_back(make_group(g), make_group(amb));
        if (raw.back().first.degree() != raw.back().second.degree()) {
          throw PreconditionError("submax example: degrees differ");
        }
        degree += raw.back().first.degree();
      }
      auto shift_group = [degree](PermGroup const& g, std::size_t shift) {
        std::vector<Permutation> gens;
        for (auto const& s : g.generators()) {
          std::vector<point_type> img(degree);
          for (std::size_t i = 0; i < degree; ++i) {
            img[i] = static_cast<point_type>(i);
          }
          for (std::size_t j = 0; j < g.degree(); ++j) {
            img[shift + j] = static_cast<point_type>(shift + s[j]);
          }
          gens.emplace_back(std::move(img));
        }
        return PermGroup(degree, std::move(gens));
      };
      std::vector<std::pair<PermGroup, PermGroup>> out;
      std::size_t                                  shift = 0;
      for (auto const& [g, amb] : raw) {
        out.emplace_back(shift_group(g, shift), shift_group(amb, shift));
        shift += g.degree();
      }
      return out;
    }

    inline std::string example_name(
        std::vector<std::pair<std::string, std::string>> const& example) {
      std::string g = "direct(", amb = "direct(";
      for (std::size_t i = 0; i < example.size(); ++i) {
        g += (i ? ", " : "") + example[i].first;
        amb += (i ? ", " : "") + example[i].second;
      }
      return g + ") in " + amb + ")";
    }

    inline void run_one_suite(std::string const& suite, SuiteOptions const& opt,
                              ReportSink const& sink) {
      if (suite == "wreath") {
        std::vector<std::string> names{"wreath(alt(5), cyclic(2))"};
        if (opt.group) {
          auto e = parse_group(*opt.group);
          if (e.kind != GroupExpr::Kind::wreath) {
            throw PreconditionError("the wreath suite needs a wreath(...) group");
          }
          names = {e.to_string()};
        }
        for (auto const& n : names) {
          auto e    = parse_group(n);
          auto base = evaluate(e.args[0]);
          auto top  = evaluate(e.args[1]);
          for (auto const& x : suite_classes(opt, base)) {
            sink(check_wreath_counterexample(x, base, top, n, opt.lim));
          }
        }
        return;
      }
      if (suite == "direct" && !opt.group) {
        for (auto const& ex : submax_examples()) {
          auto parts = embed_pairs(ex);
          std::vector<ClassSpec> xs;
          if (opt.x_class) {
            xs = {*opt.x_class};
          } else {
            xs = {ClassSpec::pi_groups({2}), ClassSpec::pi_groups({2, 5}),
                  ClassSpec::pi_groups({3}), ClassSpec::solvable()};
          }
          for (auto const& x : xs) {
            sink(check_direct_product_submax(example_name(ex), parts, x, opt.lim));
          }
        }
      }
      for (auto& [name, g] : suite_groups(suite, opt)) {
        GroupAnalysis an(name, g, opt.lim);
        if (suite == "subnormality") {
          sink(check_subnormality_criterion(an));
          continue;
        }
        if (suite == "centralizer") {
          sink(check_centralizer_lemma(an));
          continue;
        }
        if (suite == "socle") {
          sink(check_socle_intersection(an));
          continue;
        }
        if (suite == "sylow") {
          sink(check_sylow_projections(an));
          continue;
        }
        std::vector<PermGroup> factors;
        if (suite == "direct") {
          auto e = parse_group(name);
          if (e.kind != GroupExpr::Kind::direct) {
            continue;
          }
          factors = direct_factors(e);
        }
        for (auto const& x : suite_classes(opt, g)) {
          if (suite == "wh-normal") {
            sink(check_wh_normal(an, x));
          } else if (suite == "wh-subnormal") {
            sink(check_wh_subnormal(an, x));
          } else if (suite == "projections") {
            sink(check_projection_conjugacy(an, x));
          } else if (suite == "chunikhin") {
            sink(check_chunikhin(an, x));
          } else if (suite == "intersection") {
            sink(check_nontrivial_intersection(an, x));
          } else if (suite == "factor") {
            sink(check_factor_lemma(an, x));
          } else if (suite == "direct") {
            sink(check_direct_product(an, factors, x));
          }
        }
      }
    }
  }  // namespace detail

  //! Runs a suite (or "all") and passes each report to `sink` as it is
  //! produced.
  inline void run_suite(std::string const& suite, SuiteOptions const& opt,
                        ReportSink const& sink) {
    if (!is_suite(suite)) {
      throw PreconditionError("unknown suite '" + suite + "'");
    }
    if (suite != "all") {
      detail::run_one_suite(suite, opt, sink);
      return;
    }
    for (auto const& s : suite_names()) {
      if (opt.group && s == "wreath"
          && parse_group(*opt.group).kind != GroupExpr::Kind::wreath) {
        continue;
      }
      detail::run_one_suite(s, opt, sink);
    }
  }

  inline std::vector<VerificationReport> run_suite(std::string const&  suite,
                                                   SuiteOptions const& opt) {
    std::vector<VerificationReport> out;
    run_suite(suite, opt, [&](VerificationReport const& r) { out.push_back(r); });
    return out;
  }

}  // namespace glab

#endif  // GLAB_SUITE_HPP_
