// glab: analyze groups, run verification suites, search for submaximal
// discrepancies between normal and subnormal embeddings.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or cap error.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "glab/glab.hpp"

using namespace glab;

namespace {

  constexpr int kExitFail  = 1;
  constexpr int kExitUsage = 2;

  json gens_of(PermGroup const& g) { return detail::gens_json(g); }

  json numbers(std::vector<std::uint64_t> const& v) {
    json out = json::array();
    for (auto x : v) {
      out.push_back(x);
    }
    return out;
  }

  std::string join_numbers(std::vector<std::uint64_t> const& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? ", " : "") + std::to_string(v[i]);
    }
    return "[" + out + "]";
  }

  int analyze(std::string const& text, bool as_json, Limits const& lim) {
    auto g       = make_group(text);
    auto factors = composition_factor_orders(g, lim);
    bool simple  = g.order() > 1 && factors.size() == 1;
    json out;
    out["group"]               = text;
    out["degree"]              = g.degree();
    out["order"]               = g.order();
    out["generators"]          = gens_of(g);
    out["primes"]              = numbers(pi_of_group(g));
    out["solvable"]            = is_solvable(g);
    out["simple"]              = simple;
    out["composition_factors"] = numbers(factors);
    bool partial               = false;
    if (g.order() <= lim.lattice_cap) {
      auto l       = enumerate_subgroups(g, lim);
      json classes = json::array();
      for (std::size_t i = 0; i < l.size(); ++i) {
        auto const& c = l.classes()[i];
        classes.push_back({{"order", c.order()},
                           {"conjugates", c.conjugates()},
                           {"factors", numbers(c.factor_orders)},
                           {"representative", detail::gens_json(l.table(), c.rep)}});
      }
      out["subgroup_classes"] = classes;
      out["subgroups"]        = l.total_subgroups();
    } else {
      partial              = true;
      out["subgroup_classes"] = nullptr;
      out["partial"]       = "subgroup lattice above the lattice cap";
    }
    if (as_json) {
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    std::cout << "group:      " << text << "\n"
              << "degree:     " << g.degree() << "\n"
              << "order:      " << g.order() << "\n"
              << "primes:     " << join_numbers(pi_of_group(g)) << "\n"
              << "solvable:   " << (out["solvable"].get<bool>() ? "yes" : "no") << "\n"
              << "simple:     " << (simple ? "yes" : "no") << "\n"
              << "factors:    " << join_numbers(factors) << "\n";
    if (partial) {
      std::cout << "subgroups:  not enumerated (order above lattice cap "
                << lim.lattice_cap << ")\n";
      return 0;
    }
    std::cout << "subgroups:  " << out["subgroups"] << " in "
              << out["subgroup_classes"].size() << " classes\n";
    std::printf("  %6s %6s  %-20s %s\n", "order", "count", "factors", "representative");
    for (auto const& c : out["subgroup_classes"]) {
      std::string rep;
      for (auto const& s : c["representative"]) {
        rep += (rep.empty() ? "" : ", ") + s.get<std::string>();
      }
      std::string fs = c["factors"].dump();
      std::printf("  %6llu %6llu  %-20s %s\n",
                  static_cast<unsigned long long>(c["order"].get<std::uint64_t>()),
                  static_cast<unsigned long long>(c["conjugates"].get<std::uint64_t>()),
                  fs.c_str(), rep.empty() ? "()" : rep.c_str());
    }
    return 0;
  }

  int verify(std::string const& suite, SuiteOptions const& opt, bool as_json) {
    std::map<Verdict, std::size_t> counts;
    bool                           cap_hit = false;
    run_suite(suite, opt, [&](VerificationReport const& r) {
      ++counts[r.verdict];
      if (r.verdict == Verdict::skipped && r.witness.contains("cap_exceeded")) {
        cap_hit = true;
      }
      if (as_json) {
        std::cout << r.to_json().dump() << "\n";
        return;
      }
      std::string detail;
      if (r.verdict == Verdict::pass && r.witness.contains("instances")) {
        detail = std::to_string(r.witness["instances"].get<std::uint64_t>()) + " instances";
        if (r.witness.contains("complete")) {
          detail += ", sampled";
        }
      } else if (r.verdict == Verdict::pass && r.witness.contains("H_order")) {
        detail = "H of order " + r.witness["H_order"].dump() + " has image of order "
                 + r.witness["image_order"].dump() + " in G/A of order "
                 + r.witness["quotient_order"].dump();
      } else if (r.verdict == Verdict::skipped) {
        detail = r.witness["reason"].get<std::string>();
      } else {
        detail = r.witness.dump();
      }
      std::printf("%-7s %-24s %-28s %-18s %s (%.1f ms)\n", to_string(r.verdict),
                  r.check_id.c_str(), r.group.c_str(),
                  r.x_class.empty() ? "-" : r.x_class.c_str(), detail.c_str(),
                  r.wall_time_ms);
      std::fflush(stdout);
    });
    if (!as_json) {
      std::printf("%zu pass, %zu fail, %zu skipped\n", counts[Verdict::pass],
                  counts[Verdict::fail], counts[Verdict::skipped]);
    }
    if (counts[Verdict::fail] > 0) {
      return kExitFail;
    }
    return cap_hit && opt.group ? kExitUsage : 0;
  }

  // Every G* with S <= G* <= Aut containing G as a subnormal subgroup.
  std::vector<PermGroup> subnormal_overgroups(PermGroup const& g, PermGroup const& aut,
                                              PermGroup const& socle,
                                              Limits const&    lim) {
    auto                   map = quotient(aut, socle, lim);
    auto                   l   = enumerate_subgroups(map.image_group(), lim);
    std::vector<PermGroup> out;
    for (auto const& bits : l.all_subgroups()) {
      auto over = map.preimage(l.table().to_group(l.table().from_bits(bits)));
      if (g.is_subgroup_of(over) && is_subnormal(over, g).subnormal) {
        out.push_back(std::move(over));
      }
    }
    return out;
  }

  int search_sm(bool as_json, Limits const& lim) {
    std::size_t discrepancies = 0;
    for (auto const& pair : almost_simple_pairs()) {
      auto         s = pair.socle;
      LatticeCache cache;
      auto         between = normalizing_overgroups(s, pair.aut, s, lim);
      for (std::size_t gi = 0; gi < between.size(); ++gi) {
        auto const& g     = between[gi];
        auto        overs = subnormal_overgroups(g, pair.aut, s, lim);
        IndexedGroup t(g, lim);
        for (auto const& x : standard_family(pair.aut)) {
          if (is_member(x, s)) {
            continue;
          }
          std::map<Bitset, PermGroup> strong, relative;
          for (auto const& r : strong_submax_almost_simple(x, g, pair.aut, lim, &cache)) {
            strong.emplace(t.from_group(r.subgroup).elements, r.subgroup);
          }
          for (auto const& over : overs) {
            for (auto const& r :
                 submax_in_ambient(x, over, g, EmbeddingMode::subnormal, lim, &cache)) {
              relative.emplace(t.from_group(r.subgroup).elements, r.subgroup);
            }
          }
          json missing = json::array();
          for (auto const& [bits, h] : relative) {
            if (!strong.count(bits)) {
              missing.push_back(gens_of(h));
            }
          }
          discrepancies += missing.size();
          if (as_json) {
            json j = {{"pair", pair.name},          {"group_index", gi},
                      {"group_order", g.order()},
                      {"class", x.to_string()},     {"overgroups", overs.size()},
                      {"strong", strong.size()},    {"subnormal", relative.size()},
                      {"discrepancies", missing}};
            std::cout << j.dump() << "\n";
          } else {
            std::printf("%-16s G%zu |G| = %-5llu %-18s overgroups %zu  sm° %zu  "
                        "sm %zu  discrepancies %zu\n",
                        pair.name.c_str(), gi, static_cast<unsigned long long>(g.order()),
                        x.to_string().c_str(), overs.size(), strong.size(),
                        relative.size(), missing.size());
          }
        }
      }
    }
    if (!as_json) {
      std::printf("%zu discrepancies found\n", discrepancies);
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation group lattice and maximal X-subgroup verification"};
  app.require_subcommand(1);

  Limits lim;
  bool   as_json = false;
  auto   add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "Emit JSON");
    sub->add_option("--lattice-cap", lim.lattice_cap, "Largest order for lattice enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--scan-cap", lim.scan_cap, "Largest order for element scans")
        ->check(CLI::PositiveNumber);
  };

  std::string group_text;
  auto*       analyze_cmd = app.add_subcommand("analyze", "Summarize a group");
  analyze_cmd->add_option("group", group_text, "Group expression")->required();
  add_common(analyze_cmd);

  std::string suite, positional_group, option_group, class_text;
  auto*       verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "Suite name or 'all'")->required();
  verify_cmd->add_option("group_expr", positional_group, "Group expression");
  verify_cmd->add_option("--group", option_group, "Group expression");
  verify_cmd->add_option("--class", class_text, "Class of groups, e.g. pi{2,5}");
  add_common(verify_cmd);

  auto* search_cmd = app.add_subcommand(
      "search-sm", "Compare strong and subnormal submaximal sets on almost simple pairs");
  add_common(search_cmd);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze_cmd) {
      return analyze(group_text, as_json, lim);
    }
    if (*verify_cmd) {
      if (!is_suite(suite)) {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return kExitUsage;
      }
      if (!positional_group.empty() && !option_group.empty()) {
        std::cerr << "error: give the group once\n";
        return kExitUsage;
      }
      SuiteOptions opt;
      opt.lim = lim;
      if (!positional_group.empty() || !option_group.empty()) {
        opt.group = positional_group.empty() ? option_group : positional_group;
        make_group(*opt.group);  // report syntax errors before running
      }
      if (!class_text.empty()) {
        opt.x_class = ClassSpec::parse(class_text);
      }
      return verify(suite, opt, as_json);
    }
    return search_sm(as_json, lim);
  } catch (ParseError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (CapExceeded const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
