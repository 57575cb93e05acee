// Acceptance run: one pass/fail line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "glab/glab.hpp"

using namespace glab;

namespace {

  struct Outcome {
    bool        ok = true;
    std::string detail;
  };

  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  // Runs a suite and counts verdicts; any failure is printed in full.
  Outcome suite_outcome(std::string const& suite, std::size_t* groups = nullptr) {
    std::map<Verdict, std::size_t> counts;
    std::set<std::string>          seen;
    run_suite(suite, {}, [&](VerificationReport const& r) {
      ++counts[r.verdict];
      seen.insert(r.group);
      if (r.verdict == Verdict::fail) {
        std::printf("    failure: %s\n", r.to_json().dump().c_str());
      }
    });
    if (groups) {
      *groups = seen.size();
    }
    Outcome o;
    o.ok     = counts[Verdict::fail] == 0 && counts[Verdict::pass] > 0;
    o.detail = std::to_string(seen.size()) + " groups, "
               + std::to_string(counts[Verdict::pass]) + " pass, "
               + std::to_string(counts[Verdict::fail]) + " fail, "
               + std::to_string(counts[Verdict::skipped]) + " skipped";
    return o;
  }

  Outcome wh_subnormal() { return suite_outcome("wh-subnormal"); }

  Outcome sylow() {
    auto o = suite_outcome("sylow");
    // the single-class statement, independently: all Sylow subgroups from
    // conjugating one are conjugate and of full p-part order
    std::size_t groups = 0;
    for (auto const& e : default_catalog(400)) {
      for (auto p : prime_divisors(e.group.order())) {
        auto all = all_sylow_subgroups(e.group, p);
        auto cls = maximal_x_subgroups(ClassSpec::pi_groups({p}), e.group);
        if (cls.size() != 1 || cls[0].count != all.size()
            || cls[0].rep.order() != p_part(e.group.order(), p)) {
          o.ok = false;
          std::printf("    sylow mismatch: %s p = %llu\n", e.name.c_str(),
                      static_cast<unsigned long long>(p));
        }
      }
      ++groups;
    }
    o.detail += "; m_X one class of p-part order on " + std::to_string(groups) + " groups";
    return o;
  }

  Outcome subnormality() { return suite_outcome("subnormality"); }
  Outcome projections() { return suite_outcome("projections"); }
  Outcome direct() { return suite_outcome("direct"); }
  Outcome chunikhin() { return suite_outcome("chunikhin"); }

  Outcome wreath() {
    auto    t0 = Clock::now();
    auto    r  = check_wreath_counterexample(ClassSpec::pi_groups({2, 5}),
                                             alternating_group(5), cyclic_group(2),
                                             "wreath(alt(5), cyclic(2))");
    double  dt = seconds_since(t0);
    Outcome o;
    if (r.verdict != Verdict::pass) {
      o.ok     = false;
      o.detail = r.to_json().dump();
      return o;
    }
    auto const& w = r.witness;
    auto        h = detail::group_from_json(10, w["H"]);
    // V4 on the first copy and D10 on the second: every generator keeps the
    // blocks {1..5}, {6..10}
    bool in_base = true;
    for (auto const& p : h.generators()) {
      for (point_type i = 0; i < 5; ++i) {
        in_base &= p[i] < 5;
      }
    }
    auto covered   = w["elements_scanned"].get<std::size_t>() + h.order();
    auto first     = w["examined"][0];
    bool sylow_rej = first["order"] == 32 && first["image_x_maximal"] == true;
    o.ok = h.order() == 40 && in_base && w["image_order"] == 1
           && w["quotient_order"] == 2 && covered == 7200 && sylow_rej && dt <= 60;
    o.detail = "H of order " + std::to_string(h.order()) + " in the base, "
               + std::to_string(covered) + " elements covered by "
               + w["closures"].dump() + " one-element closures, image order "
               + w["image_order"].dump() + " in G/A of order 2, Sylow-2 rejected: "
               + (sylow_rej ? "yes" : "no") + ", " + std::to_string(dt) + " s";
    return o;
  }

  Outcome almost_simple() {
    auto x   = ClassSpec::pi_groups({2, 5});
    auto a5  = alternating_group(5);
    auto s5  = symmetric_group(5);
    auto out = strong_submax_almost_simple(x, a5, s5);

    // oracle: exhaustive lattices of A5 and S5, maximal X-subgroups met with A5
    IndexedGroup      t(a5);
    std::set<Bitset>  expected, got;
    for (auto const& amb : {a5, s5}) {
      auto l  = enumerate_subgroups(amb, {}, LatticeMethod::exhaustive);
      auto gs = l.table().from_group(a5);
      for (auto const& k : all_maximal_x_subgroups(x, l)) {
        auto h = l.table().to_group(l.table().from_bits(k & gs.elements));
        expected.insert(t.from_group(h).elements);
      }
    }
    for (auto const& r : out) {
      got.insert(t.from_group(r.subgroup).elements);
    }
    // D10 = F20 ∩ A5 and V4 = Sylow-2(S5) ∩ A5, with all their conjugates
    auto f20     = normalizer(s5, sylow_subgroup(s5, 5));
    auto d10_rep = t.from_group(intersection(f20, a5)).elements;
    auto v4_rep  = t.from_group(intersection(sylow_subgroup(s5, 2), a5)).elements;
    std::size_t d10 = 0, v4 = 0;
    for (auto const& bits : got) {
      auto h = t.to_group(t.from_bits(bits));
      if (are_conjugate_subgroups(a5, h, t.to_group(t.from_bits(d10_rep)))) {
        ++d10;
      }
      if (are_conjugate_subgroups(a5, h, t.to_group(t.from_bits(v4_rep)))) {
        ++v4;
      }
    }
    Outcome o;
    o.ok = got == expected && f20.order() == 20 && t.from_bits(d10_rep).order == 10
           && t.from_bits(v4_rep).order == 4 && d10 == 6 && v4 == 5;
    o.detail = std::to_string(out.size()) + " subgroups (oracle "
               + std::to_string(expected.size()) + "): D10 class " + std::to_string(d10)
               + ", V4 class " + std::to_string(v4);
    return o;
  }

  Outcome socle() {
    Outcome o;
    for (auto name : {"sym(5)", "sym(6)"}) {
      auto          t0 = Clock::now();
      GroupAnalysis an(name, make_group(name));
      auto          r  = check_socle_intersection(an);
      double        dt = seconds_since(t0);
      o.ok &= r.verdict == Verdict::pass && dt <= 300;
      o.detail += std::string(o.detail.empty() ? "" : "; ") + name + " "
                  + to_string(r.verdict) + " over "
                  + (r.witness.contains("instances") ? r.witness["instances"].dump() : "?")
                  + " maximal classes in " + std::to_string(dt) + " s";
    }
    return o;
  }

  Outcome engine() {
    Outcome     o;
    std::size_t membership = 0, lattices = 0, normalizers = 0;
    std::mt19937 rng(2024);
    for (auto const& e : default_catalog(500)) {
      auto const& g = e.group;
      if (g.order() <= 200) {
        auto naive = naive_closure(g);
        std::unordered_set<Permutation, PermutationHash> set(naive.begin(), naive.end());
        bool ok = naive.size() == g.order();
        for (auto const& p : naive) {
          ok &= g.contains(p);
        }
        std::vector<point_type> pts(g.degree());
        for (std::size_t i = 0; i < pts.size(); ++i) {
          pts[i] = static_cast<point_type>(i);
        }
        for (int k = 0; k < 50; ++k) {
          std::shuffle(pts.begin(), pts.end(), rng);
          Permutation p(pts);
          ok &= g.contains(p) == (set.count(p) != 0);
        }
        if (!ok) {
          o.ok = false;
          std::printf("    membership mismatch: %s\n", e.name.c_str());
        }
        ++membership;
      }
      if (g.order() <= 100) {
        auto a = enumerate_subgroups(g, {}, LatticeMethod::cyclic_extension);
        auto b = enumerate_subgroups(g, {}, LatticeMethod::exhaustive);
        auto sa = a.all_subgroups(), sb = b.all_subgroups();
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb || a.size() != b.size()) {
          o.ok = false;
          std::printf("    lattice mismatch: %s\n", e.name.c_str());
        }
        ++lattices;
      }
      auto l = enumerate_subgroups(g);
      for (std::size_t i = 0; i < l.size(); ++i) {
        auto h = l.representative(i);
        if (!(normalizer_scan(g, h) == normalizer_backtrack(g, h))) {
          o.ok = false;
          std::printf("    normalizer mismatch: %s class %zu\n", e.name.c_str(), i);
        }
        ++normalizers;
      }
    }
    o.detail = std::to_string(membership) + " groups membership, " + std::to_string(lattices)
               + " lattices, " + std::to_string(normalizers) + " normalizer pairs";
    return o;
  }

}  // namespace

int main() {
  struct Criterion {
    int                      id;
    char const*              name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "subnormal WH index", wh_subnormal},
      {2, "Sylow specialization", sylow},
      {3, "subnormality criterion", subnormality},
      {4, "projection conjugacy", projections},
      {5, "direct products", direct},
      {6, "separable single class", chunikhin},
      {7, "wreath counterexample", wreath},
      {8, "almost simple strong submax", almost_simple},
      {9, "socle intersection", socle},
      {10, "engine oracle equivalence", engine},
  };
  int failures = 0;
  for (auto const& c : criteria) {
    auto    t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.ok     = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.ok;
    std::printf("criterion %2d %-4s %-28s %s [%.2f s]\n", c.id, o.ok ? "PASS" : "FAIL",
                c.name, o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
