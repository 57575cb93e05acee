#include <catch_amalgamated.hpp>

#include <set>

#include "glab/catalog.hpp"
#include "glab/lattice.hpp"
#include "glab/xmax.hpp"

using namespace glab;

namespace {
  std::multiset<std::uint64_t> orders(std::vector<XMaxClass> const& v) {
    std::multiset<std::uint64_t> out;
    for (auto const& c : v) {
      out.insert(c.rep.order());
    }
    return out;
  }

  std::multiset<std::uint64_t> orders(std::vector<SubmaxResult> const& v) {
    std::multiset<std::uint64_t> out;
    for (auto const& c : v) {
      out.insert(c.subgroup.order());
    }
    return out;
  }

  std::set<std::vector<Permutation>> element_sets(
      std::vector<SubmaxResult> const& v) {
    std::set<std::vector<Permutation>> out;
    for (auto const& r : v) {
      auto e = r.subgroup.elements();
      std::sort(e.begin(), e.end());
      out.insert(e);
    }
    return out;
  }
}  // namespace

TEST_CASE("certification by one-element extensions", "[xmax]") {
  auto s4 = make_group("sym(4)");
  auto x2 = ClassSpec::pi_groups({2});
  CHECK(certify_x_maximal(x2, s4, sylow_subgroup(s4, 2)));
  CHECK_FALSE(certify_x_maximal(x2, s4, make_group("gens[4; (1 2)(3 4), (1 3)(2 4)]")));
  CHECK(certify_x_maximal(ClassSpec::all_groups(), s4, s4));
  CHECK_THROWS_AS(certify_x_maximal(x2, s4, s4), PreconditionError);
  auto r = certify_x_maximal_report(x2, s4, sylow_subgroup(s4, 2));
  CHECK(r.closures == 2);
  CHECK(r.scanned == 16);
}

TEST_CASE("m_X from the lattice", "[xmax]") {
  auto a5 = make_group("alt(5)");
  CHECK(orders(maximal_x_subgroups(ClassSpec::all_groups(), a5))
        == std::multiset<std::uint64_t>{60});
  CHECK(orders(maximal_x_subgroups(ClassSpec::solvable(), a5))
        == std::multiset<std::uint64_t>{6, 10, 12});
  CHECK(orders(maximal_x_subgroups(ClassSpec::pi_groups({2, 5}), a5))
        == std::multiset<std::uint64_t>{4, 10});
  auto s5 = make_group("sym(5)");
  CHECK(orders(maximal_x_subgroups(ClassSpec::pi_groups({2, 5}), s5))
        == std::multiset<std::uint64_t>{8, 20});
}

TEST_CASE("Sylow classes are the p-maximal subgroups", "[xmax]") {
  for (auto const& c : default_catalog(400)) {
    INFO(c.name);
    auto l = enumerate_subgroups(c.group);
    for (auto p : prime_divisors(c.group.order())) {
      auto m = maximal_x_subgroups(ClassSpec::pi_groups({p}), l);
      REQUIRE(m.size() == 1);
      CHECK(m[0].rep.order() == p_part(c.group.order(), p));
    }
  }
  auto w = make_group("wreath(alt(5), cyclic(2))");
  auto m = maximal_x_subgroups(ClassSpec::pi_groups({5}), w);
  REQUIRE(m.size() == 1);
  CHECK(m[0].rep.order() == 25);
  CHECK(m[0].count == 36);
}

TEST_CASE("certification agrees with lattice maximality", "[xmax][oracle]") {
  for (auto const& c : default_catalog(500)) {
    INFO(c.name);
    auto l = enumerate_subgroups(c.group);
    for (auto const& x : standard_family(c.group)) {
      INFO(x.to_string());
      auto maxes = x_maximal_classes(x, l);
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (!is_member(x, l.table(), l.classes()[i].rep)) {
          continue;
        }
        bool lattice_max = std::find(maxes.begin(), maxes.end(), i) != maxes.end();
        REQUIRE(certify_x_maximal(x, c.group, l.representative(i)) == lattice_max);
      }
    }
  }
}

TEST_CASE("ambient-relative intersections", "[xmax]") {
  auto x  = ClassSpec::pi_groups({2, 5});
  auto a5 = make_group("alt(5)");
  auto s5 = make_group("sym(5)");
  auto r  = submax_in_ambient(x, s5, a5, EmbeddingMode::normal);
  auto os = orders(r);
  CHECK(os.count(10) == 6);  // D10 = F20 ∩ A5, one per Sylow-5
  CHECK(os.count(4) == 5);   // V4 = D8 ∩ A5, one per Sylow-2 of A5
  for (auto const& h : r) {
    CHECK(certify_x_maximal(x, s5, h.witness.witness_max));
    CHECK(intersection(h.witness.witness_max, a5) == h.subgroup);
  }
  // G* = G gives all of m_X(G)
  auto self = submax_in_ambient(x, a5, a5, EmbeddingMode::normal);
  CHECK(orders(self) == std::multiset<std::uint64_t>{4, 4, 4, 4, 4, 10, 10, 10, 10, 10, 10});
  auto triv = submax_in_ambient(x, s5, PermGroup::trivial(5), EmbeddingMode::normal);
  REQUIRE(triv.size() == 1);
  CHECK(triv[0].subgroup.order() == 1);
  CHECK_THROWS_AS(submax_in_ambient(x, s5, PermGroup(5, {Permutation::from_cycles(5, "(1 2)")}),
                                    EmbeddingMode::normal),
                  PreconditionError);
}

TEST_CASE("m_X ⊆ normal-mode ⊆ subnormal-mode", "[xmax][property]") {
  auto s4 = make_group("sym(4)");
  auto v4 = PermGroup(4, {Permutation::from_cycles(4, "(1 2)(3 4)"),
                          Permutation::from_cycles(4, "(1 3)(2 4)")});
  auto a4 = make_group("alt(4)");
  for (auto const& x : standard_family(s4)) {
    INFO(x.to_string());
    for (auto const& g : {a4, v4}) {
      auto own   = element_sets(submax_in_ambient(x, g, g, EmbeddingMode::normal));
      auto norm  = element_sets(submax_in_ambient(x, s4, g, EmbeddingMode::normal));
      auto subn  = element_sets(submax_in_ambient(x, s4, g, EmbeddingMode::subnormal));
      CHECK(std::includes(norm.begin(), norm.end(), own.begin(), own.end()));
      CHECK(std::includes(subn.begin(), subn.end(), norm.begin(), norm.end()));
    }
  }
  CHECK_THROWS_AS(submax_in_ambient(ClassSpec::solvable(), s4,
                                    PermGroup(4, {Permutation::from_cycles(4, "(1 2)(3 4)")}),
                                    EmbeddingMode::normal),
                  PreconditionError);
}

TEST_CASE("intersections with subnormal subgroups stay submaximal",
          "[xmax][property]") {
  for (auto const* name : {"sym(4)", "direct(sym(3), cyclic(2))", "dihedral(8)"}) {
    auto gstar = make_group(name);
    auto l     = enumerate_subgroups(gstar);
    std::vector<PermGroup> subnormals;
    for (std::size_t i = 0; i < l.size(); ++i) {
      for (auto const& m : l.classes()[i].members) {
        auto h = l.table().to_group(l.table().from_bits(m));
        if (is_subnormal(gstar, h).subnormal) {
          subnormals.push_back(h);
        }
      }
    }
    for (auto const& x : standard_family(gstar)) {
      for (auto const& g : subnormals) {
        auto hs = submax_in_ambient(x, gstar, g, EmbeddingMode::subnormal);
        for (auto const& n : subnormals) {
          if (!n.is_subgroup_of(g)) {
            continue;
          }
          auto ns = element_sets(submax_in_ambient(x, gstar, n, EmbeddingMode::subnormal));
          for (auto const& h : hs) {
            auto e = intersection(h.subgroup, n).elements();
            std::sort(e.begin(), e.end());
            REQUIRE(ns.count(e) == 1);
          }
        }
      }
    }
  }
}

TEST_CASE("almost simple overgroups", "[xmax]") {
  auto a6  = make_group("a6");
  auto aut = make_group("aut_a6");
  auto ov  = normalizing_overgroups(a6, aut, a6);
  REQUIRE(ov.size() == 5);
  std::vector<std::uint64_t> os;
  for (auto const& o : ov) {
    os.push_back(o.order());
  }
  CHECK(os == std::vector<std::uint64_t>{360, 720, 720, 720, 1440});
  auto s5 = make_group("sym(5)");
  CHECK(normalizing_overgroups(s5, s5, make_group("alt(5)")).size() == 1);
}

TEST_CASE("strongly submaximal subgroups of A5", "[xmax]") {
  auto x  = ClassSpec::pi_groups({2, 5});
  auto a5 = make_group("alt(5)");
  auto s5 = make_group("sym(5)");
  auto r  = strong_submax_almost_simple(x, a5, s5);
  auto os = orders(r);
  CHECK(os.count(10) == 6);
  CHECK(os.count(4) == 5);
  // G = Aut: only G* = G
  auto top  = element_sets(strong_submax_almost_simple(x, s5, s5));
  auto self = element_sets(submax_in_ambient(x, s5, s5, EmbeddingMode::normal));
  CHECK(top == self);
  CHECK_THROWS_AS(strong_submax_almost_simple(ClassSpec::all_groups(), a5, s5),
                  PreconditionError);
  CHECK_THROWS_AS(strong_submax_almost_simple(x, make_group("sym(4)"), make_group("sym(4)")),
                  PreconditionError);
}

TEST_CASE("direct products of witnessed parts", "[xmax]") {
  auto x  = ClassSpec::pi_groups({2});
  auto g  = make_group("direct(sym(3), sym(3))");
  auto g1 = PermGroup(6, {Permutation::from_cycles(6, "(1 2 3)"), Permutation::from_cycles(6, "(1 2)")});
  auto g2 = PermGroup(6, {Permutation::from_cycles(6, "(4 5 6)"), Permutation::from_cycles(6, "(4 5)")});
  auto p1 = submax_in_ambient(x, g1, g1, EmbeddingMode::normal);
  auto p2 = submax_in_ambient(x, g2, g2, EmbeddingMode::normal);
  REQUIRE(p1.size() == 3);
  auto out = direct_product_submax({{g1, p1}, {g2, p2}});
  REQUIRE(out.size() == 9);
  for (auto const& r : out) {
    CHECK(r.subgroup.order() == 4);
    CHECK(certify_x_maximal(x, g, r.subgroup));
    CHECK(r.witness.ambient == g);
  }
  auto one = direct_product_submax({{g1, p1}});
  CHECK(element_sets(one) == element_sets(p1));
  CHECK_THROWS_AS(direct_product_submax({{g1, p1}, {g1, p1}}), PreconditionError);
}

TEST_CASE("wreath product base subgroup is X-maximal", "[xmax][slow]") {
  auto w = make_group("wreath(alt(5), cyclic(2))");
  // V4 on the first copy, D10 on the second
  std::vector<Permutation> gens = {
      Permutation::from_cycles(10, "(1 2)(3 4)"), Permutation::from_cycles(10, "(1 3)(2 4)"),
      Permutation::from_cycles(10, "(6 7 8 9 10)"), Permutation::from_cycles(10, "(7 10)(8 9)")};
  PermGroup h(10, gens);
  REQUIRE(h.order() == 40);
  REQUIRE(h.is_subgroup_of(w));
  auto r = certify_x_maximal_report(ClassSpec::pi_groups({2, 5}), w, h);
  CHECK(r.maximal);
  CHECK(r.scanned + h.order() == 7200);
}
