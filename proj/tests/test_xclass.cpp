#include <catch_amalgamated.hpp>

#include "glab/catalog.hpp"
#include "glab/lattice.hpp"
#include "glab/xclass.hpp"

using namespace glab;

using P = std::vector<std::uint64_t>;

TEST_CASE("membership", "[xclass]") {
  auto s4 = make_group("sym(4)");
  auto a5 = make_group("alt(5)");
  CHECK_FALSE(is_member(ClassSpec::pi_groups({2}), s4));
  CHECK(is_member(ClassSpec::pi_groups({2, 3}), s4));
  CHECK_FALSE(is_member(ClassSpec::solvable(), a5));
  CHECK(is_member(ClassSpec::solvable(), s4));
  CHECK_FALSE(is_member(ClassSpec::bounded_factors(60), a5));
  CHECK(is_member(ClassSpec::bounded_factors(61), a5));
  CHECK(is_member(ClassSpec::bounded_factors(2), s4));
  CHECK_FALSE(is_member(ClassSpec::solvable_pi({2}), s4));
  CHECK(is_member(ClassSpec::solvable_pi({2, 3}), s4));
  CHECK_FALSE(is_member(ClassSpec::solvable_pi({2, 3, 5}), a5));
  CHECK(is_member(ClassSpec::all_groups(), a5));
  CHECK(is_member(ClassSpec::pi_groups({}), make_group("cyclic(1)")));
}

TEST_CASE("pi of groups and classes", "[xclass]") {
  CHECK(pi_of_group(make_group("cyclic(1)")).empty());
  CHECK(pi_of_group(make_group("sym(4)")) == P{2, 3});
  CHECK(pi_of_group(make_group("alt(5)")) == P{2, 3, 5});
  CHECK(ClassSpec::pi_groups({3, 2, 3}).pi() == P{2, 3});
  CHECK_FALSE(ClassSpec::solvable().pi().has_value());
  CHECK_FALSE(ClassSpec::bounded_factors(60).pi().has_value());
  CHECK_THROWS_AS(ClassSpec::pi_groups({4}), PreconditionError);
}

TEST_CASE("no nontrivial X-subgroups", "[xclass]") {
  CHECK(has_no_nontrivial_x_subgroup(ClassSpec::pi_groups({2, 3}), make_group("cyclic(5)")));
  CHECK_FALSE(has_no_nontrivial_x_subgroup(ClassSpec::pi_groups({3}), make_group("sym(4)")));
  CHECK_FALSE(has_no_nontrivial_x_subgroup(ClassSpec::solvable(), make_group("cyclic(2)")));
  CHECK(has_no_nontrivial_x_subgroup(ClassSpec::solvable(), make_group("cyclic(1)")));
}

TEST_CASE("radicals", "[xclass]") {
  auto s4 = make_group("sym(4)");
  CHECK(o_x(ClassSpec::pi_groups({2}), s4).order() == 4);
  CHECK(o_x(ClassSpec::pi_groups({3}), s4).order() == 1);
  CHECK(o_x(ClassSpec::solvable(), s4) == s4);
  CHECK(o_pi_prime({2}, s4).order() == 1);
  CHECK(o_pi_prime({2, 3}, s4).order() == 1);
  auto g = make_group("direct(cyclic(5), sym(3))");
  auto o = o_pi_prime({5}, g);
  CHECK(o.order() == 6);
  CHECK(o == make_group("gens[8; (7 8), (6 7 8)]"));
  CHECK(o_x(ClassSpec::solvable(), make_group("direct(alt(5), cyclic(3))")).order() == 3);
}

TEST_CASE("separability", "[xclass]") {
  auto a5 = make_group("alt(5)");
  CHECK_FALSE(is_x_separable(ClassSpec::pi_groups({2, 3}), a5));
  CHECK(is_x_separable(ClassSpec::bounded_factors(61), a5));
  CHECK(is_x_separable(ClassSpec::pi_groups({7}), a5));
  for (auto const& x : standard_family(make_group("sym(4)"))) {
    CHECK(is_x_separable(x, make_group("sym(4)")));
  }
}

TEST_CASE("class text syntax", "[xclass]") {
  for (auto const* s : {"pi{2,3}", "pi{}", "solvable", "solvable-pi{2,5}",
                        "bounded<60", "all"}) {
    CHECK(ClassSpec::parse(s).to_string() == s);
  }
  CHECK(ClassSpec::parse("pi{3, 2}") == ClassSpec::pi_groups({2, 3}));
  CHECK_THROWS_AS(ClassSpec::parse("pi{4}"), ParseError);
  CHECK_THROWS_AS(ClassSpec::parse("pi{2"), ParseError);
  CHECK_THROWS_AS(ClassSpec::parse("bounded<0"), ParseError);
  CHECK_THROWS_AS(ClassSpec::parse("nilpotent"), ParseError);
}

TEST_CASE("standard family", "[xclass]") {
  auto f = standard_family(make_group("sym(4)"));
  // 4 pi-sets twice, solvable, bounds {2, 24, 60, 61}
  CHECK(f.size() == 4 + 1 + 4 + 4);
}

// Closure under subgroups, quotients and extensions, on what the catalog
// provides: every subgroup class, every quotient by a normal subgroup and
// every normal subgroup with its quotient.
TEST_CASE("classes are closed under sections and extensions", "[xclass][property]") {
  for (auto const& c : default_catalog(200)) {
    INFO(c.name);
    auto const& g       = c.group;
    auto        lattice = enumerate_subgroups(g);
    auto        normals = normal_subgroups(g);
    std::vector<PermGroup> quotients;
    for (auto const& n : normals) {
      quotients.push_back(quotient(g, n).image_group());
    }
    for (auto const& x : standard_family(g)) {
      INFO(x.to_string());
      bool in = is_member(x, g);
      if (in) {
        for (std::size_t i = 0; i < lattice.size(); ++i) {
          REQUIRE(is_member(x, lattice.representative(i)));
        }
        for (auto const& q : quotients) {
          REQUIRE(is_member(x, q));
        }
      }
      for (std::size_t k = 0; k < normals.size(); ++k) {
        if (is_member(x, normals[k]) && is_member(x, quotients[k])) {
          REQUIRE(in);
        }
      }
      // membership through the indexed engine agrees
      for (std::size_t i = 0; i < lattice.size(); ++i) {
        REQUIRE(is_member(x, lattice.table(), lattice.classes()[i].rep)
                == is_member(x, lattice.representative(i)));
      }
    }
  }
}

TEST_CASE("radical is the largest normal X-subgroup", "[xclass][property]") {
  for (auto const& c : default_catalog(500)) {
    INFO(c.name);
    auto normals = normal_subgroups(c.group);
    for (auto const& x : standard_family(c.group)) {
      INFO(x.to_string());
      auto o = o_x(x, c.group);
      REQUIRE(is_normal_subgroup(c.group, o));
      REQUIRE(is_member(x, o));
      for (auto const& n : normals) {
        if (is_member(x, n)) {
          REQUIRE(n.is_subgroup_of(o));
        }
      }
      REQUIRE(o_x_greedy(x, c.group) == o);
    }
  }
}

TEST_CASE("pi'-groups are exactly the groups without X-subgroups",
          "[xclass][property]") {
  for (auto const& c : default_catalog(500)) {
    INFO(c.name);
    auto lattice = enumerate_subgroups(c.group);
    for (auto const& x : standard_family(c.group)) {
      bool none = true;
      for (std::size_t i = 0; i < lattice.size(); ++i) {
        if (lattice.classes()[i].order() > 1
            && is_member(x, lattice.table(), lattice.classes()[i].rep)) {
          none = false;
        }
      }
      REQUIRE(has_no_nontrivial_x_subgroup(x, c.group) == none);
    }
  }
}
