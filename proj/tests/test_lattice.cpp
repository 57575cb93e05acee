#include <catch_amalgamated.hpp>

#include <set>

#include "glab/catalog.hpp"
#include "glab/lattice.hpp"

using namespace glab;

namespace {
  std::set<std::vector<Bitset>> member_sets(SubgroupLattice const& l) {
    std::set<std::vector<Bitset>> out;
    for (auto const& c : l.classes()) {
      out.insert(c.members);
    }
    return out;
  }

  // Every subset of a small group closed under multiplication, found by
  // brute force over subsets generated by at most two elements.
  std::size_t two_generated_subgroups(PermGroup const& g) {
    auto                          elems = g.elements();
    std::set<std::vector<Permutation>> seen;
    for (auto const& a : elems) {
      for (auto const& b : elems) {
        auto h = naive_closure(PermGroup(g.degree(), {a, b}));
        std::sort(h.begin(), h.end());
        seen.insert(h);
      }
    }
    return seen.size();
  }
}  // namespace

TEST_CASE("classes of Sym(3)", "[lattice]") {
  auto l = enumerate_subgroups(make_group("sym(3)"));
  REQUIRE(l.size() == 4);
  std::vector<std::pair<std::size_t, std::size_t>> shape;
  for (auto const& c : l.classes()) {
    shape.emplace_back(c.order(), c.conjugates());
  }
  CHECK(shape == std::vector<std::pair<std::size_t, std::size_t>>{
                     {1, 1}, {2, 3}, {3, 1}, {6, 1}});
  CHECK(l.total_subgroups() == 6);
}

TEST_CASE("class counts of small groups", "[lattice]") {
  CHECK(enumerate_subgroups(make_group("sym(4)")).size() == 11);
  CHECK(enumerate_subgroups(make_group("sym(4)")).total_subgroups() == 30);
  CHECK(enumerate_subgroups(make_group("alt(5)")).size() == 9);
  CHECK(enumerate_subgroups(make_group("alt(5)")).total_subgroups() == 59);
  CHECK(enumerate_subgroups(make_group("sym(5)")).size() == 19);
  CHECK(enumerate_subgroups(make_group("sym(5)")).total_subgroups() == 156);
}

TEST_CASE("S4, A4 and D8 are 2-generated so brute force finds all", "[lattice]") {
  for (auto const* name : {"sym(4)", "alt(4)", "dihedral(8)", "sl23", "sym(3)"}) {
    INFO(name);
    auto g = make_group(name);
    CHECK(enumerate_subgroups(g).total_subgroups() == two_generated_subgroups(g));
  }
}

TEST_CASE("cyclic extension agrees with exhaustive enumeration", "[lattice][oracle]") {
  for (auto const& c : default_catalog(100)) {
    INFO(c.name);
    auto a = enumerate_subgroups(c.group, {}, LatticeMethod::cyclic_extension);
    auto b = enumerate_subgroups(c.group, {}, LatticeMethod::exhaustive);
    CHECK(a.size() == b.size());
    CHECK(member_sets(a) == member_sets(b));
  }
}

TEST_CASE("lattice cap", "[lattice]") {
  Limits lim;
  lim.lattice_cap = 100;
  CHECK_THROWS_AS(enumerate_subgroups(make_group("sym(5)"), lim), CapExceeded);
}

TEST_CASE("containment and maximality in the lattice", "[lattice]") {
  auto l = enumerate_subgroups(make_group("sym(4)"));
  std::vector<std::size_t> maxes;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l.is_maximal_subgroup(i)) {
      maxes.push_back(l.classes()[i].order());
    }
  }
  std::sort(maxes.begin(), maxes.end());
  CHECK(maxes == std::vector<std::size_t>{6, 8, 12});
}

TEST_CASE("Sylow subgroups", "[lattice]") {
  auto s4 = make_group("sym(4)");
  auto p  = sylow_subgroup(s4, 2);
  CHECK(p.order() == 8);
  CHECK(p.is_subgroup_of(s4));
  CHECK(sylow_subgroup(s4, 3).order() == 3);
  CHECK(sylow_subgroup(s4, 5).order() == 1);
  CHECK_THROWS_AS(sylow_subgroup(s4, 4), PreconditionError);
  CHECK(all_sylow_subgroups(s4, 2).size() == 3);
  CHECK(all_sylow_subgroups(s4, 3).size() == 4);
  CHECK_THROWS_AS(all_sylow_subgroups(s4, 5), PreconditionError);
  auto w = make_group("wreath(alt(5), cyclic(2))");
  CHECK(sylow_subgroup(w, 2).order() == 32);
  CHECK(sylow_subgroup(w, 5).order() == 25);
}

TEST_CASE("Sylow subgroups match the lattice", "[lattice][oracle]") {
  for (auto const& c : default_catalog(200)) {
    INFO(c.name);
    auto l = enumerate_subgroups(c.group);
    for (auto p : prime_divisors(c.group.order())) {
      auto sylows = all_sylow_subgroups(c.group, p);
      auto target = p_part(c.group.order(), p);
      std::size_t classes = 0;
      for (auto const& cls : l.classes()) {
        if (cls.order() == target) {
          ++classes;
          CHECK(cls.conjugates() == sylows.size());
        }
      }
      CHECK(classes == 1);
    }
  }
}

TEST_CASE("containment up to conjugacy", "[lattice]") {
  auto s4 = make_group("sym(4)");
  auto a4 = make_group("alt(4)");
  auto t  = PermGroup(4, {Permutation::from_cycles(4, "(1 2)")});
  CHECK_FALSE(contained_up_to_conjugacy(s4, t, a4));
  auto u = PermGroup(4, {Permutation::from_cycles(4, "(3 4)")});
  auto d = sylow_subgroup(s4, 2);
  CHECK(contained_up_to_conjugacy(s4, u, d));
  CHECK(contained_up_to_conjugacy(s4, t, s4));
}
