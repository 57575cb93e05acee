#include <catch_amalgamated.hpp>

#include <functional>
#include <numeric>
#include <random>

#include "glab/catalog.hpp"
#include "glab/structure.hpp"

using namespace glab;

TEST_CASE("constructors", "[catalog]") {
  auto s4 = make_group("sym(4)");
  CHECK(s4.degree() == 4);
  CHECK(s4.order() == 24);
  CHECK(make_group("alt(5)").order() == 60);
  CHECK(make_group("cyclic(1)").order() == 1);
  CHECK(make_group("cyclic(12)").order() == 12);
  CHECK(make_group("dihedral(2)").order() == 2);
  CHECK(make_group("dihedral(4)").order() == 4);
  CHECK(make_group("dihedral(10)").order() == 10);
  CHECK(make_group("dihedral(10)").degree() == 5);
  CHECK(make_group("direct(sym(3), cyclic(5))").order() == 30);
  CHECK(make_group("direct(sym(3), cyclic(5))").degree() == 8);
  auto v4 = make_group("gens[4; (1 2)(3 4), (1 3)(2 4)]");
  CHECK(v4 == make_group("v4"));
  CHECK(make_group("gens[3]").order() == 1);
}

TEST_CASE("wreath product", "[catalog]") {
  auto w = make_group("wreath(alt(5), cyclic(2))");
  CHECK(w.degree() == 10);
  CHECK(w.order() == 7200);
  auto c2wc2 = make_group("wreath(cyclic(2), cyclic(2))");
  CHECK(c2wc2.order() == 8);
  CHECK(make_group("wreath(cyclic(2), cyclic(3))").order() == 24);
}

TEST_CASE("named groups", "[catalog]") {
  CHECK(make_group("sl23").order() == 24);
  CHECK(make_group("gl23").order() == 48);
  CHECK(make_group("psl27").order() == 168);
  CHECK(make_group("pgl27").order() == 336);
  CHECK(make_group("a6").order() == 360);
  CHECK(make_group("aut_a6").order() == 1440);
  CHECK(make_group("aut_a6_pair").order() == 1440);
  CHECK(is_simple(make_group("psl27")));
  CHECK(is_simple(make_group("a6")));
}

TEST_CASE("sl23 is solvable with a central involution", "[catalog]") {
  auto g = make_group("sl23");
  REQUIRE(is_solvable(g));
  auto mins = minimal_normal_subgroups(g);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].order() == 2);
}

TEST_CASE("almost simple pairs", "[catalog]") {
  for (auto const& p : almost_simple_pairs()) {
    INFO(p.name);
    CHECK(p.socle.is_subgroup_of(p.aut));
    CHECK(is_normal_subgroup(p.aut, p.socle));
    CHECK(is_simple(p.socle));
    CHECK(derived_subgroup(p.aut) == p.socle);
  }
}

TEST_CASE("parse errors", "[catalog]") {
  auto pos = [](char const* text) {
    try {
      parse_group(text);
    } catch (ParseError const& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(pos("sym(0)") == 4);
  CHECK(pos("sym(4") == 5);
  CHECK(pos("foo") == 0);
  CHECK(pos("sym(99999999)") == 4);
  CHECK(pos("sym(21)") == 4);
  CHECK(pos("dihedral(7)") == 9);
  CHECK(pos("direct(sym(3))") == 0);
  CHECK(pos("gens[3; (1 4)]") == 11);
  CHECK(pos("gens[3; (1 2), x]") == 15);
  CHECK(pos("sym(3) x") == 7);
  CHECK(pos("wreath(sym(2), sym(2), sym(2))") == 0);
  CHECK(pos("sym(4)") == -1);
}

TEST_CASE("print and parse round trip", "[catalog][property]") {
  for (auto const& name : default_catalog_names()) {
    auto e = parse_group(name);
    CHECK(parse_group(e.to_string()) == e);
  }
  std::mt19937                  rng(12345);
  std::function<GroupExpr(int)> random_expr = [&](int depth) {
    GroupExpr e;
    auto      k = std::uniform_int_distribution<int>(0, depth > 0 ? 6 : 4)(rng);
    switch (k) {
      case 0: e = parse_group("sym(" + std::to_string(rng() % 6 + 1) + ")"); break;
      case 1: e = parse_group("cyclic(" + std::to_string(rng() % 9 + 1) + ")"); break;
      case 2: e = parse_group("dihedral(" + std::to_string(2 * (rng() % 6 + 1)) + ")"); break;
      case 3: e = parse_group("v4"); break;
      case 4: {
        e.kind = GroupExpr::Kind::gens;
        e.n    = rng() % 6 + 1;
        for (int i = 0, m = int(rng() % 3); i < m; ++i) {
          std::vector<point_type> img(e.n);
          std::iota(img.begin(), img.end(), point_type(0));
          std::shuffle(img.begin(), img.end(), rng);
          e.perms.emplace_back(std::move(img));
        }
        break;
      }
      default: {
        e.kind = k == 5 ? GroupExpr::Kind::direct : GroupExpr::Kind::wreath;
        e.args = {random_expr(depth - 1), random_expr(depth - 1)};
      }
    }
    return e;
  };
  for (int trial = 0; trial < 300; ++trial) {
    auto e    = random_expr(2);
    auto text = e.to_string();
    INFO(text);
    CHECK(parse_group(text) == e);
  }
}

TEST_CASE("default catalog", "[catalog]") {
  auto cat = default_catalog();
  CHECK(cat.size() == default_catalog_names().size());
  for (auto const& c : cat) {
    INFO(c.name);
    CHECK(c.group.order() >= 1);
  }
  CHECK(default_catalog(400).size() + 2 == cat.size());
}
