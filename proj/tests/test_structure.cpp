#include <catch_amalgamated.hpp>

#include "glab/catalog.hpp"
#include "glab/lattice.hpp"
#include "glab/structure.hpp"

using namespace glab;

namespace {
  Permutation cyc(std::size_t n, char const* text) {
    return Permutation::from_cycles(n, text);
  }

  PermGroup v4_in_s4() {
    return PermGroup(4, {cyc(4, "(1 2)(3 4)"), cyc(4, "(1 3)(2 4)")});
  }
}  // namespace

TEST_CASE("normal closure", "[structure]") {
  auto s4 = make_group("sym(4)");
  CHECK(normal_closure(s4, PermGroup(4, {cyc(4, "(1 2)")})) == s4);
  CHECK(normal_closure(s4, PermGroup(4, {cyc(4, "(1 2)(3 4)")})) == v4_in_s4());
  CHECK(normal_closure(s4, PermGroup::trivial(4)).order() == 1);
}

TEST_CASE("subnormality by iterated closure", "[structure]") {
  auto s4 = make_group("sym(4)");
  auto a  = PermGroup(4, {cyc(4, "(1 2)(3 4)")});
  auto r  = is_subnormal(s4, a);
  CHECK(r.subnormal);
  CHECK(r.depth() == 2);
  CHECK(r.chain[1] == v4_in_s4());
  auto t = is_subnormal(s4, PermGroup(4, {cyc(4, "(1 2)")}));
  CHECK_FALSE(t.subnormal);
  CHECK(is_subnormal(s4, s4).depth() == 0);
}

TEST_CASE("solvability and derived series", "[structure]") {
  CHECK(is_solvable(make_group("sym(4)")));
  CHECK_FALSE(is_solvable(make_group("alt(5)")));
  auto ds = derived_series(make_group("sym(4)"));
  REQUIRE(ds.size() == 4);
  CHECK(ds[1].order() == 12);
  CHECK(ds[2].order() == 4);
  CHECK(ds[3].order() == 1);
}

TEST_CASE("normal and minimal normal subgroups", "[structure]") {
  auto s4 = make_group("sym(4)");
  auto ns = normal_subgroups(s4);
  std::vector<std::uint64_t> orders;
  for (auto const& n : ns) {
    orders.push_back(n.order());
  }
  CHECK(orders == std::vector<std::uint64_t>{1, 4, 12, 24});
  auto mins = minimal_normal_subgroups(s4);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0] == v4_in_s4());
  CHECK_THROWS_AS(minimal_normal_subgroups(make_group("cyclic(1)")),
                  PreconditionError);
  CHECK(minimal_normal_subgroups(make_group("v4")).size() == 3);
}

TEST_CASE("simplicity", "[structure]") {
  CHECK(is_simple(make_group("alt(5)")));
  CHECK(is_simple(make_group("cyclic(7)")));
  CHECK_FALSE(is_simple(make_group("sym(4)")));
  CHECK_FALSE(is_simple(make_group("cyclic(1)")));
  CHECK_FALSE(is_simple(make_group("sym(5)")));
}

TEST_CASE("composition series", "[structure]") {
  auto s4 = make_group("sym(4)");
  auto cs = composition_series(s4);
  cs.validate();
  CHECK(cs.factor_orders() == std::vector<std::uint64_t>{2, 3, 2, 2});
  CHECK(composition_factor_orders(s4) == std::vector<std::uint64_t>{2, 2, 2, 3});
  CHECK(composition_factor_orders(make_group("sym(5)"))
        == std::vector<std::uint64_t>{2, 60});
  auto small = composition_series(s4, {}, SeriesChoice::smallest);
  small.validate();
  CHECK(small.length() == 4);
}

TEST_CASE("Jordan-Holder over the catalog", "[structure][property]") {
  for (auto const& c : default_catalog(400)) {
    INFO(c.name);
    auto a = composition_series(c.group, {}, SeriesChoice::largest);
    auto b = composition_series(c.group, {}, SeriesChoice::smallest);
    a.validate();
    b.validate();
    auto fa = a.factor_orders(), fb = b.factor_orders();
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    CHECK(fa == fb);
    CHECK(fa == composition_factor_orders(c.group));
  }
}

TEST_CASE("quotients", "[structure]") {
  auto s4 = make_group("sym(4)");
  auto q  = quotient(s4, v4_in_s4());
  CHECK(q.image_group().order() == 6);
  CHECK(q.coset_count() == 6);
  CHECK(quotient(s4, make_group("alt(4)")).image_group().order() == 2);
  CHECK_THROWS_AS(quotient(s4, PermGroup(4, {cyc(4, "(1 2)")})),
                  PreconditionError);
  // the map is a homomorphism
  auto elems = s4.elements();
  for (auto const& x : elems) {
    for (auto const& y : elems) {
      REQUIRE(q.image(x * y) == q.image(x) * q.image(y));
    }
  }
}

// Projections of a subgroup onto the factors of a series, computed directly
// from cosets: |H^i| = |(H ∩ G_{i-1}) G_i| / |G_i|.
TEST_CASE("projections onto series factors", "[structure]") {
  auto            s4 = make_group("sym(4)");
  SubnormalSeries s{s4, {s4, make_group("alt(4)"), v4_in_s4(), PermGroup::trivial(4)}};
  s.validate();
  auto h = sylow_subgroup(s4, 2);
  std::vector<std::uint64_t> got, oracle;
  for (std::size_t i = 1; i <= s.length(); ++i) {
    got.push_back(project(s, h, i).order());
    auto meet = intersection(h, s.terms[i - 1]);
    oracle.push_back(join(meet, s.terms[i]).order() / s.terms[i].order());
  }
  CHECK(got == oracle);
  CHECK(got == std::vector<std::uint64_t>{2, 1, 4});
  CHECK_THROWS_AS(project(s, h, 0), PreconditionError);
}
