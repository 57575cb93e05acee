#ifndef GLAB_CATALOG_HPP_
#define GLAB_CATALOG_HPP_

// Group expressions and the built-in catalog.
//
//   expr  := sym(n) | alt(n) | cyclic(n) | dihedral(m)
//          | direct(expr, expr, ...) | wreath(expr, expr)
//          | gens[d; perm, perm, ...] | name
//
// Permutations inside gens[...] use 1-indexed cycle notation. dihedral(m)
// is the dihedral group of order m (m even): dihedral(2) is C2 on 2 points,
// dihedral(4) is the Klein group on 4 points, otherwise the symmetries of an
// (m/2)-gon.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "perm_group.hpp"
#include "permutation.hpp"

namespace glab {

  struct GroupExpr {
    enum class Kind { sym, alt, cyclic, dihedral, direct, wreath, gens, named };

    Kind                     kind = Kind::sym;
    std::uint64_t            n    = 1;  // sym/alt/cyclic/dihedral parameter, gens degree
    std::vector<GroupExpr>   args;
    std::vector<Permutation> perms;
    std::string              name;

    std::string to_string() const;

    friend bool operator==(GroupExpr const&, GroupExpr const&) = default;
  };

  namespace detail {
    constexpr std::size_t kMaxDegree = 4096;

    struct NamedGroup {
      char const*              name;
      std::size_t              degree;
      std::vector<char const*> gens;
    };

    // Matrix groups over F3 act on the 8 nonzero row vectors of F3^2, listed
    // as (0,1),(0,2),(1,0),(1,1),(1,2),(2,0),(2,1),(2,2); generators are
    // [[1,1],[0,1]], [[1,0],[1,1]] and, for GL, [[2,0],[0,1]].
    //
    // PSL(2,7) and PGL(2,7) act on the projective line 0..6, inf (points
    // 1..8) by x+1, 2x, -1/x and additionally 3x.
    //
    // Aut(A6) is PGammaL(2,9) on the projective line over F9 = F3[i],
    // a+bi -> point a+3b+1, inf -> 10, generated by x+1, (1+i)x, -1/x and the
    // Frobenius map x^3.
    inline std::vector<NamedGroup> const& named_groups() {
      static std::vector<NamedGroup> const table = {
          {"v4", 4, {"(1 2)(3 4)", "(1 3)(2 4)"}},
          {"sl23", 8, {"(3 4 5)(6 8 7)", "(1 4 7)(2 8 5)"}},
          {"gl23", 8, {"(3 4 5)(6 8 7)", "(1 4 7)(2 8 5)", "(3 6)(4 7)(5 8)"}},
          {"psl27",
           8,
           {"(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)", "(1 8)(2 7)(3 4)(5 6)"}},
          {"pgl27",
           8,
           {"(1 2 3 4 5 6 7)", "(2 4 3 7 5 6)", "(1 8)(2 7)(3 4)(5 6)"}},
          {"a6",
           10,
           {"(1 2 3)(4 5 6)(7 8 9)", "(2 7 3 4)(5 8 9 6)",
            "(1 10)(2 3)(5 8)(6 9)"}},
          {"aut_a6",
           10,
           {"(1 2 3)(4 5 6)(7 8 9)", "(2 5 7 8 3 9 4 6)",
            "(1 10)(2 3)(5 8)(6 9)", "(4 7)(5 8)(6 9)"}},
          // the ambient of the (A6, Aut(A6)) pair
          {"aut_a6_pair",
           10,
           {"(1 2 3)(4 5 6)(7 8 9)", "(2 5 7 8 3 9 4 6)",
            "(1 10)(2 3)(5 8)(6 9)", "(4 7)(5 8)(6 9)"}},
      };
      return table;
    }

    inline NamedGroup const* find_named(std::string_view name) {
      for (auto const& g : named_groups()) {
        if (name == g.name) {
          return &g;
        }
      }
      return nullptr;
    }

    class GroupParser {
     public:
      explicit GroupParser(std::string_view text) : s_(text) {}

      GroupExpr parse() {
        auto e = expr();
        ws();
        if (i_ != s_.size()) {
          throw ParseError("unexpected trailing input", i_);
        }
        return e;
      }

     private:
      void ws() {
        while (i_ < s_.size()
               && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\n')) {
          ++i_;
        }
      }

      void expect(char c) {
        ws();
        if (i_ >= s_.size() || s_[i_] != c) {
          throw ParseError(std::string("expected '") + c + "'", i_);
        }
        ++i_;
      }

      bool peek(char c) {
        ws();
        return i_ < s_.size() && s_[i_] == c;
      }

      std::string ident() {
        ws();
        auto start = i_;
        while (i_ < s_.size()
               && ((s_[i_] >= 'a' && s_[i_] <= 'z')
                   || (s_[i_] >= '0' && s_[i_] <= '9' && i_ > start)
                   || s_[i_] == '_')) {
          ++i_;
        }
        if (start == i_) {
          throw ParseError("expected a group constructor or name", i_);
        }
        return std::string(s_.substr(start, i_ - start));
      }

      std::pair<std::uint64_t, std::size_t> number() {
        ws();
        auto start = i_;
        if (i_ < s_.size() && s_[i_] == '-') {
          throw ParseError("n must be at least 1", i_);
        }
        std::uint64_t v = 0;
        while (i_ < s_.size() && s_[i_] >= '0' && s_[i_] <= '9') {
          v = v * 10 + std::uint64_t(s_[i_] - '0');
          if (v > kMaxDegree * 16) {
            throw ParseError("degree overflow", start);
          }
          ++i_;
        }
        if (start == i_) {
          throw ParseError("expected a number", i_);
        }
        return {v, start};
      }

      GroupExpr expr() {
        ws();
        auto      start = i_;
        auto      id    = ident();
        GroupExpr e;
        if (id == "sym" || id == "alt" || id == "cyclic" || id == "dihedral") {
          e.kind = id == "sym"      ? GroupExpr::Kind::sym
                   : id == "alt"    ? GroupExpr::Kind::alt
                   : id == "cyclic" ? GroupExpr::Kind::cyclic
                                    : GroupExpr::Kind::dihedral;
          expect('(');
          auto [v, pos] = number();
          expect(')');
          if (v < 1) {
            throw ParseError("n must be at least 1", pos);
          }
          if (e.kind == GroupExpr::Kind::dihedral && v % 2 != 0) {
            throw ParseError("dihedral order must be even", pos);
          }
          if ((e.kind == GroupExpr::Kind::sym || e.kind == GroupExpr::Kind::alt)
              && v > 20) {
            throw ParseError("degree overflow: group order exceeds 64 bits",
                             pos);
          }
          if (v > kMaxDegree) {
            throw ParseError("degree overflow", pos);
          }
          e.n = v;
          return e;
        }
        if (id == "direct" || id == "wreath") {
          e.kind = id == "direct" ? GroupExpr::Kind::direct
                                  : GroupExpr::Kind::wreath;
          expect('(');
          e.args.push_back(expr());
          while (peek(',')) {
            ++i_;
            e.args.push_back(expr());
          }
          expect(')');
          if (e.args.size() < 2) {
            throw ParseError(id + " needs at least two factors", start);
          }
          if (e.kind == GroupExpr::Kind::wreath && e.args.size() != 2) {
            throw ParseError("wreath takes exactly two factors", start);
          }
          return e;
        }
        if (id == "gens") {
          e.kind = GroupExpr::Kind::gens;
          expect('[');
          auto [d, pos] = number();
          if (d < 1) {
            throw ParseError("degree must be at least 1", pos);
          }
          if (d > kMaxDegree) {
            throw ParseError("degree overflow", pos);
          }
          e.n = d;
          if (peek(';')) {
            ++i_;
            do {
              ws();
              auto from = i_;
              while (i_ < s_.size() && s_[i_] != ',' && s_[i_] != ']') {
                ++i_;
              }
              try {
                e.perms.push_back(Permutation::from_cycles(
                    d, s_.substr(from, i_ - from)));
              } catch (ParseError const& err) {
                throw ParseError(err.message(), from + err.position());
              }
            } while (peek(',') && ++i_);
          }
          expect(']');
          return e;
        }
        if (find_named(id) == nullptr) {
          throw ParseError("unknown group '" + id + "'", start);
        }
        e.kind = GroupExpr::Kind::named;
        e.name = id;
        return e;
      }

      std::string_view s_;
      std::size_t      i_ = 0;
    };
  }  // namespace detail

  inline GroupExpr parse_group(std::string_view text) {
    return detail::GroupParser(text).parse();
  }

  inline std::string GroupExpr::to_string() const {
    auto join_args = [this] {
      std::string out;
      for (std::size_t k = 0; k < args.size(); ++k) {
        out += (k ? ", " : "") + args[k].to_string();
      }
      return out;
    };
    switch (kind) {
      case Kind::sym: return "sym(" + std::to_string(n) + ")";
      case Kind::alt: return "alt(" + std::to_string(n) + ")";
      case Kind::cyclic: return "cyclic(" + std::to_string(n) + ")";
      case Kind::dihedral: return "dihedral(" + std::to_string(n) + ")";
      case Kind::direct: return "direct(" + join_args() + ")";
      case Kind::wreath: return "wreath(" + join_args() + ")";
      case Kind::gens: {
        std::string out = "gens[" + std::to_string(n);
        for (std::size_t k = 0; k < perms.size(); ++k) {
          out += (k ? ", " : "; ") + perms[k].to_cycles();
        }
        return out + "]";
      }
      case Kind::named: return name;
    }
    return {};
  }

  //! Sym(n) on n points.
  inline PermGroup symmetric_group(std::size_t n) {
    if (n < 2) {
      return PermGroup::trivial(n);
    }
    std::vector<point_type> cyc(n);
    for (std::size_t i = 0; i < n; ++i) {
      cyc[i] = static_cast<point_type>((i + 1) % n);
    }
    std::vector<point_type> tr(n);
    for (std::size_t i = 0; i < n; ++i) {
      tr[i] = static_cast<point_type>(i);
    }
    std::swap(tr[0], tr[1]);
    return PermGroup(n, {Permutation(cyc), Permutation(tr)});
  }

  //! Alt(n) on n points, generated by the 3-cycles (1 2 i).
  inline PermGroup alternating_group(std::size_t n) {
    std::vector<Permutation> gens;
    for (std::size_t k = 2; k < n; ++k) {
      std::vector<point_type> img(n);
      for (std::size_t i = 0; i < n; ++i) {
        img[i] = static_cast<point_type>(i);
      }
      img[0] = 1;
      img[1] = static_cast<point_type>(k);
      img[k] = 0;
      gens.emplace_back(std::move(img));
    }
    return PermGroup(n, std::move(gens));
  }

  inline PermGroup cyclic_group(std::size_t n) {
    if (n < 2) {
      return PermGroup::trivial(1);
    }
    std::vector<point_type> img(n);
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = static_cast<point_type>((i + 1) % n);
    }
    return PermGroup(n, {Permutation(std::move(img))});
  }

  //! The dihedral group of order m.
  inline PermGroup dihedral_group(std::size_t m) {
    if (m == 2) {
      return cyclic_group(2);
    }
    if (m == 4) {
      return PermGroup(4, {Permutation::from_cycles(4, "(1 2)(3 4)"),
                           Permutation::from_cycles(4, "(1 3)(2 4)")});
    }
    auto                    k = m / 2;
    std::vector<point_type> rot(k), ref(k);
    for (std::size_t i = 0; i < k; ++i) {
      rot[i] = static_cast<point_type>((i + 1) % k);
      ref[i] = static_cast<point_type>((k - i) % k);
    }
    return PermGroup(k, {Permutation(std::move(rot)), Permutation(std::move(ref))});
  }

  //! Internal direct product on the disjoint union of the factors' points.
  inline PermGroup direct_product(std::vector<PermGroup> const& factors) {
    std::size_t degree = 0;
    for (auto const& f : factors) {
      degree += f.degree();
    }
    std::vector<Permutation> gens;
    std::size_t              shift = 0;
    for (auto const& f : factors) {
      for (auto const& g : f.generators()) {
        std::vector<point_type> img(degree);
        for (std::size_t i = 0; i < degree; ++i) {
          img[i] = static_cast<point_type>(i);
        }
        for (std::size_t i = 0; i < f.degree(); ++i) {
          img[shift + i] = static_cast<point_type>(shift + g[i]);
        }
        gens.emplace_back(std::move(img));
      }
      shift += f.degree();
    }
    return PermGroup(degree, std::move(gens));
  }

  //! Regular wreath product N wr B: copies of N indexed by the elements of B
  //! (in sorted order), B permuting the copies by right multiplication. Point
  //! j of copy c is c * deg(N) + j.
  inline PermGroup wreath_product(PermGroup const& n, PermGroup const& b) {
    auto elems = b.elements();
    std::sort(elems.begin(), elems.end());
    auto copies = elems.size();
    auto d      = n.degree();
    if (copies * d > detail::kMaxDegree) {
      throw PreconditionError("wreath product degree "
                              + std::to_string(copies * d) + " is too large");
    }
    auto                     degree = copies * d;
    std::vector<Permutation> gens;
    for (std::size_t c = 0; c < copies; ++c) {
      for (auto const& g : n.generators()) {
        std::vector<point_type> img(degree);
        for (std::size_t i = 0; i < degree; ++i) {
          img[i] = static_cast<point_type>(i);
        }
        for (std::size_t j = 0; j < d; ++j) {
          img[c * d + j] = static_cast<point_type>(c * d + g[j]);
        }
        gens.emplace_back(std::move(img));
      }
    }
    for (auto const& t : b.generators()) {
      std::vector<point_type> img(degree);
      for (std::size_t c = 0; c < copies; ++c) {
        auto prod = elems[c] * t;
        auto to   = static_cast<std::size_t>(
            std::lower_bound(elems.begin(), elems.end(), prod) - elems.begin());
        for (std::size_t j = 0; j < d; ++j) {
          img[c * d + j] = static_cast<point_type>(to * d + j);
        }
      }
      gens.emplace_back(std::move(img));
    }
    return PermGroup(degree, std::move(gens));
  }

  inline PermGroup named_group(std::string_view name) {
    auto const* g = detail::find_named(name);
    if (g == nullptr) {
      throw PreconditionError("unknown named group '" + std::string(name) + "'");
    }
    std::vector<Permutation> gens;
    for (auto const* c : g->gens) {
      gens.push_back(Permutation::from_cycles(g->degree, c));
    }
    return PermGroup(g->degree, std::move(gens));
  }

  inline PermGroup evaluate(GroupExpr const& e) {
    using K = GroupExpr::Kind;
    switch (e.kind) {
      case K::sym: return symmetric_group(e.n);
      case K::alt: return alternating_group(e.n);
      case K::cyclic: return cyclic_group(e.n);
      case K::dihedral: return dihedral_group(e.n);
      case K::direct: {
        std::vector<PermGroup> fs;
        for (auto const& a : e.args) {
          fs.push_back(evaluate(a));
        }
        std::size_t degree = 0;
        for (auto const& f : fs) {
          degree += f.degree();
        }
        if (degree > detail::kMaxDegree) {
          throw PreconditionError("direct product degree "
                                  + std::to_string(degree) + " is too large");
        }
        return direct_product(fs);
      }
      case K::wreath: {
        auto top = evaluate(e.args[1]);
        if (top.order() > detail::kMaxDegree) {
          throw PreconditionError("wreath product top group is too large");
        }
        return wreath_product(evaluate(e.args[0]), top);
      }
      case K::gens: return PermGroup(e.n, e.perms);
      case K::named: return named_group(e.name);
    }
    return PermGroup::trivial(1);
  }

  //! Parses and evaluates a group expression.
  inline PermGroup make_group(std::string_view text) {
    return evaluate(parse_group(text));
  }

  struct CatalogEntry {
    std::string name;  // a group expression
    PermGroup   group;
  };

  //! S <= A <= Aut(S) with S nonabelian simple.
  struct AlmostSimplePair {
    std::string name;
    PermGroup   socle;
    PermGroup   aut;
  };

  //! Expressions of the default catalog, in catalog order.
  inline std::vector<std::string> default_catalog_names() {
    std::vector<std::string> out;
    for (int n = 1; n <= 6; ++n) {
      out.push_back("sym(" + std::to_string(n) + ")");
    }
    for (int n = 3; n <= 6; ++n) {
      out.push_back("alt(" + std::to_string(n) + ")");
    }
    for (int n = 1; n <= 24; ++n) {
      out.push_back("cyclic(" + std::to_string(n) + ")");
    }
    for (int m = 6; m <= 24; m += 2) {
      out.push_back("dihedral(" + std::to_string(m) + ")");
    }
    for (auto const* s : {"v4", "sl23", "gl23", "psl27"}) {
      out.emplace_back(s);
    }
    std::vector<std::pair<char const*, std::uint64_t>> const factors = {
        {"cyclic(2)", 2},  {"cyclic(3)", 3},    {"cyclic(4)", 4},
        {"cyclic(5)", 5},  {"v4", 4},           {"sym(3)", 6},
        {"dihedral(8)", 8}, {"dihedral(10)", 10}, {"alt(4)", 12},
        {"sym(4)", 24},    {"sl23", 24},        {"alt(5)", 60}};
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (std::size_t j = i; j < factors.size(); ++j) {
        if (factors[i].second * factors[j].second <= 400) {
          out.push_back(std::string("direct(") + factors[i].first + ", "
                        + factors[j].first + ")");
        }
      }
    }
    out.emplace_back("wreath(alt(5), cyclic(2))");
    return out;
  }

  //! The default catalog, optionally restricted to |G| <= max_order.
  inline std::vector<CatalogEntry> default_catalog(
      std::uint64_t max_order = ~std::uint64_t(0)) {
    std::vector<CatalogEntry> out;
    for (auto const& name : default_catalog_names()) {
      auto g = make_group(name);
      if (g.order() <= max_order) {
        out.push_back({name, std::move(g)});
      }
    }
    return out;
  }

  //! (A5, S5), (A6, Aut(A6)) and (PSL(2,7), PGL(2,7)); each socle is the
  //! derived subgroup of its ambient.
  inline std::vector<AlmostSimplePair> almost_simple_pairs() {
    return {
        {"(alt(5), sym(5))", alternating_group(5), symmetric_group(5)},
        {"(a6, aut_a6)", named_group("a6"), named_group("aut_a6")},
        {"(psl27, pgl27)", named_group("psl27"), named_group("pgl27")},
    };
  }

}  // namespace glab

#endif  // GLAB_CATALOG_HPP_
