#ifndef GLAB_XCLASS_HPP_
#define GLAB_XCLASS_HPP_

// Descriptors for classes of finite groups closed under subgroups, quotients
// and extensions, with membership, pi(X), the radicals O_X and O_pi', and
// X-separability.
//
// Text syntax: pi{2,3}, solvable, solvable-pi{2,3}, bounded<60, all.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "indexed_group.hpp"
#include "lattice.hpp"
#include "perm_group.hpp"
#include "structure.hpp"

namespace glab {

  class ClassSpec {
   public:
    enum class Kind { pi_groups, solvable, solvable_pi, bounded_factors, all_groups };

    static ClassSpec pi_groups(std::vector<std::uint64_t> primes) {
      return ClassSpec(Kind::pi_groups, normalize(std::move(primes)), 0);
    }
    static ClassSpec solvable() { return ClassSpec(Kind::solvable, {}, 0); }
    static ClassSpec solvable_pi(std::vector<std::uint64_t> primes) {
      return ClassSpec(Kind::solvable_pi, normalize(std::move(primes)), 0);
    }
    //! Groups whose nonabelian composition factors all have order < n.
    static ClassSpec bounded_factors(std::uint64_t n) {
      if (n < 1) {
        throw PreconditionError("bounded_factors: bound must be positive");
      }
      return ClassSpec(Kind::bounded_factors, {}, n);
    }
    static ClassSpec all_groups() { return ClassSpec(Kind::all_groups, {}, 0); }

    static ClassSpec parse(std::string_view text);

    Kind                              kind() const noexcept { return kind_; }
    std::vector<std::uint64_t> const& primes() const noexcept { return primes_; }
    std::uint64_t                     bound() const noexcept { return bound_; }

    //! pi(X); std::nullopt stands for the set of all primes.
    std::optional<std::vector<std::uint64_t>> pi() const {
      if (kind_ == Kind::pi_groups || kind_ == Kind::solvable_pi) {
        return primes_;
      }
      return std::nullopt;
    }

    bool pi_contains(std::uint64_t p) const {
      auto s = pi();
      return !s || std::binary_search(s->begin(), s->end(), p);
    }

    //! Membership of a group with the given composition factor orders.
    bool admits_factors(std::vector<std::uint64_t> const& factors) const {
      for (auto f : factors) {
        bool prime = detail::is_prime(f);
        switch (kind_) {
          case Kind::pi_groups:
            for (auto p : prime_divisors(f)) {
              if (!pi_contains(p)) {
                return false;
              }
            }
            break;
          case Kind::solvable_pi:
            if (!prime || !pi_contains(f)) {
              return false;
            }
            break;
          case Kind::solvable:
            if (!prime) {
              return false;
            }
            break;
          case Kind::bounded_factors:
            if (!prime && f >= bound_) {
              return false;
            }
            break;
          case Kind::all_groups: break;
        }
      }
      return true;
    }

    //! No prime of pi(X) divides n.
    bool is_pi_prime_number(std::uint64_t n) const {
      for (auto p : prime_divisors(n)) {
        if (pi_contains(p)) {
          return false;
        }
      }
      return true;
    }

    std::string to_string() const {
      auto set = [this] {
        std::string out = "{";
        for (std::size_t i = 0; i < primes_.size(); ++i) {
          out += (i ? "," : "") + std::to_string(primes_[i]);
        }
        return out + "}";
      };
      switch (kind_) {
        case Kind::pi_groups: return "pi" + set();
        case Kind::solvable: return "solvable";
        case Kind::solvable_pi: return "solvable-pi" + set();
        case Kind::bounded_factors: return "bounded<" + std::to_string(bound_);
        case Kind::all_groups: return "all";
      }
      return {};
    }

    friend bool operator==(ClassSpec const&, ClassSpec const&) = default;
    friend auto operator<=>(ClassSpec const&, ClassSpec const&) = default;

   private:
    ClassSpec(Kind k, std::vector<std::uint64_t> primes, std::uint64_t bound)
        : kind_(k), primes_(std::move(primes)), bound_(bound) {}

    static std::vector<std::uint64_t> normalize(std::vector<std::uint64_t> ps) {
      for (auto p : ps) {
        if (!detail::is_prime(p)) {
          throw PreconditionError(std::to_string(p) + " is not a prime");
        }
      }
      std::sort(ps.begin(), ps.end());
      ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
      return ps;
    }

    Kind                       kind_;
    std::vector<std::uint64_t> primes_;
    std::uint64_t              bound_;
  };

  inline ClassSpec ClassSpec::parse(std::string_view text) {
    auto primes = [&](std::size_t at) {
      if (at >= text.size() || text[at] != '{') {
        throw ParseError("expected '{'", at);
      }
      std::vector<std::uint64_t> ps;
      std::size_t                i = at + 1;
      while (i < text.size() && text[i] != '}') {
        while (i < text.size() && text[i] == ' ') {
          ++i;
        }
        auto          start = i;
        std::uint64_t v     = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
          v = v * 10 + std::uint64_t(text[i] - '0');
          if (v > 1'000'000) {
            throw ParseError("prime too large", start);
          }
          ++i;
        }
        if (start == i) {
          throw ParseError("expected a prime", i);
        }
        if (!detail::is_prime(v)) {
          throw ParseError(std::to_string(v) + " is not a prime", start);
        }
        ps.push_back(v);
        while (i < text.size() && text[i] == ' ') {
          ++i;
        }
        if (i < text.size() && text[i] == ',') {
          ++i;
        } else if (i < text.size() && text[i] != '}') {
          throw ParseError("expected ',' or '}'", i);
        }
      }
      if (i >= text.size()) {
        throw ParseError("unterminated prime set", i);
      }
      if (i + 1 != text.size()) {
        throw ParseError("unexpected trailing input", i + 1);
      }
      return ps;
    };
    if (text == "solvable") {
      return solvable();
    }
    if (text == "all") {
      return all_groups();
    }
    if (text.starts_with("solvable-pi")) {
      return solvable_pi(primes(11));
    }
    if (text.starts_with("pi")) {
      return pi_groups(primes(2));
    }
    if (text.starts_with("bounded<")) {
      std::uint64_t v = 0;
      std::size_t   i = 8;
      if (i == text.size()) {
        throw ParseError("expected a bound", i);
      }
      for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
          throw ParseError("expected a digit", i);
        }
        v = v * 10 + std::uint64_t(text[i] - '0');
        if (v > (std::uint64_t(1) << 40)) {
          throw ParseError("bound too large", 8);
        }
      }
      if (v < 1) {
        throw ParseError("bound must be positive", 8);
      }
      return bounded_factors(v);
    }
    throw ParseError("unknown class '" + std::string(text) + "'", 0);
  }

  //! Prime divisors of |G|.
  inline std::vector<std::uint64_t> pi_of_group(PermGroup const& g) {
    return prime_divisors(g.order());
  }

  inline bool is_member(ClassSpec const& x, PermGroup const& g) {
    if (x.kind() == ClassSpec::Kind::all_groups) {
      return true;
    }
    if (x.kind() == ClassSpec::Kind::pi_groups) {
      return x.admits_factors(prime_divisors(g.order()));
    }
    if (x.kind() == ClassSpec::Kind::solvable_pi
        && !x.admits_factors(prime_divisors(g.order()))) {
      return false;
    }
    if (is_solvable(g)) {
      return true;
    }
    if (x.kind() != ClassSpec::Kind::bounded_factors || x.bound() <= 60) {
      return false;  // 60 is the least order of a nonabelian simple group
    }
    return g.order() < x.bound()
           || x.admits_factors(composition_factor_orders(g));
  }

  //! Membership of a subgroup held in an IndexedGroup.
  inline bool is_member(ClassSpec const& x, IndexedGroup const& t,
                        Subgroup const& s) {
    switch (x.kind()) {
      case ClassSpec::Kind::all_groups: return true;
      case ClassSpec::Kind::pi_groups:
        return x.admits_factors(prime_divisors(s.order));
      case ClassSpec::Kind::solvable_pi:
        return x.admits_factors(prime_divisors(s.order)) && t.is_solvable(s);
      case ClassSpec::Kind::solvable: return t.is_solvable(s);
      case ClassSpec::Kind::bounded_factors:
        return t.is_solvable(s)
               || x.admits_factors(t.composition_factor_orders(s));
    }
    return false;
  }

  //! G is a pi(X)'-group, i.e. has no nontrivial X-subgroup.
  inline bool has_no_nontrivial_x_subgroup(ClassSpec const& x,
                                           PermGroup const& g) {
    return x.is_pi_prime_number(g.order());
  }

  namespace detail {
    // Greedy route to the largest normal subgroup with a property closed
    // under normal subgroups, products and subgroups: O grows to the normal
    // closure of <O, x> whenever that still has the property. Each accepted
    // step stays inside the radical and every radical element gets tried.
    // A closure containing an element that failed earlier fails as well.
    // Elements whose order fails `element_ok` are skipped up front.
    template <typename ElementOk, typename Pred>
    PermGroup greedy_radical(PermGroup const& g, ElementOk&& element_ok,
                             Pred&& ok) {
      auto                     o = PermGroup::trivial(g.degree());
      std::vector<Permutation> failed;
      g.for_each_element([&](Permutation const& x) {
        if (!element_ok(x.element_order()) || o.contains(x)) {
          return;
        }
        auto gens = o.generators();
        gens.push_back(x);
        auto n = normal_closure(g, PermGroup(g.degree(), std::move(gens)));
        bool bad = std::any_of(failed.begin(), failed.end(),
                               [&](Permutation const& y) { return n.contains(y); });
        if (!bad && ok(n)) {
          o = std::move(n);
        } else {
          failed.push_back(x);
        }
      });
      return o;
    }

    // The join of all normal subgroups with the property.
    template <typename Pred>
    PermGroup join_radical(PermGroup const& g, Limits const& lim, Pred&& ok) {
      IndexedGroup t(g, lim);
      auto         acc = t.trivial();
      for (auto const& n : t.normal_subgroups(t.whole())) {
        if (ok(t, n)) {
          acc = t.join(acc, n);
        }
      }
      return t.to_group(acc);
    }
  }  // namespace detail

  //! O_X(G) by the greedy element route only.
  inline PermGroup o_x_greedy(ClassSpec const& x, PermGroup const& g,
                              Limits const& lim = {}) {
    detail::require_scan(g, lim, "o_x");
    return detail::greedy_radical(
        g,
        [&](std::uint64_t order) {
          return x.admits_factors(prime_divisors(order));
        },
        [&](PermGroup const& n) { return is_member(x, n); });
  }

  //! O_X(G) as the join of the normal X-subgroups; above the lattice cap the
  //! greedy element route is used instead.
  inline PermGroup o_x(ClassSpec const& x, PermGroup const& g,
                       Limits const& lim = {}) {
    if (g.order() > lim.lattice_cap) {
      return o_x_greedy(x, g, lim);
    }
    return detail::join_radical(g, lim,
                                [&](IndexedGroup const& t, Subgroup const& n) {
                                  return is_member(x, t, n);
                                });
  }

  //! O_pi'(G): the largest normal subgroup of order prime to every p in pi.
  inline PermGroup o_pi_prime(std::vector<std::uint64_t> const& pi,
                              PermGroup const& g, Limits const& lim = {}) {
    auto coprime = [&](std::uint64_t n) {
      for (auto p : pi) {
        if (n % p == 0) {
          return false;
        }
      }
      return true;
    };
    if (g.order() > lim.lattice_cap) {
      detail::require_scan(g, lim, "o_pi_prime");
      return detail::greedy_radical(g, coprime, [&](PermGroup const& n) {
        return coprime(n.order());
      });
    }
    return detail::join_radical(
        g, lim, [&](IndexedGroup const&, Subgroup const& n) {
          return coprime(n.order);
        });
  }

  //! Every composition factor lies in X or is a pi(X)'-group.
  inline bool factors_x_separable(ClassSpec const&                  x,
                                  std::vector<std::uint64_t> const& factors) {
    for (auto f : factors) {
      if (!x.admits_factors({f}) && !x.is_pi_prime_number(f)) {
        return false;
      }
    }
    return true;
  }

  inline bool is_x_separable(ClassSpec const& x, PermGroup const& g,
                             Limits const& lim = {}) {
    return factors_x_separable(x, composition_factor_orders(g, lim));
  }

  //! The class family used for quantified runs over G: pi-groups and
  //! solvable pi-groups for every pi contained in pi(G) (including the empty
  //! set), the solvable groups, and bounded factors with N in {2, 60, 61, |G|}.
  inline std::vector<ClassSpec> standard_family(PermGroup const& g) {
    auto                   primes = pi_of_group(g);
    std::vector<ClassSpec> out;
    std::vector<std::vector<std::uint64_t>> subsets;
    for (std::size_t mask = 0; mask < (std::size_t(1) << primes.size()); ++mask) {
      std::vector<std::uint64_t> s;
      for (std::size_t i = 0; i < primes.size(); ++i) {
        if (mask >> i & 1U) {
          s.push_back(primes[i]);
        }
      }
      subsets.push_back(std::move(s));
    }
    for (auto const& s : subsets) {
      out.push_back(ClassSpec::pi_groups(s));
    }
    out.push_back(ClassSpec::solvable());
    for (auto const& s : subsets) {
      out.push_back(ClassSpec::solvable_pi(s));
    }
    std::vector<std::uint64_t> bounds{2, 60, 61, g.order()};
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
    for (auto n : bounds) {
      out.push_back(ClassSpec::bounded_factors(n));
    }
    return out;
  }

}  // namespace glab

#endif  // GLAB_XCLASS_HPP_
