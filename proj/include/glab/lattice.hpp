#ifndef GLAB_LATTICE_HPP_
#define GLAB_LATTICE_HPP_

// Subgroups up to conjugacy, Sylow subgroups, and containment up to
// conjugacy.
//
// Two enumeration backends share the SubgroupLattice type:
//
//  * cyclic extension (default): every subgroup is generated by the cyclic
//    subgroups of prime-power order it contains, so starting from 1 and
//    repeatedly joining a class representative with one such cyclic subgroup
//    reaches a conjugate of every subgroup. Only one representative per
//    conjugacy class is extended.
//  * exhaustive (oracle): the closure of {1} under joins with every cyclic
//    subgroup, without any conjugacy reduction; classes are formed afterwards
//    by conjugating with every element of G.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "bitset.hpp"
#include "error.hpp"
#include "indexed_group.hpp"
#include "perm_group.hpp"
#include "structure.hpp"

namespace glab {

  struct SubgroupClass {
    Subgroup            rep;      // least member, in the lattice's numbering
    std::vector<Bitset> members;  // every conjugate, sorted
    std::vector<std::uint64_t> factor_orders;  // composition factors of rep

    std::size_t order() const noexcept { return rep.order; }
    std::size_t conjugates() const noexcept { return members.size(); }
  };

  enum class LatticeMethod { cyclic_extension, exhaustive };

  class SubgroupLattice {
   public:
    SubgroupLattice(std::shared_ptr<IndexedGroup const> table,
                    std::vector<SubgroupClass>          classes)
        : table_(std::move(table)), classes_(std::move(classes)) {
      std::sort(classes_.begin(), classes_.end(),
                [](auto const& a, auto const& b) {
                  return a.order() != b.order()
                             ? a.order() < b.order()
                             : a.rep.elements < b.rep.elements;
                });
      for (std::size_t i = 0; i < classes_.size(); ++i) {
        for (auto const& m : classes_[i].members) {
          class_of_.emplace(m, i);
        }
      }
      compute_containment();
    }

    IndexedGroup const&                  table() const noexcept { return *table_; }
    std::shared_ptr<IndexedGroup const>  table_ptr() const noexcept { return table_; }
    PermGroup const& ambient() const noexcept { return table_->group(); }

    std::vector<SubgroupClass> const& classes() const noexcept {
      return classes_;
    }
    std::size_t size() const noexcept { return classes_.size(); }

    //! Representative of class i as a permutation group.
    PermGroup representative(std::size_t i) const {
      return table_->to_group(classes_[i].rep);
    }

    std::size_t total_subgroups() const noexcept { return class_of_.size(); }

    //! Class index of a subgroup given by its element set.
    std::size_t class_of(Bitset const& bits) const {
      auto it = class_of_.find(bits);
      if (it == class_of_.end()) {
        throw PreconditionError("element set is not a subgroup of the lattice");
      }
      return it->second;
    }

    std::size_t class_of(PermGroup const& h) const {
      return class_of(table_->from_group(h).elements);
    }

    //! Some conjugate of class i's representative lies in class j's.
    bool below(std::size_t i, std::size_t j) const { return below_[i][j]; }

    //! Class i is a maximal subgroup of the ambient group.
    bool is_maximal_subgroup(std::size_t i) const {
      auto n = table_->size();
      if (classes_[i].order() == n) {
        return false;
      }
      for (std::size_t j = 0; j < classes_.size(); ++j) {
        if (j != i && classes_[j].order() < n
            && classes_[j].order() > classes_[i].order() && below_[i][j]) {
          return false;
        }
      }
      return true;
    }

    //! All subgroups as element sets, class by class.
    std::vector<Bitset> all_subgroups() const {
      std::vector<Bitset> out;
      for (auto const& c : classes_) {
        out.insert(out.end(), c.members.begin(), c.members.end());
      }
      return out;
    }

   private:
    void compute_containment() {
      auto n = classes_.size();
      below_.assign(n, std::vector<bool>(n, false));
      for (std::size_t j = 0; j < n; ++j) {
        below_[j][j] = true;
        for (std::size_t i = 0; i < j; ++i) {
          auto oi = classes_[i].order(), oj = classes_[j].order();
          if (oi >= oj || oj % oi != 0) {
            continue;
          }
          for (auto const& m : classes_[j].members) {
            if (classes_[i].rep.elements.is_subset_of(m)) {
              below_[i][j] = true;
              break;
            }
          }
        }
      }
    }

    std::shared_ptr<IndexedGroup const>                 table_;
    std::vector<SubgroupClass>                          classes_;
    std::unordered_map<Bitset, std::size_t, BitsetHash> class_of_;
    std::vector<std::vector<bool>>                      below_;
  };

  namespace detail {
    inline bool is_prime_power(std::uint64_t n) {
      if (n < 2) {
        return false;
      }
      std::uint64_t p = 2;
      while (n % p != 0) {
        ++p;
      }
      while (n % p == 0) {
        n /= p;
      }
      return n == 1;
    }

    // Cyclic subgroups, each with one generator; optionally only those of
    // prime-power order.
    inline std::vector<Subgroup> cyclic_subgroups(IndexedGroup const& t,
                                                  bool prime_power_only) {
      std::vector<Subgroup>                        out;
      std::unordered_map<Bitset, int, BitsetHash> seen;
      for (elem_t x = 1; x < t.size(); ++x) {
        if (prime_power_only && !is_prime_power(t.element_order(x))) {
          continue;
        }
        auto c = t.closure({x});
        if (seen.emplace(c.elements, 0).second) {
          out.push_back(std::move(c));
        }
      }
      return out;
    }

    inline SubgroupClass make_class(IndexedGroup const& t,
                                    std::vector<Bitset> members) {
      std::sort(members.begin(), members.end());
      SubgroupClass c;
      c.rep           = t.from_bits(members.front());
      c.members       = std::move(members);
      c.factor_orders = t.composition_factor_orders(c.rep);
      return c;
    }

    // Orbit of an element set under conjugation by the generators of G.
    inline std::vector<Bitset> conjugacy_orbit(IndexedGroup const& t,
                                               Subgroup const&     whole,
                                               Bitset const&       bits) {
      std::vector<Bitset>                          orbit{bits};
      std::unordered_map<Bitset, int, BitsetHash> seen{{bits, 0}};
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (auto g : whole.gens) {
          auto c = t.conjugate_bits(orbit[k], g);
          if (seen.emplace(c, 0).second) {
            orbit.push_back(std::move(c));
          }
        }
      }
      return orbit;
    }

    inline void require_lattice(PermGroup const& g, Limits const& lim) {
      if (g.order() > lim.lattice_cap) {
        throw CapExceeded("subgroup lattice", g.order(), lim.lattice_cap);
      }
    }

    inline std::vector<SubgroupClass> cyclic_extension_classes(
        IndexedGroup const& t) {
      auto whole  = t.whole();
      auto zuppos = cyclic_subgroups(t, true);
      std::vector<SubgroupClass>                          classes;
      std::vector<Subgroup>                               reps{t.trivial()};
      std::unordered_map<Bitset, std::size_t, BitsetHash> known;
      known.emplace(reps[0].elements, 0);
      std::vector<std::vector<Bitset>> members{{reps[0].elements}};
      for (std::size_t i = 0; i < reps.size(); ++i) {
        for (auto const& z : zuppos) {
          if (z.is_subgroup_of(reps[i])) {
            continue;
          }
          auto k = t.join(reps[i], z);
          if (known.count(k.elements)) {
            continue;
          }
          auto orbit = conjugacy_orbit(t, whole, k.elements);
          for (auto const& m : orbit) {
            known.emplace(m, reps.size());
          }
          members.push_back(std::move(orbit));
          reps.push_back(std::move(k));
        }
      }
      for (auto& m : members) {
        classes.push_back(make_class(t, std::move(m)));
      }
      return classes;
    }

    inline std::vector<SubgroupClass> exhaustive_classes(IndexedGroup const& t) {
      auto                                         cyclics = cyclic_subgroups(t, false);
      std::vector<Subgroup>                        all{t.trivial()};
      std::unordered_map<Bitset, int, BitsetHash> seen{{all[0].elements, 0}};
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (auto const& c : cyclics) {
          if (c.is_subgroup_of(all[i])) {
            continue;
          }
          auto j = t.join(all[i], c);
          if (seen.emplace(j.elements, 0).second) {
            all.push_back(std::move(j));
          }
        }
      }
      std::unordered_map<Bitset, int, BitsetHash> classified;
      std::vector<SubgroupClass>                   classes;
      for (auto const& s : all) {
        if (classified.count(s.elements)) {
          continue;
        }
        std::unordered_map<Bitset, int, BitsetHash> orbit;
        for (elem_t x = 0; x < t.size(); ++x) {
          orbit.emplace(t.conjugate_bits(s.elements, x), 0);
        }
        std::vector<Bitset> members;
        for (auto& [b, unused] : orbit) {
          classified.emplace(b, 0);
          members.push_back(b);
        }
        classes.push_back(make_class(t, std::move(members)));
      }
      return classes;
    }
  }  // namespace detail

  //! All subgroups of G up to conjugacy. Throws CapExceeded above the lattice
  //! cap.
  inline SubgroupLattice enumerate_subgroups(
      PermGroup const& g, Limits const& lim = {},
      LatticeMethod method = LatticeMethod::cyclic_extension) {
    detail::require_lattice(g, lim);
    auto t = std::make_shared<IndexedGroup const>(g, lim);
    auto classes = method == LatticeMethod::cyclic_extension
                       ? detail::cyclic_extension_classes(*t)
                       : detail::exhaustive_classes(*t);
    return SubgroupLattice(std::move(t), std::move(classes));
  }

  //! Largest power of p dividing n.
  inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
    std::uint64_t r = 1;
    while (n % p == 0) {
      n /= p;
      r *= p;
    }
    return r;
  }

  //! Prime divisors of n, ascending.
  inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        out.push_back(p);
        while (n % p == 0) {
          n /= p;
        }
      }
    }
    if (n > 1) {
      out.push_back(n);
    }
    return out;
  }

  //! A Sylow p-subgroup, grown one factor p at a time inside normalizers:
  //! while P is not Sylow, N_G(P)/P has an element of order p.
  inline PermGroup sylow_subgroup(PermGroup const& g, std::uint64_t p,
                                  Limits const& lim = {}) {
    if (!detail::is_prime(p)) {
      throw PreconditionError("sylow_subgroup: " + std::to_string(p)
                              + " is not prime");
    }
    auto target = p_part(g.order(), p);
    auto P      = PermGroup::trivial(g.degree());
    while (P.order() < target) {
      auto                       n = normalizer(g, P, lim);
      std::optional<Permutation> step;
      n.chain().for_each_element([&](Permutation const& x) {
        if (!step && !P.contains(x) && P.contains(x.pow(std::int64_t(p)))) {
          step = x;
        }
      });
      if (!step) {
        throw Error("sylow_subgroup: no p-element in N(P)/P (internal error)");
      }
      auto gens = P.generators();
      gens.push_back(*step);
      P = PermGroup(g.degree(), std::move(gens));
    }
    return P;
  }

  //! The full conjugacy class of Sylow p-subgroups.
  inline std::vector<PermGroup> all_sylow_subgroups(PermGroup const& g,
                                                    std::uint64_t    p,
                                                    Limits const& lim = {}) {
    if (!detail::is_prime(p)) {
      throw PreconditionError("all_sylow_subgroups: " + std::to_string(p)
                              + " is not prime");
    }
    if (g.order() % p != 0) {
      throw PreconditionError("all_sylow_subgroups: p does not divide |G|");
    }
    IndexedGroup t(g, lim);
    auto         whole = t.whole();
    auto         P     = t.from_group(sylow_subgroup(g, p, lim));
    std::vector<PermGroup> out;
    auto orbit = detail::conjugacy_orbit(t, whole, P.elements);
    std::sort(orbit.begin(), orbit.end());
    for (auto const& b : orbit) {
      out.push_back(t.to_group(t.from_bits(b)));
    }
    return out;
  }

  //! Some G-conjugate of H lies in K.
  inline bool contained_up_to_conjugacy(PermGroup const& g, PermGroup const& h,
                                        PermGroup const& k,
                                        Limits const& lim = {}) {
    detail::check_subgroups(g, h, k);
    if (k.order() % h.order() != 0) {
      return false;
    }
    detail::require_scan(g, lim, "contained_up_to_conjugacy");
    bool found = false;
    g.for_each_element([&](Permutation const& x) {
      if (!found && detail::conjugates_onto(x, h, k)) {
        found = true;
      }
    });
    return found;
  }

}  // namespace glab

#endif  // GLAB_LATTICE_HPP_
