#ifndef GLAB_ANALYSIS_HPP_
#define GLAB_ANALYSIS_HPP_

// Per-group cache shared by the verification checks: the element table,
// subgroup lattice (under the lattice cap), subnormal and normal subgroups,
// composition series and the X-maximal subgroups of each class.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "indexed_group.hpp"
#include "lattice.hpp"
#include "perm_group.hpp"
#include "xclass.hpp"
#include "xmax.hpp"

namespace glab {

  class GroupAnalysis {
   public:
    struct SubnormalSet {
      std::vector<Subgroup> reps;  // one per conjugacy class
      std::vector<Subgroup> all;
    };

    struct XMaximal {
      std::vector<Subgroup> all;  // every X-maximal subgroup found
      std::size_t           classes = 0;
      //! False when only certified samples were found (above the lattice
      //! cap); `classes` is then meaningless.
      bool complete = true;
    };

    GroupAnalysis(std::string name, PermGroup g, Limits lim = {})
        : name_(std::move(name)), group_(std::move(g)), lim_(lim) {}

    std::string const& name() const noexcept { return name_; }
    PermGroup const&   group() const noexcept { return group_; }
    Limits const&      limits() const noexcept { return lim_; }

    bool has_lattice() const noexcept {
      return group_.order() <= lim_.lattice_cap;
    }

    SubgroupLattice const& lattice() {
      if (!lattice_) {
        lattice_.emplace(enumerate_subgroups(group_, lim_));
        table_ = lattice_->table_ptr();
      }
      return *lattice_;
    }

    IndexedGroup const& table() {
      if (!table_) {
        if (has_lattice()) {
          lattice();
        } else {
          table_ = std::make_shared<IndexedGroup const>(group_, lim_);
        }
      }
      return *table_;
    }

    Subgroup const& whole() {
      if (!whole_) {
        whole_ = table().whole();
      }
      return *whole_;
    }

    //! Iterated normal closures of A reach A.
    bool is_subnormal(Subgroup const& a) {
      auto const& t   = table();
      auto        cur = whole();
      while (cur.order != a.order) {
        auto next = t.normal_closure(cur, a);
        if (next.order == cur.order) {
          return false;
        }
        cur = std::move(next);
      }
      return true;
    }

    std::vector<Subgroup> const& normals() {
      if (!normals_) {
        normals_ = table().normal_subgroups(whole());
      }
      return *normals_;
    }

    //! Every subnormal subgroup: through the lattice when it is available,
    //! otherwise by recursively taking normal subgroups of subnormal ones.
    SubnormalSet const& subnormals() {
      if (subnormals_) {
        return *subnormals_;
      }
      SubnormalSet s;
      auto const&  t = table();
      if (has_lattice()) {
        auto const& l = lattice();
        for (std::size_t i = 0; i < l.size(); ++i) {
          auto const& c = l.classes()[i];
          if (!is_subnormal(c.rep)) {
            continue;
          }
          s.reps.push_back(c.rep);
          for (auto const& m : c.members) {
            s.all.push_back(m == c.rep.elements ? c.rep : t.from_bits(m));
          }
        }
      } else {
        std::unordered_map<Bitset, int, BitsetHash> seen;
        std::vector<Subgroup>                       queue{whole()};
        seen.emplace(whole().elements, 0);
        for (std::size_t i = 0; i < queue.size(); ++i) {
          for (auto const& n : t.normal_subgroups(queue[i])) {
            if (seen.emplace(n.elements, 0).second) {
              queue.push_back(n);
            }
          }
        }
        std::sort(queue.begin(), queue.end(), [](auto const& a, auto const& b) {
          return a.order != b.order ? a.order < b.order : a.elements < b.elements;
        });
        // group into conjugacy classes by generator conjugation
        std::unordered_map<Bitset, int, BitsetHash> classified;
        auto                                        w = whole();
        for (auto const& a : queue) {
          if (classified.count(a.elements)) {
            continue;
          }
          for (auto const& b : detail::conjugacy_orbit(t, w, a.elements)) {
            classified.emplace(b, 0);
          }
          s.reps.push_back(a);
        }
        s.all = std::move(queue);
      }
      subnormals_ = std::move(s);
      return *subnormals_;
    }

    std::vector<Subgroup> const& composition_series(SeriesChoice choice) {
      auto& slot = choice == SeriesChoice::largest ? series_large_ : series_small_;
      if (!slot) {
        slot = table().composition_series(whole(), choice);
      }
      return *slot;
    }

    std::vector<std::uint64_t> const& factor_orders() {
      if (!factors_) {
        factors_ = table().composition_factor_orders(whole());
      }
      return *factors_;
    }

    XMaximal const& x_maximal(ClassSpec const& x) {
      auto key = x.to_string();
      auto it  = xmax_.find(key);
      if (it != xmax_.end()) {
        return it->second;
      }
      XMaximal    r;
      auto const& t = table();
      if (has_lattice()) {
        auto const& l = lattice();
        for (auto i : x_maximal_classes(x, l)) {
          auto const& c = l.classes()[i];
          for (auto const& m : c.members) {
            r.all.push_back(m == c.rep.elements ? c.rep : t.from_bits(m));
          }
          ++r.classes;
        }
      } else {
        std::optional<std::vector<XMaxClass>> known;
        try {
          known = maximal_x_subgroups(x, group_, lim_);
        } catch (CapExceeded const&) {
        }
        if (known) {
          auto w = whole();
          for (auto const& c : *known) {
            auto h = t.from_group(c.rep);
            for (auto const& b : detail::conjugacy_orbit(t, w, h.elements)) {
              r.all.push_back(b == h.elements ? h : t.from_bits(b));
            }
            ++r.classes;
          }
        } else {
          r.complete = false;
          r.all      = certified_samples(x);
        }
      }
      return xmax_.emplace(key, std::move(r)).first->second;
    }

   private:
    // X-maximal subgroups grown from the Sylow subgroups for the primes of
    // pi(X) (from 1 when there are none): add any element keeping <H, g> in X until a full pass
    // adds nothing; that last pass certifies maximality.
    std::vector<Subgroup> certified_samples(ClassSpec const& x) {
      auto const&           t = table();
      std::vector<Subgroup> seeds;
      for (auto p : prime_divisors(group_.order())) {
        if (x.pi_contains(p)) {
          seeds.push_back(t.from_group(sylow_subgroup(group_, p, lim_)));
        }
      }
      if (seeds.empty()) {
        seeds.push_back(t.trivial());
      }
      std::vector<Subgroup>                       out;
      std::unordered_map<Bitset, int, BitsetHash> seen;
      for (auto h : seeds) {
        bool grew = true;
        while (grew) {
          grew           = false;
          Bitset covered = h.elements;  // right cosets H e already tried
          for (elem_t e = 0; e < t.size(); ++e) {
            if (covered.test(e)) {
              continue;
            }
            auto gens = t.to_group(h).generators();
            gens.push_back(t.element(e));
            if (is_member(x, PermGroup(group_.degree(), std::move(gens)))) {
              h       = t.extend(h, e);
              covered = h.elements;
              grew    = true;
            } else {
              h.elements.for_each([&](std::size_t y) {
                covered.set(t.mul(static_cast<elem_t>(y), e));
              });
            }
          }
        }
        if (seen.emplace(h.elements, 0).second) {
          out.push_back(std::move(h));
        }
      }
      return out;
    }

    std::string                                    name_;
    PermGroup                                      group_;
    Limits                                         lim_;
    std::optional<SubgroupLattice>                 lattice_;
    std::shared_ptr<IndexedGroup const>            table_;
    std::optional<Subgroup>                        whole_;
    std::optional<std::vector<Subgroup>>           normals_;
    std::optional<SubnormalSet>                    subnormals_;
    std::optional<std::vector<Subgroup>>           series_large_;
    std::optional<std::vector<Subgroup>>           series_small_;
    std::optional<std::vector<std::uint64_t>>      factors_;
    std::map<std::string, XMaximal>                xmax_;
  };

}  // namespace glab

#endif  // GLAB_ANALYSIS_HPP_
