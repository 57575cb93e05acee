#ifndef GLAB_INDEXED_GROUP_HPP_
#define GLAB_INDEXED_GROUP_HPP_

// Enumeration engine for small groups.
//
// An IndexedGroup numbers the elements of a PermGroup G (sorted
// lexicographically by image vector, so the identity is element 0) and
// represents subgroups of G as bitsets over those numbers. Everything that
// enumerates subgroups, conjugacy classes or normal subgroups runs here;
// products come from a multiplication table when |G| <= kTableCap and from
// composition plus a hash lookup otherwise.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "bitset.hpp"
#include "error.hpp"
#include "perm_group.hpp"
#include "permutation.hpp"

namespace glab {

  using elem_t = std::uint32_t;

  //! A subgroup of an IndexedGroup: its element set and a generating set.
  struct Subgroup {
    Bitset              elements;
    std::vector<elem_t> gens;
    std::size_t         order = 1;

    bool contains(elem_t x) const noexcept { return elements.test(x); }

    bool is_subgroup_of(Subgroup const& o) const noexcept {
      return order <= o.order && elements.is_subset_of(o.elements);
    }

    friend bool operator==(Subgroup const& a, Subgroup const& b) noexcept {
      return a.order == b.order && a.elements == b.elements;
    }
  };

  //! Which maximal normal subgroup a composition series descends through.
  enum class SeriesChoice { largest, smallest };

  class IndexedGroup {
   public:
    static constexpr std::size_t kTableCap = 2500;

    explicit IndexedGroup(PermGroup g, Limits const& lim = {})
        : group_(std::move(g)) {
      if (group_.order() > lim.scan_cap) {
        throw CapExceeded("element enumeration", group_.order(), lim.scan_cap);
      }
      elems_ = group_.elements();
      std::sort(elems_.begin(), elems_.end());
      index_.reserve(elems_.size() * 2);
      for (std::size_t i = 0; i < elems_.size(); ++i) {
        index_.emplace(elems_[i], static_cast<elem_t>(i));
      }
      inv_.resize(elems_.size());
      for (std::size_t i = 0; i < elems_.size(); ++i) {
        inv_[i] = index_.at(elems_[i].inverse());
      }
      if (elems_.size() <= kTableCap) {
        auto n = elems_.size();
        table_.resize(n * n);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            table_[a * n + b] = index_.at(elems_[a] * elems_[b]);
          }
        }
      }
    }

    PermGroup const& group() const noexcept { return group_; }
    std::size_t      size() const noexcept { return elems_.size(); }
    std::size_t      degree() const noexcept { return group_.degree(); }

    Permutation const& element(elem_t i) const { return elems_[i]; }

    elem_t index_of(Permutation const& p) const {
      auto it = index_.find(p);
      if (it == index_.end()) {
        throw PreconditionError("permutation " + p.to_cycles()
                                + " is not an element of the group");
      }
      return it->second;
    }

    bool has(Permutation const& p) const { return index_.count(p) != 0; }

    elem_t mul(elem_t a, elem_t b) const {
      if (!table_.empty()) {
        return table_[std::size_t(a) * elems_.size() + b];
      }
      return index_.at(elems_[a] * elems_[b]);
    }

    elem_t inv(elem_t a) const noexcept { return inv_[a]; }

    //! a^x = x^-1 a x.
    elem_t conj(elem_t a, elem_t x) const { return mul(mul(inv_[x], a), x); }

    elem_t commutator(elem_t a, elem_t b) const {
      return mul(mul(inv_[a], inv_[b]), mul(a, b));
    }

    std::uint64_t element_order(elem_t a) const {
      return elems_[a].element_order();
    }

    ////////////////////////////////////////////////////////////////////////
    // Subgroups
    ////////////////////////////////////////////////////////////////////////

    Subgroup trivial() const {
      Subgroup s;
      s.elements = Bitset(size());
      s.elements.set(0);
      return s;
    }

    Subgroup whole() const { return from_group(group_); }

    Subgroup closure(std::vector<elem_t> gens) const {
      std::vector<elem_t> kept;
      for (auto g : gens) {
        if (g != 0 && std::find(kept.begin(), kept.end(), g) == kept.end()) {
          kept.push_back(g);
        }
      }
      Subgroup s;
      s.elements = Bitset(size());
      s.elements.set(0);
      std::vector<elem_t> list{0};
      for (std::size_t i = 0; i < list.size(); ++i) {
        for (auto g : kept) {
          auto y = mul(list[i], g);
          if (!s.elements.test(y)) {
            s.elements.set(y);
            list.push_back(y);
          }
        }
      }
      s.gens  = std::move(kept);
      s.order = list.size();
      return s;
    }

    Subgroup extend(Subgroup const& s, elem_t z) const {
      if (s.contains(z)) {
        return s;
      }
      auto gens = s.gens;
      gens.push_back(z);
      return closure(std::move(gens));
    }

    Subgroup join(Subgroup const& a, Subgroup const& b) const {
      if (b.is_subgroup_of(a)) {
        return a;
      }
      if (a.is_subgroup_of(b)) {
        return b;
      }
      auto gens = a.gens;
      for (auto g : b.gens) {
        if (!a.contains(g)) {
          gens.push_back(g);
        }
      }
      return closure(std::move(gens));
    }

    //! Subgroup from an element set that is already closed; a small
    //! generating set is picked greedily.
    Subgroup from_bits(Bitset const& bits) const {
      Subgroup cur = trivial();
      bits.for_each([&](std::size_t i) {
        if (!cur.contains(static_cast<elem_t>(i))) {
          cur = extend(cur, static_cast<elem_t>(i));
        }
      });
      return cur;
    }

    Subgroup meet(Subgroup const& a, Subgroup const& b) const {
      if (a.is_subgroup_of(b)) {
        return a;
      }
      if (b.is_subgroup_of(a)) {
        return b;
      }
      return from_bits(a.elements & b.elements);
    }

    Subgroup from_group(PermGroup const& h) const {
      if (h.degree() != degree()) {
        throw DegreeMismatch(degree(), h.degree());
      }
      std::vector<elem_t> gens;
      for (auto const& g : h.generators()) {
        gens.push_back(index_of(g));
      }
      return closure(std::move(gens));
    }

    PermGroup to_group(Subgroup const& s) const {
      std::vector<Permutation> gens;
      for (auto g : s.gens) {
        gens.push_back(elems_[g]);
      }
      return PermGroup(degree(), std::move(gens));
    }

    Bitset conjugate_bits(Bitset const& bits, elem_t x) const {
      Bitset out(size());
      bits.for_each([&](std::size_t a) {
        out.set(conj(static_cast<elem_t>(a), x));
      });
      return out;
    }

    //! S^x.
    Subgroup conjugate(Subgroup const& s, elem_t x) const {
      Subgroup c;
      c.elements = conjugate_bits(s.elements, x);
      c.order    = s.order;
      for (auto g : s.gens) {
        c.gens.push_back(conj(g, x));
      }
      return c;
    }

    bool normalizes(elem_t x, Subgroup const& s) const {
      for (auto g : s.gens) {
        if (!s.contains(conj(g, x))) {
          return false;
        }
      }
      return true;
    }

    //! S^x <= K.
    bool conjugates_into(Subgroup const& s, elem_t x, Subgroup const& k) const {
      for (auto g : s.gens) {
        if (!k.contains(conj(g, x))) {
          return false;
        }
      }
      return true;
    }

    //! S normal in T (S need not lie in T).
    bool is_normalized_by(Subgroup const& s, Subgroup const& t) const {
      for (auto x : t.gens) {
        if (!normalizes(x, s)) {
          return false;
        }
      }
      return true;
    }

    //! N_A(S) by scanning A.
    Subgroup normalizer(Subgroup const& a, Subgroup const& s) const {
      Bitset bits(size());
      a.elements.for_each([&](std::size_t x) {
        if (normalizes(static_cast<elem_t>(x), s)) {
          bits.set(x);
        }
      });
      return from_bits(bits);
    }

    //! |N_A(S)|, without building generators.
    std::size_t normalizer_order(Subgroup const& a, Subgroup const& s) const {
      std::size_t c = 0;
      a.elements.for_each([&](std::size_t x) {
        c += normalizes(static_cast<elem_t>(x), s) ? 1 : 0;
      });
      return c;
    }

    //! Smallest subgroup containing S and normalized by T.
    Subgroup normal_closure(Subgroup const& t, Subgroup s) const {
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t i = 0; i < s.gens.size() && !changed; ++i) {
          for (auto x : t.gens) {
            auto c = conj(s.gens[i], x);
            if (!s.contains(c)) {
              s       = extend(s, c);
              changed = true;
              break;
            }
          }
        }
      }
      return s;
    }

    Subgroup derived(Subgroup const& t) const {
      std::vector<elem_t> comms;
      for (std::size_t i = 0; i < t.gens.size(); ++i) {
        for (std::size_t j = i + 1; j < t.gens.size(); ++j) {
          comms.push_back(commutator(t.gens[i], t.gens[j]));
        }
      }
      return normal_closure(t, closure(std::move(comms)));
    }

    bool is_solvable(Subgroup t) const {
      while (t.order > 1) {
        auto d = derived(t);
        if (d.order == t.order) {
          return false;
        }
        t = std::move(d);
      }
      return true;
    }

    //! Conjugacy classes of T on its own elements, ordered by least element.
    std::vector<std::vector<elem_t>> conjugacy_classes(Subgroup const& t) const {
      std::vector<std::vector<elem_t>> out;
      Bitset                           seen(size());
      t.elements.for_each([&](std::size_t a) {
        if (seen.test(a)) {
          return;
        }
        std::vector<elem_t> cls{static_cast<elem_t>(a)};
        seen.set(a);
        for (std::size_t k = 0; k < cls.size(); ++k) {
          for (auto x : t.gens) {
            auto c = conj(cls[k], x);
            if (!seen.test(c)) {
              seen.set(c);
              cls.push_back(c);
            }
          }
        }
        std::sort(cls.begin(), cls.end());
        out.push_back(std::move(cls));
      });
      return out;
    }

    //! Every normal subgroup of T, as joins of normal closures of conjugacy
    //! classes; sorted by order, then element set.
    std::vector<Subgroup> normal_subgroups(Subgroup const& t) const {
      std::vector<Subgroup> atoms;
      for (auto const& cls : conjugacy_classes(t)) {
        if (cls.front() == 0) {
          continue;
        }
        auto c = normal_closure(t, closure({cls.front()}));
        if (std::none_of(atoms.begin(), atoms.end(),
                         [&](Subgroup const& a) { return a == c; })) {
          atoms.push_back(std::move(c));
        }
      }
      std::vector<Subgroup> out{trivial()};
      std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
      seen.emplace(out[0].elements, 0);
      for (std::size_t i = 0; i < out.size(); ++i) {
        for (auto const& a : atoms) {
          if (a.is_subgroup_of(out[i])) {
            continue;
          }
          auto j = join(out[i], a);
          if (seen.emplace(j.elements, out.size()).second) {
            out.push_back(std::move(j));
          }
        }
      }
      std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
        return a.order != b.order ? a.order < b.order : a.elements < b.elements;
      });
      return out;
    }

    //! Proper normal subgroups of T maximal under inclusion.
    std::vector<Subgroup> maximal_normal_subgroups(Subgroup const& t) const {
      auto                  normals = normal_subgroups(t);
      std::vector<Subgroup> out;
      for (auto const& m : normals) {
        if (m.order == t.order) {
          continue;
        }
        bool maximal = true;
        for (auto const& n : normals) {
          if (n.order > m.order && n.order < t.order && m.is_subgroup_of(n)) {
            maximal = false;
            break;
          }
        }
        if (maximal) {
          out.push_back(m);
        }
      }
      return out;
    }

    //! A composition series T = G_0 > G_1 > ... > G_n = 1.
    std::vector<Subgroup> composition_series(
        Subgroup const& t, SeriesChoice choice = SeriesChoice::largest) const {
      std::vector<Subgroup> series{t};
      while (series.back().order > 1) {
        auto maxes = maximal_normal_subgroups(series.back());
        // maxes is sorted by (order, elements)
        series.push_back(choice == SeriesChoice::largest
                             ? pick_largest(maxes)
                             : maxes.front());
      }
      return series;
    }

    //! Orders of the composition factors of T, ascending.
    std::vector<std::uint64_t> composition_factor_orders(Subgroup t) const {
      std::vector<std::uint64_t> out;
      while (t.order > 1) {
        auto d = derived(t);
        if (d.order != t.order) {
          auto q = static_cast<std::uint64_t>(t.order / d.order);
          for (std::uint64_t p = 2; q > 1; ++p) {
            while (q % p == 0) {
              out.push_back(p);
              q /= p;
            }
          }
          t = std::move(d);
          continue;
        }
        auto m = pick_largest(maximal_normal_subgroups(t));
        out.push_back(t.order / m.order);
        t = std::move(m);
      }
      std::sort(out.begin(), out.end());
      return out;
    }

   private:
    static Subgroup const& pick_largest(std::vector<Subgroup> const& maxes) {
      // largest order; among equal orders the least element set
      std::size_t best = 0;
      for (std::size_t i = 1; i < maxes.size(); ++i) {
        if (maxes[i].order > maxes[best].order) {
          best = i;
        }
      }
      return maxes[best];
    }

    PermGroup                                                     group_;
    std::vector<Permutation>                                      elems_;
    std::unordered_map<Permutation, elem_t, PermutationHash>      index_;
    std::vector<elem_t>                                           inv_;
    std::vector<elem_t>                                           table_;
  };

}  // namespace glab

#endif  // GLAB_INDEXED_GROUP_HPP_
