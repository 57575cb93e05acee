#ifndef GLAB_PERM_GROUP_HPP_
#define GLAB_PERM_GROUP_HPP_

// Permutation groups backed by a stabilizer chain.
//
// A PermGroup is an immutable value: a degree and a list of generators. The
// base and strong generating set is computed on first use by a deterministic
// Schreier-Sims algorithm and shared between copies; std::call_once makes the
// first computation safe under concurrent access.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace glab {

  //! One level of a stabilizer chain: the orbit of a base point under the
  //! pointwise stabilizer of the earlier base points, with a transversal.
  struct ChainLevel {
    point_type               base;
    std::vector<Permutation> strong_gens;
    std::vector<point_type>  orbit;
    // rep_index[pt] indexes reps/rep_inverses, or is -1 outside the orbit.
    std::vector<std::int32_t> rep_index;
    std::vector<Permutation>  reps;  // base^reps[k] == orbit[k]
    std::vector<Permutation>  rep_inverses;

    bool in_orbit(point_type pt) const noexcept {
      return rep_index[pt] >= 0;
    }
  };

  class StabChain {
   public:
    StabChain(std::size_t degree, std::vector<Permutation> const& gens)
        : degree_(degree) {
      build(gens);
    }

    std::size_t degree() const noexcept { return degree_; }

    std::vector<ChainLevel> const& levels() const noexcept { return levels_; }

    std::vector<point_type> base() const {
      std::vector<point_type> b;
      for (auto const& l : levels_) {
        b.push_back(l.base);
      }
      return b;
    }

    std::uint64_t order() const noexcept {
      std::uint64_t n = 1;
      for (auto const& l : levels_) {
        n *= l.orbit.size();
      }
      return n;
    }

    //! Sifts g from level `start`; returns the residue and the level at which
    //! sifting stopped (levels().size() if it went all the way through).
    std::pair<Permutation, std::size_t> sift(Permutation g,
                                             std::size_t start = 0) const {
      for (std::size_t l = start; l < levels_.size(); ++l) {
        auto const& lev  = levels_[l];
        point_type  beta = g[lev.base];
        if (!lev.in_orbit(beta)) {
          return {std::move(g), l};
        }
        g = g * lev.rep_inverses[lev.rep_index[beta]];
      }
      return {std::move(g), levels_.size()};
    }

    bool contains(Permutation const& g) const {
      auto [r, l] = sift(g);
      return l == levels_.size() && r.is_identity();
    }

    //! Visits every element exactly once as u_{k-1} * ... * u_0.
    template <typename F>
    void for_each_element(F&& f) const {
      Permutation id(degree_);
      if (levels_.empty()) {
        f(id);
        return;
      }
      walk(levels_.size() - 1, id, f);
    }

   private:
    template <typename F>
    void walk(std::size_t l, Permutation const& prefix, F& f) const {
      for (auto const& u : levels_[l].reps) {
        Permutation next = prefix * u;
        if (l == 0) {
          f(next);
        } else {
          walk(l - 1, next, f);
        }
      }
    }

    static std::optional<point_type> first_moved(Permutation const& g) {
      for (std::size_t i = 0; i < g.degree(); ++i) {
        if (g[i] != i) {
          return static_cast<point_type>(i);
        }
      }
      return std::nullopt;
    }

    void recompute_orbit(ChainLevel& lev) const {
      lev.orbit.assign(1, lev.base);
      lev.rep_index.assign(degree_, -1);
      lev.reps.assign(1, Permutation(degree_));
      lev.rep_inverses.assign(1, Permutation(degree_));
      lev.rep_index[lev.base] = 0;
      for (std::size_t k = 0; k < lev.orbit.size(); ++k) {
        for (auto const& s : lev.strong_gens) {
          point_type q = s[lev.orbit[k]];
          if (lev.rep_index[q] < 0) {
            lev.rep_index[q] = static_cast<std::int32_t>(lev.orbit.size());
            lev.orbit.push_back(q);
            lev.reps.push_back(lev.reps[k] * s);
            lev.rep_inverses.push_back(lev.reps.back().inverse());
          }
        }
      }
    }

    void push_level(point_type base) {
      ChainLevel lev;
      lev.base = base;
      levels_.push_back(std::move(lev));
    }

    void build(std::vector<Permutation> const& gens) {
      for (auto const& g : gens) {
        if (g.degree() != degree_) {
          throw DegreeMismatch(degree_, g.degree());
        }
        if (g.is_identity()) {
          continue;
        }
        bool fixes_base = true;
        for (auto const& l : levels_) {
          if (g[l.base] != l.base) {
            fixes_base = false;
            break;
          }
        }
        if (fixes_base) {
          push_level(*first_moved(g));
        }
        // g joins S_l for every level whose earlier base points it fixes.
        for (auto& l : levels_) {
          l.strong_gens.push_back(g);
          if (g[l.base] != l.base) {
            break;
          }
        }
      }
      for (auto& l : levels_) {
        recompute_orbit(l);
      }
      if (levels_.empty()) {
        return;
      }
      // Deterministic Schreier-Sims: level i is complete once every Schreier
      // generator of level i sifts to the identity through levels i+1...
      std::size_t i = levels_.size();
      while (i-- > 0) {
        bool restarted = false;
        for (std::size_t k = 0; k < levels_[i].orbit.size() && !restarted;
             ++k) {
          for (std::size_t s = 0; s < levels_[i].strong_gens.size(); ++s) {
            auto const& lev  = levels_[i];
            auto const& gen  = lev.strong_gens[s];
            point_type  q    = gen[lev.orbit[k]];
            Permutation schr = lev.reps[k] * gen * lev.rep_inverses[lev.rep_index[q]];
            if (schr.is_identity()) {
              continue;
            }
            auto [r, j] = sift(std::move(schr), i + 1);
            if (j == levels_.size() && r.is_identity()) {
              continue;
            }
            if (j == levels_.size()) {
              push_level(*first_moved(r));
            }
            for (std::size_t l = i + 1; l <= j; ++l) {
              levels_[l].strong_gens.push_back(r);
              recompute_orbit(levels_[l]);
            }
            i         = j + 1;  // the loop decrement lands on j
            restarted = true;
            break;
          }
        }
      }
    }

    std::size_t             degree_;
    std::vector<ChainLevel> levels_;
  };

  class PermGroup {
   public:
    //! The trivial group of degree 1.
    PermGroup() : PermGroup(1, {}) {}

    PermGroup(std::size_t degree, std::vector<Permutation> gens)
        : degree_(degree), impl_(std::make_shared<Impl>()) {
      if (degree == 0) {
        throw PreconditionError("permutation groups need degree >= 1");
      }
      for (auto& g : gens) {
        if (g.degree() != degree) {
          throw DegreeMismatch(degree, g.degree());
        }
        if (!g.is_identity()
            && std::find(gens_.begin(), gens_.end(), g) == gens_.end()) {
          gens_.push_back(std::move(g));
        }
      }
    }

    static PermGroup trivial(std::size_t degree) {
      return PermGroup(degree, {});
    }

    std::size_t degree() const noexcept { return degree_; }

    std::vector<Permutation> const& generators() const noexcept {
      return gens_;
    }

    StabChain const& chain() const {
      std::call_once(impl_->once, [this] {
        impl_->chain = std::make_unique<StabChain>(degree_, gens_);
      });
      return *impl_->chain;
    }

    std::uint64_t order() const { return chain().order(); }

    bool is_trivial() const noexcept { return gens_.empty(); }

    bool contains(Permutation const& p) const {
      if (p.degree() != degree_) {
        throw DegreeMismatch(degree_, p.degree());
      }
      return chain().contains(p);
    }

    //! True iff every generator of this group lies in `other`.
    bool is_subgroup_of(PermGroup const& other) const {
      if (other.degree_ != degree_) {
        throw DegreeMismatch(other.degree_, degree_);
      }
      for (auto const& g : gens_) {
        if (!other.contains(g)) {
          return false;
        }
      }
      return true;
    }

    template <typename F>
    void for_each_element(F&& f) const {
      chain().for_each_element(std::forward<F>(f));
    }

    std::vector<Permutation> elements() const {
      std::vector<Permutation> out;
      out.reserve(order());
      for_each_element([&](Permutation const& p) { out.push_back(p); });
      return out;
    }

    //! Orbits on {0..degree-1}; each orbit sorted, orbits ordered by minimum.
    std::vector<std::vector<point_type>> orbits() const {
      std::vector<std::vector<point_type>> out;
      std::vector<bool>                    seen(degree_, false);
      for (point_type x = 0; x < degree_; ++x) {
        if (seen[x]) {
          continue;
        }
        std::vector<point_type> orb{x};
        seen[x] = true;
        for (std::size_t k = 0; k < orb.size(); ++k) {
          for (auto const& g : gens_) {
            auto y = g[orb[k]];
            if (!seen[y]) {
              seen[y] = true;
              orb.push_back(y);
            }
          }
        }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
      }
      return out;
    }

    friend bool operator==(PermGroup const& a, PermGroup const& b) {
      return a.degree_ == b.degree_ && a.order() == b.order()
             && a.is_subgroup_of(b);
    }

   private:
    struct Impl {
      std::once_flag             once;
      std::unique_ptr<StabChain> chain;
    };

    std::size_t              degree_;
    std::vector<Permutation> gens_;
    std::shared_ptr<Impl>    impl_;
  };

  inline PermGroup generated(std::size_t                     degree,
                             std::vector<Permutation> const& elems) {
    return PermGroup(degree, elems);
  }

  inline PermGroup join(PermGroup const& a, PermGroup const& b) {
    if (a.degree() != b.degree()) {
      throw DegreeMismatch(a.degree(), b.degree());
    }
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return PermGroup(a.degree(), std::move(gens));
  }

  //! G^x = x^-1 G x.
  inline PermGroup conjugate(PermGroup const& g, Permutation const& x) {
    std::vector<Permutation> gens;
    for (auto const& s : g.generators()) {
      gens.push_back(conjugate(s, x));
    }
    return PermGroup(g.degree(), std::move(gens));
  }

  //! True iff x^-1 P x = P.
  inline bool normalizes(Permutation const& x, PermGroup const& p) {
    for (auto const& s : p.generators()) {
      if (!p.contains(conjugate(s, x))) {
        return false;
      }
    }
    return true;
  }

  //! True iff every generator of G normalizes N (N need not lie in G).
  inline bool is_normalized_by(PermGroup const& n, PermGroup const& g) {
    for (auto const& x : g.generators()) {
      if (!normalizes(x, n)) {
        return false;
      }
    }
    return true;
  }

  //! N <= G and N normal in G.
  inline bool is_normal_subgroup(PermGroup const& g, PermGroup const& n) {
    return n.is_subgroup_of(g) && is_normalized_by(n, g);
  }

  namespace detail {
    // Builds a group from the elements visited, skipping elements already
    // generated; the generating set stays small.
    class IncrementalGroup {
     public:
      explicit IncrementalGroup(std::size_t degree)
          : group_(PermGroup::trivial(degree)) {}

      void add(Permutation const& p) {
        if (!group_.contains(p)) {
          auto gens = group_.generators();
          gens.push_back(p);
          group_ = PermGroup(group_.degree(), std::move(gens));
        }
      }

      PermGroup const& group() const noexcept { return group_; }

     private:
      PermGroup group_;
    };

    inline void require_scan(PermGroup const& g, Limits const& lim,
                             char const* what) {
      if (g.order() > lim.scan_cap) {
        throw CapExceeded(what, g.order(), lim.scan_cap);
      }
    }
  }  // namespace detail

  inline PermGroup intersection(PermGroup const& a, PermGroup const& b,
                                Limits const& lim = {}) {
    if (a.degree() != b.degree()) {
      throw DegreeMismatch(a.degree(), b.degree());
    }
    auto const& small = a.order() <= b.order() ? a : b;
    auto const& large = a.order() <= b.order() ? b : a;
    if (small.is_subgroup_of(large)) {
      return small;
    }
    detail::require_scan(small, lim, "intersection");
    detail::IncrementalGroup acc(a.degree());
    small.for_each_element([&](Permutation const& p) {
      if (large.contains(p)) {
        acc.add(p);
      }
    });
    return acc.group();
  }

  ////////////////////////////////////////////////////////////////////////
  // Normalizers and subgroup conjugacy
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    struct OrbitPartition {
      std::vector<std::size_t> cell;  // point -> orbit id
      std::vector<std::size_t> size;  // orbit id -> orbit length

      explicit OrbitPartition(PermGroup const& g) : cell(g.degree()) {
        for (auto const& orb : g.orbits()) {
          for (auto x : orb) {
            cell[x] = size.size();
          }
          size.push_back(orb.size());
        }
      }
    };

    // Depth-first search over the elements of G, described by the images of
    // the base points. A partial base image is kept only while it can extend
    // to an element mapping every `src` orbit onto a `dst` orbit of the same
    // length. `visit` is called on every surviving full element and stops the
    // search by returning true.
    template <typename Visit>
    class OrbitBacktrack {
     public:
      OrbitBacktrack(PermGroup const& g, OrbitPartition src,
                     OrbitPartition dst, Visit& visit)
          : chain_(g.chain()),
            src_(std::move(src)),
            dst_(std::move(dst)),
            visit_(visit) {}

      bool run() {
        auto const& levels = chain_.levels();
        images_.resize(levels.size());
        if (levels.empty()) {
          return visit_(Permutation(chain_.degree()));
        }
        return search(0, Permutation(chain_.degree()));
      }

     private:
      bool compatible(std::size_t l, point_type gamma) const {
        auto const& levels = chain_.levels();
        auto        b      = levels[l].base;
        if (src_.size[src_.cell[b]] != dst_.size[dst_.cell[gamma]]) {
          return false;
        }
        for (std::size_t j = 0; j < l; ++j) {
          bool same_src = src_.cell[levels[j].base] == src_.cell[b];
          bool same_dst = dst_.cell[images_[j]] == dst_.cell[gamma];
          if (same_src != same_dst) {
            return false;
          }
        }
        return true;
      }

      // `suffix` = u_{l-1} * ... * u_0 composed so far (applied after the
      // level-l coset representative).
      bool search(std::size_t l, Permutation const& suffix) {
        auto const& lev = chain_.levels()[l];
        for (std::size_t k = 0; k < lev.orbit.size(); ++k) {
          point_type gamma = suffix[lev.orbit[k]];
          if (!compatible(l, gamma)) {
            continue;
          }
          images_[l]       = gamma;
          Permutation next = lev.reps[k] * suffix;
          if (l + 1 == chain_.levels().size()) {
            if (visit_(next)) {
              return true;
            }
          } else if (search(l + 1, next)) {
            return true;
          }
        }
        return false;
      }

      StabChain const&        chain_;
      OrbitPartition          src_;
      OrbitPartition          dst_;
      Visit&                  visit_;
      std::vector<point_type> images_;
    };

    template <typename Visit>
    bool orbit_backtrack(PermGroup const& g, PermGroup const& src,
                         PermGroup const& dst, Visit visit) {
      OrbitBacktrack<Visit> bt(
          g, OrbitPartition(src), OrbitPartition(dst), visit);
      return bt.run();
    }
  }  // namespace detail

  //! N_Q(P) by scanning every element of Q.
  inline PermGroup normalizer_scan(PermGroup const& q, PermGroup const& p,
                                   Limits const& lim = {}) {
    if (q.degree() != p.degree()) {
      throw DegreeMismatch(q.degree(), p.degree());
    }
    detail::require_scan(q, lim, "normalizer");
    detail::IncrementalGroup acc(q.degree());
    q.for_each_element([&](Permutation const& x) {
      if (normalizes(x, p)) {
        acc.add(x);
      }
    });
    return acc.group();
  }

  //! N_Q(P) by backtrack over the stabilizer chain of Q, pruned by the orbit
  //! structure of P (a normalizing element permutes the orbits of P).
  inline PermGroup normalizer_backtrack(PermGroup const& q,
                                        PermGroup const& p) {
    if (q.degree() != p.degree()) {
      throw DegreeMismatch(q.degree(), p.degree());
    }
    detail::IncrementalGroup acc(q.degree());
    detail::orbit_backtrack(q, p, p, [&](Permutation const& x) {
      if (!acc.group().contains(x) && normalizes(x, p)) {
        acc.add(x);
      }
      return false;
    });
    return acc.group();
  }

  //! N_Q(P) = {x in Q : P^x = P}; P need not lie in Q. Scans Q up to the
  //! scan cap and falls back to backtrack above it.
  inline PermGroup normalizer(PermGroup const& q, PermGroup const& p,
                              Limits const& lim = {}) {
    if (q.order() <= lim.scan_cap) {
      return normalizer_scan(q, p, lim);
    }
    return normalizer_backtrack(q, p);
  }

  namespace detail {
    inline bool conjugates_onto(Permutation const& x, PermGroup const& h,
                                PermGroup const& k) {
      for (auto const& s : h.generators()) {
        if (!k.contains(conjugate(s, x))) {
          return false;
        }
      }
      return true;
    }

    inline void check_subgroups(PermGroup const& g, PermGroup const& h,
                                PermGroup const& k) {
      if (!h.is_subgroup_of(g) || !k.is_subgroup_of(g)) {
        throw PreconditionError("conjugacy test needs H, K <= G");
      }
    }
  }  // namespace detail

  inline std::optional<Permutation> conjugator_scan(PermGroup const& g,
                                                    PermGroup const& h,
                                                    PermGroup const& k,
                                                    Limits const& lim = {}) {
    detail::check_subgroups(g, h, k);
    if (h.order() != k.order()) {
      return std::nullopt;
    }
    detail::require_scan(g, lim, "subgroup conjugacy");
    std::optional<Permutation> found;
    // Identity first, so (G, H, H) answers with the identity.
    if (h == k) {
      return Permutation(g.degree());
    }
    g.for_each_element([&](Permutation const& x) {
      if (!found && detail::conjugates_onto(x, h, k)) {
        found = x;
      }
    });
    return found;
  }

  inline std::optional<Permutation> conjugator_backtrack(PermGroup const& g,
                                                         PermGroup const& h,
                                                         PermGroup const& k) {
    detail::check_subgroups(g, h, k);
    if (h.order() != k.order()) {
      return std::nullopt;
    }
    if (h == k) {
      return Permutation(g.degree());
    }
    std::optional<Permutation> found;
    detail::orbit_backtrack(g, h, k, [&](Permutation const& x) {
      if (detail::conjugates_onto(x, h, k)) {
        found = x;
        return true;
      }
      return false;
    });
    return found;
  }

  //! Some g in G with H^g = K, or nullopt. Throws unless H, K <= G.
  inline std::optional<Permutation> are_conjugate_subgroups(
      PermGroup const& g, PermGroup const& h, PermGroup const& k,
      Limits const& lim = {}) {
    if (g.order() <= lim.scan_cap) {
      return conjugator_scan(g, h, k, lim);
    }
    return conjugator_backtrack(g, h, k);
  }

  //! Naive closure: every element, by breadth-first multiplication by the
  //! generators. Oracle for the chain; only sensible for small groups.
  inline std::vector<Permutation> naive_closure(PermGroup const& g) {
    std::vector<Permutation> elems{Permutation(g.degree())};
    std::unordered_set<Permutation, PermutationHash> seen(elems.begin(),
                                                          elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (auto const& s : g.generators()) {
        auto y = elems[i] * s;
        if (seen.insert(y).second) {
          elems.push_back(std::move(y));
        }
      }
    }
    return elems;
  }

}  // namespace glab

#endif  // GLAB_PERM_GROUP_HPP_
