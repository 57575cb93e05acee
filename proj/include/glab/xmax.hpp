#ifndef GLAB_XMAX_HPP_
#define GLAB_XMAX_HPP_

// Maximal X-subgroups: certification by one-element extensions, m_X(G) from
// the subgroup lattice, intersections X ∩ G with X-maximal subgroups of a
// declared overgroup G*, the almost simple case where every G* between G and
// Aut(S) is enumerated, and products over direct factors.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "error.hpp"
#include "indexed_group.hpp"
#include "lattice.hpp"
#include "perm_group.hpp"
#include "structure.hpp"
#include "xclass.hpp"

namespace glab {

  struct CertifyReport {
    bool maximal = false;
    //! Elements of G \ H covered; each right coset Hg is closed only once.
    std::uint64_t scanned = 0;
    //! Number of subgroups <H, g> built.
    std::uint64_t closures = 0;
    //! Some g with <H, g> in X, when H is not maximal.
    std::optional<Permutation> extension;
  };

  //! Scans G \ H for an element g with <H, g> in X. Since X is closed under
  //! subgroups, H is X-maximal iff none exists.
  inline CertifyReport certify_x_maximal_report(ClassSpec const& x,
                                                PermGroup const& g,
                                                PermGroup const& h,
                                                Limits const& lim = {}) {
    if (!h.is_subgroup_of(g)) {
      throw PreconditionError("certify_x_maximal: H is not a subgroup of G");
    }
    if (!is_member(x, h)) {
      throw PreconditionError("certify_x_maximal: H is not an X-group");
    }
    detail::require_scan(g, lim, "certify_x_maximal");
    IndexedGroup  t(g, lim);
    auto          hs = t.from_group(h);
    Bitset        covered(t.size());
    CertifyReport rep;
    covered |= hs.elements;
    auto hidx = hs.elements.indices();
    for (elem_t e = 0; e < t.size() && !rep.extension; ++e) {
      if (covered.test(e)) {
        continue;
      }
      for (auto y : hidx) {
        covered.set(t.mul(static_cast<elem_t>(y), e));
      }
      rep.scanned += hidx.size();
      ++rep.closures;
      bool in_x;
      if (t.size() <= IndexedGroup::kTableCap) {
        in_x = is_member(x, t, t.extend(hs, e));
      } else {
        auto gens = h.generators();
        gens.push_back(t.element(e));
        in_x = is_member(x, PermGroup(g.degree(), std::move(gens)));
      }
      if (in_x) {
        rep.extension = t.element(e);
      }
    }
    rep.maximal = !rep.extension;
    return rep;
  }

  inline bool certify_x_maximal(ClassSpec const& x, PermGroup const& g,
                                PermGroup const& h, Limits const& lim = {}) {
    return certify_x_maximal_report(x, g, h, lim).maximal;
  }

  struct XMaxClass {
    PermGroup   rep;
    std::size_t count = 1;  // size of the conjugacy class
    std::size_t lattice_class = 0;
  };

  //! Indices of the lattice classes that are X-maximal.
  inline std::vector<std::size_t> x_maximal_classes(ClassSpec const&       x,
                                                    SubgroupLattice const& l) {
    auto const&       cls = l.classes();
    std::vector<bool> in(cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i) {
      in[i] = is_member(x, l.table(), cls[i].rep);
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (!in[i]) {
        continue;
      }
      bool maximal = true;
      for (std::size_t j = i + 1; j < cls.size() && maximal; ++j) {
        if (in[j] && cls[j].order() > cls[i].order() && l.below(i, j)) {
          maximal = false;
        }
      }
      if (maximal) {
        out.push_back(i);
      }
    }
    return out;
  }

  inline std::vector<XMaxClass> maximal_x_subgroups(ClassSpec const&       x,
                                                    SubgroupLattice const& l) {
    std::vector<XMaxClass> out;
    for (auto i : x_maximal_classes(x, l)) {
      out.push_back({l.representative(i), l.classes()[i].conjugates(), i});
    }
    return out;
  }

  //! m_X(G) up to conjugacy. Above the lattice cap only the cases G in X,
  //! X = {p}-groups (Sylow) and pi(X) ∩ pi(G) empty are answered.
  inline std::vector<XMaxClass> maximal_x_subgroups(ClassSpec const& x,
                                                    PermGroup const& g,
                                                    Limits const& lim = {}) {
    if (g.order() <= lim.lattice_cap) {
      return maximal_x_subgroups(x, enumerate_subgroups(g, lim));
    }
    if (is_member(x, g)) {
      return {{g, 1, 0}};
    }
    if (has_no_nontrivial_x_subgroup(x, g)) {
      return {{PermGroup::trivial(g.degree()), 1, 0}};
    }
    if (x.kind() == ClassSpec::Kind::pi_groups && x.primes().size() == 1) {
      auto p = x.primes()[0];
      auto n = all_sylow_subgroups(g, p, lim).size();
      return {{sylow_subgroup(g, p, lim), n, 0}};
    }
    throw CapExceeded("maximal_x_subgroups", g.order(), lim.lattice_cap);
  }

  //! Every X-maximal subgroup of G, as element sets of the lattice.
  inline std::vector<Bitset> all_maximal_x_subgroups(ClassSpec const&       x,
                                                     SubgroupLattice const& l) {
    std::vector<Bitset> out;
    for (auto i : x_maximal_classes(x, l)) {
      auto const& m = l.classes()[i].members;
      out.insert(out.end(), m.begin(), m.end());
    }
    return out;
  }

  enum class EmbeddingMode { normal, subnormal };

  inline char const* to_string(EmbeddingMode m) {
    return m == EmbeddingMode::normal ? "normal" : "subnormal";
  }

  struct AmbientWitness {
    PermGroup     ambient;      // G*
    PermGroup     embedded;     // G inside G*
    EmbeddingMode mode = EmbeddingMode::normal;
    PermGroup     witness_max;  // K in m_X(G*) with H = K ∩ G
  };

  struct SubmaxResult {
    PermGroup      subgroup;
    AmbientWitness witness;
  };

  //! Subgroup lattices of ambient groups, kept across calls that revisit the
  //! same overgroups.
  class LatticeCache {
   public:
    SubgroupLattice const& get(PermGroup const& g, Limits const& lim) {
      for (auto const& [key, l] : items_) {
        if (key == g) {
          return *l;
        }
      }
      items_.emplace_back(g, std::make_unique<SubgroupLattice>(enumerate_subgroups(g, lim)));
      return *items_.back().second;
    }

   private:
    std::vector<std::pair<PermGroup, std::unique_ptr<SubgroupLattice>>> items_;
  };

  namespace detail {
    inline void require_embedding(PermGroup const& ambient, PermGroup const& g,
                                  EmbeddingMode mode) {
      if (!g.is_subgroup_of(ambient)) {
        throw PreconditionError("G is not a subgroup of the ambient group");
      }
      if (mode == EmbeddingMode::normal && !is_normal_subgroup(ambient, g)) {
        throw PreconditionError("G is not normal in the ambient group");
      }
      if (mode == EmbeddingMode::subnormal && !is_subnormal(ambient, g).subnormal) {
        throw PreconditionError("G is not subnormal in the ambient group");
      }
    }

    // Dedupes subgroups of G by element set and orders them by (order,
    // element set in the sorted numbering of G).
    class SubgroupSet {
     public:
      SubgroupSet(PermGroup const& g, Limits const& lim) : t_(g, lim) {}

      bool insert(SubmaxResult r) {
        auto s = t_.from_group(r.subgroup);
        if (!seen_.emplace(s.elements, items_.size()).second) {
          return false;
        }
        keys_.push_back(std::move(s.elements));
        items_.push_back(std::move(r));
        return true;
      }

      std::vector<SubmaxResult> take() {
        std::vector<std::size_t> idx(items_.size());
        for (std::size_t i = 0; i < idx.size(); ++i) {
          idx[i] = i;
        }
        std::sort(idx.begin(), idx.end(), [&](auto a, auto b) {
          auto oa = items_[a].subgroup.order(), ob = items_[b].subgroup.order();
          return oa != ob ? oa < ob : keys_[a] < keys_[b];
        });
        std::vector<SubmaxResult> out;
        for (auto i : idx) {
          out.push_back(std::move(items_[i]));
        }
        return out;
      }

     private:
      IndexedGroup                                        t_;
      std::unordered_map<Bitset, std::size_t, BitsetHash> seen_;
      std::vector<Bitset>                                 keys_;
      std::vector<SubmaxResult>                           items_;
    };

    inline void collect_submax(ClassSpec const& x, PermGroup const& ambient,
                               PermGroup const& g, EmbeddingMode mode,
                               Limits const& lim, SubgroupSet& out,
                               LatticeCache* cache) {
      std::optional<SubgroupLattice> own;
      if (!cache) {
        own.emplace(enumerate_subgroups(ambient, lim));
      }
      auto const& l  = cache ? cache->get(ambient, lim) : *own;
      auto const& t  = l.table();
      auto        gs = t.from_group(g);
      for (auto const& k : all_maximal_x_subgroups(x, l)) {
        auto h = t.from_bits(k & gs.elements);
        out.insert({t.to_group(h),
                    {ambient, g, mode, t.to_group(t.from_bits(k))}});
      }
    }
  }  // namespace detail

  //! { K ∩ G : K in m_X(G*) } for one declared overgroup G*, each with the K
  //! realizing it. Sorted by order, then by element set.
  inline std::vector<SubmaxResult> submax_in_ambient(ClassSpec const& x,
                                                     PermGroup const& ambient,
                                                     PermGroup const& g,
                                                     EmbeddingMode    mode,
                                                     Limits const& lim = {},
                                                     LatticeCache* cache = nullptr) {
    detail::require_embedding(ambient, g, mode);
    detail::require_lattice(ambient, lim);
    detail::SubgroupSet out(g, lim);
    detail::collect_submax(x, ambient, g, mode, lim, out, cache);
    return out.take();
  }

  //! The unique minimal normal subgroup of G, required to be nonabelian simple.
  inline PermGroup simple_socle(PermGroup const& g, Limits const& lim = {}) {
    if (g.order() == 1) {
      throw PreconditionError("socle of the trivial group is not simple");
    }
    auto mins = minimal_normal_subgroups(g, lim);
    if (mins.size() != 1 || !is_simple(mins[0], lim)
        || detail::is_prime(mins[0].order())) {
      throw PreconditionError("socle is not nonabelian simple");
    }
    return mins[0];
  }

  //! Every G* with G ⊴ G* <= Aut, found as preimages of the subgroups of
  //! Aut/S. Sorted by order.
  inline std::vector<PermGroup> normalizing_overgroups(PermGroup const& g,
                                                       PermGroup const& aut,
                                                       PermGroup const& socle,
                                                       Limits const& lim = {}) {
    auto                   map = quotient(aut, socle, lim);
    auto                   l   = enumerate_subgroups(map.image_group(), lim);
    std::vector<PermGroup> out;
    for (std::size_t i = 0; i < l.size(); ++i) {
      for (auto const& m : l.classes()[i].members) {
        auto over = map.preimage(l.table().to_group(l.table().from_bits(m)));
        if (g.is_subgroup_of(over) && is_normal_subgroup(over, g)) {
          out.push_back(std::move(over));
        }
      }
    }
    std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.order() < b.order();
    });
    return out;
  }

  //! Union over all G with G ⊴ G* <= Aut of { K ∩ G : K in m_X(G*) }. For an
  //! almost simple G with socle S not in X this is the full set of strongly
  //! submaximal X-subgroups.
  inline std::vector<SubmaxResult> strong_submax_almost_simple(
      ClassSpec const& x, PermGroup const& g, PermGroup const& aut,
      Limits const& lim = {}, LatticeCache* cache = nullptr) {
    if (!g.is_subgroup_of(aut)) {
      throw PreconditionError("G is not contained in Aut");
    }
    auto s = simple_socle(g, lim);
    if (is_member(x, s)) {
      throw PreconditionError("the socle belongs to X");
    }
    if (!is_normal_subgroup(aut, s) || !(simple_socle(aut, lim) == s)) {
      throw PreconditionError("Aut does not have the same simple socle as G");
    }
    detail::SubgroupSet out(g, lim);
    for (auto const& over : normalizing_overgroups(g, aut, s, lim)) {
      detail::collect_submax(x, over, g, EmbeddingMode::normal, lim, out, cache);
    }
    return out.take();
  }

  //! Points moved by some element of G.
  inline std::vector<point_type> support(PermGroup const& g) {
    std::vector<bool> moved(g.degree(), false);
    for (auto const& s : g.generators()) {
      for (std::size_t i = 0; i < g.degree(); ++i) {
        if (s[i] != i) {
          moved[i] = true;
        }
      }
    }
    std::vector<point_type> out;
    for (std::size_t i = 0; i < moved.size(); ++i) {
      if (moved[i]) {
        out.push_back(static_cast<point_type>(i));
      }
    }
    return out;
  }

  struct DirectPart {
    PermGroup                 factor;      // G_i
    std::vector<SubmaxResult> witnessed;   // H_i with ambient G_i*
  };

  //! For G = G_1 x ... x G_n with each part acting on its own points (and
  //! each ambient G_i* too), returns every <H_1, ..., H_n> with witness
  //! G* = G_1* x ... x G_n* and K = <K_1, ..., K_n>. The mode is subnormal if
  //! any part is.
  inline std::vector<SubmaxResult> direct_product_submax(
      std::vector<DirectPart> const& parts) {
    if (parts.empty()) {
      throw PreconditionError("direct_product_submax: no parts");
    }
    auto degree = parts[0].factor.degree();
    std::vector<bool> used_g(degree, false), used_amb(degree, false);
    auto claim = [&](std::vector<bool>& used, PermGroup const& grp) {
      if (grp.degree() != degree) {
        throw DegreeMismatch(degree, grp.degree());
      }
      for (auto p : support(grp)) {
        if (used[p]) {
          return false;
        }
        used[p] = true;
      }
      return true;
    };
    for (auto const& part : parts) {
      if (!claim(used_g, part.factor)) {
        throw PreconditionError("parts do not form a direct product");
      }
      std::vector<bool> part_amb(degree, false);
      for (auto const& r : part.witnessed) {
        if (!(r.witness.embedded == part.factor)
            || !r.subgroup.is_subgroup_of(part.factor)) {
          throw PreconditionError("witness does not embed its part");
        }
        for (auto p : support(r.witness.ambient)) {
          part_amb[p] = true;
        }
      }
      for (std::size_t p = 0; p < degree; ++p) {
        if (part_amb[p]) {
          if (used_amb[p]) {
            throw PreconditionError("ambient groups of the parts overlap");
          }
          used_amb[p] = true;
        }
      }
    }
    std::vector<SubmaxResult> out;
    std::vector<std::size_t>  pick(parts.size(), 0);
    for (auto const& part : parts) {
      if (part.witnessed.empty()) {
        return out;
      }
    }
    while (true) {
      std::vector<Permutation> h, g, amb, k;
      auto                     mode = EmbeddingMode::normal;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        auto const& r = parts[i].witnessed[pick[i]];
        auto add = [](std::vector<Permutation>& v, PermGroup const& grp) {
          v.insert(v.end(), grp.generators().begin(), grp.generators().end());
        };
        add(h, r.subgroup);
        add(g, parts[i].factor);
        add(amb, r.witness.ambient);
        add(k, r.witness.witness_max);
        if (r.witness.mode == EmbeddingMode::subnormal) {
          mode = EmbeddingMode::subnormal;
        }
      }
      out.push_back({PermGroup(degree, std::move(h)),
                     {PermGroup(degree, std::move(amb)),
                      PermGroup(degree, std::move(g)), mode,
                      PermGroup(degree, std::move(k))}});
      std::size_t i = 0;
      while (i < parts.size() && ++pick[i] == parts[i].witnessed.size()) {
        pick[i++] = 0;
      }
      if (i == parts.size()) {
        return out;
      }
    }
  }

}  // namespace glab

#endif  // GLAB_XMAX_HPP_
