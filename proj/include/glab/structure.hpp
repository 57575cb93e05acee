#ifndef GLAB_STRUCTURE_HPP_
#define GLAB_STRUCTURE_HPP_

// Normal structure: normal closures, subnormality, derived series, normal and
// minimal normal subgroups, simplicity, composition series, quotients by
// coset action and projections of subgroups onto series factors.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "indexed_group.hpp"
#include "perm_group.hpp"

namespace glab {

  //! G = G_0 >= G_1 >= ... >= G_n = 1 with each term normal in the previous.
  struct SubnormalSeries {
    PermGroup              ambient;
    std::vector<PermGroup> terms;

    std::size_t length() const noexcept { return terms.size() - 1; }

    //! |G^i| = |G_{i-1} : G_i| for 1 <= i <= n.
    std::uint64_t factor_order(std::size_t i) const {
      if (i < 1 || i > length()) {
        throw PreconditionError("series factor index out of range");
      }
      return terms[i - 1].order() / terms[i].order();
    }

    std::vector<std::uint64_t> factor_orders() const {
      std::vector<std::uint64_t> out;
      for (std::size_t i = 1; i <= length(); ++i) {
        out.push_back(factor_order(i));
      }
      return out;
    }

    //! Checks the defining invariants; throws PreconditionError otherwise.
    void validate() const {
      if (terms.empty() || !(terms.front() == ambient)
          || terms.back().order() != 1) {
        throw PreconditionError("series must run from the ambient group to 1");
      }
      for (std::size_t i = 1; i < terms.size(); ++i) {
        if (!is_normal_subgroup(terms[i - 1], terms[i])) {
          throw PreconditionError("series term " + std::to_string(i)
                                  + " is not normal in its predecessor");
        }
      }
    }
  };

  //! The canonical epimorphism Q -> Q/K, with Q/K acting on the right cosets
  //! of K. Cosets are numbered by their least element in the sorted element
  //! order of Q, so the image group is reproducible.
  class QuotientMap {
   public:
    QuotientMap(PermGroup domain, PermGroup kernel, Limits const& lim = {})
        : domain_(std::move(domain)), kernel_(std::move(kernel)) {
      if (!is_normal_subgroup(domain_, kernel_)) {
        throw PreconditionError("quotient: kernel is not normal in domain");
      }
      table_ = std::make_shared<IndexedGroup>(domain_, lim);
      auto k = table_->from_group(kernel_);
      coset_of_.assign(table_->size(), kUnassigned);
      for (elem_t x = 0; x < table_->size(); ++x) {
        if (coset_of_[x] != kUnassigned) {
          continue;
        }
        auto c = static_cast<elem_t>(reps_.size());
        reps_.push_back(x);
        k.elements.for_each([&](std::size_t y) {
          coset_of_[table_->mul(static_cast<elem_t>(y), x)] = c;
        });
      }
      std::vector<Permutation> gens;
      for (auto const& g : domain_.generators()) {
        image_of_generators_.push_back(image(g));
        gens.push_back(image_of_generators_.back());
      }
      image_group_ = PermGroup(reps_.size(), std::move(gens));
    }

    PermGroup const& domain() const noexcept { return domain_; }
    PermGroup const& kernel() const noexcept { return kernel_; }
    PermGroup const& image_group() const noexcept { return image_group_; }
    std::vector<Permutation> const& image_of_generators() const noexcept {
      return image_of_generators_;
    }

    std::size_t coset_count() const noexcept { return reps_.size(); }

    //! The coset number of an element of the domain.
    std::size_t coset_of(Permutation const& x) const {
      return coset_of_[table_->index_of(x)];
    }

    //! Image of an element of the domain: its action on the cosets.
    Permutation image(Permutation const& x) const {
      auto                    xi = table_->index_of(x);
      std::vector<point_type> img(reps_.size());
      for (std::size_t c = 0; c < reps_.size(); ++c) {
        img[c] = coset_of_[table_->mul(reps_[c], xi)];
      }
      return Permutation(std::move(img));
    }

    //! Image of a subgroup of the domain.
    PermGroup image(PermGroup const& h) const {
      std::vector<Permutation> gens;
      for (auto const& g : h.generators()) {
        gens.push_back(image(g));
      }
      return PermGroup(reps_.size(), std::move(gens));
    }

    //! Full preimage of a subgroup of the image group. Coset 0 is the kernel,
    //! so an image element y lifts to the representative of coset y(0).
    PermGroup preimage(PermGroup const& sub) const {
      auto gens = kernel_.generators();
      for (auto const& y : sub.generators()) {
        gens.push_back(table_->element(reps_[y[0]]));
      }
      return PermGroup(domain_.degree(), std::move(gens));
    }

   private:
    static constexpr elem_t kUnassigned = ~elem_t(0);

    PermGroup                     domain_;
    PermGroup                     kernel_;
    PermGroup                     image_group_;
    std::vector<Permutation>      image_of_generators_;
    std::shared_ptr<IndexedGroup> table_;
    std::vector<elem_t>           coset_of_;
    std::vector<elem_t>           reps_;
  };

  inline QuotientMap quotient(PermGroup const& q, PermGroup const& k,
                              Limits const& lim = {}) {
    return QuotientMap(q, k, lim);
  }

  namespace detail {
    inline void require_subgroup(PermGroup const& g, PermGroup const& a,
                                 char const* what) {
      if (!a.is_subgroup_of(g)) {
        throw PreconditionError(std::string(what) + ": subgroup not contained "
                                "in the ambient group");
      }
    }
  }  // namespace detail

  //! Smallest normal subgroup of G containing A.
  inline PermGroup normal_closure(PermGroup const& g, PermGroup const& a) {
    detail::require_subgroup(g, a, "normal_closure");
    auto      gens = a.generators();
    PermGroup n(g.degree(), gens);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (auto const& x : g.generators()) {
        auto c = conjugate(gens[i], x);
        if (!n.contains(c)) {
          gens.push_back(std::move(c));
          n = PermGroup(g.degree(), gens);
        }
      }
    }
    return n;
  }

  struct SubnormalityResult {
    bool subnormal = false;
    //! G = N_0 >= N_1 >= ... where N_{i+1} is the normal closure of A in N_i;
    //! ends at A exactly when A is subnormal.
    std::vector<PermGroup> chain;

    std::size_t depth() const noexcept { return chain.size() - 1; }
  };

  //! Iterated normal closures of A; A is subnormal iff they reach A.
  inline SubnormalityResult is_subnormal(PermGroup const& g,
                                         PermGroup const& a) {
    detail::require_subgroup(g, a, "is_subnormal");
    SubnormalityResult res;
    res.chain.push_back(g);
    while (res.chain.back().order() != a.order()) {
      auto next = normal_closure(res.chain.back(), a);
      if (next.order() == res.chain.back().order()) {
        return res;
      }
      res.chain.push_back(std::move(next));
    }
    res.subnormal = true;
    return res;
  }

  inline PermGroup derived_subgroup(PermGroup const& g) {
    std::vector<Permutation> comms;
    auto const&              gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        comms.push_back(commutator(gens[i], gens[j]));
      }
    }
    return normal_closure(g, PermGroup(g.degree(), std::move(comms)));
  }

  //! G, G', G'', ... down to the perfect residual.
  inline std::vector<PermGroup> derived_series(PermGroup const& g) {
    std::vector<PermGroup> s{g};
    while (true) {
      auto d = derived_subgroup(s.back());
      if (d.order() == s.back().order()) {
        return s;
      }
      s.push_back(std::move(d));
    }
  }

  inline bool is_solvable(PermGroup const& g) {
    return derived_series(g).back().order() == 1;
  }

  //! All normal subgroups of G, sorted by order.
  inline std::vector<PermGroup> normal_subgroups(PermGroup const& g,
                                                 Limits const& lim = {}) {
    IndexedGroup           t(g, lim);
    std::vector<PermGroup> out;
    for (auto const& n : t.normal_subgroups(t.whole())) {
      out.push_back(t.to_group(n));
    }
    return out;
  }

  inline std::vector<PermGroup> minimal_normal_subgroups(
      PermGroup const& g, Limits const& lim = {}) {
    if (g.order() == 1) {
      throw PreconditionError("minimal_normal_subgroups: trivial group");
    }
    IndexedGroup t(g, lim);
    auto         normals = t.normal_subgroups(t.whole());
    std::vector<PermGroup> out;
    for (auto const& m : normals) {
      if (m.order == 1) {
        continue;
      }
      bool minimal = true;
      for (auto const& n : normals) {
        if (n.order > 1 && n.order < m.order && n.is_subgroup_of(m)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        out.push_back(t.to_group(m));
      }
    }
    return out;
  }

  namespace detail {
    inline bool is_prime(std::uint64_t n) {
      if (n < 2) {
        return false;
      }
      for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          return false;
        }
      }
      return true;
    }
  }  // namespace detail

  //! |G| > 1 and the normal closure of every non-identity conjugacy class is G.
  inline bool is_simple(PermGroup const& g, Limits const& lim = {}) {
    auto n = g.order();
    if (n == 1) {
      return false;
    }
    if (detail::is_prime(n)) {
      return true;
    }
    IndexedGroup t(g, lim);
    auto         whole = t.whole();
    for (auto const& cls : t.conjugacy_classes(whole)) {
      if (cls.front() == 0) {
        continue;
      }
      if (t.normal_closure(whole, t.closure({cls.front()})).order != n) {
        return false;
      }
    }
    return true;
  }

  //! A composition series built by repeatedly descending to a maximal proper
  //! normal subgroup. SeriesChoice::largest takes one of largest order,
  //! SeriesChoice::smallest one of least order; ties go to the least element
  //! set, so both series are reproducible.
  inline SubnormalSeries composition_series(
      PermGroup const& g, Limits const& lim = {},
      SeriesChoice choice = SeriesChoice::largest) {
    IndexedGroup    t(g, lim);
    SubnormalSeries s{g, {}};
    for (auto const& term : t.composition_series(t.whole(), choice)) {
      s.terms.push_back(t.to_group(term));
    }
    s.terms.front() = g;
    return s;
  }

  //! Composition factor orders of G, ascending.
  inline std::vector<std::uint64_t> composition_factor_orders(
      PermGroup const& g, Limits const& lim = {}) {
    if (is_solvable(g)) {
      std::vector<std::uint64_t> out;
      auto                       n = g.order();
      for (std::uint64_t p = 2; n > 1; ++p) {
        while (n % p == 0) {
          out.push_back(p);
          n /= p;
        }
      }
      return out;
    }
    IndexedGroup t(g, lim);
    return t.composition_factor_orders(t.whole());
  }

  //! H^i = (H ∩ G_{i-1}) G_i / G_i, as a subgroup of the factor group built
  //! by quotient(G_{i-1}, G_i).
  inline PermGroup project(SubnormalSeries const& series, PermGroup const& h,
                           std::size_t i, Limits const& lim = {}) {
    if (i < 1 || i > series.length()) {
      throw PreconditionError("project: factor index out of range");
    }
    detail::require_subgroup(series.ambient, h, "project");
    auto map = quotient(series.terms[i - 1], series.terms[i], lim);
    return map.image(intersection(h, series.terms[i - 1], lim));
  }

}  // namespace glab

#endif  // GLAB_STRUCTURE_HPP_
