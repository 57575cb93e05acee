#ifndef GLAB_BITSET_HPP_
#define GLAB_BITSET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace glab {

  //! Fixed-size set of element indices; the subset representation used by the
  //! enumeration engine.
  class Bitset {
   public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const noexcept { return n_; }

    bool test(std::size_t i) const noexcept {
      return (words_[i >> 6] >> (i & 63)) & 1U;
    }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) noexcept {
      words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
      }
      return c;
    }

    bool is_subset_of(Bitset const& o) const noexcept {
      for (std::size_t k = 0; k < words_.size(); ++k) {
        if (words_[k] & ~o.words_[k]) {
          return false;
        }
      }
      return true;
    }

    Bitset& operator&=(Bitset const& o) noexcept {
      for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] &= o.words_[k];
      }
      return *this;
    }
    Bitset& operator|=(Bitset const& o) noexcept {
      for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] |= o.words_[k];
      }
      return *this;
    }
    friend Bitset operator&(Bitset a, Bitset const& b) noexcept { return a &= b; }
    friend Bitset operator|(Bitset a, Bitset const& b) noexcept { return a |= b; }

    std::size_t intersection_count(Bitset const& o) const noexcept {
      std::size_t c = 0;
      for (std::size_t k = 0; k < words_.size(); ++k) {
        c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
      }
      return c;
    }

    //! Calls f(i) for every set index in increasing order.
    template <typename F>
    void for_each(F&& f) const {
      for (std::size_t k = 0; k < words_.size(); ++k) {
        auto w = words_[k];
        while (w) {
          auto b = static_cast<std::size_t>(std::countr_zero(w));
          f(k * 64 + b);
          w &= w - 1;
        }
      }
    }

    std::vector<std::size_t> indices() const {
      std::vector<std::size_t> out;
      for_each([&](std::size_t i) { out.push_back(i); });
      return out;
    }

    std::size_t hash() const noexcept {
      std::uint64_t h = 0x9e3779b97f4a7c15ULL;
      for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }

    friend bool operator==(Bitset const&, Bitset const&) = default;
    friend auto operator<=>(Bitset const&, Bitset const&) = default;

   private:
    std::size_t                n_ = 0;
    std::vector<std::uint64_t> words_;
  };

  struct BitsetHash {
    std::size_t operator()(Bitset const& b) const noexcept { return b.hash(); }
  };

}  // namespace glab

#endif  // GLAB_BITSET_HPP_
