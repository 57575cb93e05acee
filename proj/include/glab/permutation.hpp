#ifndef GLAB_PERMUTATION_HPP_
#define GLAB_PERMUTATION_HPP_

// Permutations of {0, ..., n-1}.
//
// Action convention: points on the right. The image of x under p is written
// x^p and stored as p[x]. Products are read left to right, so (p * q) first
// applies p and then q: x^(p*q) = (x^p)^q. Conjugation is P^x = x^-1 P x.
//
// Points are 0-indexed internally; the cycle notation produced by
// to_cycles() and accepted by from_cycles() is 1-indexed.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace glab {

  using point_type = std::uint32_t;

  class Permutation {
   public:
    Permutation() = default;

    //! The identity of the given degree.
    explicit Permutation(std::size_t degree) : images_(degree) {
      std::iota(images_.begin(), images_.end(), point_type(0));
    }

    //! Takes ownership of an image vector; throws unless it is a bijection.
    explicit Permutation(std::vector<point_type> images)
        : images_(std::move(images)) {
      std::vector<bool> seen(images_.size(), false);
      for (auto x : images_) {
        if (x >= images_.size() || seen[x]) {
          throw PreconditionError("image vector is not a bijection");
        }
        seen[x] = true;
      }
    }

    //! Parses 1-indexed cycle notation, e.g. "(1 2 3)(4 5)" or "()".
    static Permutation from_cycles(std::size_t degree, std::string_view text);

    std::size_t degree() const noexcept { return images_.size(); }

    point_type operator[](point_type x) const noexcept { return images_[x]; }

    std::span<point_type const> images() const noexcept { return images_; }

    bool is_identity() const noexcept {
      for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) {
          return false;
        }
      }
      return true;
    }

    Permutation inverse() const {
      Permutation r;
      r.images_.resize(images_.size());
      for (std::size_t i = 0; i < images_.size(); ++i) {
        r.images_[images_[i]] = static_cast<point_type>(i);
      }
      return r;
    }

    //! p * q applies p first, then q.
    Permutation operator*(Permutation const& q) const {
      if (q.degree() != degree()) {
        throw DegreeMismatch(degree(), q.degree());
      }
      Permutation r;
      r.images_.resize(images_.size());
      for (std::size_t i = 0; i < images_.size(); ++i) {
        r.images_[i] = q.images_[images_[i]];
      }
      return r;
    }

    Permutation pow(std::int64_t e) const {
      Permutation base = e < 0 ? inverse() : *this;
      std::uint64_t n  = e < 0 ? std::uint64_t(-e) : std::uint64_t(e);
      Permutation acc(degree());
      while (n > 0) {
        if (n & 1) {
          acc = acc * base;
        }
        base = base * base;
        n >>= 1;
      }
      return acc;
    }

    //! Order of the cyclic group generated by this permutation.
    std::uint64_t element_order() const {
      std::uint64_t      ord = 1;
      std::vector<bool> seen(images_.size(), false);
      for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) {
          continue;
        }
        std::uint64_t len = 0;
        for (auto j = i; !seen[j]; j = images_[j]) {
          seen[j] = true;
          ++len;
        }
        ord = std::lcm(ord, len);
      }
      return ord;
    }

    //! Sorted list of cycle lengths, fixed points included.
    std::vector<std::size_t> cycle_type() const {
      std::vector<std::size_t> t;
      std::vector<bool>        seen(images_.size(), false);
      for (std::size_t i = 0; i < images_.size(); ++i) {
        std::size_t len = 0;
        for (auto j = i; !seen[j]; j = images_[j]) {
          seen[j] = true;
          ++len;
        }
        if (len > 0) {
          t.push_back(len);
        }
      }
      std::sort(t.begin(), t.end());
      return t;
    }

    //! 1-indexed cycle notation; the identity prints as "()".
    std::string to_cycles() const {
      std::string       out;
      std::vector<bool> seen(images_.size(), false);
      for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == i) {
          continue;
        }
        out += '(';
        for (auto j = i; !seen[j]; j = images_[j]) {
          seen[j] = true;
          if (j != i) {
            out += ' ';
          }
          out += std::to_string(j + 1);
        }
        out += ')';
      }
      return out.empty() ? "()" : out;
    }

    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    std::vector<point_type> images_;
  };

  inline Permutation compose(Permutation const& p, Permutation const& q) {
    return p * q;
  }

  //! p^x = x^-1 p x.
  inline Permutation conjugate(Permutation const& p, Permutation const& x) {
    return x.inverse() * p * x;
  }

  //! [a, b] = a^-1 b^-1 a b.
  inline Permutation commutator(Permutation const& a, Permutation const& b) {
    return a.inverse() * b.inverse() * a * b;
  }

  struct PermutationHash {
    std::size_t operator()(Permutation const& p) const noexcept {
      std::uint64_t h = 1469598103934665603ULL;
      for (auto x : p.images()) {
        h ^= x;
        h *= 1099511628211ULL;
      }
      return static_cast<std::size_t>(h);
    }
  };

  inline Permutation Permutation::from_cycles(std::size_t      degree,
                                              std::string_view text) {
    std::vector<point_type> img(degree);
    std::iota(img.begin(), img.end(), point_type(0));
    std::vector<bool> used(degree, false);
    std::size_t       i = 0;
    auto skip_ws = [&] {
      while (i < text.size()
             && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) {
        ++i;
      }
    };
    skip_ws();
    if (i == text.size()) {
      throw ParseError("empty permutation", i);
    }
    while (i < text.size()) {
      if (text[i] != '(') {
        throw ParseError("expected '('", i);
      }
      ++i;
      std::vector<point_type> cycle;
      skip_ws();
      while (i < text.size() && text[i] != ')') {
        if (text[i] < '0' || text[i] > '9') {
          throw ParseError("expected a point or ')'", i);
        }
        std::size_t start = i;
        std::uint64_t v   = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
          v = v * 10 + std::uint64_t(text[i] - '0');
          if (v > degree + 1) {
            break;
          }
          ++i;
        }
        if (v < 1 || v > degree) {
          throw ParseError("point " + std::string(text.substr(start, i - start))
                               + " outside 1.." + std::to_string(degree),
                           start);
        }
        auto pt = static_cast<point_type>(v - 1);
        if (used[pt]) {
          throw ParseError("point repeated across cycles", start);
        }
        used[pt] = true;
        cycle.push_back(pt);
        skip_ws();
      }
      if (i == text.size()) {
        throw ParseError("unterminated cycle", i);
      }
      ++i;  // ')'
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        img[cycle[k]] = cycle[(k + 1) % cycle.size()];
      }
      skip_ws();
    }
    return Permutation(std::move(img));
  }

}  // namespace glab

#endif  // GLAB_PERMUTATION_HPP_
