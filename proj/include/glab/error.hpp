#ifndef GLAB_ERROR_HPP_
#define GLAB_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace glab {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Two permutations (or a permutation and a group) of different degree met.
  class DegreeMismatch : public Error {
   public:
    DegreeMismatch(std::size_t expected, std::size_t got)
        : Error("degree mismatch: expected " + std::to_string(expected)
                + ", got " + std::to_string(got)) {}
  };

  //! An operation was called outside its precondition (e.g. H not in G).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  //! A configured order cap was exceeded; the operation refuses to run.
  class CapExceeded : public Error {
   public:
    CapExceeded(std::string const& what, std::uint64_t order, std::uint64_t cap)
        : Error(what + ": group order " + std::to_string(order)
                + " exceeds cap " + std::to_string(cap)),
          order_(order),
          cap_(cap) {}

    std::uint64_t order() const noexcept { return order_; }
    std::uint64_t cap() const noexcept { return cap_; }

   private:
    std::uint64_t order_;
    std::uint64_t cap_;
  };

  //! Syntax error in a group or class expression; carries a 0-based offset.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t pos)
        : Error("parse error at position " + std::to_string(pos) + ": " + msg),
          msg_(msg),
          pos_(pos) {}

    std::size_t        position() const noexcept { return pos_; }
    std::string const& message() const noexcept { return msg_; }

   private:
    std::string msg_;
    std::size_t pos_;
  };

  //! Order caps shared by every enumeration-based operation.
  struct Limits {
    //! Largest group whose full subgroup lattice may be enumerated.
    std::uint64_t lattice_cap = 2000;
    //! Largest group whose elements may be scanned one by one.
    std::uint64_t scan_cap = 10000;
  };

}  // namespace glab

#endif  // GLAB_ERROR_HPP_
