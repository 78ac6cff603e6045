#ifndef AMSG_DIVISORS_HPP_
#define AMSG_DIVISORS_HPP_

#include <cstddef>  // for size_t
#include <span>     // for span
#include <vector>   // for vector

#include "amsg/arith.hpp"

namespace amsg {

  //! A chain n = d_0 > d_1 > ... > d_h = 1 with d_i | d_{i-1}. This is the
  //! gcd tower (e_0, ..., e_h) of every characteristic sequence of degree n
  //! that realises it.
  class DivisorSequence {
   public:
    //! Throws InvalidDivisorSequence.
    explicit DivisorSequence(std::vector<Int> d);

    std::vector<Int> const& values() const noexcept {
      return _d;
    }
    Int operator[](std::size_t i) const noexcept {
      return _d[i];
    }
    //! h
    std::size_t length() const noexcept {
      return _d.size() - 1;
    }
    Int degree() const noexcept {
      return _d.front();
    }

    //! The chain extended with zeros to `size` entries, for comparison in
    //! the zero-padded lexicographic order.
    std::vector<Int> padded(std::size_t size) const;

    friend bool operator==(DivisorSequence const&,
                           DivisorSequence const&) = default;
    //! Chains end in 1 and never continue past it, so plain lexicographic
    //! order coincides with the zero-padded one.
    friend auto operator<=>(DivisorSequence const&,
                            DivisorSequence const&) = default;

   private:
    std::vector<Int> _d;
  };

  //! Every divisor sequence of n > 1, in lexicographic order. For n = 1 the
  //! single chain (1) is returned.
  std::vector<DivisorSequence> divisor_sequences(Int n);

}  // namespace amsg

#endif  // AMSG_DIVISORS_HPP_
