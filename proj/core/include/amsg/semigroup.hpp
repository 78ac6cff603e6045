#ifndef AMSG_SEMIGROUP_HPP_
#define AMSG_SEMIGROUP_HPP_

#include <compare>  // for strong_ordering
#include <cstddef>  // for size_t
#include <span>     // for span
#include <vector>   // for vector

#include "amsg/arith.hpp"

namespace amsg {

  //! A numerical semigroup held by its unique minimal generating set
  //! a_1 < ... < a_t with gcd 1. The only way to obtain one is through
  //! normalize(), so every instance satisfies those invariants; the set of
  //! generators doubles as the identity used for deduplication and ordering.
  //!
  //! The natural numbers are <1>.
  class NumericalSemigroup {
   public:
    std::vector<Int> const& generators() const noexcept {
      return _generators;
    }

    std::size_t embedding_dimension() const noexcept {
      return _generators.size();
    }

    Int multiplicity() const noexcept {
      return _generators.front();
    }

    bool is_naturals() const noexcept {
      return _generators.front() == 1;
    }

    friend bool operator==(NumericalSemigroup const&,
                           NumericalSemigroup const&) = default;
    friend auto operator<=>(NumericalSemigroup const&,
                            NumericalSemigroup const&) = default;

   private:
    explicit NumericalSemigroup(std::vector<Int> gens)
        : _generators(std::move(gens)) {}

    friend NumericalSemigroup normalize(std::span<Int const>);

    std::vector<Int> _generators;
  };

  //! Reduce an arbitrary generating set to the minimal one. Throws
  //! EmptyInput, NonPositiveValue (a zero entry) or NonCoprimeGenerators.
  //! Memory is linear in the largest generator.
  NumericalSemigroup normalize(std::span<Int const> raw_generators);

  inline NumericalSemigroup normalize(std::initializer_list<Int> raw) {
    return normalize(std::span<Int const>(raw.begin(), raw.size()));
  }

  //! Membership by dynamic programming over [0, x].
  bool contains(NumericalSemigroup const& s, Int x);

  //! Frobenius number plus one, found by scanning for the last gap below the
  //! bound a_1 * a_t. This is the brute-force reference the closed formulas
  //! are checked against; conductor of <1> is 0.
  Int conductor_oracle(NumericalSemigroup const& s);

  //! Gaps of s in increasing order.
  std::vector<Int> gaps(NumericalSemigroup const& s);

}  // namespace amsg

#endif  // AMSG_SEMIGROUP_HPP_
