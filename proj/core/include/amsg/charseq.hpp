#ifndef AMSG_CHARSEQ_HPP_
#define AMSG_CHARSEQ_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span
#include <vector>    // for vector

#include "amsg/arith.hpp"
#include "amsg/error.hpp"
#include "amsg/semigroup.hpp"

namespace amsg {

  struct SequenceViolation {
    ErrorCode   code;
    std::size_t index;
  };

  //! A sequence (v_0, ..., v_h) of positive integers with
  //!
  //!   (CS1) e_k < e_{k-1} for 1 <= k <= h and e_h = 1, where
  //!         e_k = gcd(v_0, ..., v_k);
  //!   (CS2) e_{k-1} v_k < e_k v_{k+1} for 1 <= k <= h - 1.
  //!
  //! The gcd tower e and the quotients n_k = e_{k-1} / e_k are computed once
  //! at validation. Instances are immutable and only produced by validate()
  //! or try_validate().
  class CharacteristicSequence {
   public:
    std::vector<Int> const& values() const noexcept {
      return _v;
    }
    //! e_0, ..., e_h
    std::vector<Int> const& gcds() const noexcept {
      return _e;
    }
    //! n_1, ..., n_h (index 0 holds n_1)
    std::vector<Int> const& quotients() const noexcept {
      return _n;
    }
    //! h, the number of entries after v_0.
    std::size_t length() const noexcept {
      return _v.size() - 1;
    }
    Int degree() const noexcept {
      return _v.front();
    }
    Int operator[](std::size_t i) const noexcept {
      return _v[i];
    }

    friend bool operator==(CharacteristicSequence const& a,
                           CharacteristicSequence const& b) noexcept {
      return a._v == b._v;
    }
    friend auto operator<=>(CharacteristicSequence const& a,
                            CharacteristicSequence const& b) noexcept {
      return a._v <=> b._v;
    }

   private:
    CharacteristicSequence() = default;
    friend std::optional<CharacteristicSequence>
    try_validate(std::span<Int const>, SequenceViolation*);

    std::vector<Int> _v;
    std::vector<Int> _e;
    std::vector<Int> _n;
  };

  //! Non-throwing check. On failure returns nullopt and, when `why` is not
  //! null, records the first violated condition. CS1 is checked over all k
  //! first, then e_h = 1, then CS2.
  std::optional<CharacteristicSequence>
  try_validate(std::span<Int const> v, SequenceViolation* why = nullptr);

  //! Throws Error with code EmptyInput, NonPositiveValue,
  //! CS1Violated(k), NotCoprimeTail or CS2Violated(k).
  CharacteristicSequence validate(std::span<Int const> v);

  inline CharacteristicSequence validate(std::initializer_list<Int> v) {
    return validate(std::span<Int const>(v.begin(), v.size()));
  }

  //! c(S) = sum_{i=1}^{h} (n_i - 1) v_i - v_0 + 1, or 0 for h = 0.
  Int conductor_formula(CharacteristicSequence const& cs);

  //! The semigroup N v_0 + ... + N v_h.
  NumericalSemigroup generated_semigroup(CharacteristicSequence const& cs);

  //! All characteristic sequences generating s, sorted. Candidates are
  //! (a_1, ..., a_t), (a_2, a_1, a_3, ..., a_t) and (k a_1, a_1, ..., a_t)
  //! for 2 <= k < a_2 / a_1; each is kept if it validates. An empty result
  //! means s is not strongly increasing.
  //!
  //! For <1> the family (n, 1) is infinite: the result is (1) together with
  //! (n, 1) for 2 <= n <= max_degree.
  std::vector<CharacteristicSequence>
  sequences_of(NumericalSemigroup const& s, Int max_degree = 0);

  //! Whether cs generates s; usable for <1>, where sequences_of() is
  //! truncated.
  bool generates(CharacteristicSequence const& cs, NumericalSemigroup const& s);

}  // namespace amsg

#endif  // AMSG_CHARSEQ_HPP_
