#ifndef AMSG_CONSTRUCT_HPP_
#define AMSG_CONSTRUCT_HPP_

#include <variant>  // for variant
#include <vector>   // for vector

#include "amsg/arith.hpp"
#include "amsg/charseq.hpp"
#include "amsg/gluing.hpp"

namespace amsg {

  //! (n, 2, c + 1): A-M of degree n with conductor c whenever n is even and
  //! n <= c < (n^2 - 2)/2.
  struct DirectStep {
    Int degree;
    Int conductor;
  };

  //! (n, 2k, v_2) with n = 2r, r odd, gcd(k, r) = 1.
  struct PairFamilyStep {
    Int degree;
    Int multiplier;
    Int last;
  };

  //! Glue the semigroup produced by the following steps with (d, f).
  struct GluingStep {
    GluingSpec gluing;
    Int        degree;
    Int        conductor;
  };

  //! Degree p^k. With multiplier == 0 the sequence is (p^k, offset + 1);
  //! otherwise it is (p^k, p k_1, p^k k_1 + offset) with k_1 = multiplier.
  struct PrimePowerStep {
    Int prime;
    Int exponent;
    Int multiplier;
    Int offset;
  };

  using ConstructionStep
      = std::variant<DirectStep, PairFamilyStep, GluingStep, PrimePowerStep>;

  //! Outermost step first. All steps but the last are gluings; the last one
  //! produces the innermost sequence.
  struct ConstructionTrace {
    std::vector<ConstructionStep> steps;
  };

  struct Construction {
    CharacteristicSequence sequence;
    ConstructionTrace      trace;
  };

  //! An A-M characteristic sequence of even degree n > 2 with conductor c,
  //! for every even c in [n - 1, (n - 1)(n - 2)].
  //!
  //! Branches, first match wins:
  //!   1. c < (n^2 - 2)/2: (n, 2, c + 1);
  //!   2. n = 2r, r odd: (n, 2k, v_2) for the least k coprime to r with
  //!      v_2 = c - 2k(r - 1) + 2r - 1 in [kn + 1, 2r^2 - 1];
  //!   3. 4 | n, c in [3n + 4, n^2/2 + n - 2]: (n/2, 2, n/2 + 1) glued with
  //!      (2, c + 1 - n), i.e. (n, 4, n + 2, c + 1 - n);
  //!   4. 4 | n, c >= n^2/2 + n - 4: c = 2c' + f - 1 with
  //!      f = n^2/2 - 1 (tried first) or n^2/2 - 3 and c' even in the range
  //!      for degree n/2; recurse on (n/2, c') and glue with (2, f).
  //!
  //! Throws OutOfRange for odd n, n <= 2, odd c or c outside the range, and
  //! ConstructionFailed if no branch applies (a bug).
  Construction construct_for_conductor(Int n, Int c);

  //! Rebuild the sequence a trace describes.
  CharacteristicSequence replay(ConstructionTrace const& trace);

  //! (n, 2, n + 1 + 2q) for 0 <= q < ((n - 1)(n - 2) + n)/4 - 1, n even
  //! >= 4; conductor n + 2q. Throws OutOfRange otherwise.
  CharacteristicSequence direct_family_sequence(Int n, Int q);

  //! (n, 2, n + 1), the only A-M semigroup of even degree n >= 4 with
  //! conductor n.
  CharacteristicSequence minimal_conductor_am(Int n);

  //! The set of conductors of A-M semigroups of degree p^k, sorted. For odd
  //! p this is the closed form
  //!   { i (p^k - 1) : 1 <= i <= p^k - 2, p does not divide i + 1 }
  //!   U { (p^k - 1)(p k_1 - 1) + i (p - 1) : 1 <= k_1 <= p^{k-1} - 1,
  //!       p !| k_1, 1 <= i <= p^{2k-1} - p^k k_1 - 1, p !| i };
  //! for p = 2 it is read off enumerate_by_degree. Throws NotPrime, or
  //! OutOfRange for k < 2.
  std::vector<Int> prime_power_conductors(Int p, Int k);

  //! A witness for conductor c in degree p^k, odd p: a two-term sequence
  //! (p^k, v_1) or (p^k, p k_1, v_2). For p = 2 defers to
  //! construct_for_conductor. Throws OutOfRange if c is not attained.
  Construction construct_prime_power(Int p, Int k, Int c);

}  // namespace amsg

#endif  // AMSG_CONSTRUCT_HPP_
