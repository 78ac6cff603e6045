#ifndef AMSG_ENUMERATE_HPP_
#define AMSG_ENUMERATE_HPP_

#include <cstddef>  // for size_t
#include <map>      // for map
#include <utility>  // for pair
#include <vector>   // for vector

#include "amsg/am.hpp"
#include "amsg/arith.hpp"
#include "amsg/charseq.hpp"
#include "amsg/divisors.hpp"
#include "amsg/semigroup.hpp"

namespace amsg {

  //! Multipliers (k_1, ..., k_h) such that (n, d_1 k_1, ..., d_h k_h) is a
  //! characteristic sequence of an A-M semigroup with divisor sequence d.
  using MultiplierVector = std::vector<Int>;

  //! Whether k satisfies, for the chain d,
  //!   1 <= k_1 <= d_0/d_1 - 1,
  //!   d_{i-2} k_{i-1} + 1 <= d_i k_i <= d_0^2/d_{i-1} - d_i  (2 <= i <= h),
  //!   gcd(d_{i-1}/d_i, k_i) = 1                             (1 <= i <= h).
  bool admissible(DivisorSequence const& d, MultiplierVector const& k);

  //! (d_0, d_1 k_1, ..., d_h k_h). Throws InvalidMultipliers on a length
  //! mismatch or if the result is not a characteristic sequence.
  CharacteristicSequence assemble(DivisorSequence const&  d,
                                  MultiplierVector const& k);

  //! sum_{i=1}^{h} (d_{i-1} - d_i) k_i - n + 1
  Int conductor_from_multipliers(DivisorSequence const&  d,
                                 MultiplierVector const& k);

  //! The multipliers at their upper bounds, which give
  //! (n, n - d_1, n^2/d_1 - d_2, ..., n^2/d_{h-1} - 1).
  MultiplierVector max_multipliers(DivisorSequence const& d);

  struct EnumerateOptions {
    //! Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
    //! Also emit N = S(n, 1), which the listings leave out.
    bool include_naturals = false;
  };

  //! All A-M semigroups of degree n > 1 as characteristic sequences, sorted
  //! by (conductor, sequence). One task per divisor sequence; the output
  //! does not depend on the thread count.
  std::vector<AmRecord> enumerate_by_degree(Int n, EnumerateOptions opts = {});

  //! Every A-M semigroup with conductor <= c (c >= 2), keyed by minimal
  //! generators, mapped to its A-M characteristic sequences (sorted).
  //! Starts from the two-generator semigroups and closes under gluings in
  //! increasing order of conductor.
  std::map<NumericalSemigroup, std::vector<CharacteristicSequence>>
  enumerate_by_conductor(Int c);

  struct MinConductor {
    MultiplierVector multipliers;
    Int              conductor;
  };

  //! Smallest conductor among A-M semigroups with divisor sequence d,
  //! attained at k_1 = 1, k_i = (d_{i-2}/d_i) k_{i-1} + 1, with value
  //! sum_{i=0}^{h-2} d_i (d_{i+1} - 1).
  MinConductor min_conductor(DivisorSequence const& d);

  struct MinConductorRow {
    DivisorSequence  divisors;
    MultiplierVector multipliers;
    Int              conductor;
  };

  //! One row per divisor sequence of n, in (zero-padded) lexicographic order.
  std::vector<MinConductorRow> min_conductor_table(Int n);

  //! T_h for h = 1, ..., Lambda(n): the least minimum conductor over divisor
  //! sequences of length exactly h, as (h, T_h) pairs.
  std::vector<std::pair<std::size_t, Int>> min_conductor_by_length(Int n);

  struct LexViolation {
    MinConductorRow earlier;
    MinConductorRow later;
  };

  //! Pairs of divisor sequences d <lex d' of n whose minimum conductors are
  //! in the opposite order. Reports nothing beyond what it finds.
  std::vector<LexViolation> lex_order_violations(Int n);

}  // namespace amsg

#endif  // AMSG_ENUMERATE_HPP_
