#ifndef AMSG_AM_HPP_
#define AMSG_AM_HPP_

#include <optional>  // for optional
#include <vector>    // for vector

#include "amsg/arith.hpp"
#include "amsg/charseq.hpp"
#include "amsg/divisors.hpp"
#include "amsg/semigroup.hpp"

namespace amsg {

  //! A characteristic sequence of degree n = v_0 > 1 satisfying the
  //! Abhyankar-Moh inequality e_{h-1} v_h < n^2, with its divisor sequence
  //! (the gcd tower) and conductor.
  struct AmRecord {
    CharacteristicSequence sequence;
    Int                    degree;
    DivisorSequence        divisors;
    Int                    conductor;

    friend bool operator==(AmRecord const& a, AmRecord const& b) noexcept {
      return a.sequence == b.sequence;
    }
  };

  //! Sort key used for listings: (conductor, sequence).
  bool by_conductor_then_sequence(AmRecord const& a, AmRecord const& b);

  std::optional<AmRecord> is_am(CharacteristicSequence const& cs);

  //! One record per A-M characteristic sequence generating s, sorted by
  //! sequence. <1> is A-M of every degree, so for it `max_degree` must be
  //! given (records (n, 1), 2 <= n <= max_degree); otherwise DegreeRequired
  //! is thrown.
  std::vector<AmRecord> is_am_semigroup(NumericalSemigroup const& s,
                                        Int max_degree = 0);

  //! Membership test that only tries the degree a_2, via the sequence
  //! (a_2, a_1, a_3, ..., a_t). Agrees with !is_am_semigroup(s).empty().
  bool is_am_semigroup_shortcut(NumericalSemigroup const& s);

  //! The even integers in [n - 1, (n - 1)(n - 2)], n > 2.
  std::vector<Int> conductor_range(Int n);

  //! |conductor_range(n)| from the closed form: ((n-1)(n-3)+2)/2 for odd n
  //! and ((n-1)(n-3)+1)/2 for even n.
  Int conductor_range_size(Int n);

}  // namespace amsg

#endif  // AMSG_AM_HPP_
