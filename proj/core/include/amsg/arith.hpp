#ifndef AMSG_ARITH_HPP_
#define AMSG_ARITH_HPP_

#include <cstdint>  // for uint64_t
#include <numeric>  // for gcd
#include <span>     // for span
#include <vector>   // for vector

namespace amsg {

  //! All quantities are non-negative 64-bit integers; arithmetic that could
  //! wrap goes through the checked helpers below, which throw
  //! Error(ErrorCode::Overflow).
  using Int = std::uint64_t;

  Int checked_add(Int a, Int b);
  Int checked_sub(Int a, Int b);
  Int checked_mul(Int a, Int b);

  //! gcd of all values; the gcd of an empty range is 0.
  Int gcd_of(std::span<Int const> values) noexcept;

  bool is_prime(Int n) noexcept;

  //! Prime factorisation as (prime, multiplicity) pairs, primes ascending.
  std::vector<std::pair<Int, Int>> factorize(Int n);

  //! Number of prime factors of n counted with multiplicity.
  Int big_omega(Int n);

  //! Divisors of n in increasing order.
  std::vector<Int> divisors_of(Int n);

}  // namespace amsg

#endif  // AMSG_ARITH_HPP_
