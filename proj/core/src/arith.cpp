#include "amsg/arith.hpp"


#include "amsg/error.hpp"

namespace amsg {

  Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) {
      throw Error(ErrorCode::Overflow, "addition overflows 64 bits");
    }
    return r;
  }

  Int checked_sub(Int a, Int b) {
    if (b > a) {
      throw Error(ErrorCode::Overflow, "subtraction goes below zero");
    }
    return a - b;
  }

  Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) {
      throw Error(ErrorCode::Overflow, "multiplication overflows 64 bits");
    }
    return r;
  }

  Int gcd_of(std::span<Int const> values) noexcept {
    Int g = 0;
    for (Int v : values) {
      g = std::gcd(g, v);
    }
    return g;
  }

  bool is_prime(Int n) noexcept {
    if (n < 2) {
      return false;
    }
    for (Int p = 2; p <= n / p; ++p) {
      if (n % p == 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::pair<Int, Int>> factorize(Int n) {
    std::vector<std::pair<Int, Int>> result;
    for (Int p = 2; p <= n / p; ++p) {
      Int mult = 0;
      while (n % p == 0) {
        n /= p;
        ++mult;
      }
      if (mult > 0) {
        result.emplace_back(p, mult);
      }
    }
    if (n > 1) {
      result.emplace_back(n, 1);
    }
    return result;
  }

  Int big_omega(Int n) {
    Int total = 0;
    for (auto const& [p, mult] : factorize(n)) {
      total += mult;
    }
    return total;
  }

  std::vector<Int> divisors_of(Int n) {
    std::vector<Int> small, large;
    for (Int d = 1; d <= n / d; ++d) {
      if (n % d == 0) {
        small.push_back(d);
        if (d != n / d) {
          large.push_back(n / d);
        }
      }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
  }

}  // namespace amsg
