#include "amsg/construct.hpp"

#include <algorithm>  // for sort, unique
#include <string>     // for to_string

#include "amsg/am.hpp"
#include "amsg/enumerate.hpp"
#include "amsg/error.hpp"

namespace amsg {

  namespace {
    Int power(Int base, Int exp) {
      Int r = 1;
      for (Int i = 0; i < exp; ++i) {
        r = checked_mul(r, base);
      }
      return r;
    }

    bool in_even_range(Int n, Int c) {
      return c % 2 == 0 && c >= n - 1 && c <= checked_mul(n - 1, n - 2);
    }

    [[noreturn]] void out_of_range(Int n, Int c) {
      throw Error(ErrorCode::OutOfRange,
                  "no even-degree construction for n = " + std::to_string(n)
                      + ", c = " + std::to_string(c));
    }

    struct Leaf {
      CharacteristicSequence sequence;
      ConstructionStep       step;
    };

    std::optional<Leaf> direct_branch(Int n, Int c) {
      // c < (n^2 - 2)/2  <=>  2c + 2 < n^2
      if (checked_add(checked_mul(2, c), 2) >= checked_mul(n, n)) {
        return std::nullopt;
      }
      return Leaf{validate({n, 2, c + 1}), DirectStep{n, c}};
    }

    std::optional<Leaf> pair_family_branch(Int n, Int c) {
      Int const r = n / 2;
      if (n % 4 != 2 || r < 3) {
        return std::nullopt;
      }
      for (Int k = 1; k + 1 <= r; ++k) {
        if (std::gcd(k, r) != 1) {
          continue;
        }
        // conductor of (n, 2k, v2) is 2k(r - 1) + v2 - 2r + 1
        Int const subtract = checked_mul(2 * k, r - 1);
        if (c + 2 * r - 1 < subtract) {
          break;
        }
        Int const v2 = c + 2 * r - 1 - subtract;
        if (v2 % 2 == 1 && v2 >= k * n + 1 && v2 <= 2 * r * r - 1) {
          return Leaf{validate({n, 2 * k, v2}), PairFamilyStep{n, k, v2}};
        }
      }
      return std::nullopt;
    }

    Construction build(Int n, Int c);

    std::optional<Construction> halving_branch(Int n, Int c) {
      if (n % 4 != 0 || n < 8) {
        return std::nullopt;
      }
      Int const m        = n / 2;
      Int const half_sq  = n * n / 2;
      Int const lower_i2 = 3 * n + 4;
      Int const upper_i2 = half_sq + n - 2;

      auto glued = [&](Construction inner, Int f) {
        GluingSpec const g(2, f);
        inner.sequence = glue_sequence(inner.sequence, g);
        inner.trace.steps.insert(inner.trace.steps.begin(),
                                 GluingStep{g, n, c});
        return inner;
      };

      if (c >= lower_i2 && c <= upper_i2) {
        // (m, 2, m + 1) has conductor m; gluing with (2, f) adds f - 1 + m.
        return glued(build(m, m), c + 1 - n);
      }
      if (c + 4 >= half_sq + n) {
        for (Int f : {half_sq - 1, half_sq - 3}) {
          if (c + 1 < f) {
            continue;
          }
          Int const twice = c + 1 - f;
          if (twice % 2 != 0) {
            continue;
          }
          Int const inner_c = twice / 2;
          if (in_even_range(m, inner_c)) {
            return glued(build(m, inner_c), f);
          }
        }
      }
      return std::nullopt;
    }

    Construction build(Int n, Int c) {
      if (auto leaf = direct_branch(n, c)) {
        return {std::move(leaf->sequence), {{leaf->step}}};
      }
      if (auto leaf = pair_family_branch(n, c)) {
        return {std::move(leaf->sequence), {{leaf->step}}};
      }
      if (auto result = halving_branch(n, c)) {
        return std::move(*result);
      }
      throw Error(ErrorCode::ConstructionFailed,
                  "no branch produced n = " + std::to_string(n)
                      + ", c = " + std::to_string(c));
    }

    CharacteristicSequence leaf_sequence(ConstructionStep const& step) {
      return std::visit(
          [](auto const& s) -> CharacteristicSequence {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, DirectStep>) {
              return validate({s.degree, 2, s.conductor + 1});
            } else if constexpr (std::is_same_v<T, PairFamilyStep>) {
              return validate({s.degree, 2 * s.multiplier, s.last});
            } else if constexpr (std::is_same_v<T, PrimePowerStep>) {
              Int const n = power(s.prime, s.exponent);
              if (s.multiplier == 0) {
                return validate({n, s.offset + 1});
              }
              return validate({n,
                               checked_mul(s.prime, s.multiplier),
                               checked_add(checked_mul(n, s.multiplier),
                                           s.offset)});
            } else {
              throw Error(ErrorCode::ConstructionFailed,
                          "trace ends in a gluing step");
            }
          },
          step);
    }
  }  // namespace

  Construction construct_for_conductor(Int n, Int c) {
    if (n <= 2 || n % 2 != 0 || !in_even_range(n, c)) {
      out_of_range(n, c);
    }
    return build(n, c);
  }

  CharacteristicSequence replay(ConstructionTrace const& trace) {
    if (trace.steps.empty()) {
      throw Error(ErrorCode::ConstructionFailed, "empty trace");
    }
    auto seq = leaf_sequence(trace.steps.back());
    for (auto it = trace.steps.rbegin() + 1; it != trace.steps.rend(); ++it) {
      auto const* g = std::get_if<GluingStep>(&*it);
      if (g == nullptr) {
        throw Error(ErrorCode::ConstructionFailed,
                    "only the last step may be a leaf");
      }
      seq = glue_sequence(seq, g->gluing);
    }
    return seq;
  }

  CharacteristicSequence direct_family_sequence(Int n, Int q) {
    if (n < 4 || n % 2 != 0) {
      throw Error(ErrorCode::OutOfRange, "degree must be even and >= 4");
    }
    // q < ((n-1)(n-2) + n)/4 - 1  <=>  4q + 4 < (n-1)(n-2) + n
    Int const rhs = checked_add(checked_mul(n - 1, n - 2), n);
    if (checked_add(checked_mul(4, q), 4) >= rhs) {
      throw Error(ErrorCode::OutOfRange, "q too large for degree");
    }
    return validate({n, 2, checked_add(n + 1, checked_mul(2, q))});
  }

  CharacteristicSequence minimal_conductor_am(Int n) {
    if (n < 4 || n % 2 != 0) {
      throw Error(ErrorCode::OutOfRange, "degree must be even and >= 4");
    }
    return validate({n, 2, n + 1});
  }

  std::vector<Int> prime_power_conductors(Int p, Int k) {
    if (!is_prime(p)) {
      throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    }
    if (k < 2) {
      throw Error(ErrorCode::OutOfRange, "exponent must be at least 2");
    }
    Int const        n = power(p, k);
    std::vector<Int> out;
    if (p == 2) {
      for (auto const& rec : enumerate_by_degree(n)) {
        out.push_back(rec.conductor);
      }
    } else {
      for (Int i = 1; i + 2 <= n; ++i) {
        if ((i + 1) % p != 0) {
          out.push_back(checked_mul(i, n - 1));
        }
      }
      Int const top = power(p, 2 * k - 1);
      for (Int k1 = 1; k1 < n / p; ++k1) {
        if (k1 % p == 0) {
          continue;
        }
        Int const base = checked_mul(n - 1, p * k1 - 1);
        for (Int i = 1; i + n * k1 + 1 <= top; ++i) {
          if (i % p != 0) {
            out.push_back(checked_add(base, checked_mul(i, p - 1)));
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Construction construct_prime_power(Int p, Int k, Int c) {
    if (!is_prime(p)) {
      throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    }
    if (k < 2) {
      throw Error(ErrorCode::OutOfRange, "exponent must be at least 2");
    }
    Int const n = power(p, k);
    if (p == 2) {
      return construct_for_conductor(n, c);
    }
    if (c % (n - 1) == 0) {
      Int const i = c / (n - 1);
      if (i >= 1 && i + 2 <= n && (i + 1) % p != 0) {
        PrimePowerStep const step{p, k, 0, i};
        return {leaf_sequence(step), {{step}}};
      }
    }
    Int const top = power(p, 2 * k - 1);
    for (Int k1 = 1; k1 < n / p; ++k1) {
      if (k1 % p == 0) {
        continue;
      }
      Int const base = checked_mul(n - 1, p * k1 - 1);
      if (c <= base || (c - base) % (p - 1) != 0) {
        continue;
      }
      Int const i = (c - base) / (p - 1);
      if (i % p != 0 && i + n * k1 + 1 <= top) {
        PrimePowerStep const step{p, k, k1, i};
        return {leaf_sequence(step), {{step}}};
      }
    }
    out_of_range(n, c);
  }

}  // namespace amsg
