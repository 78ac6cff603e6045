#include "amsg/charseq.hpp"

#include <algorithm>  // for sort
#include <string>     // for to_string

namespace amsg {

  std::optional<CharacteristicSequence>
  try_validate(std::span<Int const> v, SequenceViolation* why) {
    auto fail = [why](ErrorCode code, std::size_t k) {
      if (why != nullptr) {
        *why = {code, k};
      }
      return std::nullopt;
    };
    if (v.empty()) {
      return fail(ErrorCode::EmptyInput, 0);
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) {
        return fail(ErrorCode::NonPositiveValue, i);
      }
    }
    std::size_t const h = v.size() - 1;
    std::vector<Int>  e(v.size());
    e[0] = v[0];
    for (std::size_t k = 1; k <= h; ++k) {
      e[k] = std::gcd(e[k - 1], v[k]);
      if (e[k] >= e[k - 1]) {
        return fail(ErrorCode::CS1Violated, k);
      }
    }
    if (e[h] != 1) {
      return fail(ErrorCode::NotCoprimeTail, h);
    }
    for (std::size_t k = 1; k + 1 <= h; ++k) {
      if (checked_mul(e[k - 1], v[k]) >= checked_mul(e[k], v[k + 1])) {
        return fail(ErrorCode::CS2Violated, k);
      }
    }
    CharacteristicSequence cs;
    cs._v.assign(v.begin(), v.end());
    cs._n.reserve(h);
    for (std::size_t k = 1; k <= h; ++k) {
      cs._n.push_back(e[k - 1] / e[k]);
    }
    cs._e = std::move(e);
    return cs;
  }

  CharacteristicSequence validate(std::span<Int const> v) {
    SequenceViolation why{};
    auto              cs = try_validate(v, &why);
    if (!cs) {
      std::string msg;
      switch (why.code) {
        case ErrorCode::CS1Violated:
          msg = "gcd does not drop at k = " + std::to_string(why.index);
          break;
        case ErrorCode::CS2Violated:
          msg = "e_{k-1} v_k >= e_k v_{k+1} at k = "
                + std::to_string(why.index);
          break;
        case ErrorCode::NotCoprimeTail:
          msg = "gcd of the whole sequence is not 1";
          break;
        case ErrorCode::NonPositiveValue:
          msg = "entry " + std::to_string(why.index) + " is zero";
          break;
        default:
          msg = "empty sequence";
          break;
      }
      throw Error(why.code, msg, why.index);
    }
    return std::move(*cs);
  }

  Int conductor_formula(CharacteristicSequence const& cs) {
    auto const& v = cs.values();
    auto const& n = cs.quotients();
    Int         sum = 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
      sum = checked_add(sum, checked_mul(n[i - 1] - 1, v[i]));
    }
    return checked_sub(sum, v[0]);
  }

  NumericalSemigroup generated_semigroup(CharacteristicSequence const& cs) {
    return normalize(cs.values());
  }

  std::vector<CharacteristicSequence>
  sequences_of(NumericalSemigroup const& s, Int max_degree) {
    std::vector<CharacteristicSequence> result;
    auto const&                         a = s.generators();
    if (s.is_naturals()) {
      result.push_back(validate({1}));
      for (Int n = 2; n <= max_degree; ++n) {
        result.push_back(validate({n, 1}));
      }
      return result;
    }

    auto keep = [&result](std::vector<Int> const& candidate) {
      if (auto cs = try_validate(candidate)) {
        result.push_back(std::move(*cs));
      }
    };

    keep(a);

    std::vector<Int> swapped(a);
    std::swap(swapped[0], swapped[1]);
    keep(swapped);

    std::vector<Int> prefixed(a.size() + 1);
    std::copy(a.begin(), a.end(), prefixed.begin() + 1);
    for (Int k = 2; checked_mul(k, a[0]) < a[1]; ++k) {
      prefixed[0] = k * a[0];
      keep(prefixed);
    }

    std::sort(result.begin(), result.end());
    return result;
  }

  bool generates(CharacteristicSequence const& cs,
                 NumericalSemigroup const&     s) {
    return generated_semigroup(cs) == s;
  }

}  // namespace amsg
