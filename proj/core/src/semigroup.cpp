#include "amsg/semigroup.hpp"

#include <algorithm>  // for sort, unique

#include "amsg/error.hpp"

namespace amsg {

  namespace {
    // reach[x] == true iff x is a non-negative combination of gens, for
    // 0 <= x <= bound.
    std::vector<bool> reachable(std::span<Int const> gens, Int bound) {
      std::vector<bool> reach(checked_add(bound, 1), false);
      reach[0] = true;
      for (Int g : gens) {
        for (Int x = g; x <= bound; ++x) {
          if (reach[x - g]) {
            reach[x] = true;
          }
        }
      }
      return reach;
    }
  }  // namespace

  NumericalSemigroup normalize(std::span<Int const> raw_generators) {
    if (raw_generators.empty()) {
      throw Error(ErrorCode::EmptyInput, "no generators given");
    }
    std::vector<Int> gens(raw_generators.begin(), raw_generators.end());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.front() == 0) {
      throw Error(ErrorCode::NonPositiveValue, "generators must be positive");
    }
    if (gcd_of(gens) != 1) {
      throw Error(ErrorCode::NonCoprimeGenerators,
                  "generators have a common factor, complement is infinite");
    }
    if (gens.front() == 1) {
      return NumericalSemigroup({1});
    }

    // A generator is redundant iff it lies in the semigroup spanned by the
    // smaller kept ones, so a single ascending sweep suffices.
    Int const         bound = gens.back();
    std::vector<bool> reach(bound + 1, false);
    reach[0] = true;
    std::vector<Int> minimal;
    for (Int g : gens) {
      if (reach[g]) {
        continue;
      }
      minimal.push_back(g);
      for (Int x = g; x <= bound; ++x) {
        if (reach[x - g]) {
          reach[x] = true;
        }
      }
    }
    return NumericalSemigroup(std::move(minimal));
  }

  bool contains(NumericalSemigroup const& s, Int x) {
    return reachable(s.generators(), x)[x];
  }

  Int conductor_oracle(NumericalSemigroup const& s) {
    if (s.is_naturals()) {
      return 0;
    }
    auto const& gens  = s.generators();
    Int const   bound = checked_mul(gens.front(), gens.back());
    auto const  reach = reachable(gens, bound);
    Int         last_gap = 0;
    for (Int x = 1; x <= bound; ++x) {
      if (!reach[x]) {
        last_gap = x;
      }
    }
    return last_gap + 1;
  }

  std::vector<Int> gaps(NumericalSemigroup const& s) {
    Int const c = conductor_oracle(s);
    if (c == 0) {
      return {};
    }
    auto const       reach = reachable(s.generators(), c);
    std::vector<Int> result;
    for (Int x = 1; x < c; ++x) {
      if (!reach[x]) {
        result.push_back(x);
      }
    }
    return result;
  }

}  // namespace amsg
