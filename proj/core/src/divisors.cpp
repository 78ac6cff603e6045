#include "amsg/divisors.hpp"

#include <algorithm>  // for sort

#include "amsg/error.hpp"

namespace amsg {

  DivisorSequence::DivisorSequence(std::vector<Int> d) : _d(std::move(d)) {
    if (_d.empty() || _d.back() != 1) {
      throw Error(ErrorCode::InvalidDivisorSequence, "chain must end in 1");
    }
    for (std::size_t i = 1; i < _d.size(); ++i) {
      if (_d[i] >= _d[i - 1] || _d[i - 1] % _d[i] != 0) {
        throw Error(ErrorCode::InvalidDivisorSequence,
                    "each term must be a proper divisor of the previous one",
                    i);
      }
    }
  }

  std::vector<Int> DivisorSequence::padded(std::size_t size) const {
    std::vector<Int> out(_d);
    if (out.size() < size) {
      out.resize(size, 0);
    }
    return out;
  }

  namespace {
    void extend(std::vector<Int>&              chain,
                std::vector<Int> const&        divs,
                std::vector<DivisorSequence>& out) {
      Int const last = chain.back();
      if (last == 1) {
        out.emplace_back(chain);
        return;
      }
      for (Int d : divs) {
        if (d >= last) {
          break;
        }
        if (last % d == 0) {
          chain.push_back(d);
          extend(chain, divs, out);
          chain.pop_back();
        }
      }
    }
  }  // namespace

  std::vector<DivisorSequence> divisor_sequences(Int n) {
    if (n == 0) {
      throw Error(ErrorCode::OutOfRange, "degree must be positive");
    }
    std::vector<DivisorSequence> out;
    std::vector<Int>             chain{n};
    extend(chain, divisors_of(n), out);
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace amsg
