#include "amsg/am.hpp"

#include "amsg/error.hpp"

namespace amsg {

  bool by_conductor_then_sequence(AmRecord const& a, AmRecord const& b) {
    if (a.conductor != b.conductor) {
      return a.conductor < b.conductor;
    }
    return a.sequence < b.sequence;
  }

  std::optional<AmRecord> is_am(CharacteristicSequence const& cs) {
    std::size_t const h = cs.length();
    Int const         n = cs.degree();
    if (h == 0 || n < 2) {
      return std::nullopt;
    }
    if (checked_mul(cs.gcds()[h - 1], cs[h]) >= checked_mul(n, n)) {
      return std::nullopt;
    }
    return AmRecord{cs, n, DivisorSequence(cs.gcds()), conductor_formula(cs)};
  }

  std::vector<AmRecord> is_am_semigroup(NumericalSemigroup const& s,
                                        Int                       max_degree) {
    if (s.is_naturals() && max_degree == 0) {
      throw Error(ErrorCode::DegreeRequired,
                  "N is A-M of every degree; pass a degree bound");
    }
    std::vector<AmRecord> out;
    for (auto const& cs : sequences_of(s, max_degree)) {
      if (auto rec = is_am(cs)) {
        out.push_back(std::move(*rec));
      }
    }
    return out;
  }

  bool is_am_semigroup_shortcut(NumericalSemigroup const& s) {
    if (s.is_naturals()) {
      return true;
    }
    std::vector<Int> v(s.generators());
    std::swap(v[0], v[1]);
    auto cs = try_validate(v);
    return cs && is_am(*cs).has_value();
  }

  std::vector<Int> conductor_range(Int n) {
    if (n <= 2) {
      throw Error(ErrorCode::OutOfRange, "conductor range needs n > 2");
    }
    Int const        hi = checked_mul(n - 1, n - 2);
    std::vector<Int> out;
    for (Int c = n - 1 + (n - 1) % 2; c <= hi; c += 2) {
      out.push_back(c);
    }
    return out;
  }

  Int conductor_range_size(Int n) {
    if (n <= 2) {
      throw Error(ErrorCode::OutOfRange, "conductor range needs n > 2");
    }
    Int const base = checked_mul(n - 1, n - 3);
    return (n % 2 == 1 ? base + 2 : base + 1) / 2;
  }

}  // namespace amsg
