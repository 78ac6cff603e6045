#include "amsg/gluing.hpp"

#include <span>  // for span

#include "amsg/am.hpp"
#include "amsg/error.hpp"

namespace amsg {

  GluingSpec::GluingSpec(Int d, Int f) : _d(d), _f(f) {
    if (d < 2 || f == 0) {
      throw Error(ErrorCode::InvalidGluingFactor, "need d > 1 and f > 0");
    }
    if (std::gcd(d, f) != 1) {
      throw Error(ErrorCode::NonCoprimePair, "d and f must be coprime");
    }
  }

  NumericalSemigroup glue(NumericalSemigroup const& s, GluingSpec const& g) {
    std::vector<Int> gens;
    gens.reserve(s.embedding_dimension() + 1);
    for (Int a : s.generators()) {
      gens.push_back(checked_mul(g.d(), a));
    }
    gens.push_back(g.f());
    return normalize(gens);
  }

  CharacteristicSequence glue_sequence(CharacteristicSequence const& cs,
                                       GluingSpec const&             g) {
    std::vector<Int> v;
    v.reserve(cs.values().size() + 1);
    for (Int x : cs.values()) {
      v.push_back(checked_mul(g.d(), x));
    }
    v.push_back(g.f());
    return validate(v);
  }

  Int glued_conductor(Int base_conductor, GluingSpec const& g) {
    return checked_add(checked_mul(g.d(), base_conductor),
                       checked_mul(g.d() - 1, g.f() - 1));
  }

  bool am_glue_check(NumericalSemigroup const& s, Int m, GluingSpec const& g) {
    auto const& b = s.generators();
    Int         lower;
    if (s.is_naturals()) {
      lower = checked_mul(g.d(), m);
    } else {
      Int const head = gcd_of(std::span<Int const>(b.data(), b.size() - 1));
      lower          = checked_mul(g.d(), checked_mul(head, b.back()));
    }
    Int const upper = checked_mul(g.d(), checked_mul(m, m));
    return upper > g.f() && g.f() > lower;
  }

  Decomposition decompose(NumericalSemigroup const& s) {
    auto const& a = s.generators();
    if (a.size() < 3) {
      throw Error(ErrorCode::EmbeddingDimensionTooSmall,
                  "gluing decomposition needs at least 3 generators");
    }
    if (!is_am_semigroup_shortcut(s)) {
      throw Error(ErrorCode::NotAm, "semigroup is not Abhyankar-Moh");
    }
    Int const d = gcd_of(std::span<Int const>(a.data(), a.size() - 1));
    std::vector<Int> base;
    base.reserve(a.size() - 1);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      base.push_back(a[i] / d);
    }
    return {normalize(base), GluingSpec(d, a.back())};
  }

}  // namespace amsg
