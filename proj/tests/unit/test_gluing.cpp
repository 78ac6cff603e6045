#include <algorithm>
#include <vector>

#include "doctest.h"

#include "amsg/am.hpp"
#include "amsg/enumerate.hpp"
#include "amsg/error.hpp"
#include "amsg/gluing.hpp"

#include "oracles.hpp"

namespace amsg {

  namespace {
    bool has_degree(std::vector<AmRecord> const& recs, Int degree) {
      return std::any_of(recs.begin(), recs.end(), [degree](auto const& r) {
        return r.degree == degree;
      });
    }
  }  // namespace

  TEST_CASE("GluingSpec validation") {
    CHECK(GluingSpec(2, 13).d() == 2);
    CHECK(GluingSpec(2, 13).f() == 13);
    try {
      GluingSpec(2, 4);
      FAIL("expected NonCoprimePair");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::NonCoprimePair);
    }
    try {
      GluingSpec(1, 4);
      FAIL("expected InvalidGluingFactor");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::InvalidGluingFactor);
    }
  }

  TEST_CASE("glue on fixed inputs") {
    CHECK(glue(normalize({2, 3}), {2, 13}) == normalize({4, 6, 13}));
    CHECK(glue(normalize({2, 3}), {2, 15}) == normalize({4, 6, 15}));
    CHECK(glue(normalize({1}), {5, 7}) == normalize({5, 7}));
    CHECK(glue_sequence(validate({3, 2}), {2, 13}).values()
          == std::vector<Int>{6, 4, 13});
    CHECK(glue_sequence(validate({4, 2, 5}), {2, 21}).values()
          == std::vector<Int>{8, 4, 10, 21});
  }

  TEST_CASE("glued conductor identity") {
    CHECK(glued_conductor(2, {2, 13}) == 16);
    CHECK(glued_conductor(2, {2, 15}) == 18);
    CHECK(glued_conductor(0, {2, 3}) == 2);
    CHECK(oracle::conductor({4, 6, 13}) == 16);
    CHECK(oracle::conductor({4, 6, 15}) == 18);
  }

  TEST_CASE("gluing check bounds") {
    auto const base = normalize({2, 3});
    CHECK(am_glue_check(base, 3, {2, 13}));
    CHECK_FALSE(am_glue_check(base, 3, {2, 11}));
    CHECK(is_am_semigroup(normalize({4, 6, 11})).empty());
    CHECK_FALSE(am_glue_check(base, 3, {2, 19}));
    CHECK(has_degree(is_am_semigroup(normalize({4, 6, 13})), 6));
  }

  TEST_CASE("a passing gluing check yields an A-M semigroup of degree dm") {
    int passed = 0;
    for (auto const& [s, seqs] : enumerate_by_conductor(20)) {
      for (auto const& rec : is_am_semigroup(s)) {
        Int const m = rec.degree;
        for (Int d = 2; d <= 4; ++d) {
          for (Int f = 1; f < d * m * m + 3; ++f) {
            if (std::gcd(d, f) != 1) {
              continue;
            }
            GluingSpec const g(d, f);
            if (!am_glue_check(s, m, g)) {
              continue;
            }
            ++passed;
            auto const glued = glue(s, g);
            CAPTURE(glued.generators());
            CHECK(has_degree(is_am_semigroup(glued), d * m));
            CHECK(glued_conductor(rec.conductor, g) == conductor_oracle(glued));
          }
        }
      }
    }
    CHECK(passed > 100);
  }

  TEST_CASE("gluing onto the naturals matches the three-term sequence") {
    auto const nat = normalize({1});
    for (Int m = 2; m <= 7; ++m) {
      for (Int d = 2; d <= 4; ++d) {
        for (Int f = 1; f <= d * m * m + 2; ++f) {
          if (std::gcd(d, f) != 1) {
            continue;
          }
          auto const cs = try_validate(std::vector<Int>{d * m, d, f});
          bool const expected = cs.has_value() && is_am(*cs).has_value();
          CAPTURE(m);
          CAPTURE(d);
          CAPTURE(f);
          CHECK(am_glue_check(nat, m, {d, f}) == expected);
        }
      }
    }
  }

  TEST_CASE("decompose on fixed semigroups") {
    auto const a = decompose(normalize({4, 6, 13}));
    CHECK(a.base == normalize({2, 3}));
    CHECK(a.gluing == GluingSpec(2, 13));

    auto const b = decompose(generated_semigroup(validate({8, 4, 10, 21})));
    CHECK(b.base == normalize({2, 5}));
    CHECK(b.gluing == GluingSpec(2, 21));

    try {
      decompose(normalize({2, 3}));
      FAIL("expected EmbeddingDimensionTooSmall");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::EmbeddingDimensionTooSmall);
    }
    try {
      decompose(normalize({5, 7, 9}));
      FAIL("expected NotAm");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::NotAm);
    }
  }

  TEST_CASE("decompose then glue is the identity") {
    int seen = 0;
    for (auto const& [s, seqs] : enumerate_by_conductor(60)) {
      if (s.embedding_dimension() < 3) {
        continue;
      }
      ++seen;
      auto const dec = decompose(s);
      CAPTURE(s.generators());
      CHECK(glue(dec.base, dec.gluing) == s);
      auto const base_recs = dec.base.is_naturals()
                                 ? is_am_semigroup(dec.base, 60)
                                 : is_am_semigroup(dec.base);
      CHECK_FALSE(base_recs.empty());
      bool some = false;
      for (auto const& r : base_recs) {
        some = some || am_glue_check(dec.base, r.degree, dec.gluing);
      }
      CHECK(some);
    }
    CHECK(seen > 10);
  }

}  // namespace amsg
