#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"

#include "amsg/charseq.hpp"
#include "amsg/error.hpp"
#include "amsg/semigroup.hpp"

#include "oracles.hpp"

namespace amsg {

  namespace {
    std::vector<std::vector<Int>>
    values_of(std::vector<CharacteristicSequence> const& v) {
      std::vector<std::vector<Int>> out;
      for (auto const& cs : v) {
        out.push_back(cs.values());
      }
      return out;
    }

    SequenceViolation violation_of(std::vector<Int> const& v) {
      SequenceViolation why{ErrorCode::EmptyInput, 0};
      auto const        ok = try_validate(v, &why);
      REQUIRE_FALSE(ok.has_value());
      return why;
    }
  }  // namespace

  TEST_CASE("validate fills gcds and quotients") {
    auto const a = validate({6, 4, 13});
    CHECK(a.gcds() == std::vector<Int>{6, 2, 1});
    CHECK(a.quotients() == std::vector<Int>{3, 2});
    CHECK(a.length() == 2);
    CHECK(a.degree() == 6);

    auto const b = validate({8, 4, 10, 21});
    CHECK(b.gcds() == std::vector<Int>{8, 4, 2, 1});
    CHECK(b.quotients() == std::vector<Int>{2, 2, 2});

    CHECK(validate({1}).length() == 0);
    CHECK(validate({5, 3}).gcds() == std::vector<Int>{5, 1});
  }

  TEST_CASE("validate names the first violation") {
    auto w = violation_of({6, 4, 5});
    CHECK(w.code == ErrorCode::CS2Violated);
    CHECK(w.index == 1);

    w = violation_of({6, 3, 9});
    CHECK(w.code == ErrorCode::CS1Violated);
    CHECK(w.index == 2);

    w = violation_of({2, 4});
    CHECK(w.code == ErrorCode::CS1Violated);
    CHECK(w.index == 1);

    w = violation_of({5});
    CHECK(w.code == ErrorCode::NotCoprimeTail);

    w = violation_of({12, 8, 30, 31});
    CHECK(w.code == ErrorCode::CS2Violated);
    CHECK(w.index == 2);

    CHECK(violation_of({}).code == ErrorCode::EmptyInput);
    CHECK(violation_of({0, 1}).code == ErrorCode::NonPositiveValue);

    try {
      validate({6, 4, 5});
      FAIL("expected a throw");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::CS2Violated);
      CHECK(e.index() == 1);
    }
  }

  TEST_CASE("conductor formula on fixed sequences") {
    CHECK(conductor_formula(validate({8, 2, 9})) == 8);
    CHECK(conductor_formula(validate({8, 4, 10, 21})) == 28);
    CHECK(conductor_formula(validate({6, 4, 17})) == 20);
    for (Int n = 2; n <= 50; ++n) {
      CHECK(conductor_formula(validate({n, 1})) == 0);
    }
  }

  TEST_CASE("generated semigroup") {
    CHECK(generated_semigroup(validate({4, 2, 5})) == normalize({2, 5}));
    CHECK(generated_semigroup(validate({5, 4})) == normalize({4, 5}));
    CHECK(generated_semigroup(validate({6, 4, 13}))
          == normalize({4, 6, 13}));
    CHECK(generated_semigroup(validate({7, 1})).is_naturals());
  }

  TEST_CASE("sequences_of on fixed semigroups") {
    using V = std::vector<std::vector<Int>>;
    CHECK(values_of(sequences_of(normalize({2, 5})))
          == V{{2, 5}, {4, 2, 5}, {5, 2}});
    CHECK(values_of(sequences_of(normalize({3, 10})))
          == V{{3, 10}, {6, 3, 10}, {9, 3, 10}, {10, 3}});
    CHECK(values_of(sequences_of(normalize({4, 6, 13})))
          == V{{4, 6, 13}, {6, 4, 13}});
    CHECK(sequences_of(normalize({5, 7, 9})).empty());
    CHECK(values_of(sequences_of(normalize({1}), 4))
          == V{{1}, {2, 1}, {3, 1}, {4, 1}});
  }

  TEST_CASE("every characteristic sequence is found by sequences_of") {
    constexpr oracle::U bound = 36;
    std::map<std::vector<Int>, std::set<std::vector<Int>>> by_semigroup;
    for (auto const& v : oracle::characteristic_sequences(bound)) {
      by_semigroup[oracle::minimal_generators(v)].insert(v);
    }
    REQUIRE(by_semigroup.size() > 100);
    for (auto const& [gens, expected] : by_semigroup) {
      CAPTURE(gens);
      auto const s = normalize(gens);
      std::set<std::vector<Int>> found;
      for (auto const& cs : sequences_of(s, bound)) {
        CHECK(generates(cs, s));
        if (*std::max_element(cs.values().begin(), cs.values().end())
            <= bound) {
          found.insert(cs.values());
        }
      }
      CHECK(found == expected);
    }
  }

  TEST_CASE("oracle and formula agree on every A-M sequence up to degree 12") {
    for (oracle::U n = 2; n <= 12; ++n) {
      for (auto const& v : oracle::am_sequences(n)) {
        CAPTURE(v);
        auto const cs = validate(v);
        Int const  c  = conductor_formula(cs);
        CHECK(c % 2 == 0);
        CHECK(c == oracle::formula_conductor(v));
        CHECK(c == conductor_oracle(generated_semigroup(cs)));
        if (cs.length() >= 2) {
          CHECK(v[0] < v[2]);
          for (std::size_t i = 1; i < cs.length(); ++i) {
            CHECK(v[i] < v[i + 1]);
          }
        }
        auto const all = sequences_of(generated_semigroup(cs), n);
        CHECK(std::find(all.begin(), all.end(), cs) != all.end());
      }
    }
  }

  TEST_CASE("random semigroups: returned sequences validate and generate") {
    oracle::GeneratorSampler sample(0xc5c5, 50, 5);
    for (int trial = 0; trial < 400; ++trial) {
      auto const s = normalize(sample.next());
      for (auto const& cs : sequences_of(s)) {
        CHECK(try_validate(cs.values()).has_value());
        CHECK(generated_semigroup(cs) == s);
        CHECK(conductor_formula(cs) == conductor_oracle(s));
      }
    }
  }

}  // namespace amsg
