#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"

#include "amsg/am.hpp"
#include "amsg/arith.hpp"
#include "amsg/enumerate.hpp"
#include "amsg/error.hpp"

#include "golden_tables.hpp"
#include "oracles.hpp"

namespace amsg {

  namespace {
    using Seqs = std::vector<std::vector<Int>>;

    std::set<std::vector<Int>> sequence_set(std::vector<AmRecord> const& recs) {
      std::set<std::vector<Int>> out;
      for (auto const& r : recs) {
        out.insert(r.sequence.values());
      }
      return out;
    }

    Seqs chains(Int n) {
      Seqs out;
      for (auto const& d : divisor_sequences(n)) {
        out.push_back(d.values());
      }
      return out;
    }

    std::map<std::vector<Int>, Seqs>
    flatten(std::map<NumericalSemigroup, std::vector<CharacteristicSequence>> const& m) {
      std::map<std::vector<Int>, Seqs> out;
      for (auto const& [s, seqs] : m) {
        auto& row = out[s.generators()];
        for (auto const& cs : seqs) {
          row.push_back(cs.values());
        }
        std::sort(row.begin(), row.end());
      }
      return out;
    }
  }  // namespace

  TEST_CASE("divisor sequences") {
    CHECK(chains(8) == Seqs{{8, 1}, {8, 2, 1}, {8, 4, 1}, {8, 4, 2, 1}});
    CHECK(chains(13) == Seqs{{13, 1}});
    CHECK(chains(105).size() == 13);
    for (Int n = 2; n <= 200; ++n) {
      auto const all = divisor_sequences(n);
      CHECK(all.size() == oracle::divisor_chains(n).size());
      std::size_t longest = 0;
      for (auto const& d : all) {
        longest = std::max(longest, d.length());
      }
      CHECK(longest == big_omega(n));
    }
    CHECK(DivisorSequence({12, 3, 1}).padded(4)
          == std::vector<Int>{12, 3, 1, 0});
    try {
      DivisorSequence({12, 5, 1});
      FAIL("expected InvalidDivisorSequence");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::InvalidDivisorSequence);
    }
  }

  TEST_CASE("degree 8 listing matches the reference rows") {
    auto const recs = enumerate_by_degree(8);
    REQUIRE(recs.size() == golden::degree_8_listing().size());
    std::set<std::tuple<Seqs::value_type, Seqs::value_type, Int>> got;
    std::set<std::tuple<Seqs::value_type, Seqs::value_type, Int>> want;
    for (auto const& r : recs) {
      got.emplace(r.sequence.values(), r.divisors.values(), r.conductor);
    }
    for (auto const& row : golden::degree_8_listing()) {
      want.emplace(row.sequence, row.divisors, row.conductor);
    }
    CHECK(got == want);
    CHECK(recs.back().conductor == 42);
  }

  TEST_CASE("small degrees") {
    CHECK(sequence_set(enumerate_by_degree(5))
          == std::set<std::vector<Int>>{{5, 2}, {5, 3}, {5, 4}});
    CHECK(sequence_set(enumerate_by_degree(4))
          == std::set<std::vector<Int>>{{4, 2, 5}, {4, 3}, {4, 2, 7}});
    CHECK(enumerate_by_degree(2).empty());
    CHECK(sequence_set(enumerate_by_degree(2, {.include_naturals = true}))
          == std::set<std::vector<Int>>{{2, 1}});
    CHECK(sequence_set(enumerate_by_degree(6, {.include_naturals = true}))
              .count({6, 1})
          == 1);
  }

  TEST_CASE("enumeration is complete for degrees up to 12") {
    for (oracle::U n = 2; n <= 12; ++n) {
      CAPTURE(n);
      auto expected = oracle::am_sequences(n);
      expected.erase({n, 1});
      CHECK(sequence_set(enumerate_by_degree(n)) == expected);
    }
  }

  TEST_CASE("enumerated records are sound") {
    for (Int n = 2; n <= 24; ++n) {
      for (auto const& r : enumerate_by_degree(n)) {
        CAPTURE(r.sequence.values());
        auto const& v = r.sequence.values();
        CHECK(oracle::is_am(v));
        CHECK(r.divisors.values() == oracle::gcd_tower(v));
        std::vector<Int> k;
        for (std::size_t i = 1; i < v.size(); ++i) {
          k.push_back(v[i] / r.divisors[i]);
        }
        CHECK(admissible(r.divisors, k));
        CHECK(assemble(r.divisors, k) == r.sequence);
        CHECK(conductor_from_multipliers(r.divisors, k) == r.conductor);
        CHECK(conductor_formula(r.sequence) == r.conductor);
        if (n <= 16) {
          CHECK(conductor_oracle(generated_semigroup(r.sequence))
                == r.conductor);
        }
      }
    }
  }

  TEST_CASE("output is sorted and independent of the thread count") {
    auto const one  = enumerate_by_degree(24, {.threads = 1});
    auto const four = enumerate_by_degree(24, {.threads = 4});
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      CHECK(one[i].sequence == four[i].sequence);
    }
    CHECK(std::is_sorted(one.begin(), one.end(), by_conductor_then_sequence));
  }

  TEST_CASE("coprimality uses the divisor quotient, not the degree") {
    // k1 = 3 shares a factor with 12 yet (12,9,v2) is a genuine A-M sequence
    bool found = false;
    for (auto const& r : enumerate_by_degree(12)) {
      found = found || (r.sequence.length() == 2 && r.sequence[1] == 9);
    }
    CHECK(found);
    CHECK(oracle::is_am({12, 9, 37}));
    CHECK(is_am(validate({12, 9, 37})).has_value());
  }

  TEST_CASE("extremal multipliers reach the maximal conductor") {
    for (Int n = 3; n <= 12; ++n) {
      for (auto const& d : divisor_sequences(n)) {
        auto const        k  = max_multipliers(d);
        auto const        cs = assemble(d, k);
        std::vector<Int>  expected{n};
        for (std::size_t i = 1; i <= d.length(); ++i) {
          expected.push_back(n * n / d[i - 1] - d[i]);
        }
        CAPTURE(d.values());
        CHECK(cs.values() == expected);
        CHECK(conductor_formula(cs) == (n - 1) * (n - 2));
        CHECK(is_am(cs).has_value());
      }
    }
  }

  TEST_CASE("multiplier helpers reject bad input") {
    DivisorSequence const d({8, 4, 2, 1});
    CHECK(admissible(d, {1, 5, 21}));
    CHECK_FALSE(admissible(d, {1, 3, 7}));
    CHECK_FALSE(admissible(d, {2, 3, 7}));
    CHECK_FALSE(admissible(d, {1, 2, 7}));
    try {
      assemble(d, {1, 3});
      FAIL("expected InvalidMultipliers");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::InvalidMultipliers);
    }
  }

  TEST_CASE("minimum conductor per divisor chain") {
    auto const a = min_conductor(DivisorSequence({105, 15, 3, 1}));
    CHECK(a.conductor == 1500);
    auto const b = min_conductor(DivisorSequence({8, 4, 2, 1}));
    CHECK(b.multipliers == MultiplierVector{1, 5, 21});
    CHECK(b.conductor == 28);
    CHECK(assemble(DivisorSequence({8, 4, 2, 1}), b.multipliers).values()
          == std::vector<Int>{8, 4, 10, 21});
    CHECK(min_conductor(DivisorSequence({9, 1})).conductor == 0);

    for (Int n = 2; n <= 24; ++n) {
      std::map<std::vector<Int>, Int> best;
      for (auto const& r : enumerate_by_degree(n)) {
        auto [it, fresh] = best.emplace(r.divisors.values(), r.conductor);
        if (!fresh) {
          it->second = std::min(it->second, r.conductor);
        }
      }
      for (auto const& d : divisor_sequences(n)) {
        auto const mc = min_conductor(d);
        CAPTURE(d.values());
        CHECK(conductor_formula(assemble(d, mc.multipliers)) == mc.conductor);
        if (d.length() == 1) {
          CHECK(mc.conductor == 0);
        } else {
          CHECK(best.at(d.values()) == mc.conductor);
        }
      }
    }
  }

  TEST_CASE("minimum conductor tables") {
    auto const rows = min_conductor_table(105);
    auto const& ref = golden::degree_105_minimum();
    REQUIRE(rows.size() == ref.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].divisors.padded(4) == ref[i].divisors);
      CHECK(rows[i].conductor == ref[i].conductor);
    }

    auto const eight = min_conductor_table(8);
    REQUIRE(eight.size() == 4);
    CHECK(eight[0].conductor == 0);
    CHECK(eight[1].conductor == 8);
    CHECK(eight[2].conductor == 24);
    CHECK(eight[3].conductor == 28);

    auto const four = min_conductor_table(4);
    REQUIRE(four.size() == 2);
    CHECK(four[1].divisors.values() == std::vector<Int>{4, 2, 1});
    CHECK(four[1].conductor == 4);

    CHECK(min_conductor_by_length(105)
          == std::vector<std::pair<std::size_t, Int>>{
              {1, 0}, {2, 210}, {3, 1500}});
    CHECK(lex_order_violations(105).empty());
  }

  TEST_CASE("conductor-bounded listing up to 18") {
    auto const got = flatten(enumerate_by_conductor(18));
    std::map<std::vector<Int>, Seqs> want;
    for (auto const& row : golden::conductor_18_listing()) {
      if (row.generators != std::vector<Int>{4, 6, 17}) {
        auto sorted = row.sequences;
        std::sort(sorted.begin(), sorted.end());
        want[row.generators] = sorted;
      }
    }
    CHECK(got.size() == 18);
    CHECK(got == want);
  }

  TEST_CASE("<4,6,17> has conductor 20 and first appears at bound 20") {
    CHECK(oracle::conductor({4, 6, 17}) == 20);
    CHECK(conductor_formula(validate({6, 4, 17})) == 20);
    auto const s = normalize({4, 6, 17});
    CHECK(enumerate_by_conductor(18).count(s) == 0);
    CHECK(enumerate_by_conductor(19).count(s) == 0);
    CHECK(enumerate_by_conductor(20).count(s) == 1);
  }

  TEST_CASE("conductor-bounded listing small bounds and monotonicity") {
    auto const two = flatten(enumerate_by_conductor(2));
    CHECK(two == std::map<std::vector<Int>, Seqs>{{{2, 3}, {{3, 2}}}});
    CHECK(flatten(enumerate_by_conductor(3)) == two);
    for (Int c = 2; c <= 40; c += 2) {
      auto const small = enumerate_by_conductor(c);
      auto const big   = enumerate_by_conductor(c + 2);
      for (auto const& [s, seqs] : small) {
        CHECK(big.count(s) == 1);
      }
    }
  }

  TEST_CASE("conductor-bounded listing equals filtered degree enumeration") {
    for (Int c : {10, 24, 40}) {
      std::map<std::vector<Int>, std::set<std::vector<Int>>> want;
      for (Int n = 2; n <= c + 2; ++n) {
        for (auto const& r : enumerate_by_degree(n)) {
          if (r.conductor <= c) {
            want[generated_semigroup(r.sequence).generators()].insert(
                r.sequence.values());
          }
        }
      }
      std::map<std::vector<Int>, std::set<std::vector<Int>>> got;
      for (auto const& [s, seqs] : enumerate_by_conductor(c)) {
        for (auto const& cs : seqs) {
          got[s.generators()].insert(cs.values());
        }
      }
      CAPTURE(c);
      CHECK(got == want);
    }
  }

}  // namespace amsg
