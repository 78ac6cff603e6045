#include "amsg/enumerate.hpp"

#include <algorithm>  // for sort, min
#include <atomic>     // for atomic
#include <exception>  // for exception_ptr
#include <mutex>      // for mutex
#include <set>        // for set
#include <stdexcept>  // for logic_error
#include <thread>     // for thread

#include "amsg/error.hpp"
#include "amsg/gluing.hpp"

namespace amsg {

  namespace {
    Int ceil_div(Int a, Int b) {
      return a / b + (a % b != 0 ? 1 : 0);
    }

    // Inclusive range [lo, hi] of k_i given k_{i-1}; i is 1-based.
    std::pair<Int, Int> multiplier_range(DivisorSequence const& d,
                                         std::size_t            i,
                                         Int                    previous) {
      if (i == 1) {
        return {1, d[0] / d[1] - 1};
      }
      Int const lo = ceil_div(checked_add(checked_mul(d[i - 2], previous), 1),
                              d[i]);
      Int const hi = checked_mul(d[0] / d[i - 1], d[0] / d[i]) - 1;
      return {lo, hi};
    }

    void enumerate_chain(DivisorSequence const& d,
                         std::size_t            i,
                         MultiplierVector&      k,
                         std::vector<AmRecord>& out) {
      std::size_t const h = d.length();
      if (i > h) {
        auto rec = is_am(assemble(d, k));
        if (!rec) {
          throw std::logic_error("admissible multipliers gave a non A-M "
                                 "sequence");
        }
        out.push_back(std::move(*rec));
        return;
      }
      auto const [lo, hi] = multiplier_range(d, i, i > 1 ? k[i - 2] : 0);
      Int const step_quotient = d[i - 1] / d[i];
      for (Int ki = lo; ki <= hi; ++ki) {
        if (std::gcd(step_quotient, ki) != 1) {
          continue;
        }
        k.push_back(ki);
        enumerate_chain(d, i + 1, k, out);
        k.pop_back();
      }
    }

    unsigned worker_count(unsigned requested, std::size_t tasks) {
      unsigned n = requested;
      if (n == 0) {
        n = std::max(1u, std::thread::hardware_concurrency());
      }
      return static_cast<unsigned>(std::min<std::size_t>(n, tasks));
    }
  }  // namespace

  bool admissible(DivisorSequence const& d, MultiplierVector const& k) {
    if (k.size() != d.length()) {
      return false;
    }
    for (std::size_t i = 1; i <= k.size(); ++i) {
      auto const [lo, hi] = multiplier_range(d, i, i > 1 ? k[i - 2] : 0);
      Int const ki        = k[i - 1];
      if (ki < lo || ki > hi || std::gcd(d[i - 1] / d[i], ki) != 1) {
        return false;
      }
    }
    return true;
  }

  CharacteristicSequence assemble(DivisorSequence const&  d,
                                  MultiplierVector const& k) {
    if (k.size() != d.length()) {
      throw Error(ErrorCode::InvalidMultipliers,
                  "need one multiplier per divisor step");
    }
    std::vector<Int> v{d[0]};
    for (std::size_t i = 1; i <= k.size(); ++i) {
      v.push_back(checked_mul(d[i], k[i - 1]));
    }
    auto cs = try_validate(v);
    if (!cs) {
      throw Error(ErrorCode::InvalidMultipliers,
                  "multipliers do not give a characteristic sequence");
    }
    return std::move(*cs);
  }

  Int conductor_from_multipliers(DivisorSequence const&  d,
                                 MultiplierVector const& k) {
    Int sum = 1;
    for (std::size_t i = 1; i <= k.size(); ++i) {
      sum = checked_add(sum, checked_mul(d[i - 1] - d[i], k[i - 1]));
    }
    return checked_sub(sum, d[0]);
  }

  MultiplierVector max_multipliers(DivisorSequence const& d) {
    MultiplierVector k;
    for (std::size_t i = 1; i <= d.length(); ++i) {
      k.push_back(multiplier_range(d, i, i > 1 ? k[i - 2] : 0).second);
    }
    return k;
  }

  std::vector<AmRecord> enumerate_by_degree(Int n, EnumerateOptions opts) {
    if (n < 2) {
      throw Error(ErrorCode::OutOfRange, "degree must be at least 2");
    }
    auto const                         chains = divisor_sequences(n);
    std::vector<std::vector<AmRecord>> parts(chains.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr       failure;
    std::mutex               failure_mutex;
    auto                     work = [&]() {
      for (std::size_t j = next++; j < chains.size(); j = next++) {
        try {
          MultiplierVector k;
          enumerate_chain(chains[j], 1, k, parts[j]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) {
            failure = std::current_exception();
          }
        }
      }
    };

    unsigned const workers = worker_count(opts.threads, chains.size());
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back(work);
      }
    }
    if (failure) {
      std::rethrow_exception(failure);
    }

    std::vector<AmRecord> out;
    for (auto& part : parts) {
      for (auto& rec : part) {
        if (rec.sequence.length() == 1 && rec.sequence[1] == 1
            && !opts.include_naturals) {
          continue;
        }
        out.push_back(std::move(rec));
      }
    }
    std::sort(out.begin(), out.end(), by_conductor_then_sequence);
    return out;
  }

  std::map<NumericalSemigroup, std::vector<CharacteristicSequence>>
  enumerate_by_conductor(Int c) {
    if (c < 2) {
      throw Error(ErrorCode::OutOfRange, "conductor bound must be at least 2");
    }
    std::set<NumericalSemigroup>                   seen;
    std::map<Int, std::vector<NumericalSemigroup>> by_conductor;

    auto add = [&](NumericalSemigroup s, Int conductor) {
      if (conductor <= c && seen.insert(s).second) {
        by_conductor[conductor].push_back(std::move(s));
      }
    };

    // <a, b> is A-M of degree b via (b, a); its conductor is (a-1)(b-1).
    for (Int a = 2; a - 1 <= c; ++a) {
      for (Int b = a + 1; checked_mul(a - 1, b - 1) <= c; ++b) {
        if (std::gcd(a, b) == 1) {
          add(normalize({a, b}), conductor_formula(validate({b, a})));
        }
      }
    }

    for (Int k = 2; k < c; ++k) {
      auto it = by_conductor.find(k);
      if (it == by_conductor.end()) {
        continue;
      }
      // Gluings only produce larger conductors, so the bucket is stable.
      std::vector<NumericalSemigroup> const bucket = it->second;
      for (auto const& base : bucket) {
        auto const& a    = base.generators();
        Int const   top  = a.back();
        Int const   head = gcd_of(std::span<Int const>(a.data(), a.size() - 1));
        Int const   second = a[1];
        for (Int d = 2; checked_mul(d, k) <= c; ++d) {
          if (checked_add(checked_mul(checked_mul(d, d), k - 1), 1) > c) {
            break;
          }
          // f/d > head * top and f/d < second^2, and the glued conductor
          // d k + (d - 1)(f - 1) must stay within c.
          Int const f_lo = checked_mul(d, checked_mul(head, top)) + 1;
          Int const f_hi = std::min(checked_mul(d, checked_mul(second, second))
                                        - 1,
                                    (c - d * k) / (d - 1) + 1);
          for (Int f = f_lo; f <= f_hi; ++f) {
            if (std::gcd(d, f) != 1) {
              continue;
            }
            GluingSpec const g(d, f);
            add(glue(base, g), glued_conductor(k, g));
          }
        }
      }
    }

    std::map<NumericalSemigroup, std::vector<CharacteristicSequence>> out;
    for (auto const& s : seen) {
      std::vector<CharacteristicSequence> seqs;
      for (auto& rec : is_am_semigroup(s)) {
        seqs.push_back(std::move(rec.sequence));
      }
      out.emplace(s, std::move(seqs));
    }
    return out;
  }

  MinConductor min_conductor(DivisorSequence const& d) {
    std::size_t const h = d.length();
    MultiplierVector  k;
    for (std::size_t i = 1; i <= h; ++i) {
      k.push_back(i == 1 ? 1 : checked_mul(d[i - 2] / d[i], k[i - 2]) + 1);
    }
    Int value = 0;
    for (std::size_t i = 0; i + 2 <= h; ++i) {
      value = checked_add(value, checked_mul(d[i], d[i + 1] - 1));
    }
    return {std::move(k), value};
  }

  std::vector<MinConductorRow> min_conductor_table(Int n) {
    if (n < 2) {
      throw Error(ErrorCode::OutOfRange, "degree must be at least 2");
    }
    std::vector<MinConductorRow> rows;
    for (auto& d : divisor_sequences(n)) {
      auto m = min_conductor(d);
      rows.push_back({std::move(d), std::move(m.multipliers), m.conductor});
    }
    return rows;
  }

  std::vector<std::pair<std::size_t, Int>> min_conductor_by_length(Int n) {
    std::map<std::size_t, Int> best;
    for (auto const& row : min_conductor_table(n)) {
      auto [it, fresh] = best.emplace(row.divisors.length(), row.conductor);
      if (!fresh) {
        it->second = std::min(it->second, row.conductor);
      }
    }
    return {best.begin(), best.end()};
  }

  std::vector<LexViolation> lex_order_violations(Int n) {
    auto const                rows = min_conductor_table(n);
    std::vector<LexViolation> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        if (rows[i].conductor > rows[j].conductor) {
          out.push_back({rows[i], rows[j]});
        }
      }
    }
    return out;
  }

}  // namespace amsg
