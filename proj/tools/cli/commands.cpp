#include "cli/commands.hpp"

#include <algorithm>  // for sort, max
#include <iomanip>    // for setw
#include <ostream>    // for ostream
#include <set>        // for set
#include <sstream>    // for ostringstream

#include "amsg/amsg.hpp"

#include "CLI11.hpp"

namespace amsg::cli {

  namespace {
    std::string sequence_set(std::vector<std::vector<Int>> const& seqs) {
      std::string out = "{";
      for (std::size_t i = 0; i < seqs.size(); ++i) {
        out += (i == 0 ? "" : ",") + paren_list(seqs[i]);
      }
      return out + "}";
    }

    std::string describe(ConstructionStep const& step) {
      return std::visit(
          [](auto const& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            std::ostringstream os;
            if constexpr (std::is_same_v<T, DirectStep>) {
              os << "direct (" << s.degree << ",2," << s.conductor + 1
                 << ") conductor " << s.conductor;
            } else if constexpr (std::is_same_v<T, PairFamilyStep>) {
              os << "pair family k=" << s.multiplier << " ("
                 << s.degree << ',' << 2 * s.multiplier << ',' << s.last
                 << ')';
            } else if constexpr (std::is_same_v<T, GluingStep>) {
              os << "glue d=" << s.gluing.d() << " f=" << s.gluing.f()
                 << " -> degree " << s.degree << " conductor " << s.conductor;
            } else {
              os << "prime power " << s.prime << '^' << s.exponent
                 << " k1=" << s.multiplier << " i=" << s.offset;
            }
            return os.str();
          },
          step);
    }

    nlohmann::ordered_json step_json(ConstructionStep const& step) {
      return std::visit(
          [](auto const& s) {
            using T = std::decay_t<decltype(s)>;
            nlohmann::ordered_json j;
            if constexpr (std::is_same_v<T, DirectStep>) {
              j["step"]      = "direct";
              j["degree"]    = s.degree;
              j["conductor"] = s.conductor;
            } else if constexpr (std::is_same_v<T, PairFamilyStep>) {
              j["step"]       = "pair_family";
              j["degree"]     = s.degree;
              j["multiplier"] = s.multiplier;
              j["last"]       = s.last;
            } else if constexpr (std::is_same_v<T, GluingStep>) {
              j["step"]      = "gluing";
              j["d"]         = s.gluing.d();
              j["f"]         = s.gluing.f();
              j["degree"]    = s.degree;
              j["conductor"] = s.conductor;
            } else {
              j["step"]       = "prime_power";
              j["prime"]      = s.prime;
              j["exponent"]   = s.exponent;
              j["multiplier"] = s.multiplier;
              j["offset"]     = s.offset;
            }
            return j;
          },
          step);
    }

    void write_table(std::ostream&                                out,
                     std::vector<std::string> const&              header,
                     std::vector<std::vector<std::string>> const& rows) {
      std::vector<std::size_t> width(header.size());
      for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (auto const& row : rows) {
          width[c] = std::max(width[c], row[c].size());
        }
      }
      auto line = [&](std::vector<std::string> const& cells) {
        std::string text;
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (c + 1 == cells.size()) {
            text += cells[c];
          } else {
            text += cells[c] + std::string(width[c] - cells[c].size() + 2, ' ');
          }
        }
        out << text << '\n';
      };
      line(header);
      for (auto const& row : rows) {
        line(row);
      }
    }
  }  // namespace

  std::vector<OutputRecord> by_conductor_records(Int c) {
    std::vector<OutputRecord> recs;
    for (auto const& [s, seqs] : enumerate_by_conductor(c)) {
      recs.push_back(record_from(s, seqs));
    }
    std::stable_sort(recs.begin(),
                     recs.end(),
                     [](OutputRecord const& a, OutputRecord const& b) {
                       return a.generators.size() < b.generators.size();
                     });
    return recs;
  }

  std::vector<OutputRecord> by_degree_records(Int n, unsigned threads) {
    EnumerateOptions opts;
    opts.threads          = threads;
    opts.include_naturals = (n == 2);
    std::vector<OutputRecord> recs;
    for (auto const& rec : enumerate_by_degree(n, opts)) {
      recs.push_back(record_from(rec));
    }
    return recs;
  }

  void print_by_conductor(std::ostream& out, Int c, Format fmt) {
    auto const recs = by_conductor_records(c);
    if (fmt == Format::csv) {
      write_csv(out, recs);
    } else if (fmt == Format::json) {
      write_json(out, recs);
    } else {
      std::vector<std::vector<std::string>> rows;
      for (auto const& r : recs) {
        rows.push_back({angle_list(r.generators),
                        sequence_set(r.sequences),
                        std::to_string(r.conductor)});
      }
      write_table(out, {"semigroup", "characteristic sequences", "conductor"},
                  rows);
    }
  }

  void print_by_degree(std::ostream& out, Int n, Format fmt, unsigned threads) {
    auto const recs = by_degree_records(n, threads);
    if (fmt == Format::csv) {
      write_csv(out, recs);
    } else if (fmt == Format::json) {
      write_json(out, recs);
    } else {
      std::vector<std::vector<std::string>> rows;
      for (auto const& r : recs) {
        rows.push_back({paren_list(r.sequences.front()),
                        paren_list(r.divisors.front()),
                        std::to_string(r.conductor)});
      }
      write_table(out, {"sequence", "divisors", "conductor"}, rows);
    }
  }

  void print_min_conductors(std::ostream& out, Int n, Format fmt) {
    auto const        rows  = min_conductor_table(n);
    std::size_t const width = big_omega(n) + 1;
    if (fmt == Format::json) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (auto const& row : rows) {
        nlohmann::ordered_json j;
        j["divisors"]      = row.divisors.values();
        j["padded"]        = row.divisors.padded(width);
        j["multipliers"]   = row.multipliers;
        j["min_conductor"] = row.conductor;
        arr.push_back(std::move(j));
      }
      out << '[';
      for (std::size_t i = 0; i < arr.size(); ++i) {
        out << (i == 0 ? "\n  " : ",\n  ") << arr[i].dump();
      }
      out << (arr.empty() ? "]\n" : "\n]\n");
    } else if (fmt == Format::csv) {
      out << "divisors,multipliers,min_conductor\n";
      for (auto const& row : rows) {
        std::string d = paren_list(row.divisors.padded(width));
        std::string k = paren_list(row.multipliers);
        out << '"' << d.substr(1, d.size() - 2) << "\",\""
            << k.substr(1, k.size() - 2) << "\"," << row.conductor << '\n';
      }
    } else {
      std::vector<std::vector<std::string>> table;
      for (auto const& row : rows) {
        table.push_back({paren_list(row.divisors.padded(width)),
                         std::to_string(row.conductor)});
      }
      write_table(out, {"divisors", "min conductor"}, table);
    }
  }

  int print_construct(std::ostream& out,
                      std::ostream& err,
                      Int           n,
                      Int           c,
                      Format        fmt) {
    Construction const built = construct_for_conductor(n, c);
    auto const rec = is_am(built.sequence);
    if (!rec || rec->conductor != c || rec->degree != n) {
      err << "construction produced an inconsistent sequence\n";
      return kConstructionFailed;
    }
    OutputRecord const row = record_from(*rec);
    if (fmt == Format::csv) {
      write_csv(out, {row});
    } else if (fmt == Format::json) {
      auto j = to_json(row);
      j["trace"] = nlohmann::ordered_json::array();
      for (auto const& step : built.trace.steps) {
        j["trace"].push_back(step_json(step));
      }
      out << j.dump() << '\n';
    } else {
      out << "degree:     " << n << '\n'
          << "conductor:  " << c << '\n'
          << "sequence:   " << paren_list(row.sequences.front()) << '\n'
          << "divisors:   " << paren_list(row.divisors.front()) << '\n'
          << "generators: " << angle_list(row.generators) << '\n'
          << "trace:\n";
      for (std::size_t i = 0; i < built.trace.steps.size(); ++i) {
        out << "  " << i + 1 << ". " << describe(built.trace.steps[i]) << '\n';
      }
    }
    return kOk;
  }

  int print_verify(std::ostream& out, Int n_max, unsigned threads) {
    bool all_ok = true;
    for (Int n = 4; n <= n_max; n += 2) {
      auto const   range = conductor_range(n);
      std::set<Int> enumerated;
      EnumerateOptions opts;
      opts.threads = threads;
      for (auto const& rec : enumerate_by_degree(n, opts)) {
        enumerated.insert(rec.conductor);
      }
      std::size_t covered = 0;
      std::size_t built   = 0;
      for (Int c : range) {
        covered += enumerated.count(c);
        try {
          auto const result = construct_for_conductor(n, c);
          auto const s      = generated_semigroup(result.sequence);
          if (result.sequence.degree() == n && is_am(result.sequence)
              && conductor_oracle(s) == c) {
            ++built;
          }
        } catch (Error const&) {
        }
      }
      bool const ok = covered == range.size()
                      && enumerated.size() == range.size()
                      && built == range.size()
                      && range.size() == conductor_range_size(n);
      all_ok = all_ok && ok;
      out << "n=" << n << ": enumerated " << covered << '/' << range.size()
          << ", constructed " << built << '/' << range.size()
          << (ok ? " OK" : " MISMATCH") << '\n';
    }
    out << (all_ok ? "OK" : "FAILED") << '\n';
    return all_ok ? kOk : kVerifyFailed;
  }

  void print_explore_lex(std::ostream& out, Int n_max) {
    std::size_t total = 0;
    for (Int n = 2; n <= n_max; ++n) {
      for (auto const& v : lex_order_violations(n)) {
        ++total;
        out << "n=" << n << ": " << paren_list(v.earlier.divisors.values())
            << " min " << v.earlier.conductor << " > "
            << paren_list(v.later.divisors.values()) << " min "
            << v.later.conductor << '\n';
      }
    }
    out << "checked degrees 2.." << n_max << ": " << total
        << " lexicographic order violation(s)\n";
  }

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Enumerate and construct Abhyankar-Moh numerical semigroups",
                 "amsg"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads,
                   "worker threads for enumeration (0 = all cores)")
        ->check(CLI::Range(0u, 1024u));

    std::string format_name = "table";
    auto        add_format  = [&format_name](CLI::App* sub) {
      sub->add_option("--format", format_name, "output format: table|csv|json")
          ->check(CLI::IsMember({"table", "csv", "json"}));
    };

    Int  bound = 0;
    auto by_conductor
        = app.add_subcommand("by-conductor",
                             "all A-M semigroups with conductor <= C");
    by_conductor->add_option("C", bound)->required()->check(
        CLI::Range(Int{2}, Int{100000}));
    add_format(by_conductor);

    Int  degree = 0;
    auto by_degree
        = app.add_subcommand("by-degree", "all A-M semigroups of degree N");
    by_degree->add_option("N", degree)->required()->check(
        CLI::Range(Int{2}, Int{100000}));
    add_format(by_degree);

    Int  target = 0;
    auto construct
        = app.add_subcommand("construct",
                             "an A-M semigroup of even degree N and "
                             "conductor C");
    construct->add_option("N", degree)->required()->check(
        CLI::Range(Int{1}, Int{1} << 31));
    construct->add_option("C", target)->required()->check(
        CLI::Range(Int{0}, Int{1} << 62));
    add_format(construct);

    Int  n_max = 0;
    auto verify
        = app.add_subcommand("verify",
                             "check every even conductor is attained for "
                             "even degrees up to N_MAX");
    verify->add_option("N_MAX", n_max)->required()->check(
        CLI::Range(Int{4}, Int{100000}));

    auto min_conductors
        = app.add_subcommand("min-conductors",
                             "minimum conductor per divisor sequence of N");
    min_conductors->add_option("N", degree)->required()->check(
        CLI::Range(Int{2}, Int{1} << 62));
    add_format(min_conductors);

    Int  lex_max = 200;
    auto explore_lex = app.add_subcommand(
        "explore-lex", "probe lexicographic order of minimum conductors");
    explore_lex->group("");
    explore_lex->add_option("N_MAX", lex_max)->check(
        CLI::Range(Int{2}, Int{1} << 40));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kOk : kUsage;
    }

    Format const fmt = parse_format(format_name).value_or(Format::table);
    try {
      if (by_conductor->parsed()) {
        print_by_conductor(out, bound, fmt);
      } else if (by_degree->parsed()) {
        print_by_degree(out, degree, fmt, threads);
      } else if (construct->parsed()) {
        return print_construct(out, err, degree, target, fmt);
      } else if (verify->parsed()) {
        return print_verify(out, n_max, threads);
      } else if (min_conductors->parsed()) {
        print_min_conductors(out, degree, fmt);
      } else if (explore_lex->parsed()) {
        print_explore_lex(out, lex_max);
      }
    } catch (Error const& e) {
      err << "amsg: " << e.what() << '\n';
      switch (e.code()) {
        case ErrorCode::OutOfRange:
          return kOutOfRange;
        case ErrorCode::ConstructionFailed:
          return kConstructionFailed;
        default:
          return kInternal;
      }
    }
    return kOk;
  }

}  // namespace amsg::cli
