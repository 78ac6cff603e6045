#include "cli/output.hpp"

#include <algorithm>  // for max
#include <charconv>   // for from_chars
#include <ostream>    // for ostream
#include <stdexcept>  // for invalid_argument

namespace amsg::cli {

  namespace {
    std::string join(std::vector<Int> const& v, char sep) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
          out += sep;
        }
        out += std::to_string(v[i]);
      }
      return out;
    }

    std::string join_lists(std::vector<std::vector<Int>> const& lists) {
      std::string out;
      for (std::size_t i = 0; i < lists.size(); ++i) {
        if (i > 0) {
          out += ';';
        }
        out += join(lists[i], ',');
      }
      return out;
    }

    Int parse_int(std::string_view s) {
      Int value = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("bad integer '" + std::string(s) + "'");
      }
      return value;
    }

    std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> parts;
      std::size_t                   start = 0;
      while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
          parts.push_back(s.substr(start));
          return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
      }
    }

    std::vector<Int> parse_list(std::string_view s) {
      std::vector<Int> out;
      if (s.empty()) {
        return out;
      }
      for (auto part : split(s, ',')) {
        out.push_back(parse_int(part));
      }
      return out;
    }

    std::vector<std::vector<Int>> parse_lists(std::string_view s) {
      std::vector<std::vector<Int>> out;
      if (s.empty()) {
        return out;
      }
      for (auto part : split(s, ';')) {
        out.push_back(parse_list(part));
      }
      return out;
    }

    // Fields are either bare integers or double-quoted lists; no field
    // contains a quote.
    std::vector<std::string_view> split_csv(std::string_view row) {
      std::vector<std::string_view> fields;
      std::size_t                   i = 0;
      while (i <= row.size()) {
        if (i < row.size() && row[i] == '"') {
          auto close = row.find('"', i + 1);
          if (close == std::string_view::npos) {
            throw std::invalid_argument("unterminated quote");
          }
          fields.push_back(row.substr(i + 1, close - i - 1));
          i = close + 1;
          if (i < row.size() && row[i] != ',') {
            throw std::invalid_argument("junk after quoted field");
          }
          ++i;
        } else {
          auto comma = row.find(',', i);
          if (comma == std::string_view::npos) {
            comma = row.size();
          }
          fields.push_back(row.substr(i, comma - i));
          i = comma + 1;
        }
      }
      return fields;
    }
  }  // namespace

  std::optional<Format> parse_format(std::string_view name) {
    if (name == "table") {
      return Format::table;
    } else if (name == "csv") {
      return Format::csv;
    } else if (name == "json") {
      return Format::json;
    }
    return std::nullopt;
  }

  OutputRecord record_from(AmRecord const& rec) {
    return {generated_semigroup(rec.sequence).generators(),
            {rec.sequence.values()},
            {rec.divisors.values()},
            rec.degree,
            rec.conductor};
  }

  OutputRecord record_from(NumericalSemigroup const&                  s,
                           std::vector<CharacteristicSequence> const& seqs) {
    OutputRecord out;
    out.generators = s.generators();
    for (auto const& cs : seqs) {
      out.sequences.push_back(cs.values());
      out.divisors.push_back(cs.gcds());
      out.degree = std::max(out.degree, cs.degree());
    }
    out.conductor = seqs.empty() ? conductor_oracle(s)
                                 : conductor_formula(seqs.front());
    return out;
  }

  nlohmann::ordered_json to_json(OutputRecord const& rec) {
    nlohmann::ordered_json j;
    j["generators"] = rec.generators;
    j["sequences"]  = rec.sequences;
    j["divisors"]   = rec.divisors;
    j["degree"]     = rec.degree;
    j["conductor"]  = rec.conductor;
    return j;
  }

  OutputRecord record_from_json(nlohmann::ordered_json const& j) {
    OutputRecord rec;
    j.at("generators").get_to(rec.generators);
    j.at("sequences").get_to(rec.sequences);
    j.at("divisors").get_to(rec.divisors);
    j.at("degree").get_to(rec.degree);
    j.at("conductor").get_to(rec.conductor);
    return rec;
  }

  std::string_view csv_header() {
    return "generators,sequence,divisors,degree,conductor";
  }

  std::string to_csv_row(OutputRecord const& rec) {
    std::string row;
    row += '"' + join(rec.generators, ',') + "\",";
    row += '"' + join_lists(rec.sequences) + "\",";
    row += '"' + join_lists(rec.divisors) + "\",";
    row += std::to_string(rec.degree) + ',';
    row += std::to_string(rec.conductor);
    return row;
  }

  OutputRecord parse_csv_row(std::string_view row) {
    auto fields = split_csv(row);
    if (fields.size() != 5) {
      throw std::invalid_argument("expected 5 fields");
    }
    return {parse_list(fields[0]),
            parse_lists(fields[1]),
            parse_lists(fields[2]),
            parse_int(fields[3]),
            parse_int(fields[4])};
  }

  std::string paren_list(std::vector<Int> const& v) {
    return '(' + join(v, ',') + ')';
  }

  std::string angle_list(std::vector<Int> const& v) {
    return '<' + join(v, ',') + '>';
  }

  void write_json(std::ostream& out, std::vector<OutputRecord> const& recs) {
    out << '[';
    for (std::size_t i = 0; i < recs.size(); ++i) {
      out << (i == 0 ? "\n  " : ",\n  ") << to_json(recs[i]).dump();
    }
    out << (recs.empty() ? "]\n" : "\n]\n");
  }

  void write_csv(std::ostream& out, std::vector<OutputRecord> const& recs) {
    out << csv_header() << '\n';
    for (auto const& rec : recs) {
      out << to_csv_row(rec) << '\n';
    }
  }

}  // namespace amsg::cli
