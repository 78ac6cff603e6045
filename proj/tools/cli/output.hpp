#ifndef AMSG_TOOLS_OUTPUT_HPP_
#define AMSG_TOOLS_OUTPUT_HPP_

#include <iosfwd>       // for ostream
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "amsg/am.hpp"
#include "amsg/arith.hpp"
#include "amsg/charseq.hpp"
#include "amsg/semigroup.hpp"

#include "json.hpp"

namespace amsg::cli {

  enum class Format { table, csv, json };

  std::optional<Format> parse_format(std::string_view name);

  //! One row of a listing. In a by-degree listing `sequences` and `divisors`
  //! hold a single entry; in a by-conductor listing they hold every A-M
  //! sequence of the semigroup and `degree` is the largest of their degrees.
  struct OutputRecord {
    std::vector<Int>              generators;
    std::vector<std::vector<Int>> sequences;
    std::vector<std::vector<Int>> divisors;
    Int                           degree    = 0;
    Int                           conductor = 0;

    friend bool operator==(OutputRecord const&, OutputRecord const&) = default;
  };

  OutputRecord record_from(AmRecord const& rec);
  OutputRecord record_from(NumericalSemigroup const&                  s,
                           std::vector<CharacteristicSequence> const& seqs);

  nlohmann::ordered_json to_json(OutputRecord const& rec);
  //! Throws nlohmann::json exceptions on malformed input.
  OutputRecord record_from_json(nlohmann::ordered_json const& j);

  std::string_view csv_header();
  std::string      to_csv_row(OutputRecord const& rec);
  //! Inverse of to_csv_row. Throws std::invalid_argument on malformed rows.
  OutputRecord parse_csv_row(std::string_view row);

  //! "(8,4,10,21)"
  std::string paren_list(std::vector<Int> const& v);
  //! "<4,10,21>"
  std::string angle_list(std::vector<Int> const& v);

  //! JSON array of records, one object per line.
  void write_json(std::ostream& out, std::vector<OutputRecord> const& recs);
  void write_csv(std::ostream& out, std::vector<OutputRecord> const& recs);

}  // namespace amsg::cli

#endif  // AMSG_TOOLS_OUTPUT_HPP_
