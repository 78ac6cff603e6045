#ifndef AMSG_TOOLS_COMMANDS_HPP_
#define AMSG_TOOLS_COMMANDS_HPP_

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

#include "amsg/enumerate.hpp"
#include "cli/output.hpp"

namespace amsg::cli {

  enum ExitCode : int {
    kOk                 = 0,
    kInternal           = 1,
    kUsage              = 2,
    kOutOfRange         = 3,
    kConstructionFailed = 4,
    kVerifyFailed       = 5,
  };

  //! Entry point of the command-line tool. `args` excludes the program name;
  //! data goes to `out`, diagnostics to `err`.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

  //! Listing order of a by-conductor run: embedding dimension, then
  //! generators.
  std::vector<OutputRecord> by_conductor_records(Int c);
  std::vector<OutputRecord> by_degree_records(Int n, unsigned threads);

  void print_by_conductor(std::ostream& out, Int c, Format fmt);
  void print_by_degree(std::ostream& out, Int n, Format fmt, unsigned threads);
  void print_min_conductors(std::ostream& out, Int n, Format fmt);
  //! Returns 3 on OutOfRange, 4 on ConstructionFailed.
  int print_construct(std::ostream& out,
                      std::ostream& err,
                      Int           n,
                      Int           c,
                      Format        fmt);
  //! Returns 5 if any even degree up to n_max is not fully covered.
  int print_verify(std::ostream& out, Int n_max, unsigned threads);
  void print_explore_lex(std::ostream& out, Int n_max);

}  // namespace amsg::cli

#endif  // AMSG_TOOLS_COMMANDS_HPP_
