#ifndef AMSG_ERROR_HPP_
#define AMSG_ERROR_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <string_view>

namespace amsg {

  enum class ErrorCode {
    EmptyInput,
    NonPositiveValue,
    NonCoprimeGenerators,
    CS1Violated,
    CS2Violated,
    NotCoprimeTail,
    NonCoprimePair,
    InvalidGluingFactor,
    NotAm,
    EmbeddingDimensionTooSmall,
    DegreeRequired,
    OutOfRange,
    ConstructionFailed,
    NotPrime,
    InvalidDivisorSequence,
    InvalidMultipliers,
    Overflow,
  };

  std::string_view to_string(ErrorCode code) noexcept;

  //! Every failure raised by the library. `index()` carries the offending
  //! position for the sequence checks (CS1Violated(k), CS2Violated(k)) and is
  //! zero otherwise.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what, std::size_t index = 0);

    ErrorCode code() const noexcept {
      return _code;
    }
    std::size_t index() const noexcept {
      return _index;
    }

   private:
    ErrorCode   _code;
    std::size_t _index;
  };

}  // namespace amsg

#endif  // AMSG_ERROR_HPP_
