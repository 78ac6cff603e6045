#include "amsg/error.hpp"

namespace amsg {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::EmptyInput:
        return "EmptyInput";
      case ErrorCode::NonPositiveValue:
        return "NonPositiveValue";
      case ErrorCode::NonCoprimeGenerators:
        return "NonCoprimeGenerators";
      case ErrorCode::CS1Violated:
        return "CS1Violated";
      case ErrorCode::CS2Violated:
        return "CS2Violated";
      case ErrorCode::NotCoprimeTail:
        return "NotCoprimeTail";
      case ErrorCode::NonCoprimePair:
        return "NonCoprimePair";
      case ErrorCode::InvalidGluingFactor:
        return "InvalidGluingFactor";
      case ErrorCode::NotAm:
        return "NotAm";
      case ErrorCode::EmbeddingDimensionTooSmall:
        return "EmbeddingDimensionTooSmall";
      case ErrorCode::DegreeRequired:
        return "DegreeRequired";
      case ErrorCode::OutOfRange:
        return "OutOfRange";
      case ErrorCode::ConstructionFailed:
        return "ConstructionFailed";
      case ErrorCode::NotPrime:
        return "NotPrime";
      case ErrorCode::InvalidDivisorSequence:
        return "InvalidDivisorSequence";
      case ErrorCode::InvalidMultipliers:
        return "InvalidMultipliers";
      case ErrorCode::Overflow:
        return "Overflow";
    }
    return "Unknown";
  }

  Error::Error(ErrorCode code, std::string const& what, std::size_t index)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        _code(code),
        _index(index) {}

}  // namespace amsg
