#pragma once

// Error taxonomy shared by the whole library.  Every failure carries a kind
// so callers (tests, the CLI exit-code mapping) can react without parsing
// message strings.  Index fields are 1-based coordinate positions, -1 when
// not applicable.

#include <stdexcept>
#include <string>

namespace diracgate {

enum class ErrorKind {
    ParseError,            // malformed text input
    LengthMismatch,        // wrong coordinate/coefficient count
    DominanceViolation,    // an ordering constraint is broken
    IntegralityViolation,  // an integer-difference / doubling constraint is broken
    IndexOutOfRange,       // rank, coordinate or basic-module index out of range
    OrbitTooLarge,         // orbit enumeration would exceed the configured guard
    WrongCase,             // operation not defined for this parameter's case
    HypothesisViolated,    // verifier input fails the required hypothesis
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError:            return "ParseError";
        case ErrorKind::LengthMismatch:        return "LengthMismatch";
        case ErrorKind::DominanceViolation:    return "DominanceViolation";
        case ErrorKind::IntegralityViolation:  return "IntegralityViolation";
        case ErrorKind::IndexOutOfRange:       return "IndexOutOfRange";
        case ErrorKind::OrbitTooLarge:         return "OrbitTooLarge";
        case ErrorKind::WrongCase:             return "WrongCase";
        case ErrorKind::HypothesisViolated:    return "HypothesisViolated";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message, int index_a = -1, int index_b = -1)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind), index_a_(index_a), index_b_(index_b) {}

    ErrorKind kind() const { return kind_; }
    int index_a() const { return index_a_; }
    int index_b() const { return index_b_; }

  private:
    ErrorKind kind_;
    int index_a_;
    int index_b_;
};

}  // namespace diracgate
