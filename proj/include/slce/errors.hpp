#ifndef SLCE_ERRORS_HPP
#define SLCE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slce {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotPrime : Error {
  explicit NotPrime(const std::string& w) : Error(w) {}
};
struct DegreeTooLarge : Error {
  explicit DegreeTooLarge(const std::string& w) : Error(w) {}
};
struct NoIrreducibleFound : Error {
  explicit NoIrreducibleFound(const std::string& w) : Error(w) {}
};
struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& w) : Error(w) {}
};
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& w) : Error(w) {}
};
struct ZeroMultiplier : Error {
  explicit ZeroMultiplier(const std::string& w) : Error(w) {}
};
struct NotDivisor : Error {
  explicit NotDivisor(const std::string& w) : Error(w) {}
};
struct EvenCharacteristic : Error {
  explicit EvenCharacteristic(const std::string& w) : Error(w) {}
};
struct PeriodMismatch : Error {
  explicit PeriodMismatch(const std::string& w) : Error(w) {}
};
struct AlphabetMismatch : Error {
  explicit AlphabetMismatch(const std::string& w) : Error(w) {}
};
struct NotUnit : Error {
  explicit NotUnit(const std::string& w) : Error(w) {}
};
struct TooLarge : Error {
  explicit TooLarge(const std::string& w) : Error(w) {}
};
struct TrivialCharacter : Error {
  explicit TrivialCharacter(const std::string& w) : Error(w) {}
};
struct NonIntegerNorm : Error {
  explicit NonIntegerNorm(const std::string& w) : Error(w) {}
};
struct HypothesisViolated : Error {
  explicit HypothesisViolated(const std::string& w) : Error(w) {}
};
struct WrongOrder : Error {
  explicit WrongOrder(const std::string& w) : Error(w) {}
};
struct ExcludedCandidate : Error {
  explicit ExcludedCandidate(const std::string& w) : Error(w) {}
};

}  // namespace slce

#endif  // SLCE_ERRORS_HPP
