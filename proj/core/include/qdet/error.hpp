#pragma once

#include <stdexcept>
#include <string>

namespace qdet {

enum class Errc {
  NonExactDivision,
  ZeroPoint,
  BadModulus,
  NotCoprime,
  BadSpec,
  TooLarge,
  DegreeViolation,
  CoprimeInput,
  BadQ,
  Internal,
};

constexpr const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonExactDivision: return "NON_EXACT_DIVISION";
    case Errc::ZeroPoint: return "ZERO_POINT";
    case Errc::BadModulus: return "BAD_MODULUS";
    case Errc::NotCoprime: return "NOT_COPRIME";
    case Errc::BadSpec: return "BAD_SPEC";
    case Errc::TooLarge: return "TOO_LARGE";
    case Errc::DegreeViolation: return "DEGREE_VIOLATION";
    case Errc::CoprimeInput: return "COPRIME_INPUT";
    case Errc::BadQ: return "BAD_Q";
    case Errc::Internal: return "INTERNAL_ERROR";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace qdet
