#pragma once

#include <stdexcept>
#include <string>

namespace cygrowth {

enum class Errc {
  ZeroPolynomial,
  ZeroDenominator,
  SingularConstantTerm,
  NonUnimodularConstantTerm,
  DimensionMismatch,
  InvalidQuiver,
  InvalidDimOneQuiver,
  IncompatibleDatum,
  NonUnimodular,
  TauNotInjective,
  TauImageNotArrowSpace,
  DegreeMismatch,
  NotWeakPotential,
  TruncationTooLarge,
  BoundsTooLarge,
  ParseError,
  Internal,
};

/// Library-wide exception carrying a stable error code plus a human message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::SingularConstantTerm: return "SingularConstantTerm";
    case Errc::NonUnimodularConstantTerm: return "NonUnimodularConstantTerm";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidQuiver: return "InvalidQuiver";
    case Errc::InvalidDimOneQuiver: return "InvalidDimOneQuiver";
    case Errc::IncompatibleDatum: return "IncompatibleDatum";
    case Errc::NonUnimodular: return "NonUnimodular";
    case Errc::TauNotInjective: return "TauNotInjective";
    case Errc::TauImageNotArrowSpace: return "TauImageNotArrowSpace";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NotWeakPotential: return "NotWeakPotential";
    case Errc::TruncationTooLarge: return "TruncationTooLarge";
    case Errc::BoundsTooLarge: return "BoundsTooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace cygrowth
