#pragma once

#include <stdexcept>
#include <string>

namespace harmonia {

enum class ErrorKind {
  PoleAtNonpositiveInteger,
  CLowerParameterPole,
  SeriesNonConvergence,
  ToleranceNotMet,
  TailNotDecaying,
  DeterminantViolation,
  ZeroIndex,
  SingularAtOrigin,
  IndeterminatePoint,
  IndexNotInGamma,
  DerivativeUnavailable,
  IntegerSpectralParam,
  SpectralParamInB,
  NonpositiveRealPart,
  ExcludedRegion,
  NotIntegrableRegion,
  StripViolation,
  DivergentIntegral,
  EmptyWindow,
  PoleCollision,
  ExcludedSpectralParam,
  TransformZeroDivision,
  InsufficientDecay,
  CoincidentRadii,
  InvalidArgument,
};

const char* error_name(ErrorKind kind) noexcept;

// Every domain failure in the library is reported through this type; the
// kind is stable and its name is what the command-line tool prints.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  const char* name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

inline const char* error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::PoleAtNonpositiveInteger: return "PoleAtNonpositiveInteger";
    case ErrorKind::CLowerParameterPole: return "CLowerParameterPole";
    case ErrorKind::SeriesNonConvergence: return "SeriesNonConvergence";
    case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorKind::TailNotDecaying: return "TailNotDecaying";
    case ErrorKind::DeterminantViolation: return "DeterminantViolation";
    case ErrorKind::ZeroIndex: return "ZeroIndex";
    case ErrorKind::SingularAtOrigin: return "SingularAtOrigin";
    case ErrorKind::IndeterminatePoint: return "IndeterminatePoint";
    case ErrorKind::IndexNotInGamma: return "IndexNotInGamma";
    case ErrorKind::DerivativeUnavailable: return "DerivativeUnavailable";
    case ErrorKind::IntegerSpectralParam: return "IntegerSpectralParam";
    case ErrorKind::SpectralParamInB: return "SpectralParamInB";
    case ErrorKind::NonpositiveRealPart: return "NonpositiveRealPart";
    case ErrorKind::ExcludedRegion: return "ExcludedRegion";
    case ErrorKind::NotIntegrableRegion: return "NotIntegrableRegion";
    case ErrorKind::StripViolation: return "StripViolation";
    case ErrorKind::DivergentIntegral: return "DivergentIntegral";
    case ErrorKind::EmptyWindow: return "EmptyWindow";
    case ErrorKind::PoleCollision: return "PoleCollision";
    case ErrorKind::ExcludedSpectralParam: return "ExcludedSpectralParam";
    case ErrorKind::TransformZeroDivision: return "TransformZeroDivision";
    case ErrorKind::InsufficientDecay: return "InsufficientDecay";
    case ErrorKind::CoincidentRadii: return "CoincidentRadii";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace harmonia
