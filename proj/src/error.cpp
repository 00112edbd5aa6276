#include "flp/error.hpp"

namespace flp {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::UnknownTarget: return "UnknownTarget";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::CenterOutsideRange: return "CenterOutsideRange";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ArgUndefined: return "ArgUndefined";
    case ErrorKind::ParamRange: return "ParamRange";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::MaxIterExceeded: return "MaxIterExceeded";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::SingularOnCircle: return "SingularOnCircle";
    case ErrorKind::DerivativeVanishes: return "DerivativeVanishes";
    case ErrorKind::SingularSample: return "SingularSample";
    case ErrorKind::FileWrite: return "FileWrite";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace flp
