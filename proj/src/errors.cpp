#include "radonlike/errors.hpp"

namespace radonlike {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::NoPrincipalPart: return "no-principal-part";
    case ErrorKind::HomogeneityViolation: return "homogeneity-violation";
    case ErrorKind::VanishingPrincipalPart: return "vanishing-principal-part";
    case ErrorKind::WeightOrderViolation: return "weight-order-violation";
    case ErrorKind::DegenerateDenominator: return "degenerate-denominator";
    case ErrorKind::DegenerateSpace: return "degenerate-space";
    case ErrorKind::DilationCap: return "dilation-cap";
    case ErrorKind::Resolution: return "resolution";
    case ErrorKind::Range: return "range";
    case ErrorKind::SingularMap: return "singular-map";
    case ErrorKind::NonConvergence: return "non-convergence";
  }
  return "unknown";
}

}  // namespace radonlike
