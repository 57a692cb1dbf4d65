#include "xmodkit/error.hpp"

namespace xmodkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotAHom: return "NotAHom";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotAnAction: return "NotAnAction";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::AxiomC1Failed: return "AxiomC1Failed";
    case ErrorKind::AxiomC2Failed: return "AxiomC2Failed";
    case ErrorKind::H1Failed: return "H1Failed";
    case ErrorKind::H2Failed: return "H2Failed";
    case ErrorKind::NotInKernel: return "NotInKernel";
    case ErrorKind::NotThetaInvariant: return "NotThetaInvariant";
    case ErrorKind::NotACatGroup: return "NotACatGroup";
    case ErrorKind::ValueOutsideKernel: return "ValueOutsideKernel";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::InvalidStick: return "InvalidStick";
    case ErrorKind::NotExact: return "NotExact";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::BetaNotXModHom: return "BetaNotXModHom";
    case ErrorKind::ZetaMismatch: return "ZetaMismatch";
    case ErrorKind::ZetaNotSurjective: return "ZetaNotSurjective";
    case ErrorKind::ZetaNotInvariant: return "ZetaNotInvariant";
    case ErrorKind::FactorSetCondition: return "FactorSetCondition";
    case ErrorKind::KernelMismatch: return "KernelMismatch";
    case ErrorKind::NotACrossedModule: return "NotACrossedModule";
    case ErrorKind::ZetaBarIllDefined: return "ZetaBarIllDefined";
    case ErrorKind::InvalidPreProlongation: return "InvalidPreProlongation";
    case ErrorKind::SquareFails: return "SquareFails";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string message, std::vector<int> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace xmodkit
