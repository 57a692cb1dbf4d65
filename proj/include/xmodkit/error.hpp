#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xmodkit {

enum class ErrorKind {
  NotAGroup,
  NotAHom,
  NotNormal,
  NotASubgroup,
  BoundExceeded,
  NotAnAction,
  NotAbelian,
  NotACocycle,
  BudgetExceeded,
  AxiomC1Failed,
  AxiomC2Failed,
  H1Failed,
  H2Failed,
  NotInKernel,
  NotThetaInvariant,
  NotACatGroup,
  ValueOutsideKernel,
  NotEquivariant,
  TypeMismatch,
  InvalidStick,
  NotExact,
  NotCentral,
  BetaNotXModHom,
  ZetaMismatch,
  ZetaNotSurjective,
  ZetaNotInvariant,
  FactorSetCondition,
  KernelMismatch,
  NotACrossedModule,
  ZetaBarIllDefined,
  InvalidPreProlongation,
  SquareFails,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failed check in the library throws this. `witness` carries the
/// element indices (or tuple) at which the check failed, in the order
/// documented by the throwing function.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<int> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  std::vector<int> const& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<int> witness_;
};

}  // namespace xmodkit
