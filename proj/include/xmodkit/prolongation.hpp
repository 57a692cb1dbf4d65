#pragma once

#include <vector>

#include "xmodkit/extension.hpp"

namespace xmodkit {

/// Data (ζ, η, θ) over a group B with a central-kernel surjection π: B -> Π.
/// θ acts on B̄ = B / Ker ζ, whose elements are indexed by ascending least
/// coset member (the quotient convention of group_core).
struct PreProlongation {
  FiniteGroup B;
  FiniteGroup Pi;
  GroupHom pi;    // B -> Π, surjective
  FiniteGroup A;
  GroupHom zeta;  // Ker π (as a subgroup group) -> A, surjective
  FiniteGroup D;
  GroupHom eta;   // Π -> D, injective with normal image
  std::vector<std::vector<Elem>> theta;  // one map B̄ -> B̄ per element of D

  /// Checks surjectivity of π and ζ, centrality of Ker π, and that η is a
  /// normal monomorphism. Throws InvalidPreProlongation or
  /// ZetaNotSurjective. The crossed-module axioms are checked by
  /// induced_crossed_module.
  static PreProlongation make(FiniteGroup B, FiniteGroup Pi, GroupHom pi, FiniteGroup A,
                              GroupHom zeta, FiniteGroup D, GroupHom eta,
                              std::vector<std::vector<Elem>> theta);

  SubgroupView ker_pi() const;
};

struct InducedKernel {
  CosetDecomposition bbar;  // B / Ker ζ
  AbstractZetaKernel kernel;  // over (B̄, D, d = η π, θ) with ζ̄
};

/// Throws NotACrossedModule (carrying the failing axiom's witness) or
/// ZetaBarIllDefined.
InducedKernel induced_crossed_module(PreProlongation const& pre);

Obstruction covering_obstruction(PreProlongation const& pre, Limits const& limits = {});

struct ProlongationDiagram {
  PreProlongation pre;
  ZetaExtension ext;   // over the induced crossed module
  GroupHom beta_top;   // B -> E
};

struct CoveringReport {
  InducedKernel induced;
  ClassificationReport classification;
  std::vector<ProlongationDiagram> coverings;
};

/// One verified covering per class of H²(Coker d, A); empty when the
/// obstruction does not vanish.
CoveringReport classify_coverings(PreProlongation const& pre, Limits const& limits = {});

/// Every commuting square of the prolongation diagram, checked exhaustively.
/// Throws SquareFails whose message names the square and whose witness is
/// the offending element.
ProlongationDiagram verify_prolongation(ProlongationDiagram diag);

}  // namespace xmodkit
