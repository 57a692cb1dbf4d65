#pragma once

#include <vector>

#include "xmodkit/cohomology.hpp"
#include "xmodkit/group.hpp"

namespace xmodkit {

/// A crossed module (B, D, d, θ): B is written additively, D
/// multiplicatively, θ is a left action of D on B.
struct CrossedModule {
  FiniteGroup B;
  FiniteGroup D;
  GroupHom d;
  ActionByAutomorphisms theta;

  /// Checks C1 (θ_{d(b)} = conjugation by b) and C2 (d(θ_x b) = x d(b) x^-1).
  /// Throws AxiomC1Failed(b) or AxiomC2Failed(x, b).
  static CrossedModule make(FiniteGroup B, FiniteGroup D, GroupHom d, ActionByAutomorphisms theta);

  friend bool operator==(CrossedModule const& a, CrossedModule const& b) {
    return a.B == b.B && a.D == b.D && a.d == b.d && a.theta == b.theta;
  }
};

/// Validation from a raw θ table (one map B -> B per element of D). The
/// axioms are checked in the order: each θ_x an automorphism, C1, C2, then
/// the action law, so a table that breaks C1 reports AxiomC1Failed even if
/// it also fails to be an action.
CrossedModule validate_xmod(FiniteGroup const& B, FiniteGroup const& D, GroupHom const& d,
                            std::vector<std::vector<Elem>> const& theta);

/// The invariants a crossed module carries along: Ker d (central in B),
/// Im d (normal in D), Coker d and its induced action on Ker d.
struct XModDerived {
  Subset ker_d;
  Subset im_d;
  SubgroupView ker;          // Ker d as a group
  CosetDecomposition coker;  // D / Im d
  ActionByAutomorphisms induced_action;
  ModulePtr module;  // (Coker d, Ker d, induced action)

  FiniteGroup const& coker_group() const { return *coker.quotient; }
  GroupHom const& sigma() const { return *coker.projection; }
};

XModDerived derive(CrossedModule const& xm);

struct XModHom {
  CrossedModule source;
  CrossedModule target;
  GroupHom f1;  // B -> B'
  GroupHom f0;  // D -> D'

  /// Checks H1 (f0 d = d' f1) and H2 (f1(θ_x b) = θ'_{f0 x} f1(b)).
  /// Throws H1Failed(b) or H2Failed(x, b).
  static XModHom make(CrossedModule source, CrossedModule target, GroupHom f1, GroupHom f0);
  static XModHom identity(CrossedModule const& xm);
};

/// outer ∘ inner
XModHom compose(XModHom const& outer, XModHom const& inner);

struct QuotientXMod {
  CrossedModule xm;        // (B/N, D, d̄, θ̄)
  XModHom projection;      // (q, id_D)
  CosetDecomposition cosets;
};

/// Throws NotInKernel(n) or NotThetaInvariant(x, n).
QuotientXMod quotient_xmod(CrossedModule const& xm, Subset const& n);

/// The crossed module E -> D given by a surjection p with central kernel,
/// D acting by conjugation through any preimage.
CrossedModule conjugation_xmod(GroupHom const& p);

}  // namespace xmodkit
