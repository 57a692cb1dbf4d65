#pragma once

#include <optional>
#include <vector>

#include "xmodkit/cat_group.hpp"
#include "xmodkit/cohomology.hpp"
#include "xmodkit/config.hpp"
#include "xmodkit/crossed_module.hpp"

namespace xmodkit {

/// A surjective, Coker d-invariant hom ζ: Ker d -> A with A abelian.
struct AbstractZetaKernel {
  CrossedModule xm;
  XModDerived der;
  FiniteGroup A;
  GroupHom zeta;      // der.ker.group -> A
  ModulePtr module;   // (Coker d, A, trivial action)

  /// Throws NotAbelian, TypeMismatch, ZetaNotSurjective or
  /// ZetaNotInvariant(s, c).
  static AbstractZetaKernel make(CrossedModule xm, FiniteGroup A, GroupHom zeta);

  friend bool operator==(AbstractZetaKernel const& a, AbstractZetaKernel const& b) {
    return a.xm == b.xm && a.A == b.A && a.zeta == b.zeta;
  }
};

/// 0 -> A --j--> E --p--> D -> 1 central, with (β, id_D) a crossed-module
/// hom into E -> D inducing ζ on Ker d.
struct ZetaExtension {
  AbstractZetaKernel kernel;
  FiniteGroup E;
  GroupHom j;     // A -> E
  GroupHom p;     // E -> D
  GroupHom beta;  // B -> E
};

/// Throws NotExact, NotCentral(a, e), BetaNotXModHom or ZetaMismatch(c).
ZetaExtension validate_extension(AbstractZetaKernel kernel, FiniteGroup E, GroupHom j, GroupHom p,
                                 GroupHom beta);

/// The ζ read back from a diagram with no stored kernel: ζ(c) = j⁻¹(β(c)).
/// Throws the validate_extension errors for a broken diagram and
/// ZetaNotSurjective when the induced ζ misses part of A.
AbstractZetaKernel induced_zeta(CrossedModule const& xm, FiniteGroup const& A,
                                FiniteGroup const& E, GroupHom const& j, GroupHom const& p,
                                GroupHom const& beta);

struct Obstruction {
  Cochain cls;  // ζ⋆k over (Coker d, A, trivial)
  bool vanished = false;
  std::optional<Cochain> witness;  // a with δa = ζ⋆k
};

/// ζ⋆k for the canonical stick, or for `stick` when given.
Obstruction obstruction(AbstractZetaKernel const& kernel, Limits const& limits = {},
                        std::optional<Stick> const& stick = std::nullopt);

/// Crossed product on B̄ × Coker d (element (b̄, s) has index s·|B̄| + b̄)
/// with factor set h = H̄̃ + ι(a). Throws FactorSetCondition unless
/// δa = ζ⋆k for the stick's reduction cocycle.
ZetaExtension build_crossed_product(AbstractZetaKernel const& kernel, Stick const& stick,
                                    Cochain const& a);

struct MiddleSequence {
  QuotientXMod bbar;     // B / Ker ζ
  GroupHom epsilon;      // B̄ -> E
  GroupHom sigma_p;      // E -> Coker d
};

/// 0 -> B̄ -> E -> Coker d -> 1, verified exact.
MiddleSequence middle_sequence(ZetaExtension const& ext);

struct Normalization {
  Cochain a;
  ZetaExtension crossed_product;  // build_crossed_product(kernel, stick, a)
  GroupHom omega;                 // E -> crossed_product.E
};

/// Least-index transversal e_s ∈ p⁻¹(x_s), factor set read back through ε,
/// and the equivalence ω(ε(b̄) + e_s) = (b̄, s).
Normalization normalize(ZetaExtension const& ext, Stick const& stick);

/// An equivalence ω: E1 -> E2 with ωj1 = j2, p2ω = p1, ωβ1 = β2, or nullopt.
/// Throws KernelMismatch when the kernels differ.
std::optional<GroupHom> are_equivalent(ZetaExtension const& e1, ZetaExtension const& e2,
                                       Limits const& limits = {});

struct ClassificationReport {
  AbstractZetaKernel kernel;
  Obstruction obstruction;
  std::vector<ZetaExtension> representatives;
  std::vector<Cochain> factor_cochains;  // the a of each representative
  CohomologyReport h2;
};

/// Empty when the obstruction does not vanish; otherwise one crossed product
/// per class of H²(Coker d, A), verified pairwise inequivalent.
ClassificationReport classify(AbstractZetaKernel const& kernel, Limits const& limits = {});

/// Brute force: every central extension E_f of A by D (f a normalized
/// 2-cocycle, element (α, x) at index x·|A| + α) together with every β
/// making a valid ζ-extension. Throws BudgetExceeded when |A|·|D| exceeds
/// limits.extension_bound.
std::vector<ZetaExtension> enumerate_extensions_raw(AbstractZetaKernel const& kernel,
                                                    Limits const& limits = {});
/// enumerate_extensions_raw deduplicated up to equivalence, first found kept.
std::vector<ZetaExtension> enumerate_extensions_oracle(AbstractZetaKernel const& kernel,
                                                       Limits const& limits = {});

/// Equivalence decided by exhaustive search over all isomorphisms E1 -> E2;
/// independent of normalize, used as a test oracle.
bool equivalent_by_search(ZetaExtension const& e1, ZetaExtension const& e2);

}  // namespace xmodkit
