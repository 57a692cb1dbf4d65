#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "xmodkit/cohomology.hpp"
#include "xmodkit/config.hpp"
#include "xmodkit/crossed_module.hpp"

namespace xmodkit {

struct Arrow {
  Elem src;
  Elem tgt;
  int label;
};

/// A finite strict categorical group: objects form a group under the
/// tensor, arrows are explicit records, composition and tensor are tables.
///
/// `then(a, b)` is the composite "a followed by b", defined iff
/// tgt(a) == src(b).
class StrictCatGroup {
 public:
  /// Checks the groupoid laws, strict associativity and unit of the tensor
  /// on arrows, functoriality of the tensor (interchange), and identities.
  /// Throws NotACatGroup; the witness names the offending arrows.
  static StrictCatGroup make(FiniteGroup objects, std::vector<Arrow> arrows,
                             std::vector<int> compose, std::vector<int> tensor,
                             std::vector<int> identity_arrow);

  FiniteGroup const& objects() const noexcept { return objects_; }
  std::vector<Arrow> const& arrows() const noexcept { return arrows_; }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  Arrow const& arrow(int a) const { return arrows_[a]; }
  int then(int a, int b) const { return compose_[a * arrows_.size() + b]; }
  int tensor(int a, int b) const { return tensor_[a * arrows_.size() + b]; }
  int id(Elem x) const { return identity_[x]; }
  /// Arrows x -> y in ascending index order.
  std::vector<int> hom(Elem x, Elem y) const;

 private:
  StrictCatGroup(FiniteGroup objects, std::vector<Arrow> arrows, std::vector<int> compose,
                 std::vector<int> tensor, std::vector<int> identity)
      : objects_(std::move(objects)),
        arrows_(std::move(arrows)),
        compose_(std::move(compose)),
        tensor_(std::move(tensor)),
        identity_(std::move(identity)) {}
  FiniteGroup objects_;
  std::vector<Arrow> arrows_;
  std::vector<int> compose_;
  std::vector<int> tensor_;
  std::vector<int> identity_;
};

/// Objects D, Hom(x, y) = {b : x = d(b) y}, composition b then c = b + c,
/// tensor b ⊗ b' = b + θ_y(b') for b: x -> y. Arrow b: d(b)y -> y has index
/// y * |B| + b and label b.
StrictCatGroup associated_catgroup(CrossedModule const& xm);

/// D = objects, B = arrows into the unit object under ⊗ (identity arrow
/// first, then ascending arrow index), d = source, θ_y(b) = id_y ⊗ b ⊗ id_{y^-1}.
CrossedModule catgroup_to_xmod(StrictCatGroup const& g);

struct Pi0Pi1 {
  FiniteGroup pi0;
  ModulePtr pi1;           // Aut(1) as a π0-module
  CosetDecomposition components;
  std::vector<int> unit_automorphisms;  // arrow index of each π1 element
};

Pi0Pi1 pi0_pi1(StrictCatGroup const& g);

/// Red(Π, A, k): objects Π, arrows (x, a), associativity constraint k.
struct ReducedCatGroup {
  ModulePtr module;
  Cochain k;

  /// Throws NotACocycle when k is not a normalized 3-cocycle over module.
  static ReducedCatGroup make(ModulePtr module, Cochain k);
  FiniteGroup const& pi0() const { return module->group; }
  FiniteGroup const& pi1() const { return module->coeff; }
};

/// Coset representatives x_s (one per coset of Im d, x at the unit coset = 1)
/// and lifts b_x with d(b_x) x = x_s, b = 0 at the representatives.
struct Stick {
  std::vector<Elem> reps;   // per coset of Coker d
  std::vector<Elem> lifts;  // per element of D

  friend bool operator==(Stick const&, Stick const&) = default;
};

/// Least-index representative of each coset and least-index lift.
Stick canonical_stick(CrossedModule const& xm, XModDerived const& der);
/// Throws InvalidStick.
Stick validate_stick(CrossedModule const& xm, XModDerived const& der, std::vector<Elem> reps,
                     std::vector<Elem> lifts);
/// Every stick, in lexicographic order of (reps, lifts); at most `limit`.
std::vector<Stick> all_sticks(CrossedModule const& xm, XModDerived const& der,
                              std::size_t limit = 4096);
/// A stick drawn with a seeded Mersenne Twister; same seed, same stick.
Stick seeded_stick(CrossedModule const& xm, XModDerived const& der, std::uint64_t seed);

/// H̃(s, r) = -b_{x_s x_r} in B, indexed s * |Coker d| + r.
std::vector<Elem> stick_defect(CrossedModule const& xm, XModDerived const& der,
                               Stick const& stick);

/// k(s,r,t) = -H̃(s,rt) - θ_{x_s}(H̃(r,t)) + H̃(s,r) + H̃(sr,t), summed in B in
/// that order, as a 3-cocycle over (Coker d, Ker d). Throws
/// ValueOutsideKernel if a value escapes Ker d.
Cochain reduction_cocycle(CrossedModule const& xm, XModDerived const& der, Stick const& stick);

/// Red(π0, π1, k) through catgroup_to_xmod and the canonical stick.
ReducedCatGroup reduce(StrictCatGroup const& g);

/// A functor Red(Π, A, k) -> Red(Π', A', k') of type (φ, f), optionally
/// carrying the 2-cochain g of a monoidal structure.
struct TypedFunctor {
  ReducedCatGroup source;
  ReducedCatGroup target;
  GroupHom phi;  // Π -> Π'
  GroupHom f;    // A -> A'
  std::optional<Cochain> g;

  /// Checks f(x·a) = φ(x)·f(a). Throws NotEquivariant(x, a). When g is
  /// present also checks δg = φ⋆k' - f⋆k (TypeMismatch otherwise).
  static TypedFunctor make(ReducedCatGroup source, ReducedCatGroup target, GroupHom phi,
                           GroupHom f, std::optional<Cochain> g = std::nullopt);

  /// (Π, A' via φ)
  ModulePtr obstruction_module() const;
};

/// ξ = φ⋆k' - f⋆k over (Π, A' via φ).
Cochain functor_obstruction(TypedFunctor const& t);

struct Realization {
  TypedFunctor functor;      // with g installed
  std::uint64_t class_count; // |H²(Π, A' via φ)|
};

std::optional<Realization> realize(TypedFunctor const& t, Limits const& limits = {});

/// A 1-cochain a with δa = g1 - g2 when the two realized functors have the
/// same type and homotopic structures; nullopt otherwise. Throws
/// TypeMismatch when source/target differ or either is unrealized.
std::optional<Cochain> are_homotopic(TypedFunctor const& t1, TypedFunctor const& t2,
                                     Limits const& limits = {});

/// (Coker d, Ker d', x̄·a = θ'_{f0(x)} a) for a crossed-module hom.
ModulePtr structure_module(XModHom const& h);

/// Direct check that (F, F̃) is a monoidal functor between strict
/// categorical groups: functoriality, naturality of F̃, the hexagon with
/// strict constraints, and normalization on the unit.
bool is_monoidal_functor(StrictCatGroup const& source, StrictCatGroup const& target,
                         std::vector<Elem> const& on_objects, std::vector<int> const& on_arrows,
                         std::function<int(Elem, Elem)> const& structure);

/// Every normalized 2-cocycle φ over structure_module(h), each verified to
/// make F̃_{x,y} = φ(x̄, ȳ) a monoidal structure on the functor induced by h.
std::vector<Cochain> monoidal_structures(XModHom const& h, Limits const& limits = {});

}  // namespace xmodkit
