#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "xmodkit/config.hpp"
#include "xmodkit/group.hpp"

namespace xmodkit {

/// An abelian group `coeff` (written additively) with a left action of
/// `group` by automorphisms.
struct GModule {
  FiniteGroup group;
  FiniteGroup coeff;
  ActionByAutomorphisms action;

  /// Throws NotAbelian, or InvalidArgument when the action does not match.
  static std::shared_ptr<GModule const> make(FiniteGroup group, FiniteGroup coeff,
                                             ActionByAutomorphisms action);
  static std::shared_ptr<GModule const> trivial(FiniteGroup group, FiniteGroup coeff);

  Elem act(Elem x, Elem a) const { return action.apply(x, a); }
  Elem add(Elem a, Elem b) const { return coeff.mul(a, b); }
  Elem neg(Elem a) const { return coeff.inv(a); }
  Elem sub(Elem a, Elem b) const { return coeff.mul(a, coeff.inv(b)); }
};
using ModulePtr = std::shared_ptr<GModule const>;

bool same_module(GModule const& a, GModule const& b);

/// Normalized n-cochain G^n -> A, stored densely over all n-tuples
/// (lexicographic tuple index). Degrees 0..4 are representable; the
/// library's public surface works with 1..3 and uses 0 and 4 internally.
class Cochain {
 public:
  static Cochain zero(ModulePtr module, int degree);
  /// Throws InvalidArgument when not normalized or out of range.
  static Cochain from_values(ModulePtr module, int degree, std::vector<Elem> values);
  /// Values listed over normalized tuples only (all arguments non-identity),
  /// in lexicographic order.
  static Cochain from_normalized(ModulePtr module, int degree,
                                 std::span<Elem const> normalized);

  GModule const& module() const noexcept { return *module_; }
  ModulePtr const& module_ptr() const noexcept { return module_; }
  int degree() const noexcept { return degree_; }
  std::vector<Elem> const& values() const noexcept { return values_; }

  Elem at(std::span<Elem const> args) const;
  Elem at(Elem x) const { return values_[x]; }
  Elem at(Elem x, Elem y) const;
  Elem at(Elem x, Elem y, Elem z) const;

  std::vector<Elem> normalized_values() const;
  bool is_zero() const;

  Cochain operator+(Cochain const& o) const;
  Cochain operator-(Cochain const& o) const;
  Cochain operator-() const;

  friend bool operator==(Cochain const& a, Cochain const& b);
  /// Canonical order: lexicographic over tuple index, then coefficient index.
  friend bool operator<(Cochain const& a, Cochain const& b) { return a.values_ < b.values_; }

 private:
  Cochain(ModulePtr m, int degree, std::vector<Elem> v)
      : module_(std::move(m)), degree_(degree), values_(std::move(v)) {}
  ModulePtr module_;
  int degree_;
  std::vector<Elem> values_;
};

/// All n-tuples with no identity entry, as dense tuple indices, ascending.
std::vector<std::size_t> normalized_tuples(std::size_t group_order, int degree);
std::size_t tuple_count(std::size_t group_order, int degree);

/// Alternating-sum coboundary with left action:
/// (δf)(g1..g_{n+1}) = g1·f(g2..) + Σ (-1)^i f(.., g_i g_{i+1}, ..) + (-1)^{n+1} f(g1..gn).
Cochain coboundary(Cochain const& c);
bool is_cocycle(Cochain const& c);

/// (f⋆c)(x..) = f(c(x..)); f: c.coeff -> target.coeff, target.group = c.group.
Cochain push_forward(Cochain const& c, GroupHom const& f, ModulePtr target);
/// (φ⋆c)(x..) = c(φx, ..); φ: target.group -> c.group, target.coeff = c.coeff.
Cochain pull_back(Cochain const& c, GroupHom const& phi, ModulePtr target);

enum class Backend { Enumeration, Linear, Automatic };

/// A normalized (n-1)-cochain w with δw = c, or nullopt. The enumeration
/// backend returns the canonical least witness; the linear backend returns
/// some witness. Automatic enumerates when within budget.
/// Throws NotACocycle, BudgetExceeded (enumeration only).
std::optional<Cochain> coboundary_witness(Cochain const& c, Limits const& limits = {},
                                          Backend backend = Backend::Automatic);

/// True when a - b is a coboundary.
bool cohomologous(Cochain const& a, Cochain const& b, Limits const& limits = {});

/// All normalized n-cocycles in canonical order (pruned backtracking).
std::vector<Cochain> enumerate_cocycles(ModulePtr module, int degree, Limits const& limits = {});
/// All normalized n-coboundaries in canonical order.
std::vector<Cochain> enumerate_coboundaries(ModulePtr module, int degree,
                                            Limits const& limits = {});

struct CohomologyCounts {
  std::uint64_t cocycles = 0;
  std::uint64_t coboundaries = 0;
  std::uint64_t classes = 0;
};

struct CohomologyReport {
  ModulePtr module;
  int degree = 0;
  std::uint64_t cocycle_count = 0;
  std::uint64_t coboundary_count = 0;
  std::vector<Cochain> class_representatives;  // canonical minima of each class
};

/// Representatives come from enumeration; counts are cross-checked against
/// the linear backend when `cross_check` is set. Throws BudgetExceeded.
CohomologyReport cohomology_report(ModulePtr module, int degree, Limits const& limits = {},
                                   bool cross_check = false);

/// Counts only, from the chosen backend. Automatic enumerates within budget
/// and falls back to the linear backend otherwise.
CohomologyCounts cohomology_counts(ModulePtr module, int degree, Backend backend,
                                   Limits const& limits = {});

}  // namespace xmodkit
