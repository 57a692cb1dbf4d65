#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xmodkit/error.hpp"

namespace xmodkit {

/// Group elements are canonical indices 0..n-1; index 0 is the identity.
using Elem = int;

/// A subgroup (or any subset) as a sorted list of element indices.
using Subset = std::vector<Elem>;

/// A finite group stored as a Cayley table.
///
/// The table is immutable and shared between copies, so passing groups by
/// value is cheap. Instances only come out of `from_table` (which checks the
/// axioms exhaustively) or out of constructions that call it.
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  /// Validates a raw Cayley table. Throws NotAGroup; the witness is the
  /// offending element or triple.
  static FiniteGroup from_table(std::vector<std::vector<int>> const& table,
                                std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return data_->n; }
  Elem mul(Elem x, Elem y) const { return data_->table[x * data_->n + y]; }
  Elem inv(Elem x) const { return data_->inverse[x]; }
  // x y x^-1
  Elem conj(Elem x, Elem y) const { return mul(mul(x, y), inv(x)); }
  Elem power(Elem x, long k) const;
  int element_order(Elem x) const;
  bool is_abelian() const;

  std::vector<std::vector<int>> table() const;
  std::vector<std::string> const& labels() const noexcept { return data_->labels; }
  std::string label(Elem x) const;

  friend bool operator==(FiniteGroup const& a, FiniteGroup const& b);

 private:
  struct Data {
    std::size_t n = 1;
    std::vector<Elem> table{0};
    std::vector<Elem> inverse{0};
    std::vector<std::string> labels;
  };
  explicit FiniteGroup(std::shared_ptr<Data const> data) : data_(std::move(data)) {}
  std::shared_ptr<Data const> data_;
};

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
/// Elements (g, h) are indexed g * |H| + h.
FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h);
/// Dihedral group of order 2n: index k < n is the rotation r^k, n + k is r^k s.
FiniteGroup dihedral_group(int n);
FiniteGroup quaternion_group();

/// Greedy generating set: repeatedly adds the least element outside the
/// subgroup generated so far.
std::vector<Elem> generating_set(FiniteGroup const& g);
Subset generated_subgroup(FiniteGroup const& g, std::vector<Elem> const& gens);
bool is_subgroup(FiniteGroup const& g, Subset const& s);
bool is_normal(FiniteGroup const& g, Subset const& s);
bool contains(Subset const& s, Elem x);

class GroupHom {
 public:
  /// Checks multiplicativity on all pairs. Throws NotAHom with witness (x, y).
  static GroupHom make(FiniteGroup source, FiniteGroup target, std::vector<Elem> map);
  static GroupHom identity(FiniteGroup const& g);
  static GroupHom zero(FiniteGroup const& source, FiniteGroup const& target);

  FiniteGroup const& source() const noexcept { return source_; }
  FiniteGroup const& target() const noexcept { return target_; }
  std::vector<Elem> const& map() const noexcept { return map_; }
  Elem operator()(Elem x) const { return map_[x]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_identity() const;

  friend bool operator==(GroupHom const& a, GroupHom const& b);

 private:
  GroupHom(FiniteGroup s, FiniteGroup t, std::vector<Elem> m)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Elem> map_;
};

/// outer ∘ inner
GroupHom compose(GroupHom const& outer, GroupHom const& inner);
/// Inverse of a bijective hom.
GroupHom inverse(GroupHom const& h);

struct KernelImage {
  Subset kernel;
  Subset image;
};
KernelImage kernel_image(GroupHom const& h);

Subset center(FiniteGroup const& g);

/// Left cosets of a subgroup, keyed by their least element. When the
/// subgroup is normal the quotient group and projection are filled in with
/// coset k of the sorted key order as quotient element k.
struct CosetDecomposition {
  FiniteGroup group;
  Subset subgroup;
  std::vector<Subset> cosets;
  std::vector<int> coset_of;
  std::optional<FiniteGroup> quotient;
  std::optional<GroupHom> projection;

  Elem key(int coset) const { return cosets[coset].front(); }
};

/// Throws NotASubgroup, or NotNormal with witness (g, n) where g n g^-1 ∉ N.
CosetDecomposition quotient(FiniteGroup const& g, Subset const& n);
/// Same as quotient but accepts non-normal subgroups (quotient left empty).
CosetDecomposition left_cosets(FiniteGroup const& g, Subset const& s);

/// A subgroup materialized as a group in its own right. Sub-indices follow
/// ascending parent index, so the identity stays at 0.
struct SubgroupView {
  FiniteGroup group;
  GroupHom inclusion;
  std::vector<int> index_of;  // parent index -> sub index, or -1

  Elem to_sub(Elem parent) const { return index_of[parent]; }
  Elem to_parent(Elem sub) const { return inclusion(sub); }
};
SubgroupView subgroup_group(FiniteGroup const& g, Subset const& s);

/// All homomorphisms g -> h, found by assigning images to a generating set
/// and extending multiplicatively. Canonically (lexicographically) ordered.
std::vector<GroupHom> all_homs(FiniteGroup const& g, FiniteGroup const& h);

/// Bijective endomorphisms in canonical order. Throws BoundExceeded when
/// |g| > bound.
std::vector<GroupHom> automorphism_group(FiniteGroup const& g, std::size_t bound = 16);

/// y -> x y x^-1
GroupHom inner_automorphism(FiniteGroup const& g, Elem x);

/// An action of `actor` on `acted` by automorphisms, stored as one
/// automorphism per actor element.
class ActionByAutomorphisms {
 public:
  /// Checks each entry is a bijective hom acted -> acted and that
  /// assign[x y] = assign[x] ∘ assign[y]. Throws NotAnAction(x, y).
  static ActionByAutomorphisms make(FiniteGroup actor, FiniteGroup acted,
                                    std::vector<GroupHom> assign);
  static ActionByAutomorphisms make(FiniteGroup actor, FiniteGroup acted,
                                    std::vector<std::vector<Elem>> const& maps);
  static ActionByAutomorphisms trivial(FiniteGroup actor, FiniteGroup acted);
  /// A group acting on itself by conjugation.
  static ActionByAutomorphisms conjugation(FiniteGroup const& g);

  FiniteGroup const& actor() const noexcept { return actor_; }
  FiniteGroup const& acted() const noexcept { return acted_; }
  GroupHom const& operator[](Elem x) const { return assign_[x]; }
  Elem apply(Elem x, Elem b) const { return assign_[x](b); }
  bool is_trivial() const;

  friend bool operator==(ActionByAutomorphisms const& a, ActionByAutomorphisms const& b);

 private:
  ActionByAutomorphisms(FiniteGroup actor, FiniteGroup acted, std::vector<GroupHom> assign)
      : actor_(std::move(actor)), acted_(std::move(acted)), assign_(std::move(assign)) {}
  FiniteGroup actor_;
  FiniteGroup acted_;
  std::vector<GroupHom> assign_;
};

/// Action of hom.source() obtained by acting through hom: x . b = a[hom(x)](b).
ActionByAutomorphisms pull_back(ActionByAutomorphisms const& a, GroupHom const& hom);

}  // namespace xmodkit
