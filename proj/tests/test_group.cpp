#include <doctest.h>

#include "oracles.hpp"
#include "xmodkit/error.hpp"
#include "xmodkit/group.hpp"

using namespace xmodkit;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

std::vector<Elem> witness_of(auto&& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.witness();
  }
  FAIL("expected an Error");
  return {};
}

std::vector<FiniteGroup> small_groups() {
  FiniteGroup const z2 = cyclic_group(2);
  return {trivial_group(),          z2,          cyclic_group(3),  cyclic_group(4),
          direct_product(z2, z2),   cyclic_group(6), dihedral_group(3), dihedral_group(4),
          quaternion_group(),       direct_product(z2, cyclic_group(4))};
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("validate_group accepts groups and rejects non-groups") {
    CHECK(FiniteGroup::from_table({{0}}).order() == 1);
    std::vector<std::vector<int>> z4(4, std::vector<int>(4));
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) z4[x][y] = (x + y) % 4;
    FiniteGroup const g = FiniteGroup::from_table(z4);
    CHECK(g.order() == 4);
    CHECK(g == cyclic_group(4));
    CHECK(kind_of([] { FiniteGroup::from_table({{0, 1}, {1, 1}}); }) == ErrorKind::NotAGroup);
    // associativity failure in an order-3 loop
    CHECK(kind_of([] { FiniteGroup::from_table({{0, 1, 2}, {1, 0, 0}, {2, 2, 1}}); }) ==
          ErrorKind::NotAGroup);
    CHECK(kind_of([] { FiniteGroup::from_table({{0, 5}, {1, 0}}); }) == ErrorKind::NotAGroup);
  }

  TEST_CASE("constructed groups satisfy the axioms exhaustively") {
    for (auto const& g : small_groups()) {
      auto const n = static_cast<Elem>(g.order());
      for (Elem x = 0; x < n; ++x) {
        CHECK(g.mul(0, x) == x);
        CHECK(g.mul(x, g.inv(x)) == 0);
        for (Elem y = 0; y < n; ++y)
          for (Elem z = 0; z < n; ++z) CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
      }
    }
    CHECK(dihedral_group(4).order() == 8);
    CHECK_FALSE(dihedral_group(4).is_abelian());
    CHECK_FALSE(quaternion_group().is_abelian());
  }

  TEST_CASE("validate_hom") {
    FiniteGroup const z4 = cyclic_group(4), z2 = cyclic_group(2);
    CHECK(GroupHom::identity(z4).is_identity());
    CHECK_NOTHROW(GroupHom::make(z4, z4, {0, 2, 0, 2}));
    CHECK_NOTHROW(GroupHom::make(z4, z2, {0, 1, 0, 1}));
    CHECK(kind_of([&] { GroupHom::make(z4, z2, {0, 1, 1, 0}); }) == ErrorKind::NotAHom);
    // hand oracle: 1 + 1 = 2 but map(1) + map(1) = 0 != map(2) = 1
    auto const w = witness_of([&] { GroupHom::make(z4, z2, {0, 1, 1, 0}); });
    REQUIRE(w.size() == 2);
    CHECK((w[0] + w[1]) % 4 != 0);
  }

  TEST_CASE("kernel_image") {
    FiniteGroup const z4 = cyclic_group(4), z2 = cyclic_group(2);
    auto const ki = kernel_image(GroupHom::make(z4, z4, {0, 2, 0, 2}));
    CHECK(ki.kernel == Subset{0, 2});
    CHECK(ki.image == Subset{0, 2});
    CHECK(kernel_image(GroupHom::identity(z2)).kernel == Subset{0});
    CHECK(kernel_image(GroupHom::identity(z2)).image == Subset{0, 1});
    CHECK(kernel_image(GroupHom::zero(z2, z2)).kernel == Subset{0, 1});
    CHECK(kernel_image(GroupHom::zero(z2, z2)).image == Subset{0});
  }

  TEST_CASE("center agrees with brute force") {
    for (auto const& g : small_groups()) CHECK(center(g) == oracle::brute_center(g));
    CHECK(center(dihedral_group(4)).size() == 2);
    CHECK(center(trivial_group()) == Subset{0});
    CHECK(center(cyclic_group(6)).size() == 6);
  }

  TEST_CASE("quotient") {
    FiniteGroup const z4 = cyclic_group(4);
    auto const q = quotient(z4, {0, 2});
    REQUIRE(q.quotient);
    CHECK(q.quotient->order() == 2);
    CHECK(kernel_image(*q.projection).kernel == Subset{0, 2});
    for (std::size_t s = 0; s < q.cosets.size(); ++s)
      CHECK((*q.projection)(q.key(static_cast<int>(s))) == static_cast<Elem>(s));
    CHECK(*quotient(z4, {0}).quotient == z4);
    CHECK(quotient(z4, {0, 1, 2, 3}).quotient->order() == 1);
    // a reflection subgroup of S3 is not normal
    FiniteGroup const s3 = dihedral_group(3);
    CHECK(kind_of([&] { quotient(s3, {0, 3}); }) == ErrorKind::NotNormal);
    CHECK(left_cosets(s3, {0, 3}).cosets.size() == 3);
    for (auto const& g : small_groups())
      for (Elem x = 0; x < static_cast<Elem>(g.order()); ++x) {
        Subset const s = generated_subgroup(g, {x});
        CHECK(is_subgroup(g, s));
        if (!is_normal(g, s)) continue;
        auto const qq = quotient(g, s);
        CHECK(qq.quotient->order() * s.size() == g.order());
        for (auto const& c : qq.cosets) CHECK(c.size() == s.size());
      }
  }

  TEST_CASE("automorphism_group") {
    CHECK(automorphism_group(cyclic_group(4)).size() == 2);
    CHECK(automorphism_group(direct_product(cyclic_group(2), cyclic_group(2))).size() == 6);
    CHECK(automorphism_group(trivial_group()).size() == 1);
    CHECK(kind_of([] { automorphism_group(cyclic_group(17)); }) == ErrorKind::BoundExceeded);
    CHECK(automorphism_group(cyclic_group(17), 20).size() == 16);
    for (auto const& g : small_groups()) {
      auto const auts = automorphism_group(g);
      CHECK(auts.size() == oracle::brute_automorphism_count(g));
      CHECK(std::is_sorted(auts.begin(), auts.end(),
                           [](GroupHom const& a, GroupHom const& b) { return a.map() < b.map(); }));
      auto member = [&](GroupHom const& h) {
        return std::any_of(auts.begin(), auts.end(), [&](GroupHom const& a) { return a == h; });
      };
      for (auto const& a : auts) {
        CHECK(member(inverse(a)));
        for (auto const& b : auts) CHECK(member(compose(a, b)));
      }
    }
  }

  TEST_CASE("inner_automorphism") {
    FiniteGroup const z4 = cyclic_group(4);
    for (Elem x = 0; x < 4; ++x) CHECK(inner_automorphism(z4, x).is_identity());
    FiniteGroup const d4 = dihedral_group(4);
    CHECK(inner_automorphism(d4, 0).is_identity());
    // conjugating by a reflection inverts rotations: r <-> r^3
    GroupHom const c = inner_automorphism(d4, 4);
    CHECK(c(1) == 3);
    CHECK(c(3) == 1);
    CHECK(c(2) == 2);
    for (auto const& g : small_groups())
      for (Elem x = 0; x < static_cast<Elem>(g.order()); ++x)
        for (Elem y = 0; y < static_cast<Elem>(g.order()); ++y)
          CHECK(inner_automorphism(g, g.mul(x, y)) ==
                compose(inner_automorphism(g, x), inner_automorphism(g, y)));
  }

  TEST_CASE("validate_action") {
    FiniteGroup const z4 = cyclic_group(4);
    std::vector<Elem> const id{0, 1, 2, 3}, inv{0, 3, 2, 1};
    CHECK_NOTHROW(ActionByAutomorphisms::make(z4, z4, std::vector<std::vector<Elem>>{id, inv, id, inv}));
    CHECK(ActionByAutomorphisms::trivial(z4, z4).is_trivial());
    CHECK(kind_of([&] {
            ActionByAutomorphisms::make(z4, z4, std::vector<std::vector<Elem>>{id, inv, inv, id});
          }) == ErrorKind::NotAnAction);
    auto const w = witness_of([&] {
      ActionByAutomorphisms::make(z4, z4, std::vector<std::vector<Elem>>{id, inv, inv, id});
    });
    CHECK(w == std::vector<int>{1, 1});
  }

  TEST_CASE("all_homs and pull_back") {
    FiniteGroup const z4 = cyclic_group(4), z2 = cyclic_group(2);
    CHECK(all_homs(z4, z2).size() == 2);
    CHECK(all_homs(z2, z4).size() == 2);
    CHECK(all_homs(direct_product(z2, z2), z2).size() == 4);
    CHECK(all_homs(dihedral_group(3), cyclic_group(3)).size() == 1);
    auto const conj = ActionByAutomorphisms::conjugation(dihedral_group(3));
    auto const pulled = pull_back(conj, GroupHom::zero(z2, dihedral_group(3)));
    CHECK(pulled.is_trivial());
  }

  TEST_CASE("subgroup views") {
    FiniteGroup const d4 = dihedral_group(4);
    SubgroupView const v = subgroup_group(d4, {0, 1, 2, 3});
    CHECK(v.group == cyclic_group(4));
    for (Elem s = 0; s < 4; ++s) CHECK(v.to_sub(v.to_parent(s)) == s);
    CHECK(v.to_sub(4) < 0);
  }
}
