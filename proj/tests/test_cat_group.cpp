#include <doctest.h>

#include <random>

#include "xmodkit/cat_group.hpp"
#include "xmodkit/error.hpp"
#include "xmodkit/fixtures.hpp"

using namespace xmodkit;
namespace fx = xmodkit::fixtures;

namespace {

std::vector<CrossedModule> fixture_xmods() {
  return {fx::xm_id(), fx::xm_zero(), fx::xm_cyc4(), fx::xm_cyc4_tau()};
}

struct RawCatGroup {
  FiniteGroup objects;
  std::vector<Arrow> arrows;
  std::vector<int> compose, tensor, identity;

  StrictCatGroup build() const { return StrictCatGroup::make(objects, arrows, compose, tensor, identity); }
};

RawCatGroup raw(StrictCatGroup const& g) {
  RawCatGroup r{g.objects(), g.arrows(), {}, {}, {}};
  int const m = static_cast<int>(g.arrow_count());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      r.compose.push_back(g.then(a, b));
      r.tensor.push_back(g.tensor(a, b));
    }
  for (Elem x = 0; x < static_cast<Elem>(g.objects().order()); ++x) r.identity.push_back(g.id(x));
  return r;
}

ReducedCatGroup red_zero(FiniteGroup const& pi, FiniteGroup const& a) {
  ModulePtr const m = GModule::trivial(pi, a);
  return ReducedCatGroup::make(m, Cochain::zero(m, 3));
}

ReducedCatGroup red_of(CrossedModule const& xm) {
  auto const der = derive(xm);
  return ReducedCatGroup::make(der.module, reduction_cocycle(xm, der, canonical_stick(xm, der)));
}

}  // namespace

TEST_SUITE("cat_group") {
  TEST_CASE("associated categorical group round trip") {
    for (auto const& xm : fixture_xmods()) {
      StrictCatGroup const g = associated_catgroup(xm);
      CHECK(g.arrow_count() == xm.B.order() * xm.D.order());
      CHECK(catgroup_to_xmod(g) == xm);
    }
    std::mt19937_64 rng(11);
    for (int i = 0; i < 25; ++i) {
      CrossedModule const xm = fx::random_crossed_module(rng);
      CrossedModule const back = catgroup_to_xmod(associated_catgroup(xm));
      XModHom const there = XModHom::make(xm, back, GroupHom::identity(xm.B), GroupHom::identity(xm.D));
      XModHom const home = XModHom::make(back, xm, GroupHom::identity(back.B), GroupHom::identity(back.D));
      CHECK(compose(home, there).f1.is_identity());
      CHECK(compose(there, home).f0.is_identity());
    }
  }

  TEST_CASE("one-object categorical group") {
    FiniteGroup const z2 = cyclic_group(2);
    StrictCatGroup const g =
        StrictCatGroup::make(trivial_group(), {{0, 0, 0}, {0, 0, 1}}, {0, 1, 1, 0}, {0, 1, 1, 0}, {0});
    CrossedModule const xm = catgroup_to_xmod(g);
    CHECK(xm.B == z2);
    CHECK(xm.D.order() == 1);
    auto const p = pi0_pi1(g);
    CHECK(p.pi0.order() == 1);
    CHECK(p.pi1->coeff.order() == 2);
  }

  TEST_CASE("corrupted categorical groups are rejected") {
    RawCatGroup r = raw(associated_catgroup(fx::xm_cyc4()));
    CHECK_NOTHROW(r.build());
    RawCatGroup bad_tensor = r;
    std::swap(bad_tensor.tensor[1], bad_tensor.tensor[2]);
    CHECK_THROWS_AS(bad_tensor.build(), Error);
    RawCatGroup bad_id = r;
    bad_id.identity[1] = bad_id.identity[2];
    CHECK_THROWS_AS(bad_id.build(), Error);
    RawCatGroup bad_compose = r;
    bad_compose.compose[0] = -1;
    try {
      bad_compose.build();
      FAIL("expected rejection");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::NotACatGroup);
    }
  }

  TEST_CASE("pi0 and pi1") {
    auto const p = pi0_pi1(associated_catgroup(fx::xm_cyc4_tau()));
    CHECK(p.pi0.order() == 2);
    CHECK(p.pi1->coeff.order() == 2);
    CHECK(p.pi1->action.is_trivial());
    auto const z = pi0_pi1(associated_catgroup(fx::xm_zero()));
    CHECK(z.pi0.order() == 2);
    CHECK(z.pi1->coeff.order() == 2);
    auto const i = pi0_pi1(associated_catgroup(fx::xm_id()));
    CHECK(i.pi0.order() == 1);
    CHECK(i.pi1->coeff.order() == 1);
  }

  TEST_CASE("reduction cocycle") {
    for (auto const& xm : fixture_xmods()) {
      auto const der = derive(xm);
      Cochain const k = reduction_cocycle(xm, der, canonical_stick(xm, der));
      CHECK(is_cocycle(k));
      CHECK(k.module().coeff.order() == der.ker_d.size());
    }
    CrossedModule const tau = fx::xm_cyc4_tau();
    auto const der = derive(tau);
    Stick const st = canonical_stick(tau, der);
    CHECK(st.reps == std::vector<Elem>{0, 1});
    Cochain const k = reduction_cocycle(tau, der, st);
    CHECK(der.ker.to_parent(k.at(1, 1, 1)) == 2);
    CHECK(k.normalized_values() == std::vector<Elem>{1});
    CHECK_FALSE(coboundary_witness(k));

    CrossedModule const zero = fx::xm_zero();
    auto const dz = derive(zero);
    CHECK(reduction_cocycle(zero, dz, canonical_stick(zero, dz)).is_zero());
    // trivial action on Z/4 gives a coboundary
    CrossedModule const c4 = fx::xm_cyc4();
    auto const d4 = derive(c4);
    CHECK(coboundary_witness(reduction_cocycle(c4, d4, canonical_stick(c4, d4))));
  }

  TEST_CASE("every stick gives the same class") {
    CrossedModule const tau = fx::xm_cyc4_tau();
    auto const der = derive(tau);
    auto const sticks = all_sticks(tau, der);
    CHECK(sticks.size() >= 3);
    Cochain const k0 = reduction_cocycle(tau, der, canonical_stick(tau, der));
    for (auto const& st : sticks) {
      Cochain const k = reduction_cocycle(tau, der, st);
      auto const w = coboundary_witness(k - k0);
      REQUIRE(w);
      CHECK(coboundary(*w) == k - k0);
    }
    CHECK(seeded_stick(tau, der, 42) == seeded_stick(tau, der, 42));
    CHECK_THROWS_AS(validate_stick(tau, der, {0, 1}, {0, 0, 0, 0}), Error);
    CHECK_THROWS_AS(validate_stick(tau, der, {1, 1}, {0, 0, 0, 0}), Error);
  }

  TEST_CASE("reduce") {
    ReducedCatGroup const r = reduce(associated_catgroup(fx::xm_cyc4_tau()));
    CHECK(r.pi0().order() == 2);
    CHECK(r.pi1().order() == 2);
    CHECK(r.k.at(1, 1, 1) == 1);
    ModulePtr const m = GModule::trivial(cyclic_group(2), cyclic_group(2));
    std::vector<Elem> v(8, 0);
    v[7] = 1;
    CHECK_NOTHROW(ReducedCatGroup::make(m, Cochain::from_values(m, 3, v)));
    ModulePtr const m4 = GModule::trivial(cyclic_group(4), cyclic_group(2));
    std::vector<Elem> w(64, 0);
    w[1 * 16 + 1 * 4 + 1] = 1;
    CHECK_THROWS_AS(ReducedCatGroup::make(m4, Cochain::from_values(m4, 3, w)), Error);
  }

  TEST_CASE("realize") {
    FiniteGroup const z2 = cyclic_group(2);
    ReducedCatGroup const r = red_zero(z2, z2);
    TypedFunctor const id = TypedFunctor::make(r, r, GroupHom::identity(z2), GroupHom::identity(z2));
    auto const real = realize(id);
    REQUIRE(real);
    CHECK(real->class_count == 2);
    REQUIRE(real->functor.g);
    CHECK(coboundary(*real->functor.g) == functor_obstruction(id));

    ReducedCatGroup const src = red_of(fx::xm_cyc4_tau());
    ReducedCatGroup const tgt = red_zero(trivial_group(), z2);
    TypedFunctor const zf = TypedFunctor::make(src, tgt, GroupHom::zero(z2, trivial_group()),
                                               GroupHom::identity(src.pi1()));
    CHECK_FALSE(realize(zf));

    CHECK_THROWS_AS(TypedFunctor::make(r, r, GroupHom::identity(z2), GroupHom::zero(z2, cyclic_group(4))),
                    Error);
  }

  TEST_CASE("are_homotopic") {
    FiniteGroup const z2 = cyclic_group(2);
    ReducedCatGroup const r = red_zero(z2, z2);
    auto const real = realize(TypedFunctor::make(r, r, GroupHom::identity(z2), GroupHom::identity(z2)));
    REQUIRE(real);
    TypedFunctor const& t1 = real->functor;
    ModulePtr const m = t1.obstruction_module();
    Cochain const twist = Cochain::from_values(m, 2, {0, 0, 0, 1});
    TypedFunctor const t2 = TypedFunctor::make(r, r, t1.phi, t1.f, *t1.g + twist);
    CHECK_FALSE(are_homotopic(t1, t2));
    Cochain const shift = coboundary(Cochain::from_values(m, 1, {0, 1}));
    TypedFunctor const t3 = TypedFunctor::make(r, r, t1.phi, t1.f, *t1.g + shift);
    auto const w = are_homotopic(t1, t3);
    REQUIRE(w);
    CHECK(coboundary(*w) == *t1.g - *t3.g);
    CHECK_THROWS_AS(are_homotopic(t1, TypedFunctor::make(r, r, t1.phi, t1.f)), Error);
    // a g that does not bound the obstruction is refused
    ReducedCatGroup const r4 = red_zero(cyclic_group(4), z2);
    ModulePtr const m4 = GModule::trivial(cyclic_group(4), z2);
    std::vector<Elem> v(16, 0);
    v[5] = 1;
    CHECK_THROWS_AS(TypedFunctor::make(r4, r4, GroupHom::identity(cyclic_group(4)), GroupHom::identity(z2),
                                       Cochain::from_values(m4, 2, v)),
                    Error);
  }

  TEST_CASE("monoidal structures of crossed-module homs") {
    CHECK(monoidal_structures(XModHom::identity(fx::xm_zero())).size() == 2);
    CHECK(monoidal_structures(XModHom::identity(fx::xm_id())).size() == 1);
    CHECK(monoidal_structures(XModHom::identity(fx::xm_cyc4())).size() == 2);

    // d = 0 from Z/2 into Z/4: Coker d = Z/4, so non-cocycles exist
    FiniteGroup const z2 = cyclic_group(2), z4 = cyclic_group(4);
    CrossedModule const xm =
        CrossedModule::make(z2, z4, GroupHom::zero(z2, z4), ActionByAutomorphisms::trivial(z4, z2));
    XModHom const h = XModHom::identity(xm);
    CHECK(monoidal_structures(h).size() == 8);  // cocycles, not classes
    StrictCatGroup const g = associated_catgroup(xm);
    std::vector<int> on_arrows(g.arrow_count());
    for (std::size_t a = 0; a < on_arrows.size(); ++a) on_arrows[a] = static_cast<int>(a);
    auto structure_from = [&](std::vector<Elem> v) {
      return [v, &z4](Elem x, Elem y) { return z4.mul(x, y) * 2 + v[x * 4 + y]; };
    };
    std::vector<Elem> good(16, 0), bad(16, 0);
    bad[5] = 1;
    CHECK(is_monoidal_functor(g, g, {0, 1, 2, 3}, on_arrows, structure_from(good)));
    CHECK_FALSE(is_monoidal_functor(g, g, {0, 1, 2, 3}, on_arrows, structure_from(bad)));
  }
}
