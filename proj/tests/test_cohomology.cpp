#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "xmodkit/cohomology.hpp"
#include "xmodkit/error.hpp"
#include "xmodkit/smith.hpp"

using namespace xmodkit;

namespace {

ModulePtr trivial_module(int m, int n) { return GModule::trivial(cyclic_group(m), cyclic_group(n)); }

// Z/2 acting on Z/4 by inversion
ModulePtr sign_module() {
  FiniteGroup const z2 = cyclic_group(2), z4 = cyclic_group(4);
  return GModule::make(z2, z4,
                       ActionByAutomorphisms::make(z2, z4, std::vector<std::vector<Elem>>{{0, 1, 2, 3}, {0, 3, 2, 1}}));
}

// S3 acting on Z/3 through the sign character
ModulePtr s3_sign_module() {
  FiniteGroup const s3 = dihedral_group(3), z3 = cyclic_group(3);
  std::vector<std::vector<Elem>> maps;
  for (Elem x = 0; x < 6; ++x) maps.push_back(x < 3 ? std::vector<Elem>{0, 1, 2} : std::vector<Elem>{0, 2, 1});
  return GModule::make(s3, z3, ActionByAutomorphisms::make(s3, z3, maps));
}

std::vector<ModulePtr> fixture_modules() {
  return {trivial_module(2, 2), trivial_module(3, 3), trivial_module(4, 2), trivial_module(2, 3),
          trivial_module(1, 2), sign_module(), s3_sign_module(),
          GModule::trivial(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2))};
}

Cochain cochain2(ModulePtr m, std::vector<Elem> v) { return Cochain::from_values(std::move(m), 2, std::move(v)); }

}  // namespace

TEST_SUITE("cohomology") {
  TEST_CASE("coboundary examples") {
    ModulePtr const m = trivial_module(2, 2);
    CHECK(coboundary(Cochain::zero(m, 2)).is_zero());
    Cochain const h = Cochain::from_values(m, 1, {0, 1});
    CHECK(coboundary(h).at(1, 1) == 0);
    Cochain const g = cochain2(m, {0, 0, 0, 1});
    CHECK(coboundary(g).is_zero());
    CHECK(is_cocycle(g));
    // (Z/4, Z/2): single nonzero g(1,1) = 1 is not a cocycle
    ModulePtr const m42 = trivial_module(4, 2);
    std::vector<Elem> v(16, 0);
    v[1 * 4 + 1] = 1;
    Cochain const bad = cochain2(m42, v);
    CHECK_FALSE(is_cocycle(bad));
    CHECK(coboundary(bad).at(1, 1, 2) == 1);  // -g(1,1) in Z/2
  }

  TEST_CASE("coboundary matches the textbook formula and preserves normalization") {
    std::mt19937_64 rng(3);
    for (auto const& m : fixture_modules()) {
      auto const nm = oracle::naive(*m);
      std::size_t const n = m->group.order();
      for (int deg = 1; deg <= 2; ++deg) {
        double const space = std::pow(static_cast<double>(m->coeff.order()), std::pow(n - 1.0, deg));
        std::vector<std::vector<Elem>> samples;
        if (space <= 4096) {
          samples = oracle::all_normalized(nm, deg);
        } else {
          for (int i = 0; i < 300; ++i) {
            std::vector<Elem> v(oracle::all_tuples(n, deg).size(), 0);
            for (std::size_t t : normalized_tuples(n, deg)) v[t] = static_cast<Elem>(rng() % m->coeff.order());
            samples.push_back(std::move(v));
          }
        }
        for (auto const& f : samples) {
          Cochain const c = Cochain::from_values(m, deg, f);
          Cochain const dc = coboundary(c);
          CHECK(dc.values() == oracle::naive_delta(nm, deg, f));
          CHECK(coboundary(dc).is_zero());
        }
      }
    }
  }

  TEST_CASE("non-normalized values are rejected") {
    CHECK_THROWS_AS(cochain2(trivial_module(2, 2), {1, 0, 0, 0}), Error);
    CHECK_THROWS_AS(cochain2(trivial_module(2, 2), {0, 0, 0, 2}), Error);
  }

  TEST_CASE("coboundary_witness examples") {
    ModulePtr const m = trivial_module(2, 2);
    auto const w0 = coboundary_witness(Cochain::zero(m, 2));
    REQUIRE(w0);
    CHECK(w0->is_zero());
    std::vector<Elem> k(8, 0);
    k[7] = 1;
    CHECK_FALSE(coboundary_witness(Cochain::from_values(m, 3, k)));
    CHECK_FALSE(coboundary_witness(cochain2(m, {0, 0, 0, 1})));
    CHECK_FALSE(coboundary_witness(cochain2(m, {0, 0, 0, 1}), {}, Backend::Linear));
    CHECK_THROWS_AS(coboundary_witness(cochain2(trivial_module(4, 2), [] {
                      std::vector<Elem> v(16, 0);
                      v[5] = 1;
                      return v;
                    }())),
                    Error);
  }

  TEST_CASE("witnesses are exact and the enumeration witness is the least one") {
    for (auto const& m : fixture_modules()) {
      auto const nm = oracle::naive(*m);
      auto const ones = oracle::all_normalized(nm, 1);
      if (ones.size() > 256) continue;
      for (auto const& a : ones) {
        Cochain const c = coboundary(Cochain::from_values(m, 1, a));
        auto const w = coboundary_witness(c, {}, Backend::Enumeration);
        REQUIRE(w);
        CHECK(coboundary(*w) == c);
        // the least w in lexicographic order with δw = c
        std::vector<Elem> least;
        for (auto const& b : ones)
          if (oracle::naive_delta(nm, 1, b) == c.values()) {
            least = b;
            break;
          }
        CHECK(w->values() == least);
        auto const wl = coboundary_witness(c, {}, Backend::Linear);
        REQUIRE(wl);
        CHECK(coboundary(*wl) == c);
      }
    }
  }

  TEST_CASE("cohomology_report examples") {
    CHECK(cohomology_report(trivial_module(2, 2), 2).class_representatives.size() == 2);
    CHECK(cohomology_report(trivial_module(2, 2), 3).class_representatives.size() == 2);
    CHECK(cohomology_report(trivial_module(3, 3), 2).class_representatives.size() == 3);
    CHECK(cohomology_report(trivial_module(2, 3), 2).class_representatives.size() == 1);
    auto const r = cohomology_report(trivial_module(2, 2), 2);
    CHECK(r.cocycle_count == 2);
    CHECK(r.coboundary_count == 1);
    CHECK(r.class_representatives[0].is_zero());
  }

  TEST_CASE("counts agree with brute force and across backends") {
    for (auto const& m : fixture_modules())
      for (int deg = 1; deg <= 3; ++deg) {
        auto const nm = oracle::naive(*m);
        std::size_t const g = m->group.order();
        double const bits = std::log2(static_cast<double>(m->coeff.order())) *
                            std::pow(static_cast<double>(g - 1), deg);
        auto const lin = cohomology_counts(m, deg, Backend::Linear);
        CHECK(lin.cocycles == lin.coboundaries * lin.classes);
        if (bits > 14) continue;
        auto const b = oracle::brute_counts(nm, deg);
        auto const e = cohomology_counts(m, deg, Backend::Enumeration);
        CHECK(e.cocycles == b.cocycles);
        CHECK(e.coboundaries == b.coboundaries);
        CHECK(e.classes == b.classes);
        CHECK(lin.cocycles == b.cocycles);
        CHECK(lin.coboundaries == b.coboundaries);
        CHECK(lin.classes == b.classes);
        auto const rep = cohomology_report(m, deg, {}, true);
        CHECK(rep.class_representatives.size() == b.classes);
        for (std::size_t i = 0; i < rep.class_representatives.size(); ++i) {
          CHECK(is_cocycle(rep.class_representatives[i]));
          for (std::size_t j = i + 1; j < rep.class_representatives.size(); ++j)
            CHECK_FALSE(cohomologous(rep.class_representatives[i], rep.class_representatives[j]));
        }
      }
  }

  TEST_CASE("cyclic closed forms") {
    for (int m = 1; m <= 6; ++m)
      for (int n = 1; n <= 6; ++n) {
        auto const mod = trivial_module(m, n);
        auto const g = static_cast<std::uint64_t>(std::gcd(m, n));
        CHECK(cohomology_counts(mod, 2, Backend::Linear).classes == g);
        CHECK(cohomology_counts(mod, 3, Backend::Linear).classes == g);
        CHECK(cohomology_counts(mod, 1, Backend::Linear).classes == g);
        CHECK(cohomology_counts(mod, 2, Backend::Automatic).classes == g);
      }
  }

  TEST_CASE("nontrivial action on Z/4") {
    // Z/2 acting by -1: H^1 = ker N / (1-t)M = Z/4 / 2Z/4, H^2 = M^G / NM = {0,2}
    auto const m = sign_module();
    CHECK(cohomology_counts(m, 1, Backend::Enumeration).classes == 2);
    CHECK(cohomology_counts(m, 2, Backend::Enumeration).classes == 2);
    CHECK(cohomology_counts(m, 3, Backend::Enumeration).classes == 2);
    CHECK(cohomology_counts(m, 2, Backend::Linear).classes == 2);
  }

  TEST_CASE("enumeration is canonical and independent of thread count") {
    Limits one, four;
    four.threads = 4;
    auto const m = trivial_module(4, 2);
    auto const a = enumerate_cocycles(m, 2, one);
    auto const b = enumerate_cocycles(m, 2, four);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    CHECK(std::is_sorted(a.begin(), a.end()));
    auto const bd = enumerate_coboundaries(m, 2);
    CHECK(std::is_sorted(bd.begin(), bd.end()));
    for (auto const& c : bd) CHECK(is_cocycle(c));
  }

  TEST_CASE("budget") {
    Limits tight;
    tight.enumeration_bits = 2;
    CHECK_THROWS_AS(cohomology_report(trivial_module(4, 2), 3, tight), Error);
    try {
      cohomology_report(trivial_module(4, 2), 3, tight);
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
    // automatic counting falls back to the linear backend
    CHECK(cohomology_counts(trivial_module(4, 2), 3, Backend::Automatic, tight).classes == 2);
  }

  TEST_CASE("push_forward and pull_back") {
    auto const m22 = trivial_module(2, 2);
    auto const m44 = trivial_module(4, 4);
    auto const m42 = trivial_module(4, 2);
    Cochain const g = cochain2(m22, {0, 0, 0, 1});
    // pull back along Z/4 -> Z/2
    Cochain const p = pull_back(g, GroupHom::make(cyclic_group(4), cyclic_group(2), {0, 1, 0, 1}), m42);
    CHECK(p.at(1, 3) == 1);
    CHECK(p.at(1, 2) == 0);
    CHECK(is_cocycle(p));
    Cochain const q = push_forward(Cochain::zero(m42, 2), GroupHom::zero(cyclic_group(2), cyclic_group(4)), m44);
    CHECK(q.is_zero());
  }

  TEST_CASE("diagonalization") {
    IntMatrix m{{2, 4}, {6, 8}};
    auto const d = diagonalize(m, 2, true);
    Integer prod = 1;
    for (auto const& x : d.diagonal) prod *= x;
    CHECK(prod == 8);
    auto const ab = decompose_abelian(direct_product(cyclic_group(2), cyclic_group(4)));
    Integer order = 1;
    for (auto const& x : ab.moduli) order *= x;
    CHECK(order == 8);
    auto const sol = solve_integer_system({{2, 0}, {0, 3}}, 2, {4, 9});
    REQUIRE(sol);
    CHECK((*sol)[0] == 2);
    CHECK((*sol)[1] == 3);
    CHECK_FALSE(solve_integer_system({{2}}, 1, {3}));
  }
}
