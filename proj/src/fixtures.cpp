#include "xmodkit/fixtures.hpp"

namespace xmodkit::fixtures {

namespace {

std::vector<std::vector<Elem>> constant_maps(std::size_t actors, std::vector<Elem> const& m) {
  return std::vector<std::vector<Elem>>(actors, m);
}

std::vector<Elem> identity_map(std::size_t n) {
  std::vector<Elem> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Elem>(i);
  return m;
}

std::vector<Elem> inversion_map(FiniteGroup const& g) {
  std::vector<Elem> m(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) m[i] = g.inv(static_cast<Elem>(i));
  return m;
}

// θ on Z/4 with odd x acting by inversion
std::vector<std::vector<Elem>> odd_inversion_z4() {
  FiniteGroup const z4 = cyclic_group(4);
  auto const id = identity_map(4);
  auto const inv = inversion_map(z4);
  return {id, inv, id, inv};
}

CrossedModule cyc4_with(std::vector<std::vector<Elem>> const& theta) {
  FiniteGroup const z4 = cyclic_group(4);
  return validate_xmod(z4, z4, GroupHom::make(z4, z4, {0, 2, 0, 2}), theta);
}

AbstractZetaKernel z2_kernel(CrossedModule xm) {
  XModDerived const der = derive(xm);
  FiniteGroup const z2 = cyclic_group(2);
  return AbstractZetaKernel::make(std::move(xm), z2, GroupHom::make(der.ker.group, z2, {0, 1}));
}

PreProlongation pre_with(std::vector<std::vector<Elem>> theta) {
  FiniteGroup const z4 = cyclic_group(4);
  FiniteGroup const z2 = cyclic_group(2);
  GroupHom pi = GroupHom::make(z4, z2, {0, 1, 0, 1});
  SubgroupView const kp = subgroup_group(z4, {0, 2});
  return PreProlongation::make(z4, z2, pi, z2, GroupHom::make(kp.group, z2, {0, 1}), z4,
                               GroupHom::make(z2, z4, {0, 2}), std::move(theta));
}

}  // namespace

CrossedModule xm_id() {
  FiniteGroup const z2 = cyclic_group(2);
  return CrossedModule::make(z2, z2, GroupHom::identity(z2), ActionByAutomorphisms::conjugation(z2));
}

CrossedModule xm_zero() {
  FiniteGroup const z2 = cyclic_group(2);
  return CrossedModule::make(z2, z2, GroupHom::zero(z2, z2), ActionByAutomorphisms::trivial(z2, z2));
}

CrossedModule xm_cyc4() { return cyc4_with(constant_maps(4, identity_map(4))); }

CrossedModule xm_cyc4_tau() { return cyc4_with(odd_inversion_z4()); }

std::vector<std::vector<Elem>> cyc4_theta_broken_c1() {
  auto const id = identity_map(4);
  auto const inv = inversion_map(cyclic_group(4));
  return {id, id, inv, inv};
}

std::vector<std::vector<Elem>> zero4_theta_not_action() {
  auto const id = identity_map(4);
  auto const inv = inversion_map(cyclic_group(4));
  return {id, inv, inv, id};
}

AbstractZetaKernel kernel_id() {
  CrossedModule xm = xm_id();
  XModDerived const der = derive(xm);
  FiniteGroup const one = trivial_group();
  return AbstractZetaKernel::make(std::move(xm), one, GroupHom::zero(der.ker.group, one));
}

AbstractZetaKernel kernel_zero() { return z2_kernel(xm_zero()); }
AbstractZetaKernel kernel_cyc4() { return z2_kernel(xm_cyc4()); }
AbstractZetaKernel kernel_cyc4_tau() { return z2_kernel(xm_cyc4_tau()); }

PreProlongation pre_pos() { return pre_with(constant_maps(4, identity_map(4))); }
PreProlongation pre_neg() { return pre_with(odd_inversion_z4()); }

PreProlongation pre_trivial() {
  FiniteGroup const z4 = cyclic_group(4);
  FiniteGroup const z2 = cyclic_group(2);
  FiniteGroup const one = trivial_group();
  SubgroupView const kp = subgroup_group(z4, {0, 2});
  return PreProlongation::make(z4, z2, GroupHom::make(z4, z2, {0, 1, 0, 1}), one,
                               GroupHom::zero(kp.group, one), z4, GroupHom::make(z2, z4, {0, 2}),
                               constant_maps(4, identity_map(2)));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<FiniteGroup> const& small_groups() {
  static std::vector<FiniteGroup> const groups = [] {
    std::vector<FiniteGroup> g;
    for (int n = 1; n <= 8; ++n) g.push_back(cyclic_group(n));
    FiniteGroup const z2 = cyclic_group(2);
    g.push_back(direct_product(z2, z2));
    g.push_back(direct_product(z2, cyclic_group(4)));
    g.push_back(direct_product(direct_product(z2, z2), z2));
    g.push_back(dihedral_group(3));
    g.push_back(dihedral_group(4));
    g.push_back(quaternion_group());
    return g;
  }();
  return groups;
}

FiniteGroup const& pick(std::mt19937_64& rng, std::vector<FiniteGroup> const& pool) {
  return pool[rng() % pool.size()];
}

Subset random_subgroup(FiniteGroup const& g, std::mt19937_64& rng, bool normal) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<Elem> gens;
    std::size_t const k = rng() % 3;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(static_cast<Elem>(rng() % g.order()));
    Subset s = generated_subgroup(g, gens);
    if (!normal || is_normal(g, s)) return s;
  }
  return {0};
}

// N ⊴ D included in D, acting by conjugation
CrossedModule normal_inclusion(std::mt19937_64& rng) {
  FiniteGroup const& D = pick(rng, small_groups());
  SubgroupView const n = subgroup_group(D, random_subgroup(D, rng, true));
  std::vector<std::vector<Elem>> theta(D.order(), std::vector<Elem>(n.group.order()));
  for (std::size_t x = 0; x < D.order(); ++x)
    for (std::size_t b = 0; b < n.group.order(); ++b)
      theta[x][b] = n.to_sub(D.conj(static_cast<Elem>(x), n.to_parent(static_cast<Elem>(b))));
  return validate_xmod(n.group, D, n.inclusion, theta);
}

// abelian B with d = 0, D acting through a character D -> Z/2 by inversion
CrossedModule zero_map_module(std::mt19937_64& rng) {
  std::vector<FiniteGroup> abelian;
  for (auto const& g : small_groups())
    if (g.is_abelian()) abelian.push_back(g);
  FiniteGroup const& B = pick(rng, abelian);
  FiniteGroup const& D = pick(rng, small_groups());
  auto const chars = all_homs(D, cyclic_group(2));
  GroupHom const& chi = chars[rng() % chars.size()];
  auto const id = identity_map(B.order());
  auto const inv = inversion_map(B);
  std::vector<std::vector<Elem>> theta;
  for (std::size_t x = 0; x < D.order(); ++x) theta.push_back(chi(x) ? inv : id);
  return validate_xmod(B, D, GroupHom::zero(B, D), theta);
}

// E -> E/Z for a central subgroup Z
CrossedModule central_quotient(std::mt19937_64& rng) {
  FiniteGroup const& E = pick(rng, small_groups());
  Subset const z = center(E);
  Subset n{0};
  for (int attempt = 0; attempt < 8; ++attempt) {
    Subset s = generated_subgroup(E, {z[rng() % z.size()]});
    if (s.size() > n.size() || rng() % 2) n = s;
  }
  CosetDecomposition const q = quotient(E, n);
  return conjugation_xmod(*q.projection);
}

CrossedModule product(CrossedModule const& a, CrossedModule const& b) {
  FiniteGroup const B = direct_product(a.B, b.B);
  FiniteGroup const D = direct_product(a.D, b.D);
  auto const nb2 = static_cast<Elem>(b.B.order());
  auto const nd2 = static_cast<Elem>(b.D.order());
  std::vector<Elem> d(B.order());
  for (std::size_t i = 0; i < B.order(); ++i)
    d[i] = a.d(static_cast<Elem>(i) / nb2) * nd2 + b.d(static_cast<Elem>(i) % nb2);
  std::vector<std::vector<Elem>> theta(D.order(), std::vector<Elem>(B.order()));
  for (std::size_t x = 0; x < D.order(); ++x)
    for (std::size_t i = 0; i < B.order(); ++i) {
      Elem const x1 = static_cast<Elem>(x) / nd2, x2 = static_cast<Elem>(x) % nd2;
      Elem const b1 = static_cast<Elem>(i) / nb2, b2 = static_cast<Elem>(i) % nb2;
      theta[x][i] = a.theta.apply(x1, b1) * nb2 + b.theta.apply(x2, b2);
    }
  return validate_xmod(B, D, GroupHom::make(B, D, std::move(d)), theta);
}

}  // namespace

CrossedModule random_crossed_module(std::mt19937_64& rng) {
  for (;;) {
    switch (rng() % 4) {
      case 0: return normal_inclusion(rng);
      case 1: return zero_map_module(rng);
      case 2: return central_quotient(rng);
      default: {
        std::mt19937_64 sub(rng());
        CrossedModule const a = rng() % 2 ? zero_map_module(sub) : central_quotient(sub);
        CrossedModule const b = rng() % 2 ? normal_inclusion(sub) : xm_id();
        if (a.B.order() * b.B.order() <= 8 && a.D.order() * b.D.order() <= 8) return product(a, b);
      }
    }
  }
}

}  // namespace xmodkit::fixtures
