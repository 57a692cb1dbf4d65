#include "xmodkit/cat_group.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace xmodkit {

namespace {

[[noreturn]] void not_a_catgroup(std::string const& why, std::vector<int> witness = {}) {
  throw Error(ErrorKind::NotACatGroup, why, std::move(witness));
}

}  // namespace

StrictCatGroup StrictCatGroup::make(FiniteGroup objects, std::vector<Arrow> arrows,
                                    std::vector<int> compose, std::vector<int> tensor,
                                    std::vector<int> identity_arrow) {
  int const m = static_cast<int>(arrows.size());
  int const n = static_cast<int>(objects.order());
  if (compose.size() != arrows.size() * arrows.size() ||
      tensor.size() != arrows.size() * arrows.size() || identity_arrow.size() != objects.order())
    not_a_catgroup("table sizes do not match the arrow and object counts");
  for (int a = 0; a < m; ++a)
    if (arrows[a].src < 0 || arrows[a].src >= n || arrows[a].tgt < 0 || arrows[a].tgt >= n)
      not_a_catgroup("arrow endpoint out of range", {a});
  for (int x = 0; x < n; ++x) {
    int const i = identity_arrow[x];
    if (i < 0 || i >= m || arrows[i].src != x || arrows[i].tgt != x)
      not_a_catgroup("identity arrow is not an endomorphism of its object", {x});
  }
  auto then = [&](int a, int b) { return compose[a * m + b]; };
  auto ten = [&](int a, int b) { return tensor[a * m + b]; };

  std::vector<std::vector<int>> out_of(n);
  for (int a = 0; a < m; ++a) out_of[arrows[a].src].push_back(a);

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int const c = then(a, b);
      if (arrows[a].tgt != arrows[b].src) {
        if (c != -1) not_a_catgroup("composite defined for non-composable arrows", {a, b});
        continue;
      }
      if (c < 0 || c >= m || arrows[c].src != arrows[a].src || arrows[c].tgt != arrows[b].tgt)
        not_a_catgroup("composite has wrong endpoints", {a, b});
    }
  for (int a = 0; a < m; ++a) {
    if (then(identity_arrow[arrows[a].src], a) != a || then(a, identity_arrow[arrows[a].tgt]) != a)
      not_a_catgroup("identity law fails", {a});
    bool invertible = false;
    for (int b : out_of[arrows[a].tgt])
      if (then(a, b) == identity_arrow[arrows[a].src] &&
          then(b, a) == identity_arrow[arrows[a].tgt]) {
        invertible = true;
        break;
      }
    if (!invertible) not_a_catgroup("arrow has no inverse", {a});
    for (int b : out_of[arrows[a].tgt])
      for (int c : out_of[arrows[b].tgt])
        if (then(then(a, b), c) != then(a, then(b, c)))
          not_a_catgroup("composition is not associative", {a, b, c});
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int const c = ten(a, b);
      if (c < 0 || c >= m || arrows[c].src != objects.mul(arrows[a].src, arrows[b].src) ||
          arrows[c].tgt != objects.mul(arrows[a].tgt, arrows[b].tgt))
        not_a_catgroup("tensor has wrong endpoints", {a, b});
    }
  for (int a = 0; a < m; ++a) {
    if (ten(identity_arrow[0], a) != a || ten(a, identity_arrow[0]) != a)
      not_a_catgroup("tensor is not strictly unital", {a});
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (ten(ten(a, b), c) != ten(a, ten(b, c)))
          not_a_catgroup("tensor is not strictly associative", {a, b, c});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (ten(identity_arrow[x], identity_arrow[y]) != identity_arrow[objects.mul(x, y)])
        not_a_catgroup("tensor of identities is not an identity", {x, y});
  // interchange: (a then b) ⊗ (c then d) = (a ⊗ c) then (b ⊗ d)
  for (int a = 0; a < m; ++a)
    for (int b : out_of[arrows[a].tgt])
      for (int c = 0; c < m; ++c)
        for (int d : out_of[arrows[c].tgt])
          if (ten(then(a, b), then(c, d)) != then(ten(a, c), ten(b, d)))
            not_a_catgroup("interchange law fails", {a, b, c, d});

  return StrictCatGroup(std::move(objects), std::move(arrows), std::move(compose),
                        std::move(tensor), std::move(identity_arrow));
}

std::vector<int> StrictCatGroup::hom(Elem x, Elem y) const {
  std::vector<int> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].src == x && arrows_[a].tgt == y) out.push_back(static_cast<int>(a));
  return out;
}

StrictCatGroup associated_catgroup(CrossedModule const& xm) {
  int const nb = static_cast<int>(xm.B.order());
  int const nd = static_cast<int>(xm.D.order());
  int const m = nb * nd;
  auto index = [nb](Elem b, Elem y) { return y * nb + b; };
  std::vector<Arrow> arrows(m);
  for (Elem y = 0; y < nd; ++y)
    for (Elem b = 0; b < nb; ++b) arrows[index(b, y)] = Arrow{xm.D.mul(xm.d(b), y), y, b};
  std::vector<int> compose(m * m, -1);
  std::vector<int> tensor(m * m);
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c) {
      Elem const b = arrows[a].label, y = arrows[a].tgt;
      Elem const b2 = arrows[c].label, y2 = arrows[c].tgt;
      if (y == arrows[c].src) compose[a * m + c] = index(xm.B.mul(b, b2), y2);
      tensor[a * m + c] = index(xm.B.mul(b, xm.theta.apply(y, b2)), xm.D.mul(y, y2));
    }
  std::vector<int> identity(nd);
  for (Elem x = 0; x < nd; ++x) identity[x] = index(0, x);
  return StrictCatGroup::make(xm.D, std::move(arrows), std::move(compose), std::move(tensor),
                              std::move(identity));
}

CrossedModule catgroup_to_xmod(StrictCatGroup const& g) {
  FiniteGroup const& objs = g.objects();
  std::vector<int> to_unit{g.id(0)};
  for (int a : g.hom(0, 0))
    if (a != g.id(0)) to_unit.push_back(a);
  for (std::size_t a = 0; a < g.arrow_count(); ++a)
    if (g.arrow(static_cast<int>(a)).tgt == 0 && g.arrow(static_cast<int>(a)).src != 0)
      to_unit.push_back(static_cast<int>(a));
  std::sort(to_unit.begin() + 1, to_unit.end());
  std::vector<int> pos(g.arrow_count(), -1);
  for (std::size_t i = 0; i < to_unit.size(); ++i) pos[to_unit[i]] = static_cast<int>(i);

  std::size_t const nb = to_unit.size();
  std::vector<std::vector<int>> table(nb, std::vector<int>(nb));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) table[i][j] = pos[g.tensor(to_unit[i], to_unit[j])];
  FiniteGroup B = FiniteGroup::from_table(table);

  std::vector<Elem> d(nb);
  for (std::size_t i = 0; i < nb; ++i) d[i] = g.arrow(to_unit[i]).src;
  std::vector<std::vector<Elem>> theta(objs.order(), std::vector<Elem>(nb));
  for (std::size_t y = 0; y < objs.order(); ++y) {
    int const idy = g.id(static_cast<Elem>(y));
    int const idyinv = g.id(objs.inv(static_cast<Elem>(y)));
    for (std::size_t i = 0; i < nb; ++i)
      theta[y][i] = pos[g.tensor(g.tensor(idy, to_unit[i]), idyinv)];
  }
  return validate_xmod(B, objs, GroupHom::make(B, objs, d), theta);
}

Pi0Pi1 pi0_pi1(StrictCatGroup const& g) {
  FiniteGroup const& objs = g.objects();
  Subset comp;
  for (std::size_t x = 0; x < objs.order(); ++x)
    if (!g.hom(static_cast<Elem>(x), 0).empty()) comp.push_back(static_cast<Elem>(x));
  CosetDecomposition components = quotient(objs, comp);

  std::vector<int> aut{g.id(0)};
  for (int a : g.hom(0, 0))
    if (a != g.id(0)) aut.push_back(a);
  std::vector<int> pos(g.arrow_count(), -1);
  for (std::size_t i = 0; i < aut.size(); ++i) pos[aut[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(aut.size(), std::vector<int>(aut.size()));
  for (std::size_t i = 0; i < aut.size(); ++i)
    for (std::size_t j = 0; j < aut.size(); ++j) table[i][j] = pos[g.then(aut[i], aut[j])];
  FiniteGroup pi1 = FiniteGroup::from_table(table);

  FiniteGroup const& pi0 = *components.quotient;
  std::vector<GroupHom> assign;
  for (std::size_t s = 0; s < pi0.order(); ++s) {
    Elem const x = components.key(static_cast<int>(s));
    std::vector<Elem> m(aut.size());
    for (std::size_t i = 0; i < aut.size(); ++i)
      m[i] = pos[g.tensor(g.tensor(g.id(x), aut[i]), g.id(objs.inv(x)))];
    assign.push_back(GroupHom::make(pi1, pi1, std::move(m)));
  }
  auto action = ActionByAutomorphisms::make(pi0, pi1, std::move(assign));
  return Pi0Pi1{pi0, GModule::make(pi0, pi1, std::move(action)), std::move(components),
                std::move(aut)};
}

ReducedCatGroup ReducedCatGroup::make(ModulePtr module, Cochain k) {
  if (k.degree() != 3 || !same_module(k.module(), *module))
    throw Error(ErrorKind::TypeMismatch, "k must be a 3-cochain over the given module");
  if (!is_cocycle(k)) throw Error(ErrorKind::NotACocycle, "k is not a 3-cocycle");
  return ReducedCatGroup{std::move(module), std::move(k)};
}

// ---------------------------------------------------------------------------
// Sticks and the reduction cocycle

namespace {

// b with d(b) x = target
std::vector<Elem> lift_solutions(CrossedModule const& xm, Elem x, Elem target) {
  Elem const want = xm.D.mul(target, xm.D.inv(x));
  std::vector<Elem> out;
  for (std::size_t b = 0; b < xm.B.order(); ++b)
    if (xm.d(b) == want) out.push_back(static_cast<Elem>(b));
  return out;
}

bool is_rep(Stick const& st, XModDerived const& der, Elem x) {
  return st.reps[der.coker.coset_of[x]] == x;
}

}  // namespace

Stick validate_stick(CrossedModule const& xm, XModDerived const& der, std::vector<Elem> reps,
                     std::vector<Elem> lifts) {
  if (reps.size() != der.coker.cosets.size() || lifts.size() != xm.D.order())
    throw Error(ErrorKind::InvalidStick, "stick has the wrong shape");
  if (reps[der.coker.coset_of[0]] != 0)
    throw Error(ErrorKind::InvalidStick, "unit coset must be represented by 1", {0});
  for (std::size_t s = 0; s < reps.size(); ++s)
    if (reps[s] < 0 || reps[s] >= static_cast<Elem>(xm.D.order()) ||
        der.coker.coset_of[reps[s]] != static_cast<int>(s))
      throw Error(ErrorKind::InvalidStick, "representative outside its coset",
                  {static_cast<int>(s)});
  Stick st{std::move(reps), std::move(lifts)};
  for (std::size_t x = 0; x < xm.D.order(); ++x) {
    Elem const b = st.lifts[x];
    Elem const xs = st.reps[der.coker.coset_of[x]];
    if (b < 0 || b >= static_cast<Elem>(xm.B.order()) ||
        xm.D.mul(xm.d(b), static_cast<Elem>(x)) != xs)
      throw Error(ErrorKind::InvalidStick, "d(b_x) x != x_s", {static_cast<int>(x)});
    if (is_rep(st, der, static_cast<Elem>(x)) && b != 0)
      throw Error(ErrorKind::InvalidStick, "lift at a representative must be 0",
                  {static_cast<int>(x)});
  }
  return st;
}

Stick canonical_stick(CrossedModule const& xm, XModDerived const& der) {
  std::vector<Elem> reps;
  for (std::size_t s = 0; s < der.coker.cosets.size(); ++s)
    reps.push_back(der.coker.key(static_cast<int>(s)));
  std::vector<Elem> lifts(xm.D.order());
  for (std::size_t x = 0; x < xm.D.order(); ++x)
    lifts[x] = lift_solutions(xm, static_cast<Elem>(x), reps[der.coker.coset_of[x]]).front();
  return validate_stick(xm, der, std::move(reps), std::move(lifts));
}

std::vector<Stick> all_sticks(CrossedModule const& xm, XModDerived const& der,
                              std::size_t limit) {
  std::vector<Stick> out;
  std::size_t const ncos = der.coker.cosets.size();
  std::size_t const nd = xm.D.order();
  Stick st{std::vector<Elem>(ncos, 0), std::vector<Elem>(nd, 0)};

  std::function<void(std::size_t)> choose_lift = [&](std::size_t x) {
    if (out.size() >= limit) return;
    if (x == nd) {
      out.push_back(validate_stick(xm, der, st.reps, st.lifts));
      return;
    }
    if (is_rep(st, der, static_cast<Elem>(x))) {
      st.lifts[x] = 0;
      choose_lift(x + 1);
      return;
    }
    for (Elem b : lift_solutions(xm, static_cast<Elem>(x), st.reps[der.coker.coset_of[x]])) {
      st.lifts[x] = b;
      choose_lift(x + 1);
    }
  };
  std::function<void(std::size_t)> choose_rep = [&](std::size_t s) {
    if (s == ncos) {
      choose_lift(0);
      return;
    }
    if (der.coker.coset_of[0] == static_cast<int>(s)) {
      st.reps[s] = 0;
      choose_rep(s + 1);
      return;
    }
    for (Elem x : der.coker.cosets[s]) {
      st.reps[s] = x;
      choose_rep(s + 1);
    }
  };
  choose_rep(0);
  return out;
}

Stick seeded_stick(CrossedModule const& xm, XModDerived const& der, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Elem> reps;
  for (std::size_t s = 0; s < der.coker.cosets.size(); ++s) {
    auto const& coset = der.coker.cosets[s];
    if (der.coker.coset_of[0] == static_cast<int>(s))
      reps.push_back(0);
    else
      reps.push_back(coset[rng() % coset.size()]);
  }
  std::vector<Elem> lifts(xm.D.order());
  for (std::size_t x = 0; x < xm.D.order(); ++x) {
    Elem const xs = reps[der.coker.coset_of[x]];
    if (xs == static_cast<Elem>(x)) continue;
    auto const sol = lift_solutions(xm, static_cast<Elem>(x), xs);
    lifts[x] = sol[rng() % sol.size()];
  }
  return validate_stick(xm, der, std::move(reps), std::move(lifts));
}

std::vector<Elem> stick_defect(CrossedModule const& xm, XModDerived const& der,
                               Stick const& stick) {
  std::size_t const c = der.coker.cosets.size();
  std::vector<Elem> h(c * c);
  for (std::size_t s = 0; s < c; ++s)
    for (std::size_t r = 0; r < c; ++r)
      h[s * c + r] = xm.B.inv(stick.lifts[xm.D.mul(stick.reps[s], stick.reps[r])]);
  return h;
}

Cochain reduction_cocycle(CrossedModule const& xm, XModDerived const& der, Stick const& stick) {
  FiniteGroup const& cok = der.coker_group();
  FiniteGroup const& B = xm.B;
  std::size_t const c = cok.order();
  auto const h = stick_defect(xm, der, stick);
  auto H = [&](Elem s, Elem r) { return h[s * c + r]; };
  std::vector<Elem> values(c * c * c, 0);
  for (Elem s = 0; s < static_cast<Elem>(c); ++s)
    for (Elem r = 0; r < static_cast<Elem>(c); ++r)
      for (Elem t = 0; t < static_cast<Elem>(c); ++t) {
        Elem v = B.inv(H(s, cok.mul(r, t)));
        v = B.mul(v, B.inv(xm.theta.apply(stick.reps[s], H(r, t))));
        v = B.mul(v, H(s, r));
        v = B.mul(v, H(cok.mul(s, r), t));
        Elem const sub = der.ker.to_sub(v);
        if (sub < 0)
          throw Error(ErrorKind::ValueOutsideKernel, "reduction cocycle value outside Ker d",
                      {s, r, t});
        values[(s * c + r) * c + t] = sub;
      }
  Cochain k = Cochain::from_values(der.module, 3, std::move(values));
  if (!is_cocycle(k)) throw std::logic_error("reduction_cocycle: k is not a cocycle");
  return k;
}

ReducedCatGroup reduce(StrictCatGroup const& g) {
  CrossedModule const xm = catgroup_to_xmod(g);
  XModDerived const der = derive(xm);
  Stick const st = canonical_stick(xm, der);
  return ReducedCatGroup::make(der.module, reduction_cocycle(xm, der, st));
}

// ---------------------------------------------------------------------------
// Typed functors between reductions

ModulePtr TypedFunctor::obstruction_module() const {
  return GModule::make(source.pi0(), target.pi1(), pull_back(target.module->action, phi));
}

TypedFunctor TypedFunctor::make(ReducedCatGroup source, ReducedCatGroup target, GroupHom phi,
                                GroupHom f, std::optional<Cochain> g) {
  if (!(phi.source() == source.pi0()) || !(phi.target() == target.pi0()) ||
      !(f.source() == source.pi1()) || !(f.target() == target.pi1()))
    throw Error(ErrorKind::TypeMismatch, "(phi, f) do not match the reductions");
  for (std::size_t x = 0; x < source.pi0().order(); ++x)
    for (std::size_t a = 0; a < source.pi1().order(); ++a)
      if (f(source.module->act(static_cast<Elem>(x), static_cast<Elem>(a))) !=
          target.module->act(phi(x), f(a)))
        throw Error(ErrorKind::NotEquivariant, "f(x a) != phi(x) f(a)",
                    {static_cast<int>(x), static_cast<int>(a)});
  TypedFunctor t{std::move(source), std::move(target), std::move(phi), std::move(f), std::nullopt};
  if (g) {
    Cochain const xi = functor_obstruction(t);
    if (g->degree() != 2 || !same_module(g->module(), xi.module()) || !(coboundary(*g) == xi))
      throw Error(ErrorKind::InvalidArgument, "g does not satisfy dg = phi*k' - f*k");
    t.g = std::move(g);
  }
  return t;
}

Cochain functor_obstruction(TypedFunctor const& t) {
  ModulePtr const m = t.obstruction_module();
  Cochain xi = pull_back(t.target.k, t.phi, m) - push_forward(t.source.k, t.f, m);
  if (!is_cocycle(xi)) throw std::logic_error("functor obstruction is not a cocycle");
  return xi;
}

std::optional<Realization> realize(TypedFunctor const& t, Limits const& limits) {
  Cochain const xi = functor_obstruction(t);
  auto w = coboundary_witness(xi, limits);
  if (!w) return std::nullopt;
  TypedFunctor realized = t;
  realized.g = std::move(*w);
  auto const counts = cohomology_counts(xi.module_ptr(), 2, Backend::Automatic, limits);
  return Realization{std::move(realized), counts.classes};
}

std::optional<Cochain> are_homotopic(TypedFunctor const& t1, TypedFunctor const& t2,
                                     Limits const& limits) {
  auto same_red = [](ReducedCatGroup const& a, ReducedCatGroup const& b) {
    return same_module(*a.module, *b.module) && a.k == b.k;
  };
  if (!same_red(t1.source, t2.source) || !same_red(t1.target, t2.target))
    throw Error(ErrorKind::TypeMismatch, "functors have different source or target");
  if (!t1.g || !t2.g) throw Error(ErrorKind::TypeMismatch, "both functors must be realized");
  if (!(t1.phi == t2.phi) || !(t1.f == t2.f)) return std::nullopt;
  return coboundary_witness(*t1.g - *t2.g, limits);
}

// ---------------------------------------------------------------------------
// Monoidal structures on the functor induced by a crossed-module hom

ModulePtr structure_module(XModHom const& h) {
  XModDerived const src = derive(h.source);
  XModDerived const tgt = derive(h.target);
  std::vector<GroupHom> assign;
  for (std::size_t s = 0; s < src.coker.cosets.size(); ++s) {
    std::vector<Elem> first;
    for (Elem x : src.coker.cosets[s]) {
      std::vector<Elem> m(tgt.ker_d.size());
      for (std::size_t i = 0; i < m.size(); ++i)
        m[i] = tgt.ker.to_sub(h.target.theta.apply(h.f0(x), tgt.ker_d[i]));
      if (first.empty())
        first = m;
      else if (m != first)
        throw std::logic_error("structure_module: action depends on the coset member");
    }
    assign.push_back(GroupHom::make(tgt.ker.group, tgt.ker.group, std::move(first)));
  }
  auto action = ActionByAutomorphisms::make(src.coker_group(), tgt.ker.group, std::move(assign));
  return GModule::make(src.coker_group(), tgt.ker.group, std::move(action));
}

bool is_monoidal_functor(StrictCatGroup const& source, StrictCatGroup const& target,
                         std::vector<Elem> const& on_objects, std::vector<int> const& on_arrows,
                         std::function<int(Elem, Elem)> const& structure) {
  FiniteGroup const& so = source.objects();
  FiniteGroup const& to = target.objects();
  int const m = static_cast<int>(source.arrow_count());
  Elem const n = static_cast<Elem>(so.order());
  auto F = [&](int a) { return on_arrows[a]; };
  auto Fo = [&](Elem x) { return on_objects[x]; };

  for (Elem x = 0; x < n; ++x) {
    if (F(source.id(x)) != target.id(Fo(x))) return false;
    for (Elem y = 0; y < n; ++y) {
      if (Fo(so.mul(x, y)) != to.mul(Fo(x), Fo(y))) return false;
      int const s = structure(x, y);
      if (target.arrow(s).src != to.mul(Fo(x), Fo(y)) || target.arrow(s).tgt != Fo(so.mul(x, y)))
        return false;
    }
    if (structure(0, x) != target.id(Fo(x)) || structure(x, 0) != target.id(Fo(x))) return false;
  }
  for (int a = 0; a < m; ++a) {
    Arrow const& u = source.arrow(a);
    if (target.arrow(F(a)).src != Fo(u.src) || target.arrow(F(a)).tgt != Fo(u.tgt)) return false;
    for (int b = 0; b < m; ++b) {
      Arrow const& v = source.arrow(b);
      if (u.tgt == v.src && F(source.then(a, b)) != target.then(F(a), F(b))) return false;
      // naturality of the structure in both variables
      int const lhs = target.then(target.tensor(F(a), F(b)), structure(u.tgt, v.tgt));
      int const rhs = target.then(structure(u.src, v.src), F(source.tensor(a, b)));
      if (lhs != rhs) return false;
    }
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        int const lhs = target.then(target.tensor(structure(x, y), target.id(Fo(z))),
                                    structure(so.mul(x, y), z));
        int const rhs = target.then(target.tensor(target.id(Fo(x)), structure(y, z)),
                                    structure(x, so.mul(y, z)));
        if (lhs != rhs) return false;
      }
  return true;
}

std::vector<Cochain> monoidal_structures(XModHom const& h, Limits const& limits) {
  ModulePtr const module = structure_module(h);
  XModDerived const src = derive(h.source);
  XModDerived const tgt = derive(h.target);
  StrictCatGroup const gs = associated_catgroup(h.source);
  StrictCatGroup const gt = associated_catgroup(h.target);
  int const nb2 = static_cast<int>(h.target.B.order());
  auto index = [nb2](Elem b, Elem y) { return y * nb2 + b; };

  std::vector<Elem> on_objects = h.f0.map();
  std::vector<int> on_arrows(gs.arrow_count());
  for (std::size_t a = 0; a < gs.arrow_count(); ++a) {
    Arrow const& u = gs.arrow(static_cast<int>(a));
    on_arrows[a] = index(h.f1(u.label), h.f0(u.tgt));
  }
  std::vector<Cochain> out;
  for (Cochain& phi : enumerate_cocycles(module, 2, limits)) {
    auto structure = [&](Elem x, Elem y) {
      Elem const val = phi.at(src.coker.coset_of[x], src.coker.coset_of[y]);
      return index(tgt.ker.to_parent(val), h.f0(h.source.D.mul(x, y)));
    };
    if (!is_monoidal_functor(gs, gt, on_objects, on_arrows, structure))
      throw std::logic_error("monoidal_structures: cocycle fails the monoidal functor axioms");
    out.push_back(std::move(phi));
  }
  return out;
}

}  // namespace xmodkit
