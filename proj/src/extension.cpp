#include "xmodkit/extension.hpp"

#include <algorithm>
#include <stdexcept>

#include "parallel.hpp"

namespace xmodkit {

AbstractZetaKernel AbstractZetaKernel::make(CrossedModule xm, FiniteGroup A, GroupHom zeta) {
  XModDerived der = derive(xm);
  if (!(zeta.source() == der.ker.group) || !(zeta.target() == A))
    throw Error(ErrorKind::TypeMismatch, "zeta must map Ker d to A");
  if (!A.is_abelian()) throw Error(ErrorKind::NotAbelian, "A must be abelian");
  if (!zeta.is_surjective()) throw Error(ErrorKind::ZetaNotSurjective, "zeta is not onto A");
  for (std::size_t s = 0; s < der.coker_group().order(); ++s)
    for (std::size_t c = 0; c < der.ker.group.order(); ++c)
      if (zeta(der.induced_action.apply(static_cast<Elem>(s), static_cast<Elem>(c))) != zeta(c))
        throw Error(ErrorKind::ZetaNotInvariant, "zeta(s c) != zeta(c)",
                    {static_cast<int>(s), static_cast<int>(c)});
  ModulePtr module = GModule::trivial(der.coker_group(), A);
  return AbstractZetaKernel{std::move(xm), std::move(der), std::move(A), std::move(zeta),
                            std::move(module)};
}

namespace {

// Exactness, centrality and the crossed-module hom condition; shared by
// validate_extension and induced_zeta.
void check_diagram(CrossedModule const& xm, FiniteGroup const& A, FiniteGroup const& E,
                   GroupHom const& j, GroupHom const& p, GroupHom const& beta) {
  if (!(j.source() == A) || !(j.target() == E) || !(p.source() == E) || !(p.target() == xm.D) ||
      !(beta.source() == xm.B) || !(beta.target() == E))
    throw Error(ErrorKind::TypeMismatch, "extension maps do not fit A -> E -> D and B -> E");
  if (!j.is_injective()) throw Error(ErrorKind::NotExact, "j is not injective");
  if (!p.is_surjective()) throw Error(ErrorKind::NotExact, "p is not surjective");
  auto const kp = kernel_image(p).kernel;
  auto const ij = kernel_image(j).image;
  if (kp != ij) throw Error(ErrorKind::NotExact, "image of j differs from kernel of p");
  for (std::size_t a = 0; a < A.order(); ++a)
    for (std::size_t e = 0; e < E.order(); ++e)
      if (E.mul(j(a), static_cast<Elem>(e)) != E.mul(static_cast<Elem>(e), j(a)))
        throw Error(ErrorKind::NotCentral, "j(a) does not commute with e",
                    {static_cast<int>(a), static_cast<int>(e)});
  try {
    XModHom::make(xm, conjugation_xmod(p), beta, GroupHom::identity(xm.D));
  } catch (Error const& e) {
    throw Error(ErrorKind::BetaNotXModHom, std::string("(beta, id) is not a crossed-module hom: ") + e.what(),
                e.witness());
  }
}

struct BarData {
  QuotientXMod q;
  std::vector<Elem> iota;      // A -> B̄, onto Ker d̄
  std::vector<int> iota_inv;   // B̄ -> A, or -1 off Ker d̄
};

BarData bar_data(AbstractZetaKernel const& k) {
  Subset kz;
  for (std::size_t c = 0; c < k.der.ker.group.order(); ++c)
    if (k.zeta(c) == 0) kz.push_back(k.der.ker.to_parent(static_cast<Elem>(c)));
  std::sort(kz.begin(), kz.end());
  QuotientXMod q = quotient_xmod(k.xm, kz);
  std::vector<Elem> iota(k.A.order(), -1);
  std::vector<int> iota_inv(q.xm.B.order(), -1);
  for (std::size_t c = 0; c < k.der.ker.group.order(); ++c) {
    Elem const bbar = q.cosets.coset_of[k.der.ker.to_parent(static_cast<Elem>(c))];
    Elem const alpha = k.zeta(c);
    if (iota[alpha] < 0) iota[alpha] = bbar;
    if (iota[alpha] != bbar || (iota_inv[bbar] >= 0 && iota_inv[bbar] != alpha))
      throw std::logic_error("bar_data: zeta does not induce an isomorphism onto Ker d-bar");
    iota_inv[bbar] = alpha;
  }
  return BarData{std::move(q), std::move(iota), std::move(iota_inv)};
}

Elem preimage(GroupHom const& h, Elem y) {
  for (std::size_t x = 0; x < h.source().order(); ++x)
    if (h(x) == y) return static_cast<Elem>(x);
  return -1;
}

}  // namespace

ZetaExtension validate_extension(AbstractZetaKernel kernel, FiniteGroup E, GroupHom j, GroupHom p,
                                 GroupHom beta) {
  check_diagram(kernel.xm, kernel.A, E, j, p, beta);
  for (std::size_t c = 0; c < kernel.der.ker.group.order(); ++c) {
    Elem const b = kernel.der.ker.to_parent(static_cast<Elem>(c));
    if (beta(b) != j(kernel.zeta(c)))
      throw Error(ErrorKind::ZetaMismatch, "beta(c) != j(zeta(c))", {b});
  }
  return ZetaExtension{std::move(kernel), std::move(E), std::move(j), std::move(p),
                       std::move(beta)};
}

AbstractZetaKernel induced_zeta(CrossedModule const& xm, FiniteGroup const& A,
                                FiniteGroup const& E, GroupHom const& j, GroupHom const& p,
                                GroupHom const& beta) {
  check_diagram(xm, A, E, j, p, beta);
  XModDerived const der = derive(xm);
  std::vector<Elem> z(der.ker.group.order());
  for (std::size_t c = 0; c < z.size(); ++c) {
    z[c] = preimage(j, beta(der.ker.to_parent(static_cast<Elem>(c))));
    if (z[c] < 0) throw std::logic_error("induced_zeta: beta(Ker d) escapes j(A)");
  }
  GroupHom zeta = GroupHom::make(der.ker.group, A, std::move(z));
  try {
    return AbstractZetaKernel::make(xm, A, std::move(zeta));
  } catch (Error const& e) {
    if (e.kind() == ErrorKind::ZetaNotInvariant)
      throw std::logic_error("induced_zeta: induced zeta not Coker d-invariant");
    throw;
  }
}

Obstruction obstruction(AbstractZetaKernel const& kernel, Limits const& limits,
                        std::optional<Stick> const& stick) {
  Stick const st = stick ? *stick : canonical_stick(kernel.xm, kernel.der);
  Cochain const k = reduction_cocycle(kernel.xm, kernel.der, st);
  Cochain cls = push_forward(k, kernel.zeta, kernel.module);
  auto w = coboundary_witness(cls, limits);
  bool const vanished = w.has_value();
  return Obstruction{std::move(cls), vanished, std::move(w)};
}

ZetaExtension build_crossed_product(AbstractZetaKernel const& kernel, Stick const& stick,
                                    Cochain const& a) {
  if (a.degree() != 2 || !same_module(a.module(), *kernel.module))
    throw Error(ErrorKind::TypeMismatch, "a must be a 2-cochain over (Coker d, A, trivial)");
  Cochain const zk =
      push_forward(reduction_cocycle(kernel.xm, kernel.der, stick), kernel.zeta, kernel.module);
  Cochain const da = coboundary(a);
  if (!(da == zk)) {
    std::vector<int> witness;
    auto const c = static_cast<Elem>(kernel.der.coker_group().order());
    for (Elem s = 0; s < c && witness.empty(); ++s)
      for (Elem r = 0; r < c && witness.empty(); ++r)
        for (Elem t = 0; t < c && witness.empty(); ++t)
          if (da.at(s, r, t) != zk.at(s, r, t)) witness = {s, r, t};
    throw Error(ErrorKind::FactorSetCondition, "delta(a) != zeta*k", witness);
  }

  BarData const bd = bar_data(kernel);
  CrossedModule const& bx = bd.q.xm;
  FiniteGroup const& Bb = bx.B;
  FiniteGroup const& cok = kernel.der.coker_group();
  auto const nb = static_cast<Elem>(Bb.order());
  auto const nc = static_cast<Elem>(cok.order());
  auto const defect = stick_defect(kernel.xm, kernel.der, stick);
  auto h = [&](Elem s, Elem r) {
    Elem const hbar = bd.q.cosets.coset_of[defect[s * nc + r]];
    return Bb.mul(hbar, bd.iota[a.at(s, r)]);
  };

  std::size_t const n = static_cast<std::size_t>(nb) * nc;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (Elem s = 0; s < nc; ++s)
    for (Elem b = 0; b < nb; ++b)
      for (Elem r = 0; r < nc; ++r)
        for (Elem c = 0; c < nb; ++c) {
          Elem v = Bb.mul(Bb.mul(b, bx.theta.apply(stick.reps[s], c)), h(s, r));
          table[s * nb + b][r * nb + c] = cok.mul(s, r) * nb + v;
        }
  FiniteGroup E;
  try {
    E = FiniteGroup::from_table(table);
  } catch (Error const&) {
    throw std::logic_error("build_crossed_product: factor set passed but E is not a group");
  }

  std::vector<Elem> j(kernel.A.order()), p(n), beta(kernel.xm.B.order());
  for (std::size_t al = 0; al < j.size(); ++al) j[al] = bd.iota[al];
  for (Elem s = 0; s < nc; ++s)
    for (Elem b = 0; b < nb; ++b)
      p[s * nb + b] = kernel.xm.D.mul(bx.d(b), stick.reps[s]);
  for (std::size_t b = 0; b < beta.size(); ++b) beta[b] = bd.q.cosets.coset_of[b];

  auto jh = GroupHom::make(kernel.A, E, std::move(j));
  auto ph = GroupHom::make(E, kernel.xm.D, std::move(p));
  auto bh = GroupHom::make(kernel.xm.B, E, std::move(beta));
  return validate_extension(kernel, std::move(E), std::move(jh), std::move(ph), std::move(bh));
}

MiddleSequence middle_sequence(ZetaExtension const& ext) {
  BarData bd = bar_data(ext.kernel);
  FiniteGroup const& Bb = bd.q.xm.B;
  std::vector<Elem> eps(Bb.order());
  for (std::size_t s = 0; s < Bb.order(); ++s) eps[s] = ext.beta(bd.q.cosets.key(static_cast<int>(s)));
  for (std::size_t b = 0; b < ext.kernel.xm.B.order(); ++b)
    if (ext.beta(b) != eps[bd.q.cosets.coset_of[b]])
      throw std::logic_error("middle_sequence: beta does not factor through B/Ker zeta");
  GroupHom epsilon = GroupHom::make(Bb, ext.E, std::move(eps));
  if (!epsilon.is_injective()) throw std::logic_error("middle_sequence: epsilon not injective");

  XModDerived const& der = ext.kernel.der;
  GroupHom sigma_p = compose(der.sigma(), ext.p);
  if (!sigma_p.is_surjective() || kernel_image(sigma_p).kernel != kernel_image(epsilon).image)
    throw std::logic_error("middle_sequence: sequence is not exact");
  if (ext.E.order() != Bb.order() * der.coker_group().order())
    throw std::logic_error("middle_sequence: |E| != |B-bar| |Coker d|");
  return MiddleSequence{std::move(bd.q), std::move(epsilon), std::move(sigma_p)};
}

namespace {

void check_equivalence(GroupHom const& omega, ZetaExtension const& e1, ZetaExtension const& e2) {
  if (!omega.is_injective() || !omega.is_surjective())
    throw std::logic_error("equivalence is not bijective");
  if (!(compose(omega, e1.j) == e2.j) || !(compose(e2.p, omega) == e1.p) ||
      !(compose(omega, e1.beta) == e2.beta))
    throw std::logic_error("equivalence fails omega j = j', p' omega = p or omega beta = beta'");
}

}  // namespace

Normalization normalize(ZetaExtension const& ext, Stick const& stick) {
  MiddleSequence const ms = middle_sequence(ext);
  BarData const bd = bar_data(ext.kernel);
  AbstractZetaKernel const& k = ext.kernel;
  FiniteGroup const& E = ext.E;
  FiniteGroup const& Bb = bd.q.xm.B;
  FiniteGroup const& cok = k.der.coker_group();
  auto const nc = static_cast<Elem>(cok.order());
  auto const nb = static_cast<Elem>(Bb.order());

  std::vector<Elem> e(nc);
  for (Elem s = 0; s < nc; ++s) e[s] = preimage(ext.p, stick.reps[s]);
  std::vector<int> eps_inv(E.order(), -1);
  for (Elem b = 0; b < nb; ++b) eps_inv[ms.epsilon(b)] = b;

  auto const defect = stick_defect(k.xm, k.der, stick);
  std::vector<Elem> values(static_cast<std::size_t>(nc) * nc, 0);
  for (Elem s = 0; s < nc; ++s)
    for (Elem r = 0; r < nc; ++r) {
      Elem const v = E.mul(E.mul(e[s], e[r]), E.inv(e[cok.mul(s, r)]));
      Elem const h = eps_inv[v];
      if (h < 0) throw std::logic_error("normalize: factor set escapes epsilon(B-bar)");
      Elem const hbar_defect = bd.q.cosets.coset_of[defect[s * nc + r]];
      int const alpha = bd.iota_inv[Bb.mul(Bb.inv(hbar_defect), h)];
      if (alpha < 0) throw std::logic_error("normalize: factor set escapes iota(A)");
      values[s * nc + r] = alpha;
    }
  Cochain a = Cochain::from_values(k.module, 2, std::move(values));
  ZetaExtension cp = build_crossed_product(k, stick, a);

  std::vector<Elem> om(E.order());
  for (std::size_t x = 0; x < E.order(); ++x) {
    Elem const s = ms.sigma_p(x);
    Elem const b = eps_inv[E.mul(static_cast<Elem>(x), E.inv(e[s]))];
    om[x] = s * nb + b;
  }
  GroupHom omega = GroupHom::make(E, cp.E, std::move(om));
  check_equivalence(omega, ext, cp);
  return Normalization{std::move(a), std::move(cp), std::move(omega)};
}

std::optional<GroupHom> are_equivalent(ZetaExtension const& e1, ZetaExtension const& e2,
                                       Limits const& limits) {
  if (!(e1.kernel == e2.kernel))
    throw Error(ErrorKind::KernelMismatch, "extensions have different zeta-kernels");
  AbstractZetaKernel const& k = e1.kernel;
  Stick const st = canonical_stick(k.xm, k.der);
  Normalization const n1 = normalize(e1, st);
  Normalization const n2 = normalize(e2, st);
  // both normalizations live over the same module object
  Cochain const a2(Cochain::from_values(n1.a.module_ptr(), 2, n2.a.values()));
  auto const w = coboundary_witness(n1.a - a2, limits);
  if (!w) return std::nullopt;

  BarData const bd = bar_data(k);
  auto const nb = static_cast<Elem>(bd.q.xm.B.order());
  std::vector<Elem> shift(n1.crossed_product.E.order());
  for (std::size_t x = 0; x < shift.size(); ++x) {
    Elem const s = static_cast<Elem>(x) / nb;
    Elem const b = static_cast<Elem>(x) % nb;
    shift[x] = s * nb + bd.q.xm.B.mul(b, bd.iota[w->at(s)]);
  }
  GroupHom Omega = GroupHom::make(n1.crossed_product.E, n2.crossed_product.E, std::move(shift));
  GroupHom omega = compose(inverse(n2.omega), compose(Omega, n1.omega));
  check_equivalence(omega, e1, e2);
  return omega;
}

ClassificationReport classify(AbstractZetaKernel const& kernel, Limits const& limits) {
  Obstruction obs = obstruction(kernel, limits);
  CohomologyReport h2 = cohomology_report(kernel.module, 2, limits);
  std::vector<ZetaExtension> reps;
  std::vector<Cochain> cochains;
  if (obs.vanished) {
    Stick const st = canonical_stick(kernel.xm, kernel.der);
    for (Cochain const& z : h2.class_representatives) {
      Cochain a = *obs.witness + z;
      reps.push_back(build_crossed_product(kernel, st, a));
      cochains.push_back(std::move(a));
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        if (are_equivalent(reps[i], reps[j], limits))
          throw std::logic_error("classify: representatives are not pairwise inequivalent");
  }
  return ClassificationReport{kernel, std::move(obs), std::move(reps), std::move(cochains),
                              std::move(h2)};
}

std::vector<ZetaExtension> enumerate_extensions_raw(AbstractZetaKernel const& kernel,
                                                    Limits const& limits) {
  FiniteGroup const& A = kernel.A;
  FiniteGroup const& D = kernel.xm.D;
  if (A.order() * D.order() > limits.extension_bound)
    throw Error(ErrorKind::BudgetExceeded, "|A| |D| exceeds the extension search bound",
                {static_cast<int>(A.order() * D.order())});
  ModulePtr const m = GModule::trivial(D, A);
  std::vector<Cochain> const cocycles = enumerate_cocycles(m, 2, limits);
  auto const na = static_cast<Elem>(A.order());
  auto const nd = static_cast<Elem>(D.order());

  auto per_cocycle = [&](std::size_t i) {
    Cochain const& f = cocycles[i];
    std::size_t const n = static_cast<std::size_t>(na) * nd;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (Elem x = 0; x < nd; ++x)
      for (Elem al = 0; al < na; ++al)
        for (Elem y = 0; y < nd; ++y)
          for (Elem be = 0; be < na; ++be)
            table[x * na + al][y * na + be] = D.mul(x, y) * na + A.mul(A.mul(al, be), f.at(x, y));
    FiniteGroup E = FiniteGroup::from_table(table);
    std::vector<Elem> jm(na), pm(n);
    for (Elem al = 0; al < na; ++al) jm[al] = al;
    for (std::size_t e = 0; e < n; ++e) pm[e] = static_cast<Elem>(e) / na;
    GroupHom j = GroupHom::make(A, E, jm);
    GroupHom p = GroupHom::make(E, D, pm);
    std::vector<ZetaExtension> found;
    for (GroupHom const& beta : all_homs(kernel.xm.B, E)) {
      if (!(compose(p, beta) == kernel.xm.d)) continue;
      try {
        found.push_back(validate_extension(kernel, E, j, p, beta));
      } catch (Error const&) {
        // fails H2 or ζ-compatibility
      }
    }
    return found;
  };
  auto const batches = detail::parallel_map(cocycles.size(), limits.threads, per_cocycle);
  std::vector<ZetaExtension> out;
  for (auto const& b : batches) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<ZetaExtension> enumerate_extensions_oracle(AbstractZetaKernel const& kernel,
                                                       Limits const& limits) {
  std::vector<ZetaExtension> classes;
  for (ZetaExtension& e : enumerate_extensions_raw(kernel, limits)) {
    bool fresh = true;
    for (ZetaExtension const& c : classes)
      if (are_equivalent(c, e, limits)) {
        fresh = false;
        break;
      }
    if (fresh) classes.push_back(std::move(e));
  }
  return classes;
}

bool equivalent_by_search(ZetaExtension const& e1, ZetaExtension const& e2) {
  if (e1.E.order() != e2.E.order()) return false;
  for (GroupHom const& w : all_homs(e1.E, e2.E)) {
    if (!w.is_injective()) continue;
    if (compose(w, e1.j) == e2.j && compose(e2.p, w) == e1.p && compose(w, e1.beta) == e2.beta)
      return true;
  }
  return false;
}

}  // namespace xmodkit
