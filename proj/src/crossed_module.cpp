#include "xmodkit/crossed_module.hpp"

#include <algorithm>
#include <stdexcept>

namespace xmodkit {

namespace {

void check_shapes(FiniteGroup const& B, FiniteGroup const& D, GroupHom const& d) {
  if (!(d.source() == B) || !(d.target() == D))
    throw Error(ErrorKind::InvalidArgument, "d must be a hom B -> D");
}

void check_c1(FiniteGroup const& B, GroupHom const& d,
              std::vector<std::vector<Elem>> const& theta) {
  for (std::size_t b = 0; b < B.order(); ++b) {
    auto const& t = theta[d(b)];
    for (std::size_t c = 0; c < B.order(); ++c)
      if (t[c] != B.conj(static_cast<Elem>(b), static_cast<Elem>(c)))
        throw Error(ErrorKind::AxiomC1Failed, "theta_{d(b)} differs from conjugation by b",
                    {static_cast<int>(b)});
  }
}

void check_c2(FiniteGroup const& B, FiniteGroup const& D, GroupHom const& d,
              std::vector<std::vector<Elem>> const& theta) {
  for (std::size_t x = 0; x < D.order(); ++x)
    for (std::size_t b = 0; b < B.order(); ++b)
      if (d(theta[x][b]) != D.conj(static_cast<Elem>(x), d(b)))
        throw Error(ErrorKind::AxiomC2Failed, "d(theta_x b) != x d(b) x^-1",
                    {static_cast<int>(x), static_cast<int>(b)});
}

std::vector<std::vector<Elem>> maps_of(ActionByAutomorphisms const& a) {
  std::vector<std::vector<Elem>> out;
  for (std::size_t x = 0; x < a.actor().order(); ++x) out.push_back(a[x].map());
  return out;
}

}  // namespace

CrossedModule CrossedModule::make(FiniteGroup B, FiniteGroup D, GroupHom d,
                                  ActionByAutomorphisms theta) {
  check_shapes(B, D, d);
  if (!(theta.actor() == D) || !(theta.acted() == B))
    throw Error(ErrorKind::InvalidArgument, "theta must be an action of D on B");
  auto const maps = maps_of(theta);
  check_c1(B, d, maps);
  check_c2(B, D, d, maps);
  return CrossedModule{std::move(B), std::move(D), std::move(d), std::move(theta)};
}

CrossedModule validate_xmod(FiniteGroup const& B, FiniteGroup const& D, GroupHom const& d,
                            std::vector<std::vector<Elem>> const& theta) {
  check_shapes(B, D, d);
  if (theta.size() != D.order())
    throw Error(ErrorKind::NotAnAction, "one map per element of D required");
  std::vector<GroupHom> assign;
  for (std::size_t x = 0; x < theta.size(); ++x) {
    try {
      assign.push_back(GroupHom::make(B, B, theta[x]));
    } catch (Error const& e) {
      throw Error(ErrorKind::NotAnAction, std::string("theta entry is not a hom: ") + e.what(),
                  {static_cast<int>(x)});
    }
    if (!assign.back().is_injective())
      throw Error(ErrorKind::NotAnAction, "theta entry is not bijective", {static_cast<int>(x)});
  }
  check_c1(B, d, theta);
  check_c2(B, D, d, theta);
  auto action = ActionByAutomorphisms::make(D, B, std::move(assign));
  return CrossedModule{B, D, d, std::move(action)};
}

XModDerived derive(CrossedModule const& xm) {
  auto const [ker_d, im_d] = kernel_image(xm.d);
  Subset const z = center(xm.B);
  for (Elem c : ker_d)
    if (!contains(z, c)) throw std::logic_error("derive: Ker d not central in a crossed module");
  SubgroupView ker = subgroup_group(xm.B, ker_d);
  CosetDecomposition coker = quotient(xm.D, im_d);

  std::vector<GroupHom> assign;
  for (std::size_t s = 0; s < coker.cosets.size(); ++s) {
    std::vector<Elem> m(ker_d.size());
    Elem const x = coker.key(static_cast<int>(s));
    for (std::size_t i = 0; i < ker_d.size(); ++i) m[i] = ker.to_sub(xm.theta.apply(x, ker_d[i]));
    for (Elem y : coker.cosets[s])
      for (std::size_t i = 0; i < ker_d.size(); ++i)
        if (ker.to_sub(xm.theta.apply(y, ker_d[i])) != m[i])
          throw std::logic_error("derive: induced Coker d action is not well defined");
    assign.push_back(GroupHom::make(ker.group, ker.group, std::move(m)));
  }
  auto induced = ActionByAutomorphisms::make(*coker.quotient, ker.group, std::move(assign));
  auto module = GModule::make(*coker.quotient, ker.group, induced);
  return XModDerived{ker_d, im_d, std::move(ker), std::move(coker), std::move(induced),
                     std::move(module)};
}

XModHom XModHom::make(CrossedModule source, CrossedModule target, GroupHom f1, GroupHom f0) {
  if (!(f1.source() == source.B) || !(f1.target() == target.B) || !(f0.source() == source.D) ||
      !(f0.target() == target.D))
    throw Error(ErrorKind::InvalidArgument, "crossed module hom components do not match");
  for (std::size_t b = 0; b < source.B.order(); ++b)
    if (f0(source.d(b)) != target.d(f1(b)))
      throw Error(ErrorKind::H1Failed, "f0 d != d' f1", {static_cast<int>(b)});
  for (std::size_t x = 0; x < source.D.order(); ++x)
    for (std::size_t b = 0; b < source.B.order(); ++b)
      if (f1(source.theta.apply(x, b)) != target.theta.apply(f0(x), f1(b)))
        throw Error(ErrorKind::H2Failed, "f1(theta_x b) != theta'_{f0 x} f1(b)",
                    {static_cast<int>(x), static_cast<int>(b)});
  return XModHom{std::move(source), std::move(target), std::move(f1), std::move(f0)};
}

XModHom XModHom::identity(CrossedModule const& xm) {
  return make(xm, xm, GroupHom::identity(xm.B), GroupHom::identity(xm.D));
}

XModHom compose(XModHom const& outer, XModHom const& inner) {
  if (!(inner.target == outer.source))
    throw Error(ErrorKind::InvalidArgument, "compose: crossed modules do not match");
  return XModHom::make(inner.source, outer.target, compose(outer.f1, inner.f1),
                       compose(outer.f0, inner.f0));
}

QuotientXMod quotient_xmod(CrossedModule const& xm, Subset const& n) {
  for (Elem c : n)
    if (xm.d(c) != 0) throw Error(ErrorKind::NotInKernel, "N is not inside Ker d", {c});
  if (!is_subgroup(xm.B, n)) throw Error(ErrorKind::NotASubgroup, "N is not a subgroup");
  for (std::size_t x = 0; x < xm.D.order(); ++x)
    for (Elem c : n)
      if (!contains(n, xm.theta.apply(x, c)))
        throw Error(ErrorKind::NotThetaInvariant, "theta_x moves N", {static_cast<int>(x), c});

  CosetDecomposition cosets = quotient(xm.B, n);
  FiniteGroup const& bbar = *cosets.quotient;
  std::size_t const k = bbar.order();
  std::vector<Elem> dbar(k);
  for (std::size_t s = 0; s < k; ++s) dbar[s] = xm.d(cosets.key(static_cast<int>(s)));
  std::vector<std::vector<Elem>> theta(xm.D.order(), std::vector<Elem>(k));
  for (std::size_t x = 0; x < xm.D.order(); ++x)
    for (std::size_t s = 0; s < k; ++s)
      theta[x][s] = cosets.coset_of[xm.theta.apply(x, cosets.key(static_cast<int>(s)))];

  CrossedModule q = validate_xmod(bbar, xm.D, GroupHom::make(bbar, xm.D, dbar), theta);
  XModHom proj = XModHom::make(xm, q, *cosets.projection, GroupHom::identity(xm.D));
  return QuotientXMod{std::move(q), std::move(proj), std::move(cosets)};
}

CrossedModule conjugation_xmod(GroupHom const& p) {
  FiniteGroup const& E = p.source();
  FiniteGroup const& D = p.target();
  if (!p.is_surjective()) throw Error(ErrorKind::InvalidArgument, "p must be surjective");
  std::vector<Elem> lift(D.order(), -1);
  for (std::size_t e = 0; e < E.order(); ++e)
    if (lift[p(e)] < 0) lift[p(e)] = static_cast<Elem>(e);
  std::vector<std::vector<Elem>> theta(D.order(), std::vector<Elem>(E.order()));
  for (std::size_t x = 0; x < D.order(); ++x)
    for (std::size_t e = 0; e < E.order(); ++e) theta[x][e] = E.conj(lift[x], static_cast<Elem>(e));
  return validate_xmod(E, D, p, theta);
}

}  // namespace xmodkit
