#include "xmodkit/prolongation.hpp"

#include <algorithm>
#include <string>

namespace xmodkit {

namespace {

[[noreturn]] void invalid(std::string const& why, std::vector<int> witness = {}) {
  throw Error(ErrorKind::InvalidPreProlongation, why, std::move(witness));
}

Subset ker_zeta_in_B(PreProlongation const& pre, SubgroupView const& kp) {
  Subset out;
  for (std::size_t c = 0; c < kp.group.order(); ++c)
    if (pre.zeta(c) == 0) out.push_back(kp.to_parent(static_cast<Elem>(c)));
  std::sort(out.begin(), out.end());
  return out;
}

[[noreturn]] void square_fails(std::string const& which, int witness) {
  throw Error(ErrorKind::SquareFails, which + " square does not commute", {witness});
}

}  // namespace

SubgroupView PreProlongation::ker_pi() const {
  return subgroup_group(B, kernel_image(pi).kernel);
}

PreProlongation PreProlongation::make(FiniteGroup B, FiniteGroup Pi, GroupHom pi, FiniteGroup A,
                                      GroupHom zeta, FiniteGroup D, GroupHom eta,
                                      std::vector<std::vector<Elem>> theta) {
  if (!(pi.source() == B) || !(pi.target() == Pi)) invalid("pi must map B to Pi");
  if (!pi.is_surjective()) invalid("pi is not surjective");
  Subset const kp = kernel_image(pi).kernel;
  Subset const z = center(B);
  for (Elem c : kp)
    if (!contains(z, c)) invalid("Ker pi is not central in B", {c});
  SubgroupView const kv = subgroup_group(B, kp);
  if (!(zeta.source() == kv.group) || !(zeta.target() == A))
    invalid("zeta must map Ker pi to A");
  if (!A.is_abelian()) invalid("A must be abelian");
  if (!zeta.is_surjective()) throw Error(ErrorKind::ZetaNotSurjective, "zeta is not onto A");
  if (!(eta.source() == Pi) || !(eta.target() == D)) invalid("eta must map Pi to D");
  if (!eta.is_injective()) invalid("eta is not injective");
  Subset const im = kernel_image(eta).image;
  if (!is_normal(D, im)) invalid("image of eta is not normal in D");
  if (theta.size() != D.order()) invalid("theta needs one map per element of D");
  return PreProlongation{std::move(B),   std::move(Pi),  std::move(pi),  std::move(A),
                         std::move(zeta), std::move(D), std::move(eta), std::move(theta)};
}

InducedKernel induced_crossed_module(PreProlongation const& pre) {
  SubgroupView const kp = pre.ker_pi();
  CosetDecomposition bbar = quotient(pre.B, ker_zeta_in_B(pre, kp));
  FiniteGroup const& Bb = *bbar.quotient;
  std::vector<Elem> d(Bb.order());
  for (std::size_t s = 0; s < d.size(); ++s) d[s] = pre.eta(pre.pi(bbar.key(static_cast<int>(s))));

  CrossedModule xm = [&] {
    try {
      for (auto const& m : pre.theta)
        if (m.size() != Bb.order())
          throw Error(ErrorKind::NotAnAction, "theta map has the wrong length");
      return validate_xmod(Bb, pre.D, GroupHom::make(Bb, pre.D, std::move(d)), pre.theta);
    } catch (Error const& e) {
      throw Error(ErrorKind::NotACrossedModule,
                  std::string(to_string(e.kind())) + ": " + e.what(), e.witness());
    }
  }();

  XModDerived const der = derive(xm);
  std::vector<Elem> zbar(der.ker.group.order(), -1);
  for (std::size_t c = 0; c < kp.group.order(); ++c) {
    Elem const s = bbar.coset_of[kp.to_parent(static_cast<Elem>(c))];
    Elem const sub = der.ker.to_sub(s);
    Elem const v = pre.zeta(c);
    if (sub < 0 || (zbar[sub] >= 0 && zbar[sub] != v))
      throw Error(ErrorKind::ZetaBarIllDefined, "zeta does not descend to Ker d", {static_cast<int>(c)});
    zbar[sub] = v;
  }
  for (std::size_t i = 0; i < zbar.size(); ++i)
    if (zbar[i] < 0)
      throw Error(ErrorKind::ZetaBarIllDefined, "Ker d is larger than the image of Ker pi",
                  {der.ker.to_parent(static_cast<Elem>(i))});
  GroupHom zh = GroupHom::make(der.ker.group, pre.A, std::move(zbar));
  return InducedKernel{std::move(bbar), AbstractZetaKernel::make(std::move(xm), pre.A, std::move(zh))};
}

Obstruction covering_obstruction(PreProlongation const& pre, Limits const& limits) {
  return obstruction(induced_crossed_module(pre).kernel, limits);
}

CoveringReport classify_coverings(PreProlongation const& pre, Limits const& limits) {
  InducedKernel induced = induced_crossed_module(pre);
  ClassificationReport report = classify(induced.kernel, limits);
  std::vector<ProlongationDiagram> coverings;
  for (ZetaExtension const& ext : report.representatives) {
    GroupHom top = compose(ext.beta, *induced.bbar.projection);
    coverings.push_back(verify_prolongation(ProlongationDiagram{pre, ext, std::move(top)}));
  }
  return CoveringReport{std::move(induced), std::move(report), std::move(coverings)};
}

ProlongationDiagram verify_prolongation(ProlongationDiagram diag) {
  PreProlongation const& pre = diag.pre;
  ZetaExtension const& ext = diag.ext;
  InducedKernel const ind = induced_crossed_module(pre);
  if (!(ext.kernel == ind.kernel))
    throw Error(ErrorKind::SquareFails, "extension is not over the induced zeta-kernel");
  SubgroupView const kp = pre.ker_pi();
  XModDerived const& der = ind.kernel.der;
  GroupHom const& p0 = *ind.bbar.projection;
  GroupHom const& bt = diag.beta_top;
  if (!(bt.source() == pre.B) || !(bt.target() == ext.E))
    throw Error(ErrorKind::SquareFails, "beta_top must map B to E");

  // left: Ker π -> A -> E against Ker π -> B -> E
  for (std::size_t c = 0; c < kp.group.order(); ++c) {
    Elem const b = kp.to_parent(static_cast<Elem>(c));
    if (bt(b) != ext.j(pre.zeta(c))) square_fails("left", b);
  }
  for (std::size_t b = 0; b < pre.B.order(); ++b)
    if (ext.p(bt(b)) != pre.eta(pre.pi(b))) square_fails("right", static_cast<int>(b));
  for (std::size_t b = 0; b < pre.B.order(); ++b)
    if (bt(b) != ext.beta(p0(b))) square_fails("factorization", static_cast<int>(b));
  for (std::size_t b = 0; b < pre.B.order(); ++b)
    if (ind.kernel.xm.d(p0(b)) != pre.eta(pre.pi(b))) square_fails("d p0 = eta pi", static_cast<int>(b));
  for (std::size_t c = 0; c < kp.group.order(); ++c) {
    Elem const b = kp.to_parent(static_cast<Elem>(c));
    Elem const sub = der.ker.to_sub(p0(b));
    if (sub < 0) square_fails("Ker pi -> Ker d", b);
    if (ind.kernel.zeta(sub) != pre.zeta(c)) square_fails("zeta-bar restriction", b);
  }
  for (std::size_t c = 0; c < der.ker.group.order(); ++c) {
    Elem const s = der.ker.to_parent(static_cast<Elem>(c));
    if (ext.beta(s) != ext.j(ind.kernel.zeta(c))) square_fails("middle-left", s);
  }
  for (std::size_t s = 0; s < ind.kernel.xm.B.order(); ++s)
    if (ext.p(ext.beta(s)) != ind.kernel.xm.d(s)) square_fails("middle-right", static_cast<int>(s));
  return diag;
}

}  // namespace xmodkit
