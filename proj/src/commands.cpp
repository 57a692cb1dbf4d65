#include "xmodkit/commands.hpp"

#include <chrono>
#include <filesystem>

#include "xmodkit/cat_group.hpp"
#include "xmodkit/extension.hpp"
#include "xmodkit/manifest.hpp"
#include "xmodkit/prolongation.hpp"

namespace xmodkit {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// serialization of library objects

std::vector<std::vector<Elem>> action_maps(ActionByAutomorphisms const& a) {
  std::vector<std::vector<Elem>> out;
  for (std::size_t x = 0; x < a.actor().order(); ++x) out.push_back(a[static_cast<Elem>(x)].map());
  return out;
}

ordered_json module_json(GModule const& m) {
  ordered_json j;
  j["group"] = group_to_json(m.group);
  j["coeff"] = group_to_json(m.coeff);
  j["action"] = action_maps(m.action);
  return j;
}

ordered_json xmod_json(CrossedModule const& xm) {
  ordered_json j;
  j["B"] = group_to_json(xm.B);
  j["D"] = group_to_json(xm.D);
  j["d"] = xm.d.map();
  j["theta"] = action_maps(xm.theta);
  return j;
}

ordered_json kernel_json(AbstractZetaKernel const& k) {
  ordered_json j;
  j["crossed_module"] = xmod_json(k.xm);
  j["ker_d"] = k.der.ker_d;
  j["A"] = group_to_json(k.A);
  j["zeta"] = k.zeta.map();
  return j;
}

ordered_json extension_json(ZetaExtension const& e) {
  ordered_json j;
  j["order"] = e.E.order();
  j["E"] = group_to_json(e.E);
  j["j"] = e.j.map();
  j["p"] = e.p.map();
  j["beta"] = e.beta.map();
  return j;
}

ordered_json optional_cochain(std::optional<Cochain> const& c) {
  return c ? cochain_to_json(*c) : ordered_json(nullptr);
}

ordered_json obstruction_json(Obstruction const& o) {
  ordered_json j;
  j["class"] = cochain_to_json(o.cls);
  j["vanished"] = o.vanished;
  j["witness"] = optional_cochain(o.witness);
  return j;
}

ordered_json error_json(std::string_view kind, std::string const& message,
                        std::vector<int> const& witness = {}) {
  ordered_json j;
  j["error"] = kind;
  j["message"] = message;
  j["witness"] = witness;
  return j;
}

// ---------------------------------------------------------------------------
// parsing the same objects back

std::vector<std::vector<int>> matrix(json const& j) { return j.get<std::vector<std::vector<int>>>(); }
std::vector<int> vec(json const& j) { return j.get<std::vector<int>>(); }

ModulePtr module_from(json const& j) {
  FiniteGroup const g = group_from_json(j.at("group"));
  FiniteGroup const a = group_from_json(j.at("coeff"));
  return GModule::make(g, a, ActionByAutomorphisms::make(g, a, matrix(j.at("action"))));
}

CrossedModule xmod_from(json const& j) {
  FiniteGroup const B = group_from_json(j.at("B"));
  FiniteGroup const D = group_from_json(j.at("D"));
  return validate_xmod(B, D, GroupHom::make(B, D, vec(j.at("d"))), matrix(j.at("theta")));
}

AbstractZetaKernel kernel_from(json const& j) {
  CrossedModule xm = xmod_from(j.at("crossed_module"));
  XModDerived const der = derive(xm);
  if (vec(j.at("ker_d")) != der.ker_d) throw ParseError("report: ker_d does not match");
  FiniteGroup const A = group_from_json(j.at("A"));
  return AbstractZetaKernel::make(std::move(xm), A, GroupHom::make(der.ker.group, A, vec(j.at("zeta"))));
}

ZetaExtension extension_from(json const& j, AbstractZetaKernel const& k) {
  FiniteGroup const E = group_from_json(j.at("E"));
  return validate_extension(k, E, GroupHom::make(k.A, E, vec(j.at("j"))),
                            GroupHom::make(E, k.xm.D, vec(j.at("p"))),
                            GroupHom::make(k.xm.B, E, vec(j.at("beta"))));
}

void require(bool cond, std::string const& what) {
  if (!cond) throw ParseError("report: " + what);
}

// ---------------------------------------------------------------------------
// commands

Stick parse_stick(std::string const& spec, CrossedModule const& xm, XModDerived const& der) {
  if (spec == "canonical") return canonical_stick(xm, der);
  if (spec.rfind("seed:", 0) == 0) {
    try {
      std::size_t used = 0;
      auto const seed = std::stoull(spec.substr(5), &used);
      if (used == spec.size() - 5) return seeded_stick(xm, der, seed);
    } catch (std::exception const&) {
    }
  }
  throw ParseError("--stick must be canonical or seed:<n>");
}

ordered_json stick_json(std::string const& spec, Stick const& st) {
  ordered_json j;
  j["choice"] = spec;
  j["reps"] = st.reps;
  j["lifts"] = st.lifts;
  return j;
}

ordered_json cmd_check(Manifest const& m, CommandOptions const& o) {
  auto const kind = m.kind_of(o.name);
  if (!kind) throw ParseError("unknown object " + o.name);
  ordered_json p;
  p["kind"] = to_string(*kind);
  ordered_json s;
  switch (*kind) {
    case ObjectKind::Group: {
      FiniteGroup const g = m.group(o.name);
      s["order"] = g.order();
      s["abelian"] = g.is_abelian();
      break;
    }
    case ObjectKind::Hom: {
      GroupHom const h = m.hom(o.name);
      auto const ki = kernel_image(h);
      s["kernel"] = ki.kernel;
      s["image"] = ki.image;
      break;
    }
    case ObjectKind::CrossedModule: {
      CrossedModule const xm = m.crossed_module(o.name);
      XModDerived const der = derive(xm);
      s["B_order"] = xm.B.order();
      s["D_order"] = xm.D.order();
      s["ker_d"] = der.ker_d;
      s["im_d"] = der.im_d;
      s["coker_order"] = der.coker_group().order();
      s["induced_action_trivial"] = der.induced_action.is_trivial();
      break;
    }
    case ObjectKind::Kernel: {
      AbstractZetaKernel const k = m.kernel(o.name);
      s["A_order"] = k.A.order();
      s["ker_d"] = k.der.ker_d;
      s["zeta"] = k.zeta.map();
      break;
    }
    case ObjectKind::PreProlongation: {
      InducedKernel const ind = induced_crossed_module(m.preprolongation(o.name));
      s["induced"] = kernel_json(ind.kernel);
      break;
    }
    case ObjectKind::Module: {
      ModulePtr const mod = m.module(o.name);
      s["group_order"] = mod->group.order();
      s["coeff_order"] = mod->coeff.order();
      s["action_trivial"] = mod->action.is_trivial();
      break;
    }
  }
  p["valid"] = true;
  p["summary"] = std::move(s);
  return p;
}

ordered_json cmd_reduce(Manifest const& m, CommandOptions const& o, Limits const& limits) {
  CrossedModule const xm = m.crossed_module(o.name);
  XModDerived const der = derive(xm);
  Stick const st = parse_stick(o.stick, xm, der);
  Cochain const k = reduction_cocycle(xm, der, st);
  ordered_json p;
  p["crossed_module"] = xmod_json(xm);
  p["ker_d"] = der.ker_d;
  p["coker_cosets"] = der.coker.cosets;
  p["module"] = module_json(*der.module);
  p["stick"] = stick_json(o.stick, st);
  p["k"] = cochain_to_json(k);
  p["is_cocycle"] = is_cocycle(k);
  p["k_is_coboundary"] = coboundary_witness(k, limits).has_value();
  if (o.stick != "canonical") {
    Cochain const k0 = reduction_cocycle(xm, der, canonical_stick(xm, der));
    auto const w = coboundary_witness(k - k0, limits);
    ordered_json c;
    c["cohomologous"] = w.has_value();
    c["witness"] = optional_cochain(w);
    p["canonical_comparison"] = std::move(c);
  }
  return p;
}

ordered_json cmd_cohomology(Manifest const& m, CommandOptions const& o, Limits const& limits) {
  ModulePtr mod;
  auto const kind = m.kind_of(o.name);
  if (kind == ObjectKind::CrossedModule)
    mod = derive(m.crossed_module(o.name)).module;
  else if (kind == ObjectKind::Module)
    mod = m.module(o.name);
  else
    throw ParseError(o.name + " is not a module or crossed module");
  if (o.degree < 1 || o.degree > 3) throw ParseError("--degree must be 1, 2 or 3");
  CohomologyReport const r = cohomology_report(mod, o.degree, limits, true);
  ordered_json p;
  p["module"] = module_json(*mod);
  p["degree"] = o.degree;
  p["cocycles"] = r.cocycle_count;
  p["coboundaries"] = r.coboundary_count;
  p["classes"] = r.class_representatives.size();
  p["backends_agree"] = true;
  ordered_json reps = ordered_json::array();
  for (auto const& c : r.class_representatives) reps.push_back(cochain_to_json(c));
  p["representatives"] = std::move(reps);
  return p;
}

ordered_json cmd_obstruction(Manifest const& m, CommandOptions const& o, Limits const& limits) {
  AbstractZetaKernel const k = m.kernel(o.name);
  Stick const st = parse_stick(o.stick, k.xm, k.der);
  ordered_json p;
  p["kernel"] = kernel_json(k);
  p["stick"] = stick_json(o.stick, st);
  p["obstruction"] = obstruction_json(obstruction(k, limits, st));
  p["h3_classes"] = cohomology_counts(k.module, 3, Backend::Automatic, limits).classes;
  return p;
}

ordered_json classification_json(ClassificationReport const& r, Limits const& limits) {
  ordered_json p;
  p["obstruction"] = obstruction_json(r.obstruction);
  p["h2_classes"] = r.h2.class_representatives.size();
  ordered_json reps = ordered_json::array();
  for (std::size_t i = 0; i < r.representatives.size(); ++i) {
    ordered_json e = extension_json(r.representatives[i]);
    e["a"] = cochain_to_json(r.factor_cochains[i]);
    reps.push_back(std::move(e));
  }
  p["representatives"] = std::move(reps);
  ordered_json cert = ordered_json::array();
  for (std::size_t i = 0; i < r.factor_cochains.size(); ++i)
    for (std::size_t j = i + 1; j < r.factor_cochains.size(); ++j) {
      Cochain const diff = r.factor_cochains[i] - r.factor_cochains[j];
      ordered_json c;
      c["pair"] = {i, j};
      c["difference"] = cochain_to_json(diff);
      c["is_coboundary"] = coboundary_witness(diff, limits).has_value();
      cert.push_back(std::move(c));
    }
  p["inequivalence"] = std::move(cert);
  return p;
}

ordered_json cmd_classify(Manifest const& m, CommandOptions const& o, Limits const& limits) {
  AbstractZetaKernel const k = m.kernel(o.name);
  ordered_json p;
  p["kernel"] = kernel_json(k);
  p.update(classification_json(classify(k, limits), limits));
  return p;
}

ordered_json pre_json(PreProlongation const& pre) {
  ordered_json j;
  j["B"] = group_to_json(pre.B);
  j["Pi"] = group_to_json(pre.Pi);
  j["pi"] = pre.pi.map();
  j["A"] = group_to_json(pre.A);
  j["zeta"] = pre.zeta.map();
  j["D"] = group_to_json(pre.D);
  j["eta"] = pre.eta.map();
  j["theta"] = pre.theta;
  return j;
}

ordered_json cmd_prolong(Manifest const& m, CommandOptions const& o, Limits const& limits) {
  PreProlongation const pre = m.preprolongation(o.name);
  CoveringReport const r = classify_coverings(pre, limits);
  ordered_json p;
  p["preprolongation"] = pre_json(pre);
  p["induced"] = kernel_json(r.induced.kernel);
  ordered_json c = classification_json(r.classification, limits);
  ordered_json covers = ordered_json::array();
  for (std::size_t i = 0; i < r.coverings.size(); ++i) {
    ordered_json e = c["representatives"][i];
    e["beta_top"] = r.coverings[i].beta_top.map();
    covers.push_back(std::move(e));
  }
  p["obstruction"] = c["obstruction"];
  p["h2_classes"] = c["h2_classes"];
  p["covering_classes"] = r.coverings.size();
  p["coverings"] = std::move(covers);
  p["inequivalence"] = c["inequivalence"];
  return p;
}

}  // namespace

CommandResult run_command(CommandOptions const& o) {
  auto const start = std::chrono::steady_clock::now();
  CommandResult result;
  ordered_json& rep = result.report;
  rep["format"] = "xmodkit-report";
  rep["version"] = "1";
  ordered_json echo;
  echo["name"] = o.command;
  echo["manifest"] = std::filesystem::path(o.manifest).filename().string();
  echo["object"] = o.name;
  echo["stick"] = o.stick;
  echo["budget"] = o.budget ? ordered_json(*o.budget) : ordered_json(nullptr);
  if (o.command == "cohomology") echo["degree"] = o.degree;
  rep["command"] = std::move(echo);

  ordered_json payload;
  try {
    Limits limits;
    limits.threads = std::max(1u, o.threads);
    if (o.budget) limits.enumeration_bits = *o.budget;
    Manifest const m = Manifest::load(o.manifest);
    if (o.command == "check")
      payload = cmd_check(m, o);
    else if (o.command == "reduce")
      payload = cmd_reduce(m, o, limits);
    else if (o.command == "cohomology")
      payload = cmd_cohomology(m, o, limits);
    else if (o.command == "obstruction")
      payload = cmd_obstruction(m, o, limits);
    else if (o.command == "classify")
      payload = cmd_classify(m, o, limits);
    else if (o.command == "prolong")
      payload = cmd_prolong(m, o, limits);
    else
      throw ParseError("unknown command " + o.command);
    result.exit_code = kOk;
  } catch (ParseError const& e) {
    result.exit_code = kParseError;
    payload = error_json("ParseError", e.what());
  } catch (Error const& e) {
    bool const budget = e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::BoundExceeded;
    result.exit_code = budget ? kBudgetExceeded : kSemanticFailure;
    payload = error_json(to_string(e.kind()), e.what(), e.witness());
  } catch (std::exception const& e) {
    result.exit_code = kSemanticFailure;
    payload = error_json("InternalError", e.what());
  }
  rep["status"] = result.exit_code == kOk ? "ok" : "fail";
  rep["payload"] = std::move(payload);
  std::chrono::duration<double> const dt = std::chrono::steady_clock::now() - start;
  rep["timing"] = {{"seconds", dt.count()}};
  return result;
}

std::string render_report(ordered_json const& report) { return report.dump(2) + "\n"; }

void revalidate_report(json const& report) {
  require(report.is_object() && report.value("format", "") == "xmodkit-report", "not a report");
  require(report.value("version", "") == "1", "unsupported version");
  json const& p = report.at("payload");
  if (report.at("status") != "ok") {
    require(p.contains("error") && p.contains("witness"), "failure without error record");
    return;
  }
  std::string const cmd = report.at("command").at("name");
  if (cmd == "reduce") {
    CrossedModule const xm = xmod_from(p.at("crossed_module"));
    XModDerived const der = derive(xm);
    ModulePtr const mod = module_from(p.at("module"));
    require(same_module(*mod, *der.module), "module differs from the crossed module's");
    validate_stick(xm, der, vec(p.at("stick").at("reps")), vec(p.at("stick").at("lifts")));
    Cochain const k = cochain_from_json(p.at("k"), der.module);
    require(is_cocycle(k) == p.at("is_cocycle").get<bool>(), "is_cocycle claim is wrong");
    if (p.contains("canonical_comparison") && p["canonical_comparison"]["cohomologous"] == true) {
      Cochain const k0 = reduction_cocycle(xm, der, canonical_stick(xm, der));
      Cochain const w = cochain_from_json(p["canonical_comparison"]["witness"], der.module);
      require(coboundary(w) == k - k0, "comparison witness is wrong");
    }
  } else if (cmd == "cohomology") {
    ModulePtr const mod = module_from(p.at("module"));
    std::uint64_t const z = p.at("cocycles"), b = p.at("coboundaries"), h = p.at("classes");
    require(z == b * h, "counts are inconsistent");
    require(p.at("representatives").size() == h, "representative count");
    for (auto const& c : p.at("representatives"))
      require(is_cocycle(cochain_from_json(c, mod)), "representative is not a cocycle");
  } else if (cmd == "obstruction" || cmd == "classify" || cmd == "prolong") {
    AbstractZetaKernel const k =
        kernel_from(cmd == "prolong" ? p.at("induced") : p.at("kernel"));
    json const& ob = p.at("obstruction");
    Cochain const cls = cochain_from_json(ob.at("class"), k.module);
    require(is_cocycle(cls), "obstruction class is not a cocycle");
    if (ob.at("vanished") == true) {
      Cochain const w = cochain_from_json(ob.at("witness"), k.module);
      require(coboundary(w) == cls, "obstruction witness is wrong");
    }
    if (cmd != "obstruction") {
      json const& reps = p.at(cmd == "prolong" ? "coverings" : "representatives");
      std::optional<PreProlongation> pre;
      if (cmd == "prolong") {
        json const& q = p.at("preprolongation");
        FiniteGroup const B = group_from_json(q.at("B"));
        FiniteGroup const Pi = group_from_json(q.at("Pi"));
        FiniteGroup const A = group_from_json(q.at("A"));
        FiniteGroup const D = group_from_json(q.at("D"));
        GroupHom pi = GroupHom::make(B, Pi, vec(q.at("pi")));
        SubgroupView const kp = subgroup_group(B, kernel_image(pi).kernel);
        pre = PreProlongation::make(B, Pi, pi, A, GroupHom::make(kp.group, A, vec(q.at("zeta"))), D,
                                    GroupHom::make(Pi, D, vec(q.at("eta"))), matrix(q.at("theta")));
      }
      for (auto const& r : reps) {
        ZetaExtension const e = extension_from(r, k);
        require(e.E.order() == k.A.order() * k.xm.D.order(), "|E| != |A| |D|");
        if (pre) {
          GroupHom top = GroupHom::make(pre->B, e.E, vec(r.at("beta_top")));
          verify_prolongation(ProlongationDiagram{*pre, e, std::move(top)});
        }
      }
      for (auto const& c : p.at("inequivalence"))
        require(c.at("is_coboundary") == false, "representatives are equivalent");
    }
  } else if (cmd != "check") {
    throw ParseError("report: unknown command " + cmd);
  }
}

}  // namespace xmodkit
