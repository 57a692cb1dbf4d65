#include "xmodkit/manifest.hpp"

#include <fstream>
#include <sstream>

namespace xmodkit {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::Group: return "group";
    case ObjectKind::Hom: return "hom";
    case ObjectKind::CrossedModule: return "crossed_module";
    case ObjectKind::Kernel: return "kernel";
    case ObjectKind::PreProlongation: return "preprolongation";
    case ObjectKind::Module: return "module";
  }
  return "unknown";
}

namespace {

constexpr std::pair<char const*, ObjectKind> kSections[] = {
    {"groups", ObjectKind::Group},
    {"homs", ObjectKind::Hom},
    {"crossed_modules", ObjectKind::CrossedModule},
    {"kernels", ObjectKind::Kernel},
    {"preprolongations", ObjectKind::PreProlongation},
    {"modules", ObjectKind::Module},
};

char const* section_of(ObjectKind kind) {
  for (auto const& [name, k] : kSections)
    if (k == kind) return name;
  return "";
}

[[noreturn]] void bad(std::string const& where, std::string const& why) {
  throw ParseError(where + ": " + why);
}

json const& field(json const& obj, char const* key, std::string const& where) {
  if (!obj.is_object() || !obj.contains(key)) bad(where, std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

std::vector<int> int_array(json const& j, std::string const& where) {
  if (!j.is_array()) bad(where, "expected an array of integers");
  std::vector<int> out;
  for (auto const& v : j) {
    if (!v.is_number_integer()) bad(where, "expected an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<std::vector<int>> int_matrix(json const& j, std::string const& where) {
  if (!j.is_array()) bad(where, "expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (auto const& row : j) out.push_back(int_array(row, where));
  return out;
}

void check_range(std::vector<int> const& v, std::size_t n, std::string const& where) {
  for (int x : v)
    if (x < 0 || static_cast<std::size_t>(x) >= n)
      bad(where, "element index " + std::to_string(x) + " out of range");
}

int positive(json const& j, std::string const& where, int max = 4096) {
  if (!j.is_number_integer() || j.get<long long>() < 1 || j.get<long long>() > max)
    bad(where, "expected a positive integer");
  return j.get<int>();
}

std::vector<std::vector<Elem>> theta_maps(json const& j, FiniteGroup const& actor,
                                          FiniteGroup const& acted, std::string const& where) {
  std::vector<Elem> id(acted.order());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<Elem>(i);
  if (j.is_string()) {
    if (j == "trivial") return std::vector<std::vector<Elem>>(actor.order(), id);
    if (j == "conjugation") {
      if (!(actor == acted)) bad(where, "conjugation action needs the acting group to equal B");
      std::vector<std::vector<Elem>> out(actor.order(), id);
      for (std::size_t x = 0; x < actor.order(); ++x)
        for (std::size_t b = 0; b < acted.order(); ++b)
          out[x][b] = actor.conj(static_cast<Elem>(x), static_cast<Elem>(b));
      return out;
    }
    bad(where, "unknown action \"" + j.get<std::string>() + "\"");
  }
  auto m = int_matrix(j, where);
  if (m.size() != actor.order()) bad(where, "one map per acting element required");
  for (auto const& row : m) {
    if (row.size() != acted.order()) bad(where, "action map has the wrong length");
    check_range(row, acted.order(), where);
  }
  return m;
}

}  // namespace

Manifest Manifest::parse(std::string_view text) {
  Manifest m;
  try {
    m.doc_ = json::parse(text);
  } catch (json::parse_error const& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!m.doc_.is_object()) throw ParseError("manifest must be a JSON object");
  if (!m.doc_.contains("version") || !m.doc_["version"].is_string())
    throw ParseError("manifest: missing string field \"version\"");
  m.version_ = m.doc_["version"].get<std::string>();
  if (m.version_ != "1") throw ParseError("manifest: unsupported version " + m.version_);
  for (auto const& [section, kind] : kSections) {
    if (!m.doc_.contains(section)) continue;
    json const& s = m.doc_[section];
    if (!s.is_object()) throw ParseError(std::string(section) + " must be an object");
    for (auto const& [name, body] : s.items()) {
      if (!body.is_object()) throw ParseError(name + ": description must be an object");
      if (!m.index_.emplace(name, kind).second) throw ParseError("duplicate object name " + name);
    }
  }
  if (m.index_.empty()) throw ParseError("manifest declares no objects");
  return m;
}

Manifest Manifest::load(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::optional<ObjectKind> Manifest::kind_of(std::string const& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

json const& Manifest::entry(ObjectKind kind, std::string const& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw ParseError("unknown object " + name);
  if (it->second != kind)
    throw ParseError(name + " is a " + std::string(to_string(it->second)) + ", expected a " +
                     std::string(to_string(kind)));
  return doc_.at(section_of(kind)).at(name);
}

FiniteGroup group_from_json(json const& j) {
  std::string const where = "group";
  if (!j.is_object()) bad(where, "description must be an object");
  if (j.contains("table")) {
    auto t = int_matrix(j["table"], where);
    if (t.empty()) bad(where, "empty table");
    for (auto const& row : t) {
      if (row.size() != t.size()) bad(where, "table is not square");
      check_range(row, t.size(), where);
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      if (!j["labels"].is_array()) bad(where, "labels must be an array of strings");
      for (auto const& l : j["labels"]) {
        if (!l.is_string()) bad(where, "labels must be an array of strings");
        labels.push_back(l.get<std::string>());
      }
    }
    return FiniteGroup::from_table(t, std::move(labels));
  }
  if (j.contains("cyclic")) return cyclic_group(positive(j["cyclic"], where));
  if (j.contains("dihedral")) return dihedral_group(positive(j["dihedral"], where, 2048));
  if (j.contains("quaternion")) return quaternion_group();
  if (j.contains("trivial")) return trivial_group();
  bad(where, "expected one of table, cyclic, dihedral, quaternion, trivial, product");
}

FiniteGroup Manifest::group(std::string const& name) const {
  if (auto it = group_cache_.find(name); it != group_cache_.end()) return it->second;
  json const& j = entry(ObjectKind::Group, name);
  FiniteGroup g;
  if (j.contains("product")) {
    json const& parts = j["product"];
    if (!parts.is_array() || parts.empty()) bad(name, "product needs a nonempty list of groups");
    g = group_ref(parts[0], name);
    for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, group_ref(parts[i], name));
  } else {
    try {
      g = group_from_json(j);
    } catch (ParseError const& e) {
      bad(name, e.what());
    }
  }
  group_cache_.emplace(name, g);
  return g;
}

FiniteGroup Manifest::group_ref(json const& ref, std::string const& where) const {
  if (ref.is_string()) {
    auto const name = ref.get<std::string>();
    if (kind_of(name) != ObjectKind::Group) bad(where, "unknown group " + name);
    return group(name);
  }
  if (ref.is_object()) return group_from_json(ref);
  bad(where, "expected a group name or inline group");
}

GroupHom Manifest::hom(std::string const& name) const {
  json const& j = entry(ObjectKind::Hom, name);
  FiniteGroup const s = group_ref(field(j, "source", name), name);
  FiniteGroup const t = group_ref(field(j, "target", name), name);
  return hom_ref(field(j, "map", name), s, t, name);
}

GroupHom Manifest::hom_ref(json const& ref, FiniteGroup const& source, FiniteGroup const& target,
                           std::string const& where) const {
  if (ref.is_string()) {
    auto const name = ref.get<std::string>();
    if (kind_of(name) != ObjectKind::Hom) bad(where, "unknown hom " + name);
    GroupHom h = hom(name);
    if (!(h.source() == source) || !(h.target() == target))
      bad(where, "hom " + name + " has the wrong source or target");
    return h;
  }
  auto map = int_array(ref, where);
  if (map.size() != source.order()) bad(where, "map needs one entry per source element");
  check_range(map, target.order(), where);
  return GroupHom::make(source, target, std::move(map));
}

CrossedModule Manifest::crossed_module(std::string const& name) const {
  json const& j = entry(ObjectKind::CrossedModule, name);
  FiniteGroup const B = group_ref(field(j, "B", name), name);
  FiniteGroup const D = group_ref(field(j, "D", name), name);
  GroupHom const d = hom_ref(field(j, "d", name), B, D, name);
  auto const theta = theta_maps(field(j, "theta", name), D, B, name);
  return validate_xmod(B, D, d, theta);
}

AbstractZetaKernel Manifest::kernel(std::string const& name) const {
  json const& j = entry(ObjectKind::Kernel, name);
  json const& xref = field(j, "crossed_module", name);
  if (!xref.is_string()) bad(name, "crossed_module must name a crossed module");
  auto const xname = xref.get<std::string>();
  if (kind_of(xname) != ObjectKind::CrossedModule) bad(name, "unknown crossed module " + xname);
  CrossedModule xm = crossed_module(xname);
  FiniteGroup const A = group_ref(field(j, "A", name), name);
  XModDerived const der = derive(xm);
  GroupHom zeta = hom_ref(field(j, "zeta", name), der.ker.group, A, name);
  return AbstractZetaKernel::make(std::move(xm), A, std::move(zeta));
}

PreProlongation Manifest::preprolongation(std::string const& name) const {
  json const& j = entry(ObjectKind::PreProlongation, name);
  FiniteGroup const B = group_ref(field(j, "B", name), name);
  FiniteGroup const Pi = group_ref(field(j, "Pi", name), name);
  FiniteGroup const A = group_ref(field(j, "A", name), name);
  FiniteGroup const D = group_ref(field(j, "D", name), name);
  GroupHom pi = hom_ref(field(j, "pi", name), B, Pi, name);
  SubgroupView const kp = subgroup_group(B, kernel_image(pi).kernel);
  GroupHom zeta = hom_ref(field(j, "zeta", name), kp.group, A, name);
  GroupHom eta = hom_ref(field(j, "eta", name), Pi, D, name);

  // θ acts on B / Ker ζ; its size is only known once ζ is
  std::size_t bbar = B.order() / kernel_image(zeta).kernel.size();
  json const& t = field(j, "theta", name);
  std::vector<std::vector<Elem>> theta;
  if (t.is_string() && t == "trivial") {
    std::vector<Elem> id(bbar);
    for (std::size_t i = 0; i < bbar; ++i) id[i] = static_cast<Elem>(i);
    theta.assign(D.order(), id);
  } else if (t.is_string()) {
    bad(name, "pre-prolongation theta must be \"trivial\" or a table");
  } else {
    theta = int_matrix(t, name);
    for (auto const& row : theta) check_range(row, bbar, name);
  }
  return PreProlongation::make(B, Pi, std::move(pi), A, std::move(zeta), D, std::move(eta),
                               std::move(theta));
}

ModulePtr Manifest::module(std::string const& name) const {
  json const& j = entry(ObjectKind::Module, name);
  FiniteGroup const G = group_ref(field(j, "group", name), name);
  FiniteGroup const A = group_ref(field(j, "coeff", name), name);
  auto const maps = theta_maps(field(j, "action", name), G, A, name);
  return GModule::make(G, A, ActionByAutomorphisms::make(G, A, maps));
}

ordered_json group_to_json(FiniteGroup const& g) {
  ordered_json j;
  j["table"] = g.table();
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

ordered_json cochain_to_json(Cochain const& c) {
  ordered_json j;
  j["degree"] = c.degree();
  ordered_json entries = ordered_json::array();
  std::size_t const n = c.module().group.order();
  auto const& values = c.values();
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    if (values[idx] == 0) continue;
    std::vector<int> tuple(c.degree());
    std::size_t rest = idx;
    for (int k = c.degree() - 1; k >= 0; --k) {
      tuple[k] = static_cast<int>(rest % n);
      rest /= n;
    }
    entries.push_back(ordered_json::array({tuple, values[idx]}));
  }
  j["entries"] = std::move(entries);
  return j;
}

Cochain cochain_from_json(json const& j, ModulePtr module) {
  std::string const where = "cochain";
  int const degree = field(j, "degree", where).get<int>();
  if (degree < 1 || degree > 3) bad(where, "degree must be 1, 2 or 3");
  std::size_t const n = module->group.order();
  std::vector<Elem> values(tuple_count(n, degree), 0);
  for (auto const& e : field(j, "entries", where)) {
    if (!e.is_array() || e.size() != 2) bad(where, "entry must be [tuple, value]");
    auto const tuple = int_array(e[0], where);
    if (tuple.size() != static_cast<std::size_t>(degree)) bad(where, "tuple has the wrong length");
    check_range(tuple, n, where);
    std::size_t idx = 0;
    for (int x : tuple) idx = idx * n + static_cast<std::size_t>(x);
    if (!e[1].is_number_integer()) bad(where, "value must be an integer");
    int const v = e[1].get<int>();
    check_range({v}, module->coeff.order(), where);
    values[idx] = v;
  }
  return Cochain::from_values(std::move(module), degree, std::move(values));
}

}  // namespace xmodkit
