#include "xmodkit/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <string>

namespace xmodkit {

namespace {

[[noreturn]] void not_a_group(std::string const& why, std::vector<int> witness) {
  throw Error(ErrorKind::NotAGroup, why, std::move(witness));
}

}  // namespace

FiniteGroup::FiniteGroup() : data_(std::make_shared<Data const>()) {}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> const& table,
                                    std::vector<std::string> labels) {
  std::size_t const n = table.size();
  if (n == 0) not_a_group("empty table", {});
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n) not_a_group("table is not square", {static_cast<int>(x)});
    for (int v : table[x]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        not_a_group("entry out of range", {static_cast<int>(x), v});
    }
  }
  if (!labels.empty() && labels.size() != n) not_a_group("label count mismatch", {});

  auto data = std::make_shared<Data>();
  data->n = n;
  data->table.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) data->table[x * n + y] = table[x][y];
  auto const& t = data->table;

  for (std::size_t x = 0; x < n; ++x) {
    if (t[x] != static_cast<int>(x) || t[x * n] != static_cast<int>(x))
      not_a_group("identity axiom fails: 0 is not a two-sided unit", {static_cast<int>(x)});
  }
  data->inverse.assign(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (t[x * n + y] == 0 && t[y * n + x] == 0) {
        data->inverse[x] = static_cast<int>(y);
        break;
      }
    }
    if (data->inverse[x] < 0) not_a_group("inverse axiom fails", {static_cast<int>(x)});
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]])
          not_a_group("associativity fails",
                      {static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)});
      }
  data->labels = std::move(labels);
  return FiniteGroup(std::move(data));
}

Elem FiniteGroup::power(Elem x, long k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Elem r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

int FiniteGroup::element_order(Elem x) const {
  int k = 1;
  for (Elem y = x; y != 0; y = mul(y, x)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  std::size_t const n = order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::size_t const n = order();
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) out[x][y] = mul(x, y);
  return out;
}

std::string FiniteGroup::label(Elem x) const {
  if (!data_->labels.empty()) return data_->labels[x];
  return std::to_string(x);
}

bool operator==(FiniteGroup const& a, FiniteGroup const& b) {
  return a.data_ == b.data_ || (a.data_->n == b.data_->n && a.data_->table == b.data_->table);
}

FiniteGroup trivial_group() { return FiniteGroup(); }

FiniteGroup cyclic_group(int n) {
  if (n <= 0) throw Error(ErrorKind::InvalidArgument, "cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = (x + y) % n;
  return FiniteGroup::from_table(t);
}

FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h) {
  int const m = static_cast<int>(g.order());
  int const k = static_cast<int>(h.order());
  std::vector<std::vector<int>> t(m * k, std::vector<int>(m * k));
  for (int a = 0; a < m * k; ++a)
    for (int b = 0; b < m * k; ++b) t[a][b] = g.mul(a / k, b / k) * k + h.mul(a % k, b % k);
  return FiniteGroup::from_table(t);
}

FiniteGroup dihedral_group(int n) {
  if (n <= 0) throw Error(ErrorKind::InvalidArgument, "dihedral parameter must be positive");
  // r^a s^e with s r = r^-1 s
  auto idx = [n](int a, int e) { return e * n + ((a % n) + n) % n; };
  std::vector<std::vector<int>> t(2 * n, std::vector<int>(2 * n));
  for (int x = 0; x < 2 * n; ++x)
    for (int y = 0; y < 2 * n; ++y) {
      int const a = x % n, e = x / n, b = y % n, f = y / n;
      t[x][y] = idx(e == 0 ? a + b : a - b, (e + f) % 2);
    }
  return FiniteGroup::from_table(t);
}

FiniteGroup quaternion_group() {
  // elements i^a j^e, a in 0..3, e in 0..1, with j^2 = i^2, j i = i^-1 j
  auto idx = [](int a, int e) { return e * 4 + ((a % 4) + 4) % 4; };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int const a = x % 4, e = x / 4, b = y % 4, f = y / 4;
      int const c = e == 0 ? a + b : a - b;
      if (e == 1 && f == 1)
        t[x][y] = idx(c + 2, 0);
      else
        t[x][y] = idx(c, (e + f) % 2);
    }
  return FiniteGroup::from_table(t);
}

Subset generated_subgroup(FiniteGroup const& g, std::vector<Elem> const& gens) {
  std::vector<char> seen(g.order(), 0);
  std::deque<Elem> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    Elem const x = queue.front();
    queue.pop_front();
    for (Elem s : gens) {
      Elem const y = g.mul(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  Subset out;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (seen[x]) out.push_back(static_cast<Elem>(x));
  return out;
}

std::vector<Elem> generating_set(FiniteGroup const& g) {
  std::vector<Elem> gens;
  Subset span{0};
  for (std::size_t x = 1; x < g.order(); ++x) {
    if (contains(span, static_cast<Elem>(x))) continue;
    gens.push_back(static_cast<Elem>(x));
    span = generated_subgroup(g, gens);
  }
  return gens;
}

bool contains(Subset const& s, Elem x) { return std::binary_search(s.begin(), s.end(), x); }

bool is_subgroup(FiniteGroup const& g, Subset const& s) {
  if (s.empty() || !std::is_sorted(s.begin(), s.end()) || s.front() != 0) return false;
  for (Elem x : s) {
    if (x < 0 || static_cast<std::size_t>(x) >= g.order()) return false;
    for (Elem y : s)
      if (!contains(s, g.mul(x, g.inv(y)))) return false;
  }
  return true;
}

bool is_normal(FiniteGroup const& g, Subset const& s) {
  if (!is_subgroup(g, s)) return false;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (Elem y : s)
      if (!contains(s, g.conj(static_cast<Elem>(x), y))) return false;
  return true;
}

GroupHom GroupHom::make(FiniteGroup source, FiniteGroup target, std::vector<Elem> map) {
  std::size_t const n = source.order();
  if (map.size() != n)
    throw Error(ErrorKind::NotAHom, "map length differs from source order");
  for (Elem v : map)
    if (v < 0 || static_cast<std::size_t>(v) >= target.order())
      throw Error(ErrorKind::NotAHom, "map entry out of target range", {v});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (map[source.mul(x, y)] != target.mul(map[x], map[y]))
        throw Error(ErrorKind::NotAHom, "h(xy) != h(x)h(y)",
                    {static_cast<int>(x), static_cast<int>(y)});
  return GroupHom(std::move(source), std::move(target), std::move(map));
}

GroupHom GroupHom::identity(FiniteGroup const& g) {
  std::vector<Elem> m(g.order());
  std::iota(m.begin(), m.end(), 0);
  return GroupHom(g, g, std::move(m));
}

GroupHom GroupHom::zero(FiniteGroup const& source, FiniteGroup const& target) {
  return GroupHom(source, target, std::vector<Elem>(source.order(), 0));
}

bool GroupHom::is_injective() const {
  return std::count(map_.begin(), map_.end(), 0) == 1;
}

bool GroupHom::is_surjective() const {
  std::vector<char> hit(target_.order(), 0);
  for (Elem v : map_) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool GroupHom::is_identity() const {
  if (!(source_ == target_)) return false;
  for (std::size_t x = 0; x < map_.size(); ++x)
    if (map_[x] != static_cast<Elem>(x)) return false;
  return true;
}

bool operator==(GroupHom const& a, GroupHom const& b) {
  return a.map_ == b.map_ && a.source_ == b.source_ && a.target_ == b.target_;
}

GroupHom compose(GroupHom const& outer, GroupHom const& inner) {
  if (!(inner.target() == outer.source()))
    throw Error(ErrorKind::InvalidArgument, "compose: inner target differs from outer source");
  std::vector<Elem> m(inner.source().order());
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = outer(inner(x));
  return GroupHom::make(inner.source(), outer.target(), std::move(m));
}

GroupHom inverse(GroupHom const& h) {
  if (!h.is_injective() || !h.is_surjective())
    throw Error(ErrorKind::InvalidArgument, "inverse of a non-bijective hom");
  std::vector<Elem> m(h.target().order());
  for (std::size_t x = 0; x < m.size(); ++x) m[h(x)] = static_cast<Elem>(x);
  return GroupHom::make(h.target(), h.source(), std::move(m));
}

KernelImage kernel_image(GroupHom const& h) {
  KernelImage out;
  std::vector<char> hit(h.target().order(), 0);
  for (std::size_t x = 0; x < h.source().order(); ++x) {
    if (h(x) == 0) out.kernel.push_back(static_cast<Elem>(x));
    hit[h(x)] = 1;
  }
  for (std::size_t y = 0; y < hit.size(); ++y)
    if (hit[y]) out.image.push_back(static_cast<Elem>(y));
  return out;
}

Subset center(FiniteGroup const& g) {
  Subset out;
  for (std::size_t z = 0; z < g.order(); ++z) {
    bool central = true;
    for (std::size_t x = 0; x < g.order() && central; ++x)
      central = g.mul(z, x) == g.mul(x, z);
    if (central) out.push_back(static_cast<Elem>(z));
  }
  return out;
}

CosetDecomposition left_cosets(FiniteGroup const& g, Subset const& s) {
  if (!is_subgroup(g, s)) throw Error(ErrorKind::NotASubgroup, "not a subgroup");
  CosetDecomposition out{g, s, {}, std::vector<int>(g.order(), -1), std::nullopt, std::nullopt};
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (out.coset_of[x] >= 0) continue;
    Subset coset;
    for (Elem y : s) coset.push_back(g.mul(static_cast<Elem>(x), y));
    std::sort(coset.begin(), coset.end());
    int const id = static_cast<int>(out.cosets.size());
    for (Elem y : coset) out.coset_of[y] = id;
    out.cosets.push_back(std::move(coset));
  }
  return out;
}

CosetDecomposition quotient(FiniteGroup const& g, Subset const& n) {
  CosetDecomposition out = left_cosets(g, n);
  for (std::size_t x = 0; x < g.order(); ++x)
    for (Elem y : n)
      if (!contains(n, g.conj(static_cast<Elem>(x), y)))
        throw Error(ErrorKind::NotNormal, "subgroup is not normal", {static_cast<int>(x), y});
  std::size_t const k = out.cosets.size();
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) t[a][b] = out.coset_of[g.mul(out.key(a), out.key(b))];
  out.quotient = FiniteGroup::from_table(t);
  out.projection = GroupHom::make(g, *out.quotient, out.coset_of);
  return out;
}

SubgroupView subgroup_group(FiniteGroup const& g, Subset const& s) {
  if (!is_subgroup(g, s)) throw Error(ErrorKind::NotASubgroup, "not a subgroup");
  std::vector<int> index_of(g.order(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) index_of[s[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(s.size(), std::vector<int>(s.size()));
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) t[a][b] = index_of[g.mul(s[a], s[b])];
  FiniteGroup sub = FiniteGroup::from_table(t);
  GroupHom incl = GroupHom::make(sub, g, s);
  return SubgroupView{std::move(sub), std::move(incl), std::move(index_of)};
}

namespace {

// Extends generator images multiplicatively along a BFS of the subgroup the
// generators span. Returns false on an inconsistency; `map` is -1 outside
// the span.
bool extend_images(FiniteGroup const& g, FiniteGroup const& h, std::vector<Elem> const& gens,
                   std::vector<Elem> const& images, std::vector<Elem>& map) {
  map.assign(g.order(), -1);
  map[0] = 0;
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    Elem const x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < images.size(); ++i) {
      Elem const y = g.mul(x, gens[i]);
      Elem const fy = h.mul(map[x], images[i]);
      if (map[y] < 0) {
        map[y] = fy;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

std::vector<GroupHom> search_homs(FiniteGroup const& g, FiniteGroup const& h, bool bijective) {
  std::vector<Elem> const gens = generating_set(g);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int const ord = g.element_order(gens[i]);
    for (std::size_t y = 0; y < h.order(); ++y) {
      int const oy = h.element_order(static_cast<Elem>(y));
      if (bijective ? oy == ord : ord % oy == 0) candidates[i].push_back(static_cast<Elem>(y));
    }
  }
  std::vector<std::vector<Elem>> found;
  std::vector<Elem> images;
  std::vector<Elem> map;
  std::function<void()> dfs = [&]() {
    // prune: the images chosen so far must extend on the subgroup they span
    if (!extend_images(g, h, gens, images, map)) return;
    if (images.size() == gens.size()) {
      if (bijective && std::count(map.begin(), map.end(), 0) != 1) return;
      found.push_back(map);
      return;
    }
    for (Elem y : candidates[images.size()]) {
      images.push_back(y);
      dfs();
      images.pop_back();
    }
  };
  dfs();
  std::sort(found.begin(), found.end());
  std::vector<GroupHom> out;
  out.reserve(found.size());
  for (auto& m : found) out.push_back(GroupHom::make(g, h, std::move(m)));
  return out;
}

}  // namespace

std::vector<GroupHom> all_homs(FiniteGroup const& g, FiniteGroup const& h) {
  return search_homs(g, h, false);
}

std::vector<GroupHom> automorphism_group(FiniteGroup const& g, std::size_t bound) {
  if (g.order() > bound)
    throw Error(ErrorKind::BoundExceeded,
                "group order " + std::to_string(g.order()) + " exceeds bound " +
                    std::to_string(bound));
  return search_homs(g, g, true);
}

GroupHom inner_automorphism(FiniteGroup const& g, Elem x) {
  std::vector<Elem> m(g.order());
  for (std::size_t y = 0; y < m.size(); ++y) m[y] = g.conj(x, static_cast<Elem>(y));
  return GroupHom::make(g, g, std::move(m));
}

ActionByAutomorphisms ActionByAutomorphisms::make(FiniteGroup actor, FiniteGroup acted,
                                                  std::vector<GroupHom> assign) {
  if (assign.size() != actor.order())
    throw Error(ErrorKind::NotAnAction, "one automorphism per actor element required");
  for (std::size_t x = 0; x < assign.size(); ++x) {
    if (!(assign[x].source() == acted) || !(assign[x].target() == acted) ||
        !assign[x].is_injective())
      throw Error(ErrorKind::NotAnAction, "entry is not an automorphism of the acted group",
                  {static_cast<int>(x)});
  }
  if (!assign[0].is_identity())
    throw Error(ErrorKind::NotAnAction, "identity does not act trivially", {0, 0});
  for (std::size_t x = 0; x < actor.order(); ++x)
    for (std::size_t y = 0; y < actor.order(); ++y) {
      auto const& xy = assign[actor.mul(x, y)];
      for (std::size_t b = 0; b < acted.order(); ++b)
        if (xy(b) != assign[x](assign[y](b)))
          throw Error(ErrorKind::NotAnAction, "assign[xy] != assign[x] o assign[y]",
                      {static_cast<int>(x), static_cast<int>(y)});
    }
  return ActionByAutomorphisms(std::move(actor), std::move(acted), std::move(assign));
}

ActionByAutomorphisms ActionByAutomorphisms::make(FiniteGroup actor, FiniteGroup acted,
                                                  std::vector<std::vector<Elem>> const& maps) {
  std::vector<GroupHom> assign;
  assign.reserve(maps.size());
  for (std::size_t x = 0; x < maps.size(); ++x) {
    try {
      assign.push_back(GroupHom::make(acted, acted, maps[x]));
    } catch (Error const& e) {
      throw Error(ErrorKind::NotAnAction, std::string("entry is not a hom: ") + e.what(),
                  {static_cast<int>(x)});
    }
  }
  return make(std::move(actor), std::move(acted), std::move(assign));
}

ActionByAutomorphisms ActionByAutomorphisms::trivial(FiniteGroup actor, FiniteGroup acted) {
  std::vector<GroupHom> assign(actor.order(), GroupHom::identity(acted));
  return ActionByAutomorphisms(std::move(actor), std::move(acted), std::move(assign));
}

ActionByAutomorphisms ActionByAutomorphisms::conjugation(FiniteGroup const& g) {
  std::vector<GroupHom> assign;
  for (std::size_t x = 0; x < g.order(); ++x)
    assign.push_back(inner_automorphism(g, static_cast<Elem>(x)));
  return make(g, g, std::move(assign));
}

bool ActionByAutomorphisms::is_trivial() const {
  return std::all_of(assign_.begin(), assign_.end(),
                     [](GroupHom const& h) { return h.is_identity(); });
}

bool operator==(ActionByAutomorphisms const& a, ActionByAutomorphisms const& b) {
  return a.actor_ == b.actor_ && a.acted_ == b.acted_ && a.assign_ == b.assign_;
}

ActionByAutomorphisms pull_back(ActionByAutomorphisms const& a, GroupHom const& hom) {
  if (!(hom.target() == a.actor()))
    throw Error(ErrorKind::InvalidArgument, "pull_back: hom target is not the actor");
  std::vector<GroupHom> assign;
  for (std::size_t x = 0; x < hom.source().order(); ++x) assign.push_back(a[hom(x)]);
  return ActionByAutomorphisms::make(hom.source(), a.acted(), std::move(assign));
}

}  // namespace xmodkit
