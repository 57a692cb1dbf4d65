#include "xmodkit/cohomology.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <string>

#include "parallel.hpp"
#include "xmodkit/smith.hpp"

namespace xmodkit {

std::shared_ptr<GModule const> GModule::make(FiniteGroup group, FiniteGroup coeff,
                                             ActionByAutomorphisms action) {
  if (!coeff.is_abelian()) throw Error(ErrorKind::NotAbelian, "module coefficients not abelian");
  if (!(action.actor() == group) || !(action.acted() == coeff))
    throw Error(ErrorKind::InvalidArgument, "action does not match module groups");
  return std::make_shared<GModule const>(
      GModule{std::move(group), std::move(coeff), std::move(action)});
}

std::shared_ptr<GModule const> GModule::trivial(FiniteGroup group, FiniteGroup coeff) {
  auto action = ActionByAutomorphisms::trivial(group, coeff);
  return make(std::move(group), std::move(coeff), std::move(action));
}

bool same_module(GModule const& a, GModule const& b) {
  return a.group == b.group && a.coeff == b.coeff && a.action == b.action;
}

std::size_t tuple_count(std::size_t group_order, int degree) {
  std::size_t n = 1;
  for (int i = 0; i < degree; ++i) n *= group_order;
  return n;
}

std::vector<std::size_t> normalized_tuples(std::size_t group_order, int degree) {
  std::vector<std::size_t> out;
  std::size_t const total = tuple_count(group_order, degree);
  for (std::size_t t = 0; t < total; ++t) {
    bool ok = true;
    for (std::size_t r = t, i = 0; i < static_cast<std::size_t>(degree); ++i, r /= group_order)
      if (r % group_order == 0) ok = false;
    if (ok) out.push_back(t);
  }
  return out;
}

namespace {

void check_degree(int degree) {
  if (degree < 0 || degree > 4)
    throw Error(ErrorKind::InvalidArgument, "cochain degree must lie in 0..4");
}

std::size_t encode(std::span<Elem const> args, std::size_t m) {
  std::size_t t = 0;
  for (Elem a : args) t = t * m + static_cast<std::size_t>(a);
  return t;
}

std::vector<Elem> decode(std::size_t t, std::size_t m, int degree) {
  std::vector<Elem> args(degree);
  for (int i = degree - 1; i >= 0; --i, t /= m) args[i] = static_cast<Elem>(t % m);
  return args;
}

// One term of a coboundary evaluated at a fixed (n+1)-tuple:
// sign * actor · f(tuple).
struct Term {
  std::size_t tuple;  // dense index of the degree-n argument tuple
  Elem actor;
  bool negative;
  bool vanishes;  // argument contains the identity
};

std::vector<Term> coboundary_terms(std::vector<Elem> const& g, FiniteGroup const& grp) {
  int const n = static_cast<int>(g.size()) - 1;
  std::size_t const m = grp.order();
  std::vector<Term> terms;
  auto add = [&](std::vector<Elem> const& args, Elem actor, bool negative) {
    bool const vanishes = std::find(args.begin(), args.end(), 0) != args.end();
    terms.push_back(Term{encode(args, m), actor, negative, vanishes});
  };
  add(std::vector<Elem>(g.begin() + 1, g.end()), g[0], false);
  for (int i = 1; i <= n; ++i) {
    std::vector<Elem> args;
    for (int k = 0; k < i - 1; ++k) args.push_back(g[k]);
    args.push_back(grp.mul(g[i - 1], g[i]));
    for (int k = i + 1; k <= n; ++k) args.push_back(g[k]);
    add(args, 0, i % 2 == 1);
  }
  add(std::vector<Elem>(g.begin(), g.end() - 1), 0, (n + 1) % 2 == 1);
  return terms;
}

double space_bits(std::size_t positions, std::size_t coeff_order) {
  return static_cast<double>(positions) * std::log2(static_cast<double>(coeff_order));
}

void check_budget(double bits, Limits const& limits, char const* what) {
  if (bits > limits.enumeration_bits)
    throw Error(ErrorKind::BudgetExceeded,
                std::string(what) + ": search space of 2^" + std::to_string(bits) +
                    " exceeds budget 2^" + std::to_string(limits.enumeration_bits));
}

// Odometer over normalized cochains in canonical (lexicographic) order.
class CochainOdometer {
 public:
  CochainOdometer(std::size_t positions, std::size_t coeff_order)
      : digits_(positions, 0), base_(static_cast<Elem>(coeff_order)) {}
  std::vector<Elem> const& digits() const { return digits_; }
  bool next() {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < base_) return true;
      digits_[i] = 0;
    }
    return false;
  }

 private:
  std::vector<Elem> digits_;
  Elem base_;
};

}  // namespace

Cochain Cochain::zero(ModulePtr module, int degree) {
  check_degree(degree);
  std::size_t const n = tuple_count(module->group.order(), degree);
  return Cochain(std::move(module), degree, std::vector<Elem>(n, 0));
}

Cochain Cochain::from_values(ModulePtr module, int degree, std::vector<Elem> values) {
  check_degree(degree);
  std::size_t const m = module->group.order();
  if (values.size() != tuple_count(m, degree))
    throw Error(ErrorKind::InvalidArgument, "cochain value count mismatch");
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (values[t] < 0 || static_cast<std::size_t>(values[t]) >= module->coeff.order())
      throw Error(ErrorKind::InvalidArgument, "cochain value out of range",
                  {static_cast<int>(t)});
    auto const args = decode(t, m, degree);
    if (values[t] != 0 && std::find(args.begin(), args.end(), 0) != args.end())
      throw Error(ErrorKind::InvalidArgument, "cochain is not normalized", args);
  }
  return Cochain(std::move(module), degree, std::move(values));
}

Cochain Cochain::from_normalized(ModulePtr module, int degree, std::span<Elem const> normalized) {
  check_degree(degree);
  auto const pos = normalized_tuples(module->group.order(), degree);
  if (pos.size() != normalized.size())
    throw Error(ErrorKind::InvalidArgument, "normalized value count mismatch");
  std::vector<Elem> values(tuple_count(module->group.order(), degree), 0);
  for (std::size_t i = 0; i < pos.size(); ++i) values[pos[i]] = normalized[i];
  return from_values(std::move(module), degree, std::move(values));
}

Elem Cochain::at(std::span<Elem const> args) const {
  return values_[encode(args, module_->group.order())];
}

Elem Cochain::at(Elem x, Elem y) const {
  return values_[static_cast<std::size_t>(x) * module_->group.order() + y];
}

Elem Cochain::at(Elem x, Elem y, Elem z) const {
  std::size_t const m = module_->group.order();
  return values_[(static_cast<std::size_t>(x) * m + y) * m + z];
}

std::vector<Elem> Cochain::normalized_values() const {
  std::vector<Elem> out;
  for (std::size_t t : normalized_tuples(module_->group.order(), degree_)) out.push_back(values_[t]);
  return out;
}

bool Cochain::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](Elem v) { return v == 0; });
}

namespace {

void require_compatible(Cochain const& a, Cochain const& b) {
  if (a.degree() != b.degree() ||
      (a.module_ptr() != b.module_ptr() && !same_module(a.module(), b.module())))
    throw Error(ErrorKind::TypeMismatch, "cochains live over different modules or degrees");
}

}  // namespace

Cochain Cochain::operator+(Cochain const& o) const {
  require_compatible(*this, o);
  std::vector<Elem> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = module_->add(values_[i], o.values_[i]);
  return Cochain(module_, degree_, std::move(v));
}

Cochain Cochain::operator-(Cochain const& o) const {
  require_compatible(*this, o);
  std::vector<Elem> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = module_->sub(values_[i], o.values_[i]);
  return Cochain(module_, degree_, std::move(v));
}

Cochain Cochain::operator-() const {
  std::vector<Elem> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = module_->neg(values_[i]);
  return Cochain(module_, degree_, std::move(v));
}

bool operator==(Cochain const& a, Cochain const& b) {
  return a.degree_ == b.degree_ && a.values_ == b.values_ && same_module(*a.module_, *b.module_);
}

Cochain coboundary(Cochain const& c) {
  if (c.degree() >= 4) throw Error(ErrorKind::InvalidArgument, "coboundary of a 4-cochain");
  GModule const& mod = c.module();
  std::size_t const m = mod.group.order();
  int const n = c.degree();
  std::size_t const total = tuple_count(m, n + 1);
  std::vector<Elem> out(total, 0);
  for (std::size_t t = 0; t < total; ++t) {
    Elem acc = 0;
    for (Term const& term : coboundary_terms(decode(t, m, n + 1), mod.group)) {
      Elem v = mod.act(term.actor, c.values()[term.tuple]);
      acc = term.negative ? mod.sub(acc, v) : mod.add(acc, v);
    }
    out[t] = acc;
  }
  return Cochain::from_values(c.module_ptr(), n + 1, std::move(out));
}

bool is_cocycle(Cochain const& c) { return coboundary(c).is_zero(); }

Cochain push_forward(Cochain const& c, GroupHom const& f, ModulePtr target) {
  if (!(f.source() == c.module().coeff) || !(f.target() == target->coeff) ||
      !(target->group == c.module().group))
    throw Error(ErrorKind::TypeMismatch, "push_forward: hom does not match modules");
  std::vector<Elem> v(c.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(c.values()[i]);
  return Cochain::from_values(std::move(target), c.degree(), std::move(v));
}

Cochain pull_back(Cochain const& c, GroupHom const& phi, ModulePtr target) {
  if (!(phi.target() == c.module().group) || !(phi.source() == target->group) ||
      !(target->coeff == c.module().coeff))
    throw Error(ErrorKind::TypeMismatch, "pull_back: hom does not match modules");
  std::size_t const m = target->group.order();
  std::size_t const total = tuple_count(m, c.degree());
  std::vector<Elem> v(total);
  for (std::size_t t = 0; t < total; ++t) {
    auto args = decode(t, m, c.degree());
    for (auto& a : args) a = phi(a);
    v[t] = c.at(args);
  }
  return Cochain::from_values(std::move(target), c.degree(), std::move(v));
}

// ---------------------------------------------------------------------------
// Enumeration backend

namespace {

struct Constraint {
  struct Ref {
    std::size_t position;
    Elem actor;
    bool negative;
  };
  std::vector<Ref> refs;
};

// Cocycle conditions at every normalized (n+1)-tuple, each attached to the
// last cochain position it reads.
std::vector<std::vector<Constraint>> cocycle_constraints(GModule const& mod, int degree,
                                                         std::vector<std::size_t> const& pos) {
  std::size_t const m = mod.group.order();
  std::vector<long> pos_of(tuple_count(m, degree), -1);
  for (std::size_t i = 0; i < pos.size(); ++i) pos_of[pos[i]] = static_cast<long>(i);
  std::vector<std::vector<Constraint>> at(pos.size());
  for (std::size_t t : normalized_tuples(m, degree + 1)) {
    Constraint con;
    std::size_t last = 0;
    for (Term const& term : coboundary_terms(decode(t, m, degree + 1), mod.group)) {
      if (term.vanishes) continue;
      auto const p = static_cast<std::size_t>(pos_of[term.tuple]);
      con.refs.push_back({p, term.actor, term.negative});
      last = std::max(last, p);
    }
    if (!con.refs.empty()) at[last].push_back(std::move(con));
  }
  return at;
}

bool satisfied(GModule const& mod, Constraint const& con, std::vector<Elem> const& vals) {
  Elem acc = 0;
  for (auto const& r : con.refs) {
    Elem const v = mod.act(r.actor, vals[r.position]);
    acc = r.negative ? mod.sub(acc, v) : mod.add(acc, v);
  }
  return acc == 0;
}

}  // namespace

std::vector<Cochain> enumerate_cocycles(ModulePtr module, int degree, Limits const& limits) {
  check_degree(degree);
  if (degree >= 4) throw Error(ErrorKind::InvalidArgument, "cocycles of degree 4 not supported");
  GModule const& mod = *module;
  auto const pos = normalized_tuples(mod.group.order(), degree);
  check_budget(space_bits(pos.size(), mod.coeff.order()), limits, "enumerate_cocycles");
  auto const constraints = cocycle_constraints(mod, degree, pos);
  auto const base = static_cast<Elem>(mod.coeff.order());

  // split on leading positions so workers get independent subtrees
  std::size_t split = 0;
  std::size_t branches = 1;
  while (limits.threads > 1 && split < pos.size() && branches < 4u * limits.threads) {
    branches *= static_cast<std::size_t>(base);
    ++split;
  }

  auto solve_branch = [&](std::size_t branch) {
    std::vector<std::vector<Elem>> found;
    std::vector<Elem> vals(pos.size(), 0);
    for (std::size_t i = split, b = branch; i-- > 0; b /= base) vals[i] = static_cast<Elem>(b % base);
    for (std::size_t p = 0; p < split; ++p)
      for (auto const& con : constraints[p])
        if (!satisfied(mod, con, vals)) return found;
    std::function<void(std::size_t)> dfs = [&](std::size_t p) {
      if (p == pos.size()) {
        found.push_back(vals);
        return;
      }
      for (Elem v = 0; v < base; ++v) {
        vals[p] = v;
        bool ok = true;
        for (auto const& con : constraints[p])
          if (!satisfied(mod, con, vals)) {
            ok = false;
            break;
          }
        if (ok) dfs(p + 1);
      }
      vals[p] = 0;
    };
    dfs(split);
    return found;
  };

  auto const parts = detail::parallel_map(branches, limits.threads, solve_branch);
  std::vector<Cochain> out;
  for (auto const& part : parts)
    for (auto const& vals : part) out.push_back(Cochain::from_normalized(module, degree, vals));
  return out;
}

std::vector<Cochain> enumerate_coboundaries(ModulePtr module, int degree, Limits const& limits) {
  check_degree(degree);
  if (degree == 0) return {Cochain::zero(module, 0)};
  auto const pos = normalized_tuples(module->group.order(), degree - 1);
  check_budget(space_bits(pos.size(), module->coeff.order()), limits, "enumerate_coboundaries");
  std::set<std::vector<Elem>> seen;
  CochainOdometer odo(pos.size(), module->coeff.order());
  do {
    seen.insert(coboundary(Cochain::from_normalized(module, degree - 1, odo.digits())).values());
  } while (odo.next());
  std::vector<Cochain> out;
  for (auto const& v : seen) out.push_back(Cochain::from_values(module, degree, v));
  return out;
}

// ---------------------------------------------------------------------------
// Linear backend: cochains as integer vectors over the cyclic factors of A

namespace {

class LinearModel {
 public:
  explicit LinearModel(ModulePtr module)
      : module_(std::move(module)), dec_(decompose_abelian(module_->coeff)) {
    std::size_t const g = dec_.rank();
    for (std::size_t i = 0; i < g; ++i) {
      std::vector<int> unit(g, 0);
      unit[i] = 1;
      basis_.push_back(dec_.element(unit));
    }
    for (std::size_t x = 0; x < module_->group.order(); ++x) {
      IntMatrix act(g, std::vector<Integer>(g, 0));
      for (std::size_t i = 0; i < g; ++i) {
        auto const& c = dec_.coords[module_->act(static_cast<Elem>(x), basis_[i])];
        for (std::size_t j = 0; j < g; ++j) act[j][i] = c[j];
      }
      action_.push_back(std::move(act));
    }
  }

  std::size_t rank() const { return dec_.rank(); }
  std::size_t positions(int degree) const {
    return normalized_tuples(module_->group.order(), degree).size();
  }

  // Integer lift of δ: C^n -> C^{n+1} on normalized coordinates.
  IntMatrix coboundary_matrix(int degree) const {
    std::size_t const g = rank();
    std::size_t const m = module_->group.order();
    auto const src = normalized_tuples(m, degree);
    auto const dst = normalized_tuples(m, degree + 1);
    std::vector<long> pos_of(tuple_count(m, degree), -1);
    for (std::size_t i = 0; i < src.size(); ++i) pos_of[src[i]] = static_cast<long>(i);
    IntMatrix mat(dst.size() * g, std::vector<Integer>(src.size() * g, 0));
    for (std::size_t r = 0; r < dst.size(); ++r) {
      for (Term const& term : coboundary_terms(decode(dst[r], m, degree + 1), module_->group)) {
        if (term.vanishes) continue;
        auto const q = static_cast<std::size_t>(pos_of[term.tuple]);
        IntMatrix const& a = action_[term.actor];
        for (std::size_t j = 0; j < g; ++j)
          for (std::size_t i = 0; i < g; ++i)
            mat[r * g + j][q * g + i] += term.negative ? Integer(-a[j][i]) : a[j][i];
      }
    }
    return mat;
  }

  // [M | diag(moduli...)] so that solutions live in the quotient lattice
  IntMatrix with_relations(IntMatrix mat, std::size_t source_cols, std::size_t target_positions,
                           std::size_t& cols) const {
    std::size_t const g = rank();
    cols = source_cols + target_positions * g;
    for (std::size_t r = 0; r < mat.size(); ++r) {
      mat[r].resize(cols, 0);
      mat[r][source_cols + r] = dec_.moduli[r % g];
    }
    return mat;
  }

  // |image of δ_degree| inside C^{degree+1}
  Integer image_size(int degree) const {
    std::size_t const g = rank();
    std::size_t const target = positions(degree + 1);
    Integer total = 1;
    for (std::size_t p = 0; p < target; ++p)
      for (int d : dec_.moduli) total *= d;
    if (g == 0 || target == 0) return 1;
    std::size_t cols = 0;
    auto mat = with_relations(coboundary_matrix(degree), positions(degree) * g, target, cols);
    Diagonalization const dz = diagonalize(std::move(mat), cols, false);
    Integer coker = 1;
    for (auto const& s : dz.diagonal) coker *= s;
    return total / coker;
  }

  Integer cochain_count(int degree) const {
    Integer total = 1;
    for (std::size_t p = 0; p < positions(degree); ++p)
      for (int d : dec_.moduli) total *= d;
    return total;
  }

  std::optional<Cochain> witness(Cochain const& c) const {
    int const n = c.degree();
    std::size_t const g = rank();
    if (g == 0) return Cochain::zero(module_, n - 1);
    std::size_t const src = positions(n - 1) * g;
    std::size_t cols = 0;
    auto mat = with_relations(coboundary_matrix(n - 1), src, positions(n), cols);
    std::vector<Integer> rhs;
    for (Elem v : c.normalized_values())
      for (int x : dec_.coords[v]) rhs.push_back(x);
    auto sol = solve_integer_system(mat, cols, rhs);
    if (!sol) return std::nullopt;
    std::vector<Elem> vals;
    for (std::size_t p = 0; p < positions(n - 1); ++p) {
      std::vector<int> coords(g);
      for (std::size_t i = 0; i < g; ++i) {
        Integer v = (*sol)[p * g + i] % dec_.moduli[i];
        if (v < 0) v += dec_.moduli[i];
        coords[i] = static_cast<int>(v);
      }
      vals.push_back(dec_.element(coords));
    }
    return Cochain::from_normalized(module_, n - 1, vals);
  }

 private:
  ModulePtr module_;
  AbelianDecomposition dec_;
  std::vector<Elem> basis_;
  std::vector<IntMatrix> action_;
};

std::uint64_t to_count(Integer const& v) {
  if (v > Integer(std::numeric_limits<std::int64_t>::max()))
    throw Error(ErrorKind::BudgetExceeded, "count does not fit in 64 bits");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::optional<Cochain> coboundary_witness(Cochain const& c, Limits const& limits,
                                          Backend backend) {
  if (c.degree() < 1) throw Error(ErrorKind::InvalidArgument, "witness needs degree >= 1");
  if (!is_cocycle(c)) throw Error(ErrorKind::NotACocycle, "coboundary_witness of a non-cocycle");
  ModulePtr const& module = c.module_ptr();
  auto const pos = normalized_tuples(module->group.order(), c.degree() - 1);
  double const bits = space_bits(pos.size(), module->coeff.order());
  if (backend == Backend::Automatic)
    backend = bits <= limits.enumeration_bits ? Backend::Enumeration : Backend::Linear;

  if (backend == Backend::Linear) {
    auto w = LinearModel(module).witness(c);
    if (w && !(coboundary(*w) == c))
      throw std::logic_error("linear witness does not satisfy dw = c");
    return w;
  }

  check_budget(bits, limits, "coboundary_witness");
  if (c.is_zero()) return Cochain::zero(module, c.degree() - 1);
  auto const target = c.normalized_values();
  auto const dst = normalized_tuples(module->group.order(), c.degree());
  CochainOdometer odo(pos.size(), module->coeff.order());
  do {
    auto w = Cochain::from_normalized(module, c.degree() - 1, odo.digits());
    auto const dw = coboundary(w);
    bool match = true;
    for (std::size_t i = 0; i < dst.size() && match; ++i) match = dw.values()[dst[i]] == target[i];
    if (match) return w;
  } while (odo.next());
  return std::nullopt;
}

bool cohomologous(Cochain const& a, Cochain const& b, Limits const& limits) {
  return coboundary_witness(a - b, limits).has_value();
}

CohomologyCounts cohomology_counts(ModulePtr module, int degree, Backend backend,
                                   Limits const& limits) {
  if (degree < 1 || degree > 3)
    throw Error(ErrorKind::InvalidArgument, "cohomology degree must lie in 1..3");
  if (backend == Backend::Automatic) {
    try {
      return cohomology_counts(module, degree, Backend::Enumeration, limits);
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      return cohomology_counts(module, degree, Backend::Linear, limits);
    }
  }
  CohomologyCounts out;
  if (backend == Backend::Linear) {
    LinearModel const model(module);
    Integer const cocycles = model.cochain_count(degree) / model.image_size(degree);
    Integer const boundaries = model.image_size(degree - 1);
    out.cocycles = to_count(cocycles);
    out.coboundaries = to_count(boundaries);
    out.classes = to_count(cocycles / boundaries);
    return out;
  }
  out.cocycles = enumerate_cocycles(module, degree, limits).size();
  out.coboundaries = enumerate_coboundaries(module, degree, limits).size();
  out.classes = out.cocycles / out.coboundaries;
  return out;
}

CohomologyReport cohomology_report(ModulePtr module, int degree, Limits const& limits,
                                   bool cross_check) {
  if (degree < 1 || degree > 3)
    throw Error(ErrorKind::InvalidArgument, "cohomology degree must lie in 1..3");
  auto const cocycles = enumerate_cocycles(module, degree, limits);
  auto const boundaries = enumerate_coboundaries(module, degree, limits);
  CohomologyReport report{module, degree, cocycles.size(), boundaries.size(), {}};

  std::set<std::vector<Elem>> covered;
  for (auto const& z : cocycles) {
    if (covered.count(z.values())) continue;
    report.class_representatives.push_back(z);
    for (auto const& b : boundaries) covered.insert((z + b).values());
  }
  if (report.cocycle_count != report.coboundary_count * report.class_representatives.size())
    throw std::logic_error("cohomology_report: |Z| != |B| * |H|");

  if (cross_check) {
    auto const lin = cohomology_counts(module, degree, Backend::Linear, limits);
    if (lin.cocycles != report.cocycle_count || lin.coboundaries != report.coboundary_count ||
        lin.classes != report.class_representatives.size())
      throw std::logic_error("cohomology backends disagree");
  }
  return report;
}

}  // namespace xmodkit
