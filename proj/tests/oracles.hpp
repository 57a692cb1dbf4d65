#pragma once

// Brute-force reference implementations used to cross-check the library.
// They deliberately avoid the library's algorithms: everything here walks
// raw tables and enumerates exhaustively.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "xmodkit/cohomology.hpp"
#include "xmodkit/group.hpp"

namespace oracle {

using xmodkit::Elem;
using xmodkit::FiniteGroup;

inline std::vector<Elem> brute_center(FiniteGroup const& g) {
  std::vector<Elem> out;
  for (Elem z = 0; z < static_cast<Elem>(g.order()); ++z) {
    bool central = true;
    for (Elem x = 0; x < static_cast<Elem>(g.order()); ++x)
      central = central && g.mul(z, x) == g.mul(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

// All bijections preserving the table, by permutation search.
inline std::size_t brute_automorphism_count(FiniteGroup const& g) {
  std::vector<Elem> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool hom = perm[0] == 0;
    for (Elem x = 0; hom && x < static_cast<Elem>(g.order()); ++x)
      for (Elem y = 0; hom && y < static_cast<Elem>(g.order()); ++y)
        hom = perm[g.mul(x, y)] == g.mul(perm[x], perm[y]);
    if (hom) ++count;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return count;
}

// A normalized n-cochain as a function on explicit tuples.
struct NaiveModule {
  FiniteGroup g;
  FiniteGroup a;
  std::function<Elem(Elem, Elem)> act;  // x . m
};

using Tuple = std::vector<Elem>;

inline std::vector<Tuple> all_tuples(std::size_t n, int degree) {
  std::vector<Tuple> out{{}};
  for (int k = 0; k < degree; ++k) {
    std::vector<Tuple> next;
    for (auto const& t : out)
      for (Elem x = 0; x < static_cast<Elem>(n); ++x) {
        Tuple u = t;
        u.push_back(x);
        next.push_back(u);
      }
    out = next;
  }
  return out;
}

inline std::size_t tuple_index(Tuple const& t, std::size_t n) {
  std::size_t idx = 0;
  for (Elem x : t) idx = idx * n + static_cast<std::size_t>(x);
  return idx;
}

// Dense values over all tuples; textbook alternating sum.
inline std::vector<Elem> naive_delta(NaiveModule const& m, int degree,
                                     std::vector<Elem> const& f) {
  std::size_t const n = m.g.order();
  auto F = [&](Tuple const& t) { return f[tuple_index(t, n)]; };
  std::vector<Elem> out;
  for (Tuple const& t : all_tuples(n, degree + 1)) {
    Elem acc = m.act(t[0], F(Tuple(t.begin() + 1, t.end())));
    for (int i = 1; i <= degree; ++i) {
      Tuple u;
      for (int k = 0; k < degree + 1; ++k) {
        if (k == i) continue;
        if (k == i - 1)
          u.push_back(m.g.mul(t[k], t[k + 1]));
        else
          u.push_back(t[k]);
      }
      Elem v = F(u);
      acc = m.a.mul(acc, i % 2 ? m.a.inv(v) : v);
    }
    Elem last = F(Tuple(t.begin(), t.end() - 1));
    acc = m.a.mul(acc, (degree + 1) % 2 ? m.a.inv(last) : last);
    out.push_back(acc);
  }
  return out;
}

// Every normalized cochain of the given degree, in lexicographic order of
// the dense value vector.
inline std::vector<std::vector<Elem>> all_normalized(NaiveModule const& m, int degree) {
  std::size_t const n = m.g.order();
  auto tuples = all_tuples(n, degree);
  std::vector<std::size_t> free;
  for (auto const& t : tuples)
    if (std::find(t.begin(), t.end(), 0) == t.end()) free.push_back(tuple_index(t, n));
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> cur(tuples.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == free.size()) {
      out.push_back(cur);
      return;
    }
    for (Elem v = 0; v < static_cast<Elem>(m.a.order()); ++v) {
      cur[free[i]] = v;
      rec(i + 1);
    }
    cur[free[i]] = 0;
  };
  rec(0);
  return out;
}

struct Counts {
  std::uint64_t cocycles = 0, coboundaries = 0, classes = 0;
};

inline bool is_zero(std::vector<Elem> const& v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

inline Counts brute_counts(NaiveModule const& m, int degree) {
  Counts c;
  for (auto const& f : all_normalized(m, degree))
    if (is_zero(naive_delta(m, degree, f))) ++c.cocycles;
  std::set<std::vector<Elem>> bounds;
  for (auto const& f : all_normalized(m, degree - 1)) bounds.insert(naive_delta(m, degree - 1, f));
  c.coboundaries = bounds.size();
  c.classes = c.cocycles / c.coboundaries;
  return c;
}

inline NaiveModule naive(xmodkit::GModule const& m) {
  auto const copy = std::make_shared<xmodkit::GModule>(m);
  return NaiveModule{m.group, m.coeff, [copy](Elem x, Elem a) { return copy->act(x, a); }};
}

}  // namespace oracle
