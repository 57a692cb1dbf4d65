#include "xmodkit/smith.hpp"

#include <utility>

namespace xmodkit {

namespace {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (auto& row : m) std::swap(row[a], row[b]);
}

// col_dst -= q * col_src
void sub_col(IntMatrix& m, std::size_t dst, std::size_t src, Integer const& q) {
  for (auto& row : m) row[dst] -= q * row[src];
}

void sub_row(IntMatrix& m, std::size_t dst, std::size_t src, Integer const& q) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] -= q * m[src][j];
}

}  // namespace

Diagonalization diagonalize(IntMatrix a, std::size_t cols, bool track) {
  std::size_t const rows = a.size();
  Diagonalization out;
  if (track) {
    out.left = identity_matrix(rows);
    out.right = identity_matrix(cols);
  }
  std::size_t const steps = std::min(rows, cols);
  out.diagonal.assign(steps, 0);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // least nonzero |entry| in the trailing block
      std::size_t pi = rows, pj = cols;
      Integer best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          Integer const v = abs(a[i][j]);
          if (pi == rows || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) return out;  // trailing block is zero
      std::swap(a[t], a[pi]);
      if (track) std::swap(out.left[t], out.left[pi]);
      swap_cols(a, t, pj);
      if (track) swap_cols(out.right, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Integer const q = a[i][t] / a[t][t];
        sub_row(a, i, t, q);
        if (track) sub_row(out.left, i, t, q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Integer const q = a[t][j] / a[t][t];
        sub_col(a, j, t, q);
        if (track) sub_col(out.right, j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[t][t] < 0) {
      for (auto& v : a[t]) v = -v;
      if (track)
        for (auto& v : out.left[t]) v = -v;
    }
    out.diagonal[t] = a[t][t];
  }
  return out;
}

std::optional<std::vector<Integer>> solve_integer_system(IntMatrix const& m, std::size_t cols,
                                                         std::vector<Integer> const& rhs) {
  std::size_t const rows = m.size();
  Diagonalization const dz = diagonalize(m, cols, true);
  // S (V^-1 x) = U rhs
  std::vector<Integer> u(rows, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < rows; ++k) u[i] += dz.left[i][k] * rhs[k];
  std::vector<Integer> w(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    Integer const s = i < dz.diagonal.size() ? dz.diagonal[i] : Integer(0);
    if (s == 0) {
      if (u[i] != 0) return std::nullopt;
      continue;
    }
    if (u[i] % s != 0) return std::nullopt;
    w[i] = u[i] / s;
  }
  std::vector<Integer> x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t k = 0; k < cols; ++k) x[i] += dz.right[i][k] * w[k];
  return x;
}

Elem AbelianDecomposition::element(std::vector<int> c) const {
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ((c[i] % moduli[i]) + moduli[i]) % moduli[i];
  return lookup.at(c);
}

AbelianDecomposition decompose_abelian(FiniteGroup const& a) {
  if (!a.is_abelian()) throw Error(ErrorKind::NotAbelian, "coefficient group is not abelian");
  std::size_t const n = a.order();
  // presentation: generators e_x, relations e_x + e_y - e_{x+y}
  IntMatrix rel;
  rel.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) {
      std::vector<Integer> r(n, 0);
      r[x] += 1;
      r[y] += 1;
      r[a.mul(x, y)] -= 1;
      rel.push_back(std::move(r));
    }
  Diagonalization const dz = diagonalize(rel, n, true);
  // x -> x * right maps the relation lattice onto the diagonal lattice
  AbelianDecomposition out;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i) {
    Integer const s = i < dz.diagonal.size() ? dz.diagonal[i] : Integer(0);
    if (s == 0) throw Error(ErrorKind::InvalidArgument, "infinite presentation for a finite group");
    if (s > 1) {
      kept.push_back(i);
      out.moduli.push_back(static_cast<int>(s));
    }
  }
  out.coords.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<int> c;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      Integer v = dz.right[x][kept[k]] % out.moduli[k];
      if (v < 0) v += out.moduli[k];
      c.push_back(static_cast<int>(v));
    }
    out.lookup.emplace(c, static_cast<Elem>(x));
    out.coords[x] = std::move(c);
  }
  if (out.lookup.size() != n)
    throw Error(ErrorKind::InvalidArgument, "cyclic decomposition is not a bijection");
  return out;
}

}  // namespace xmodkit
