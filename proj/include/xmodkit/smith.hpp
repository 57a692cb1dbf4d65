#pragma once

#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "xmodkit/group.hpp"

namespace xmodkit {

using Integer = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<Integer>>;

/// Diagonal reduction of an integer matrix by unimodular row and column
/// operations: left * m * right = diag(diagonal) (padded with zeros).
/// The diagonal is not normalized to a divisibility chain; everything here
/// only needs some diagonal form.
struct Diagonalization {
  std::vector<Integer> diagonal;  // length min(rows, cols); entries >= 0
  IntMatrix left;                 // rows x rows, empty unless tracked
  IntMatrix right;                // cols x cols, empty unless tracked
};

Diagonalization diagonalize(IntMatrix m, std::size_t cols, bool track);

/// Some integer solution x of m x = rhs, or nullopt if none exists.
std::optional<std::vector<Integer>> solve_integer_system(IntMatrix const& m, std::size_t cols,
                                                         std::vector<Integer> const& rhs);

/// A finite abelian group written as a direct sum of cyclic groups Z/moduli[i]
/// (every modulus > 1), with coordinates for every element.
struct AbelianDecomposition {
  std::vector<int> moduli;
  std::vector<std::vector<int>> coords;  // element -> coordinates
  std::map<std::vector<int>, Elem> lookup;

  Elem element(std::vector<int> c) const;
  std::size_t rank() const { return moduli.size(); }
};

/// Throws NotAbelian.
AbelianDecomposition decompose_abelian(FiniteGroup const& a);

}  // namespace xmodkit
