#pragma once

#include <optional>
#include <vector>

#include "eqhom/matrix.hpp"

namespace eqhom {

/// Column Hermite form of an integer matrix: A * transform = hermite, where
/// transform is unimodular and hermite is lower echelon. The first `rank`
/// columns of hermite are nonzero with strictly increasing pivot rows and
/// positive pivots; entries left of a pivot are reduced into [0, pivot).
struct HermiteForm {
  Matrix hermite;
  Matrix transform;
  std::vector<std::size_t> pivot_rows;
  std::size_t rank() const { return pivot_rows.size(); }
};

HermiteForm column_hermite_form(const Matrix& a);

/// Nonzero diagonal of the Smith normal form of an integer matrix: positive,
/// each entry dividing the next.
std::vector<Integer> smith_diagonal(const Matrix& a);

std::size_t rank(const Ring& ring, const Matrix& a);

/// Basis of {x : a x = 0} as the columns of the result. Over Z the columns
/// are a basis of the (saturated) integer kernel lattice.
Matrix kernel(const Ring& ring, const Matrix& a);

/// Some x with a x = b (b may have several columns), or nullopt. Over Z the
/// solution is integral; integral infeasibility is reported even when a
/// rational solution exists.
std::optional<Matrix> solve(const Ring& ring, const Matrix& a, const Matrix& b);

bool is_invertible(const Ring& ring, const Matrix& a);

}  // namespace eqhom
