#pragma once

// Small dense exact linear algebra over Q, used for rank computations and for
// expressing a value in terms of basis weights.

#include <optional>
#include <vector>

#include "valform/ordgroup.hpp"
#include "valform/rational.hpp"

namespace valform::linalg {

using Matrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& rows);

std::size_t rank(Matrix rows);
std::size_t rank(const std::vector<GroupElement>& vectors);

Rational determinant(Matrix m);

/// Coefficients c with sum c_i * vectors[i] == target, or nullopt when target
/// is outside the span. The vectors must be linearly independent.
std::optional<std::vector<Rational>> coordinates_in_span(const std::vector<GroupElement>& vectors,
                                                         const GroupElement& target);

}  // namespace valform::linalg
