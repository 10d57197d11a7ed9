#pragma once

// Dense exact linear algebra over Q for the small matrices that occur here
// (design matrices, degree-map systems, hyperplane normals).

#include "toric/rational.hpp"

#include <optional>
#include <vector>

namespace toric::linalg {

using Matrix = std::vector<RationalVector>;
using IntMatrix = std::vector<std::vector<long long>>;

Matrix to_rational(const IntMatrix& m);

struct Echelon {
    Matrix reduced;                  // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

/// `cols` is only consulted when `m` has no rows.
Echelon rref(Matrix m, std::size_t cols = 0);

std::size_t rank(const Matrix& m);
std::size_t rank(const IntMatrix& m);

/// Basis of {x : m x = 0}; one vector per free column.
std::vector<RationalVector> nullspace(const Matrix& m, std::size_t cols);

/// Nullspace basis scaled to primitive integer vectors.
std::vector<std::vector<long long>> integer_nullspace(const IntMatrix& m, std::size_t cols);

/// Some solution of m x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const Matrix& m, const RationalVector& b, std::size_t cols);

} // namespace toric::linalg
