#pragma once

#include "mfkit/poly.hpp"

#include <optional>
#include <vector>

namespace mfkit {

/// Dense rectangular matrix of field scalars.
struct ScalarMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<CycNum> data;  // row-major

  ScalarMat() = default;
  ScalarMat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  CycNum& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const CycNum& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

struct RrefResult {
  ScalarMat mat;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form by exact Gaussian elimination.
RrefResult rref(const ScalarMat& m);

/// Exact solution of A x = b, or nullopt when inconsistent. Free variables
/// are set to zero.
std::optional<std::vector<CycNum>> solve(const ScalarMat& a,
                                         const std::vector<CycNum>& b);

/// Basis of the nullspace of A.
std::vector<std::vector<CycNum>> nullspace(const ScalarMat& a);

/// True iff the given degree-1 homogeneous polynomials have linearly
/// independent coefficient vectors. Throws on non-linear input.
bool are_independent_linear_forms(const std::vector<Poly>& forms);

}  // namespace mfkit
