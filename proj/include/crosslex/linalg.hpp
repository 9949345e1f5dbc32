#pragma once

#include <vector>

#include "crosslex/matrix.hpp"

// Dense decompositions (backed by Eigen). Everything else in the
// pipeline goes through the kernels in kernels.hpp.

namespace crosslex::linalg {

struct SvdResult {
  Matrix u;               // m x r, orthonormal columns
  std::vector<double> s;  // r singular values, non-increasing
  Matrix v;               // n x r, orthonormal columns
};

// Thin SVD with a deterministic sign convention: the largest-magnitude
// entry of each column of u is made positive (the matching column of v
// is flipped with it).
SvdResult svd(const Matrix& a);

struct EighResult {
  std::vector<double> eigenvalues;  // descending
  Matrix eigenvectors;              // columns, same sign convention as svd()
};

// Eigendecomposition of a symmetric matrix.
EighResult eigh(const Matrix& a);

}  // namespace crosslex::linalg
