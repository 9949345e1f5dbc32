#pragma once

#include <utility>
#include <vector>

#include "crosslex/matrix.hpp"

// Embedding-space transformations applied before initialization and
// self-learning.

namespace crosslex::preprocess {

struct LinearTransformSpec {
  double alpha_src = 0.0;
  double alpha_trg = 0.0;
};

struct PcaModel {
  std::vector<double> mean;                // d
  Matrix components;                       // d x r, orthonormal columns
  std::vector<double> explained_variance;  // r, non-increasing
};

// Length normalization, mean centering across each dimension, then
// length normalization again, in exactly that order. Throws if a row
// cannot be length-normalized (the message names the row).
Matrix normalize(const Matrix& emb);

// Centered input projected onto the top target_dim principal
// components, ordered by decreasing variance.
std::pair<Matrix, PcaModel> pca_reduce(const Matrix& emb, std::size_t target_dim);

// X * Q * Delta^alpha where X^T X = Q Delta Q^T. Changes the
// similarity order of the space: gram(transform(X, (n-1)/2)) equals
// gram(X)^n. Eigenvalues are floored at 1e-12 before exponentiation so
// negative alpha stays defined on rank-deficient inputs.
Matrix linear_transform(const Matrix& emb, double alpha);

// Joint scaling that equalizes the singular value distributions of the
// two spaces: X' = X V_x diag(sqrt(s_z/s_x)), Z' = Z V_z
// diag(sqrt(s_x/s_z)). Throws on rank deficiency (singular values
// below 1e-10).
std::pair<Matrix, Matrix> fuse(const Matrix& x, const Matrix& z);

}  // namespace crosslex::preprocess
