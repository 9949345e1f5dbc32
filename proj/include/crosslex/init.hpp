#pragma once

#include <cstdint>

#include "crosslex/dictionary.hpp"
#include "crosslex/matrix.hpp"

// Unsupervised seed dictionaries. The core method represents each word
// by its sorted row of the monolingual similarity matrix: for truly
// isometric spaces those rows are identical up to a row permutation,
// so matching them recovers the permutation without supervision.

namespace crosslex::init {

struct InitConfig {
  // Rows of each space used for initialization (clamped to the actual
  // row count; the similarity matrices are cutoff x cutoff).
  std::size_t vocab_cutoff = 4000;
  std::size_t csls_neighborhood = 10;
  std::uint64_t seed = 0;
};

// Gram matrices of the top-cutoff rows, elementwise signed square
// root, rows sorted ascending, the normalization triple, then CSLS
// matching of the sorted rows in both directions (deduplicated).
Dictionary unsupervised_init(const Matrix& x, const Matrix& z, const InitConfig& cfg);

// Runs PCA to each dimension in {start_dim, start_dim-step, ...,
// target_dim} (target always included), applies unsupervised_init in
// the reduced spaces, scores each induced dictionary by its mean CSLS
// similarity, and returns the best one. Ties go to the larger
// dimension. k_freq caps the rows considered during the sweep.
Dictionary iterative_dimred_init(const Matrix& x, const Matrix& z, std::size_t start_dim,
                                 std::size_t target_dim, std::size_t step, std::size_t k_freq,
                                 const InitConfig& cfg);

}  // namespace crosslex::init
