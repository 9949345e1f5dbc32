#pragma once

#include <cstdint>
#include <vector>

#include "crosslex/matrix.hpp"

// Shared retrieval machinery: plain nearest-neighbor and CSLS scoring
// between two embedding spaces. CSLS penalizes hub vectors:
//
//   score(x, z) = 2 cos(x, z) - r_src(x) - r_trg(z)
//
// where r_src(x) is the mean cosine of x to its k nearest rows of the
// target space and r_trg(z) the mean cosine of z to its k nearest rows
// of the source space. The score table is symmetric; forward and
// backward retrieval differ only in which axis the argmax runs over.

namespace crosslex::retrieval {

enum class Method { NearestNeighbor, Csls };

struct Params {
  Method method = Method::Csls;
  std::size_t csls_neighborhood = 10;
};

// Stochastic induction: each score is zeroed independently with
// probability 1 - keep_prob. Draws come from a stateless hash of
// (stream, query row, candidate row), so results do not depend on
// evaluation order or blocking.
struct Dropout {
  double keep_prob = 1.0;
  std::uint64_t stream = 0;

  bool active() const { return keep_prob < 1.0; }
  bool keep(std::size_t query, std::size_t candidate) const;
};

std::uint64_t mix64(std::uint64_t v);

class Scorer {
 public:
  // Rows of src/trg need not be unit length; unit-scaled copies are
  // taken internally. Zero rows score 0 against everything.
  Scorer(const Matrix& src, const Matrix& trg, Params params);

  const Params& params() const { return params_; }
  std::size_t src_rows() const { return src_.rows(); }
  std::size_t trg_rows() const { return trg_.rows(); }

  // Dropout-free score of a (src,trg) pair.
  double pair_score(std::size_t i, std::size_t j) const;

  // Argmax candidate per query row; ties go to the lower candidate
  // index. forward=true matches src rows against trg rows.
  std::vector<std::size_t> best_match(bool forward, const Dropout& drop = {}) const;

  // Top-k targets per listed source row, dropout-free, by descending
  // score (ties by lower index).
  std::vector<std::vector<std::size_t>> top_k_targets(const std::vector<std::size_t>& src_rows,
                                                      std::size_t k) const;

 private:
  Params params_;
  Matrix src_, trg_;                  // unit-scaled rows
  std::vector<double> r_src_, r_trg_;  // CSLS neighborhood penalties
};

// Unit-scaled copy of each row; zero rows are left as-is.
Matrix unit_rows(const Matrix& m);

}  // namespace crosslex::retrieval
