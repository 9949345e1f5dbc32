#include "crosslex/init.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "crosslex/preprocess.hpp"
#include "crosslex/retrieval.hpp"

namespace crosslex::init {

namespace {

// Gram matrix of the top-n rows with the elementwise signed square
// root applied and every row sorted ascending. The signed square root
// keeps negative cosines defined and, being strictly increasing,
// commutes with the sort.
Matrix sorted_similarity(const Matrix& emb, std::size_t n) {
  const Matrix top = emb.top_rows(n);
  Matrix m = matmul_nt(top, top);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double* row = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j)
      row[j] = std::copysign(std::sqrt(std::fabs(row[j])), row[j]);
    std::sort(row, row + m.cols());
  }
  return m;
}

Dictionary match_bidirectional(const retrieval::Scorer& scorer) {
  Dictionary d;
  const std::vector<std::size_t> fwd = scorer.best_match(true);
  for (std::size_t i = 0; i < fwd.size(); ++i) d.pairs.emplace_back(i, fwd[i]);
  const std::vector<std::size_t> bwd = scorer.best_match(false);
  for (std::size_t j = 0; j < bwd.size(); ++j) d.pairs.emplace_back(bwd[j], j);
  d.dedup();
  return d;
}

}  // namespace

Dictionary unsupervised_init(const Matrix& x, const Matrix& z, const InitConfig& cfg) {
  if (cfg.vocab_cutoff < 2) throw std::invalid_argument("unsupervised_init: vocab_cutoff < 2");
  const std::size_t nx = std::min(cfg.vocab_cutoff, x.rows());
  const std::size_t nz = std::min(cfg.vocab_cutoff, z.rows());
  if (nx < 2 || nz < 2)
    throw std::invalid_argument("unsupervised_init: need at least two rows per space");

  const Matrix mx = preprocess::normalize(sorted_similarity(x, nx));
  const Matrix mz = preprocess::normalize(sorted_similarity(z, nz));
  // The sorted rows live in spaces of different width when nx != nz;
  // matching is only defined over the shared prefix length.
  if (mx.cols() != mz.cols())
    throw std::invalid_argument(
        "unsupervised_init: source and target cutoffs differ; similarity rows are not "
        "comparable");

  retrieval::Scorer scorer(mx, mz,
                           {retrieval::Method::Csls, cfg.csls_neighborhood});
  return match_bidirectional(scorer);
}

Dictionary iterative_dimred_init(const Matrix& x, const Matrix& z, std::size_t start_dim,
                                 std::size_t target_dim, std::size_t step, std::size_t k_freq,
                                 const InitConfig& cfg) {
  if (step < 1) throw std::invalid_argument("iterative_dimred_init: step must be >= 1");
  if (target_dim > start_dim)
    throw std::invalid_argument("iterative_dimred_init: target_dim exceeds start_dim");
  if (start_dim > x.cols() || start_dim > z.cols())
    throw std::invalid_argument("iterative_dimred_init: start_dim exceeds embedding dimension");

  std::vector<std::size_t> dims;
  for (std::size_t r = start_dim; r > target_dim;) {
    dims.push_back(r);
    if (r - target_dim <= step) break;
    r -= step;
  }
  dims.push_back(target_dim);

  InitConfig sweep_cfg = cfg;
  sweep_cfg.vocab_cutoff = std::min(cfg.vocab_cutoff, k_freq);

  Dictionary best;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t r : dims) {
    auto [xr, mx] = preprocess::pca_reduce(x, r);
    auto [zr, mz] = preprocess::pca_reduce(z, r);
    const Matrix xn = preprocess::normalize(xr);
    const Matrix zn = preprocess::normalize(zr);
    Dictionary d = unsupervised_init(xn, zn, sweep_cfg);

    const std::size_t cut = std::min({sweep_cfg.vocab_cutoff, xn.rows(), zn.rows()});
    retrieval::Scorer scorer(xn.top_rows(cut), zn.top_rows(cut),
                             {retrieval::Method::Csls, cfg.csls_neighborhood});
    double score = 0.0;
    for (const auto& [i, j] : d.pairs) score += scorer.pair_score(i, j);
    score /= static_cast<double>(d.size());

    // Strict improvement required, so ties keep the larger dimension
    // (dims are visited in descending order).
    if (score > best_score) {
      best_score = score;
      best = std::move(d);
    }
  }
  return best;
}

}  // namespace crosslex::init
