#include "crosslex/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "crosslex/kernels.hpp"

namespace crosslex::retrieval {

namespace {

constexpr std::size_t kBlockRows = 256;

// Mean of the k largest values of row (row may be scratch; not modified).
double top_k_mean(const double* row, std::size_t n, std::size_t k, std::vector<double>& scratch) {
  k = std::min(k, n);
  if (k == 0) return 0.0;
  scratch.assign(row, row + n);
  std::nth_element(scratch.begin(), scratch.begin() + (k - 1), scratch.end(),
                   std::greater<double>());
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) sum += scratch[i];
  return sum / static_cast<double>(k);
}

// Fills out[i] = mean cosine of a row i to its k nearest b rows.
std::vector<double> knn_mean_cosine(const Matrix& a, const Matrix& b, std::size_t k) {
  std::vector<double> out(a.rows(), 0.0);
  Matrix block;
  std::vector<double> scratch;
  for (std::size_t i0 = 0; i0 < a.rows(); i0 += kBlockRows) {
    const std::size_t i1 = std::min(i0 + kBlockRows, a.rows());
    Matrix sims(i1 - i0, b.rows());
    kernels::matmul_nt(a.row(i0), i1 - i0, a.cols(), b.data(), b.rows(), sims.data());
    for (std::size_t i = i0; i < i1; ++i)
      out[i] = top_k_mean(sims.row(i - i0), b.rows(), k, scratch);
  }
  return out;
}

}  // namespace

std::uint64_t mix64(std::uint64_t v) {
  v += 0x9e3779b97f4a7c15ULL;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
  return v ^ (v >> 31);
}

bool Dropout::keep(std::size_t query, std::size_t candidate) const {
  if (!active()) return true;
  const std::uint64_t h =
      mix64(stream ^ mix64(static_cast<std::uint64_t>(query) ^
                           mix64(static_cast<std::uint64_t>(candidate) + 0x51ed270b470dd2a3ULL)));
  const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
  return u < keep_prob;
}

Matrix unit_rows(const Matrix& m) {
  Matrix out = m;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    const double n2 = kernels::nrm2sq(out.row(i), out.cols());
    if (n2 > 0.0) kernels::scal(1.0 / std::sqrt(n2), out.row(i), out.cols());
  }
  return out;
}

Scorer::Scorer(const Matrix& src, const Matrix& trg, Params params)
    : params_(params), src_(unit_rows(src)), trg_(unit_rows(trg)) {
  if (src.empty() || trg.empty()) throw std::invalid_argument("Scorer: empty space");
  if (src.cols() != trg.cols()) throw std::invalid_argument("Scorer: dimension mismatch");
  if (params_.method == Method::Csls) {
    if (params_.csls_neighborhood < 1)
      throw std::invalid_argument("Scorer: csls_neighborhood must be >= 1");
    r_src_ = knn_mean_cosine(src_, trg_, params_.csls_neighborhood);
    r_trg_ = knn_mean_cosine(trg_, src_, params_.csls_neighborhood);
  }
}

double Scorer::pair_score(std::size_t i, std::size_t j) const {
  const double cos = kernels::dot(src_.row(i), trg_.row(j), src_.cols());
  if (params_.method == Method::NearestNeighbor) return cos;
  return 2.0 * cos - r_src_[i] - r_trg_[j];
}

std::vector<std::size_t> Scorer::best_match(bool forward, const Dropout& drop) const {
  const Matrix& q = forward ? src_ : trg_;
  const Matrix& c = forward ? trg_ : src_;
  const std::vector<double>& r_q = forward ? r_src_ : r_trg_;
  const std::vector<double>& r_c = forward ? r_trg_ : r_src_;
  const bool csls = params_.method == Method::Csls;

  std::vector<std::size_t> best(q.rows(), 0);
  for (std::size_t i0 = 0; i0 < q.rows(); i0 += kBlockRows) {
    const std::size_t i1 = std::min(i0 + kBlockRows, q.rows());
    Matrix sims(i1 - i0, c.rows());
    kernels::matmul_nt(q.row(i0), i1 - i0, q.cols(), c.data(), c.rows(), sims.data());
    for (std::size_t i = i0; i < i1; ++i) {
      const double* row = sims.row(i - i0);
      double best_score = -std::numeric_limits<double>::infinity();
      std::size_t best_j = 0;
      for (std::size_t j = 0; j < c.rows(); ++j) {
        double score = csls ? 2.0 * row[j] - r_q[i] - r_c[j] : row[j];
        if (!drop.keep(i, j)) score = 0.0;
        if (score > best_score) {
          best_score = score;
          best_j = j;
        }
      }
      best[i] = best_j;
    }
  }
  return best;
}

std::vector<std::vector<std::size_t>> Scorer::top_k_targets(
    const std::vector<std::size_t>& src_rows, std::size_t k) const {
  k = std::min(k, trg_.rows());
  std::vector<std::vector<std::size_t>> out(src_rows.size());
  std::vector<std::pair<double, std::size_t>> scored(trg_.rows());
  const bool csls = params_.method == Method::Csls;
  std::vector<double> sims(trg_.rows());
  for (std::size_t q = 0; q < src_rows.size(); ++q) {
    const std::size_t i = src_rows[q];
    if (i >= src_.rows()) throw std::out_of_range("top_k_targets: source row out of range");
    kernels::matmul_nt(src_.row(i), 1, src_.cols(), trg_.data(), trg_.rows(), sims.data());
    for (std::size_t j = 0; j < trg_.rows(); ++j) {
      const double s = csls ? 2.0 * sims[j] - r_src_[i] - r_trg_[j] : sims[j];
      scored[j] = {-s, j};  // negate so ties fall to the lower index
    }
    std::partial_sort(scored.begin(), scored.begin() + k, scored.end());
    out[q].resize(k);
    for (std::size_t j = 0; j < k; ++j) out[q][j] = scored[j].second;
  }
  return out;
}

}  // namespace crosslex::retrieval
