#include "crosslex/preprocess.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "crosslex/kernels.hpp"
#include "crosslex/linalg.hpp"

namespace crosslex::preprocess {

namespace {

void length_normalize_rows(Matrix& m, const char* stage) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const double n2 = kernels::nrm2sq(m.row(i), m.cols());
    if (n2 <= 0.0)
      throw std::runtime_error("normalize: zero row at index " + std::to_string(i) + " (" +
                               stage + ")");
    kernels::scal(1.0 / std::sqrt(n2), m.row(i), m.cols());
  }
}

void mean_center_columns(Matrix& m) {
  const std::vector<double> mean = column_means(m);
  for (std::size_t i = 0; i < m.rows(); ++i) kernels::axpy(-1.0, mean.data(), m.row(i), m.cols());
}

}  // namespace

Matrix normalize(const Matrix& emb) {
  if (emb.empty()) throw std::invalid_argument("normalize: empty matrix");
  Matrix out = emb;
  length_normalize_rows(out, "unit");
  mean_center_columns(out);
  length_normalize_rows(out, "after centering");
  return out;
}

std::pair<Matrix, PcaModel> pca_reduce(const Matrix& emb, std::size_t target_dim) {
  const std::size_t d = emb.cols();
  if (target_dim < 1 || target_dim > d)
    throw std::invalid_argument("pca_reduce: target_dim " + std::to_string(target_dim) +
                                " out of range [1, " + std::to_string(d) + "]");
  if (emb.rows() <= target_dim)
    throw std::invalid_argument("pca_reduce: need more rows than target_dim");

  PcaModel model;
  model.mean = column_means(emb);
  Matrix centered = emb;
  for (std::size_t i = 0; i < centered.rows(); ++i)
    kernels::axpy(-1.0, model.mean.data(), centered.row(i), d);

  const linalg::SvdResult dec = linalg::svd(centered);
  const std::size_t r = target_dim;
  model.components = Matrix(d, r);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < r; ++k) model.components(i, k) = dec.v(i, k);
  model.explained_variance.resize(r);
  const double denom = static_cast<double>(emb.rows() - 1);
  for (std::size_t k = 0; k < r; ++k)
    model.explained_variance[k] = dec.s[k] * dec.s[k] / denom;

  return {matmul_nn(centered, model.components), std::move(model)};
}

Matrix linear_transform(const Matrix& emb, double alpha) {
  if (emb.empty()) throw std::invalid_argument("linear_transform: empty matrix");
  const Matrix xt = transpose(emb);
  const Matrix gram = matmul_nt(xt, xt);  // X^T X
  linalg::EighResult dec = linalg::eigh(gram);

  std::vector<double> powered(dec.eigenvalues.size());
  for (std::size_t k = 0; k < powered.size(); ++k) {
    const double ev = std::max(dec.eigenvalues[k], 1e-12);
    powered[k] = std::pow(ev, alpha);
  }
  Matrix r = dec.eigenvectors;  // Q
  scale_columns(r, powered);    // Q Delta^alpha
  Matrix out = matmul_nn(emb, r);
  if (!out.all_finite())
    throw std::runtime_error("linear_transform: non-finite result at alpha " +
                             std::to_string(alpha));
  return out;
}

std::pair<Matrix, Matrix> fuse(const Matrix& x, const Matrix& z) {
  if (x.cols() != z.cols()) throw std::invalid_argument("fuse: column dimensions differ");
  const linalg::SvdResult sx = linalg::svd(x);
  const linalg::SvdResult sz = linalg::svd(z);
  if (sx.s.size() != x.cols() || sz.s.size() != z.cols())
    throw std::runtime_error("fuse: fewer rows than columns");
  constexpr double kRankTol = 1e-10;
  for (std::size_t k = 0; k < x.cols(); ++k) {
    if (sx.s[k] <= kRankTol || sz.s[k] <= kRankTol)
      throw std::runtime_error("fuse: rank-deficient input (singular value below tolerance)");
  }

  std::vector<double> to_z(x.cols()), to_x(x.cols());
  for (std::size_t k = 0; k < x.cols(); ++k) {
    to_z[k] = std::sqrt(sz.s[k] / sx.s[k]);
    to_x[k] = std::sqrt(sx.s[k] / sz.s[k]);
  }
  Matrix xr = matmul_nn(x, sx.v);
  Matrix zr = matmul_nn(z, sz.v);
  scale_columns(xr, to_z);
  scale_columns(zr, to_x);
  return {std::move(xr), std::move(zr)};
}

}  // namespace crosslex::preprocess
