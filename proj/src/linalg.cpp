#include "crosslex/linalg.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace crosslex::linalg {

namespace {

Eigen::MatrixXd to_eigen(const Matrix& a) {
  return Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                        Eigen::RowMajor>>(a.data(), a.rows(), a.cols());
}

Matrix from_eigen(const Eigen::MatrixXd& e) {
  Matrix out(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) out(i, j) = e(i, j);
  return out;
}

// Flip column pairs (u_k, v_k) so the largest-magnitude entry of u_k is
// positive. Keeps factorizations reproducible across platforms.
void fix_signs(Eigen::MatrixXd& u, Eigen::MatrixXd& v) {
  for (Eigen::Index k = 0; k < u.cols(); ++k) {
    Eigen::Index at = 0;
    u.col(k).cwiseAbs().maxCoeff(&at);
    if (u(at, k) < 0.0) {
      u.col(k) = -u.col(k);
      v.col(k) = -v.col(k);
    }
  }
}

}  // namespace

SvdResult svd(const Matrix& a) {
  if (a.empty()) throw std::invalid_argument("svd: empty matrix");
  Eigen::MatrixXd m = to_eigen(a);
  Eigen::BDCSVD<Eigen::MatrixXd> dec(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::MatrixXd u = dec.matrixU();
  Eigen::MatrixXd v = dec.matrixV();
  fix_signs(u, v);
  SvdResult out;
  out.u = from_eigen(u);
  out.v = from_eigen(v);
  out.s.assign(dec.singularValues().data(),
               dec.singularValues().data() + dec.singularValues().size());
  return out;
}

EighResult eigh(const Matrix& a) {
  if (a.empty() || a.rows() != a.cols())
    throw std::invalid_argument("eigh: matrix must be square and non-empty");
  Eigen::MatrixXd m = to_eigen(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dec(m);
  if (dec.info() != Eigen::Success) throw std::runtime_error("eigh: decomposition failed");
  const Eigen::Index n = m.rows();
  // Eigen returns ascending order; flip to descending.
  Eigen::MatrixXd q(n, n);
  EighResult out;
  out.eigenvalues.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues[k] = dec.eigenvalues()(n - 1 - k);
    q.col(k) = dec.eigenvectors().col(n - 1 - k);
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index at = 0;
    q.col(k).cwiseAbs().maxCoeff(&at);
    if (q(at, k) < 0.0) q.col(k) = -q.col(k);
  }
  out.eigenvectors = from_eigen(q);
  return out;
}

}  // namespace crosslex::linalg
