#include "crosslex/matrix.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "crosslex/kernels.hpp"

namespace crosslex {

bool Matrix::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

Matrix Matrix::take_rows(const std::vector<std::size_t>& indices) const {
  Matrix out(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) throw std::out_of_range("take_rows: row index out of range");
    std::memcpy(out.row(i), row(indices[i]), cols_ * sizeof(double));
  }
  return out;
}

Matrix Matrix::top_rows(std::size_t n) const {
  if (n > rows_) throw std::out_of_range("top_rows: n exceeds row count");
  Matrix out(n, cols_);
  std::memcpy(out.data(), data(), n * cols_ * sizeof(double));
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("matmul_nt: inner dimensions differ");
  Matrix c(a.rows(), b.rows());
  kernels::matmul_nt(a.data(), a.rows(), a.cols(), b.data(), b.rows(), c.data());
  return c;
}

Matrix matmul_nn(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul_nn: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  kernels::matmul_nn(a.data(), a.rows(), a.cols(), b.data(), b.cols(), c.data());
  return c;
}

void scale_columns(Matrix& a, const std::vector<double>& s) {
  if (s.size() != a.cols()) throw std::invalid_argument("scale_columns: size mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double* r = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) r[j] *= s[j];
  }
}

std::vector<double> column_means(const Matrix& a) {
  std::vector<double> mean(a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    kernels::axpy(1.0, a.row(i), mean.data(), a.cols());
  if (a.rows() > 0) kernels::scal(1.0 / static_cast<double>(a.rows()), mean.data(), mean.size());
  return mean;
}

Vocabulary Vocabulary::build(std::vector<std::string> words, std::vector<std::int64_t> freq) {
  if (words.empty()) throw std::invalid_argument("vocabulary must contain at least one word");
  if (!freq.empty() && freq.size() != words.size())
    throw std::invalid_argument("frequency list size differs from word list size");
  Vocabulary v;
  v.words = std::move(words);
  v.freq = std::move(freq);
  v.index.reserve(v.words.size());
  for (std::size_t i = 0; i < v.words.size(); ++i) {
    auto [it, inserted] = v.index.emplace(v.words[i], i);
    if (!inserted) throw std::invalid_argument("duplicate word in vocabulary: " + v.words[i]);
  }
  return v;
}

}  // namespace crosslex
