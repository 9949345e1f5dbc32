#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace crosslex {

// Dense row-major matrix of doubles. Row i of an embedding matrix is
// the vector of vocabulary word i.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double* row(std::size_t i) { return data_.data() + i * cols_; }
  const double* row(std::size_t i) const { return data_.data() + i * cols_; }
  std::span<double> row_span(std::size_t i) { return {row(i), cols_}; }
  std::span<const double> row_span(std::size_t i) const { return {row(i), cols_}; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  bool all_finite() const;

  // Rows of this matrix selected by `indices`, in that order.
  Matrix take_rows(const std::vector<std::size_t>& indices) const;
  // The first `n` rows (n must not exceed rows()).
  Matrix top_rows(std::size_t n) const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix transpose(const Matrix& a);
// a * b^T; a is m x k, b is n x k.
Matrix matmul_nt(const Matrix& a, const Matrix& b);
// a * b; a is m x k, b is k x n.
Matrix matmul_nn(const Matrix& a, const Matrix& b);
// In-place column scaling: a(:,j) *= s[j].
void scale_columns(Matrix& a, const std::vector<double>& s);
// Per-column means.
std::vector<double> column_means(const Matrix& a);

// Ordered word list with word -> row index lookup and optional
// per-word corpus frequencies (freq is empty when absent).
struct Vocabulary {
  std::vector<std::string> words;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::int64_t> freq;

  std::size_t size() const { return words.size(); }
  bool has_freq() const { return !freq.empty(); }
  bool contains(const std::string& w) const { return index.count(w) != 0; }

  // Builds the index map; throws std::invalid_argument on duplicates
  // or an empty word list.
  static Vocabulary build(std::vector<std::string> words,
                          std::vector<std::int64_t> freq = {});
};

}  // namespace crosslex
