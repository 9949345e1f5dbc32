#include "ops_table.hpp"

#include "crosslex/kernels.hpp"

namespace crosslex::kernels {

namespace ref {

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double nrm2sq(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
  return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal(double alpha, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

}  // namespace ref

const OpsTable& scalar_ops() {
  static const OpsTable table{ref::dot, ref::nrm2sq, ref::axpy, ref::scal};
  return table;
}

}  // namespace crosslex::kernels
