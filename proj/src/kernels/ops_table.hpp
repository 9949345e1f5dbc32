#pragma once

#include <cstddef>

namespace crosslex::kernels {

struct OpsTable {
  double (*dot)(const double*, const double*, std::size_t);
  double (*nrm2sq)(const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scal)(double, double*, std::size_t);
};

const OpsTable& scalar_ops();
#if defined(CROSSLEX_HAVE_AVX2)
const OpsTable& avx2_ops();
bool avx2_supported();
#endif
#if defined(CROSSLEX_HAVE_NEON)
const OpsTable& neon_ops();
#endif

}  // namespace crosslex::kernels
