#include "crosslex/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "ops_table.hpp"

namespace crosslex::kernels {

namespace {

Backend detect_best() {
#if defined(CROSSLEX_HAVE_AVX2)
  if (avx2_supported()) return Backend::Avx2;
#endif
#if defined(CROSSLEX_HAVE_NEON)
  return Backend::Neon;
#endif
  return Backend::Scalar;
}

Backend from_env_or_best() {
  const char* env = std::getenv("CROSSLEX_KERNELS");
  if (env && *env && std::strcmp(env, "auto") != 0) {
    for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
      if (std::strcmp(env, name(b)) == 0) {
        if (!available(b))
          throw std::runtime_error(std::string("CROSSLEX_KERNELS=") + env +
                                   " requested but not available on this CPU");
        return b;
      }
    }
    throw std::runtime_error(std::string("unknown CROSSLEX_KERNELS value: ") + env);
  }
  return detect_best();
}

std::atomic<Backend>& state() {
  // Lazy so a bad CROSSLEX_KERNELS value surfaces as an exception at
  // first use instead of terminating during static init.
  static std::atomic<Backend> backend{from_env_or_best()};
  return backend;
}

const OpsTable& table_for(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return scalar_ops();
#if defined(CROSSLEX_HAVE_AVX2)
    case Backend::Avx2:
      return avx2_ops();
#endif
#if defined(CROSSLEX_HAVE_NEON)
    case Backend::Neon:
      return neon_ops();
#endif
    default:
      return scalar_ops();
  }
}

inline const OpsTable& ops() { return table_for(state().load(std::memory_order_relaxed)); }

}  // namespace

const char* name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
    case Backend::Neon:
      return "neon";
  }
  return "?";
}

bool available(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(CROSSLEX_HAVE_AVX2)
      return avx2_supported();
#else
      return false;
#endif
    case Backend::Neon:
#if defined(CROSSLEX_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend active() { return state().load(std::memory_order_relaxed); }

void force(Backend b) {
  if (!available(b))
    throw std::invalid_argument(std::string("kernel backend not available: ") + name(b));
  state().store(b, std::memory_order_relaxed);
}

void reset() { state().store(from_env_or_best(), std::memory_order_relaxed); }

double dot(const double* a, const double* b, std::size_t n) { return ops().dot(a, b, n); }
double nrm2sq(const double* a, std::size_t n) { return ops().nrm2sq(a, n); }
void axpy(double alpha, const double* x, double* y, std::size_t n) { ops().axpy(alpha, x, y, n); }
void scal(double alpha, double* x, std::size_t n) { ops().scal(alpha, x, n); }

void matmul_nt(const double* a, std::size_t m, std::size_t k, const double* b, std::size_t n,
               double* c) {
  const OpsTable& t = ops();
  // Tile the b rows so a block of them stays cache-resident while we
  // sweep the a rows.
  constexpr std::size_t kTile = 64;
  for (std::size_t j0 = 0; j0 < n; j0 += kTile) {
    const std::size_t j1 = j0 + kTile < n ? j0 + kTile : n;
    for (std::size_t i = 0; i < m; ++i) {
      const double* ai = a + i * k;
      double* ci = c + i * n;
      for (std::size_t j = j0; j < j1; ++j) {
        ci[j] = t.dot(ai, b + j * k, k);
      }
    }
  }
}

void matmul_nn(const double* a, std::size_t m, std::size_t k, const double* b, std::size_t n,
               double* c) {
  const OpsTable& t = ops();
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] = 0.0;
    const double* ai = a + i * k;
    for (std::size_t l = 0; l < k; ++l) {
      if (ai[l] != 0.0) t.axpy(ai[l], b + l * n, ci, n);
    }
  }
}

}  // namespace crosslex::kernels
