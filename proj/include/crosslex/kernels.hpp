#pragma once

#include <cstddef>

// Low-level arithmetic kernels used by the alignment pipeline. Every
// primitive has a scalar reference implementation plus SIMD variants
// (AVX2 on x86-64, NEON on aarch64) selected once at startup from CPU
// capabilities. The active backend can be overridden with force() or
// the CROSSLEX_KERNELS environment variable (scalar|avx2|neon|auto),
// which the equivalence tests rely on.
//
// Results are deterministic for a fixed backend. Backends may differ
// from each other in the last bits because they accumulate in a
// different order; cross-backend tests compare with a tolerance.

namespace crosslex::kernels {

enum class Backend { Scalar, Avx2, Neon };

const char* name(Backend b);
bool available(Backend b);
Backend active();
// Throws std::invalid_argument if the backend is not available on this CPU.
void force(Backend b);
// Back to auto-detection (also re-reads CROSSLEX_KERNELS).
void reset();

// Scalar reference kernels. Always available; the oracle the SIMD
// variants are tested against.
namespace ref {
double dot(const double* a, const double* b, std::size_t n);
double nrm2sq(const double* a, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scal(double alpha, double* x, std::size_t n);
}  // namespace ref

// Dispatched primitives.
double dot(const double* a, const double* b, std::size_t n);
double nrm2sq(const double* a, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scal(double alpha, double* x, std::size_t n);

// Row-major matrix products built on the primitives above.
// c (m x n) = a (m x k) times b-transposed, where b is n x k.
void matmul_nt(const double* a, std::size_t m, std::size_t k,
               const double* b, std::size_t n, double* c);
// c (m x n) = a (m x k) times b (k x n).
void matmul_nn(const double* a, std::size_t m, std::size_t k,
               const double* b, std::size_t n, double* c);

}  // namespace crosslex::kernels
