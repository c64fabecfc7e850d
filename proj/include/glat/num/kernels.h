#pragma once

#include <cstddef>

// Dense f32 kernels behind the tensor ops. Every kernel has two
// implementations: a plain serial reference (kept for testing) and an
// OpenMP-parallel version. The parallel versions partition over output
// rows/batches only, so each output element is accumulated in the same
// order regardless of thread count and results are bit-identical to a
// single-threaded run of the same kernel.

namespace glat::num::kernels {

// When false, the dispatching kernels below run the same loop body on one
// thread (still bit-identical to the threaded run).
void set_parallel(bool on);
bool parallel_enabled();

// C[m,n] (+)= A[m,k] * B[k,n]
void gemm_nn(const float* a, const float* b, float* c, int m, int k, int n, bool accumulate);
// C[m,n] (+)= A[m,k] * B[n,k]^T
void gemm_nt(const float* a, const float* b, float* c, int m, int k, int n, bool accumulate);
// C[k,n] (+)= A[m,k]^T * B[m,n]
void gemm_tn(const float* a, const float* b, float* c, int m, int k, int n, bool accumulate);

// Batched variants over `batch` independent matrix triples.
void bgemm_nn(const float* a, const float* b, float* c, int batch, int m, int k, int n, bool accumulate);
void bgemm_nt(const float* a, const float* b, float* c, int batch, int m, int k, int n, bool accumulate);
void bgemm_tn(const float* a, const float* b, float* c, int batch, int m, int k, int n, bool accumulate);

// Naive reference implementations (textbook loop order, independent of the
// fast path; used by tests and the kernel benchmark).
void gemm_nn_serial(const float* a, const float* b, float* c, int m, int k, int n, bool accumulate);
void gemm_nt_serial(const float* a, const float* b, float* c, int m, int k, int n, bool accumulate);
void gemm_tn_serial(const float* a, const float* b, float* c, int m, int k, int n, bool accumulate);

}  // namespace glat::num::kernels
