#include "glat/num/kernels.h"

#include <atomic>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace glat::num::kernels {

namespace {
std::atomic<bool> g_parallel{true};

// Threading pays off only once a gemm has real work in it.
constexpr long kParallelMinFlops = 64 * 1024;

inline bool go_parallel(long m, long k, long n) {
#ifdef _OPENMP
    return g_parallel.load(std::memory_order_relaxed) && m * k * n >= kParallelMinFlops;
#else
    (void)m; (void)k; (void)n;
    return false;
#endif
}
}  // namespace

void set_parallel(bool on) { g_parallel.store(on, std::memory_order_relaxed); }
bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }

// Fast bodies. One output row per iteration so the accumulation order of
// each element never depends on the thread partition.

static inline void nn_row(const float* a, const float* b, float* c, int k, int n, int i,
                          bool accumulate) {
    float* ci = c + static_cast<std::size_t>(i) * n;
    if (!accumulate) std::memset(ci, 0, sizeof(float) * static_cast<std::size_t>(n));
    const float* ai = a + static_cast<std::size_t>(i) * k;
    for (int p = 0; p < k; ++p) {
        const float av = ai[p];
        const float* bp = b + static_cast<std::size_t>(p) * n;
        for (int j = 0; j < n; ++j) ci[j] += av * bp[j];
    }
}

static inline void nt_row(const float* a, const float* b, float* c, int k, int n, int i,
                          bool accumulate) {
    const float* ai = a + static_cast<std::size_t>(i) * k;
    float* ci = c + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) {
        const float* bj = b + static_cast<std::size_t>(j) * k;
        float acc = 0.0f;
        for (int p = 0; p < k; ++p) acc += ai[p] * bj[p];
        ci[j] = accumulate ? ci[j] + acc : acc;
    }
}

// One output row of C[k,n] = A^T * B; reads a strided column of A.
static inline void tn_row(const float* a, const float* b, float* c, int m, int k, int n, int p,
                          bool accumulate) {
    float* cp = c + static_cast<std::size_t>(p) * n;
    if (!accumulate) std::memset(cp, 0, sizeof(float) * static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i) {
        const float av = a[static_cast<std::size_t>(i) * k + p];
        const float* bi = b + static_cast<std::size_t>(i) * n;
        for (int j = 0; j < n; ++j) cp[j] += av * bi[j];
    }
}

void gemm_nn(const float* a, const float* b, float* c, int m, int k, int n, bool accumulate) {
    if (go_parallel(m, k, n)) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < m; ++i) nn_row(a, b, c, k, n, i, accumulate);
    } else {
        for (int i = 0; i < m; ++i) nn_row(a, b, c, k, n, i, accumulate);
    }
}

void gemm_nt(const float* a, const float* b, float* c, int m, int k, int n, bool accumulate) {
    if (go_parallel(m, k, n)) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < m; ++i) nt_row(a, b, c, k, n, i, accumulate);
    } else {
        for (int i = 0; i < m; ++i) nt_row(a, b, c, k, n, i, accumulate);
    }
}

void gemm_tn(const float* a, const float* b, float* c, int m, int k, int n, bool accumulate) {
    if (go_parallel(k, m, n)) {
#pragma omp parallel for schedule(static)
        for (int p = 0; p < k; ++p) tn_row(a, b, c, m, k, n, p, accumulate);
    } else {
        for (int p = 0; p < k; ++p) tn_row(a, b, c, m, k, n, p, accumulate);
    }
}

void bgemm_nn(const float* a, const float* b, float* c, int batch, int m, int k, int n,
              bool accumulate) {
    const std::size_t sa = static_cast<std::size_t>(m) * k;
    const std::size_t sb = static_cast<std::size_t>(k) * n;
    const std::size_t sc = static_cast<std::size_t>(m) * n;
    if (go_parallel(static_cast<long>(batch) * m, k, n)) {
#pragma omp parallel for schedule(static)
        for (int t = 0; t < batch; ++t)
            for (int i = 0; i < m; ++i) nn_row(a + t * sa, b + t * sb, c + t * sc, k, n, i, accumulate);
    } else {
        for (int t = 0; t < batch; ++t)
            for (int i = 0; i < m; ++i) nn_row(a + t * sa, b + t * sb, c + t * sc, k, n, i, accumulate);
    }
}

void bgemm_nt(const float* a, const float* b, float* c, int batch, int m, int k, int n,
              bool accumulate) {
    const std::size_t sa = static_cast<std::size_t>(m) * k;
    const std::size_t sb = static_cast<std::size_t>(n) * k;
    const std::size_t sc = static_cast<std::size_t>(m) * n;
    if (go_parallel(static_cast<long>(batch) * m, k, n)) {
#pragma omp parallel for schedule(static)
        for (int t = 0; t < batch; ++t)
            for (int i = 0; i < m; ++i) nt_row(a + t * sa, b + t * sb, c + t * sc, k, n, i, accumulate);
    } else {
        for (int t = 0; t < batch; ++t)
            for (int i = 0; i < m; ++i) nt_row(a + t * sa, b + t * sb, c + t * sc, k, n, i, accumulate);
    }
}

void bgemm_tn(const float* a, const float* b, float* c, int batch, int m, int k, int n,
              bool accumulate) {
    const std::size_t sa = static_cast<std::size_t>(m) * k;
    const std::size_t sb = static_cast<std::size_t>(m) * n;
    const std::size_t sc = static_cast<std::size_t>(k) * n;
    if (go_parallel(static_cast<long>(batch) * k, m, n)) {
#pragma omp parallel for schedule(static)
        for (int t = 0; t < batch; ++t)
            for (int p = 0; p < k; ++p) tn_row(a + t * sa, b + t * sb, c + t * sc, m, k, n, p, accumulate);
    } else {
        for (int t = 0; t < batch; ++t)
            for (int p = 0; p < k; ++p) tn_row(a + t * sa, b + t * sb, c + t * sc, m, k, n, p, accumulate);
    }
}

// Naive references, textbook i-j-k order.

void gemm_nn_serial(const float* a, const float* b, float* c, int m, int k, int n, bool accumulate) {
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            float acc = 0.0f;
            for (int p = 0; p < k; ++p)
                acc += a[static_cast<std::size_t>(i) * k + p] * b[static_cast<std::size_t>(p) * n + j];
            float* cij = &c[static_cast<std::size_t>(i) * n + j];
            *cij = accumulate ? *cij + acc : acc;
        }
}

void gemm_nt_serial(const float* a, const float* b, float* c, int m, int k, int n, bool accumulate) {
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            float acc = 0.0f;
            for (int p = 0; p < k; ++p)
                acc += a[static_cast<std::size_t>(i) * k + p] * b[static_cast<std::size_t>(j) * k + p];
            float* cij = &c[static_cast<std::size_t>(i) * n + j];
            *cij = accumulate ? *cij + acc : acc;
        }
}

void gemm_tn_serial(const float* a, const float* b, float* c, int m, int k, int n, bool accumulate) {
    for (int p = 0; p < k; ++p)
        for (int j = 0; j < n; ++j) {
            float acc = 0.0f;
            for (int i = 0; i < m; ++i)
                acc += a[static_cast<std::size_t>(i) * k + p] * b[static_cast<std::size_t>(i) * n + j];
            float* cpj = &c[static_cast<std::size_t>(p) * n + j];
            *cpj = accumulate ? *cpj + acc : acc;
        }
}

}  // namespace glat::num::kernels
