#pragma once

#include <cstddef>
#include <span>
#include <string>

// Data-parallel inner loops shared by the estimators and the panel
// builders. Each kernel has a scalar reference implementation and an AVX2
// variant; the active variant is chosen once at runtime (cpuid, overridable
// via EXNET_SIMD=scalar|avx2 or set_level). Reductions use a fixed pairwise
// tree in both variants so results do not depend on data length tricks or
// thread counts.

namespace exnet::kernels {

enum class SimdLevel { scalar, avx2 };

SimdLevel active_level();
void set_level(SimdLevel level);
bool cpu_has_avx2();
std::string level_name(SimdLevel level);

// Pairwise sum of x (deterministic reduction order).
double sum(std::span<const double> x);

// Dot product a.b (pairwise over blocks).
double dot(std::span<const double> a, std::span<const double> b);

// eta[i] = dot(X row i, beta); X row-major n x k.
void matvec(const double* x, std::size_t n, std::size_t k, const double* beta, double* eta);

// g[j] += sum_i w[i] * X[i][j]  (weighted column sums; gradient accumulation).
void weighted_colsum(const double* x, std::size_t n, std::size_t k, const double* w, double* g);

// H[j*k+l] += sum_i w[i] * X[i][j] * X[i][l], upper triangle only
// (Fisher information accumulation). Caller mirrors the triangle.
void weighted_gram(const double* x, std::size_t n, std::size_t k, const double* w, double* h);

namespace detail {
struct Impl {
    double (*sum)(const double*, std::size_t);
    double (*dot)(const double*, const double*, std::size_t);
    void (*matvec)(const double*, std::size_t, std::size_t, const double*, double*);
    void (*weighted_colsum)(const double*, std::size_t, std::size_t, const double*, double*);
    void (*weighted_gram)(const double*, std::size_t, std::size_t, const double*, double*);
};
const Impl& scalar_impl();
#if defined(EXNET_BUILD_AVX2)
const Impl& avx2_impl();
#endif
}  // namespace detail

}  // namespace exnet::kernels
