#include "exnet/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(_M_X64)
#include <cpuid.h>
#endif

namespace exnet::kernels {

namespace {

constexpr std::size_t kPairwiseBase = 32;

double sum_scalar(const double* x, std::size_t n) {
    if (n <= kPairwiseBase) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += x[i];
        return s;
    }
    std::size_t half = n / 2;
    return sum_scalar(x, half) + sum_scalar(x + half, n - half);
}

double dot_base_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    if (n <= 2 * kPairwiseBase) return dot_base_scalar(a, b, n);
    std::size_t half = n / 2;
    return dot_scalar(a, b, half) + dot_scalar(a + half, b + half, n - half);
}

void matvec_scalar(const double* x, std::size_t n, std::size_t k, const double* beta,
                   double* eta) {
    for (std::size_t i = 0; i < n; ++i) eta[i] = dot_base_scalar(x + i * k, beta, k);
}

void weighted_colsum_scalar(const double* x, std::size_t n, std::size_t k, const double* w,
                            double* g) {
    for (std::size_t i = 0; i < n; ++i) {
        const double wi = w[i];
        const double* row = x + i * k;
        for (std::size_t j = 0; j < k; ++j) g[j] += wi * row[j];
    }
}

void weighted_gram_scalar(const double* x, std::size_t n, std::size_t k, const double* w,
                          double* h) {
    for (std::size_t i = 0; i < n; ++i) {
        const double wi = w[i];
        const double* row = x + i * k;
        for (std::size_t j = 0; j < k; ++j) {
            const double wxj = wi * row[j];
            double* hrow = h + j * k;
            for (std::size_t l = j; l < k; ++l) hrow[l] += wxj * row[l];
        }
    }
}

std::atomic<const detail::Impl*> g_impl{nullptr};
std::atomic<SimdLevel> g_level{SimdLevel::scalar};

const detail::Impl* resolve() {
    SimdLevel want = SimdLevel::scalar;
#if defined(EXNET_BUILD_AVX2)
    if (cpu_has_avx2()) want = SimdLevel::avx2;
#endif
    if (const char* env = std::getenv("EXNET_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) want = SimdLevel::scalar;
#if defined(EXNET_BUILD_AVX2)
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) want = SimdLevel::avx2;
#endif
    }
    const detail::Impl* impl = &detail::scalar_impl();
#if defined(EXNET_BUILD_AVX2)
    if (want == SimdLevel::avx2) impl = &detail::avx2_impl();
#endif
    g_level.store(want, std::memory_order_relaxed);
    g_impl.store(impl, std::memory_order_release);
    return impl;
}

inline const detail::Impl& impl() {
    const detail::Impl* p = g_impl.load(std::memory_order_acquire);
    return p ? *p : *resolve();
}

}  // namespace

namespace detail {
const Impl& scalar_impl() {
    static const Impl s{sum_scalar, dot_scalar, matvec_scalar, weighted_colsum_scalar,
                        weighted_gram_scalar};
    return s;
}
}  // namespace detail

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    unsigned eax, ebx, ecx, edx;
    if (!__get_cpuid_count(7, 0, &eax, &ebx, &ecx, &edx)) return false;
    bool avx2 = (ebx & (1u << 5)) != 0;
    if (!__get_cpuid(1, &eax, &ebx, &ecx, &edx)) return false;
    bool fma = (ecx & (1u << 12)) != 0;
    return avx2 && fma;
#else
    return false;
#endif
}

SimdLevel active_level() {
    impl();
    return g_level.load(std::memory_order_relaxed);
}

void set_level(SimdLevel level) {
    const detail::Impl* p = &detail::scalar_impl();
#if defined(EXNET_BUILD_AVX2)
    if (level == SimdLevel::avx2 && cpu_has_avx2()) p = &detail::avx2_impl();
    else level = SimdLevel::scalar;
#else
    level = SimdLevel::scalar;
#endif
    g_level.store(level, std::memory_order_relaxed);
    g_impl.store(p, std::memory_order_release);
}

std::string level_name(SimdLevel level) {
    return level == SimdLevel::avx2 ? "avx2" : "scalar";
}

double sum(std::span<const double> x) { return impl().sum(x.data(), x.size()); }

double dot(std::span<const double> a, std::span<const double> b) {
    return impl().dot(a.data(), b.data(), a.size());
}

void matvec(const double* x, std::size_t n, std::size_t k, const double* beta, double* eta) {
    impl().matvec(x, n, k, beta, eta);
}

void weighted_colsum(const double* x, std::size_t n, std::size_t k, const double* w, double* g) {
    impl().weighted_colsum(x, n, k, w, g);
}

void weighted_gram(const double* x, std::size_t n, std::size_t k, const double* w, double* h) {
    impl().weighted_gram(x, n, k, w, h);
}

}  // namespace exnet::kernels
