#pragma once

// Data-parallel lattice kernels. The hot loops of every operator reduce to
// these: pointwise complex products, stage combinations, and reductions.
// Each kernel has an OpenMP-parallel primary and a plain serial reference in
// kernels::serial; tests compare the two and bench_kernels times them.
//
// Reductions use fixed-block pairwise (tree) summation so results are bitwise
// identical run-to-run and across thread counts.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace betaplane::kernels {

using complex = std::complex<double>;

inline constexpr std::size_t reduce_block = 1024;

namespace detail {

// Pairwise sum of a fixed range; deterministic for a fixed [lo, hi).
template <class F>
double pairwise(std::size_t lo, std::size_t hi, const F& f) {
    const std::size_t len = hi - lo;
    if (len <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += f(i);
        return s;
    }
    const std::size_t mid = lo + len / 2;
    return pairwise(lo, mid, f) + pairwise(mid, hi, f);
}

} // namespace detail

// Deterministic transform-reduce: sum_i f(i) for i in [0, count).
// Blocks are summed pairwise in parallel, block partials combined pairwise
// in index order; identical results for any thread count.
template <class F>
double reduce_sum(std::size_t count, const F& f) {
    if (count == 0) return 0.0;
    const std::size_t nblocks = (count + reduce_block - 1) / reduce_block;
    std::vector<double> partial(nblocks);
#pragma omp parallel for schedule(static)
    for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * reduce_block;
        const std::size_t hi = std::min(lo + reduce_block, count);
        partial[static_cast<std::size_t>(b)] = detail::pairwise(lo, hi, f);
    }
    return detail::pairwise(0, nblocks, [&](std::size_t b) { return partial[b]; });
}

inline double sum(std::span<const double> a) {
    return reduce_sum(a.size(), [&](std::size_t i) { return a[i]; });
}

inline double sum_abs(std::span<const double> a) {
    return reduce_sum(a.size(), [&](std::size_t i) { return std::abs(a[i]); });
}

inline double sum_abs_pow(std::span<const double> a, double p) {
    return reduce_sum(a.size(), [&](std::size_t i) { return std::pow(std::abs(a[i]), p); });
}

inline double sum_abs2(std::span<const complex> a) {
    return reduce_sum(a.size(), [&](std::size_t i) { return std::norm(a[i]); });
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    return reduce_sum(a.size(), [&](std::size_t i) { return a[i] * b[i]; });
}

inline double max_abs(std::span<const double> a) {
    double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
    for (long long i = 0; i < static_cast<long long>(a.size()); ++i)
        m = std::max(m, std::abs(a[static_cast<std::size_t>(i)]));
    return m;
}

inline double max_abs(std::span<const complex> a) {
    double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
    for (long long i = 0; i < static_cast<long long>(a.size()); ++i)
        m = std::max(m, std::abs(a[static_cast<std::size_t>(i)]));
    return m;
}

// out[i] = a[i] * b[i]
inline void multiply(std::span<const complex> a, std::span<const complex> b,
                     std::span<complex> out) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(out.size()); ++i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = a[k] * b[k];
    }
}

inline void multiply(std::span<const double> a, std::span<const double> b,
                     std::span<double> out) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(out.size()); ++i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = a[k] * b[k];
    }
}

// out[i] = a[i] + alpha * b[i]
inline void add_scaled(std::span<const complex> a, complex alpha,
                       std::span<const complex> b, std::span<complex> out) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(out.size()); ++i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = a[k] + alpha * b[k];
    }
}

inline void scale(std::span<complex> a, double alpha) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(a.size()); ++i)
        a[static_cast<std::size_t>(i)] *= alpha;
}

// ETDRK4 stage update: out[i] = e[i]*a[i] + w[i]*b[i]
inline void stage(std::span<const complex> e, std::span<const complex> a,
                  std::span<const complex> w, std::span<const complex> b,
                  std::span<complex> out) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(out.size()); ++i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = e[k] * a[k] + w[k] * b[k];
    }
}

// Serial reference implementations. Same contracts, no threading; pointwise
// kernels must match the parallel ones bitwise.
namespace serial {

template <class F>
double reduce_sum(std::size_t count, const F& f) {
    if (count == 0) return 0.0;
    const std::size_t nblocks = (count + reduce_block - 1) / reduce_block;
    std::vector<double> partial(nblocks);
    for (std::size_t b = 0; b < nblocks; ++b) {
        const std::size_t lo = b * reduce_block;
        const std::size_t hi = std::min(lo + reduce_block, count);
        partial[b] = detail::pairwise(lo, hi, f);
    }
    return detail::pairwise(0, nblocks, [&](std::size_t b) { return partial[b]; });
}

inline double sum(std::span<const double> a) {
    return reduce_sum(a.size(), [&](std::size_t i) { return a[i]; });
}

inline double sum_abs2(std::span<const complex> a) {
    return reduce_sum(a.size(), [&](std::size_t i) { return std::norm(a[i]); });
}

inline double sum_abs_pow(std::span<const double> a, double p) {
    return reduce_sum(a.size(), [&](std::size_t i) { return std::pow(std::abs(a[i]), p); });
}

inline double max_abs(std::span<const double> a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

inline void multiply(std::span<const complex> a, std::span<const complex> b,
                     std::span<complex> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
}

inline void multiply(std::span<const double> a, std::span<const double> b,
                     std::span<double> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
}

inline void add_scaled(std::span<const complex> a, complex alpha,
                       std::span<const complex> b, std::span<complex> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + alpha * b[i];
}

inline void stage(std::span<const complex> e, std::span<const complex> a,
                  std::span<const complex> w, std::span<const complex> b,
                  std::span<complex> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = e[i] * a[i] + w[i] * b[i];
}

} // namespace serial

} // namespace betaplane::kernels
