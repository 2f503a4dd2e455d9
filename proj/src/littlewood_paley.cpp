#include "betaplane/littlewood_paley.hpp"

#include <cmath>

#include "betaplane/kernels.hpp"
#include "betaplane/symbols.hpp"

namespace betaplane {

namespace {
constexpr double rho_lo = 0.75;
constexpr double rho_hi = 8.0 / 3.0;
} // namespace

double lp_bump(double rho) {
    if (rho <= rho_lo || rho >= rho_hi) return 0.0;
    return std::exp(-1.0 / ((rho - rho_lo) * (rho_hi - rho)));
}

namespace {

// phi_k(|xi|) with the all-integers normalization; at most two blocks touch
// any frequency, so summing j around round(log2|xi|) is exhaustive.
double phi_of(double axi, int k) {
    const double num = lp_bump(std::ldexp(axi, -k));
    if (num == 0.0) return 0.0;
    const int jc = static_cast<int>(std::lround(std::log2(axi)));
    double den = 0.0;
    for (int j = jc - 3; j <= jc + 3; ++j) den += lp_bump(std::ldexp(axi, -j));
    return num / den;
}

} // namespace

LPBank LPBank::make(const GridSpec& g) {
    const double pi = 3.14159265358979323846;
    const int k_min = static_cast<int>(std::ceil(std::log2(2.0 * pi / g.box_length()) - 1.0));
    const int k_max = static_cast<int>(std::floor(
        std::log2(pi * static_cast<double>(g.n()) / g.box_length()) + 1.0));
    return make(g, k_min, k_max);
}

LPBank LPBank::make(const GridSpec& g, int k_min, int k_max) {
    if (k_min > k_max) throw ConfigError("LPBank: empty dyadic range");
    LPBank bank{g, k_min, k_max, {}};
    bank.phi.reserve(static_cast<std::size_t>(k_max - k_min + 1));
    const std::size_t n = g.n();
    for (int k = k_min; k <= k_max; ++k) {
        std::vector<double> arr(g.size(), 0.0);
        for (std::size_t iy = 0; iy < n; ++iy) {
            const double x2 = g.frequency(iy);
            for (std::size_t ix = 0; ix < n; ++ix) {
                const double x1 = g.frequency(ix);
                const double axi = std::hypot(x1, x2);
                if (axi > 0.0) arr[iy * n + ix] = phi_of(axi, k);
            }
        }
        bank.phi.push_back(std::move(arr));
    }
    return bank;
}

const std::vector<double>& LPBank::block(int k) const {
    if (!in_range(k)) throw ConfigError("LPBank: dyadic index out of range");
    return phi[static_cast<std::size_t>(k - k_min)];
}

SpectralField lp_project(const SpectralField& f, int k, const LPBank& bank) {
    if (!(f.grid == bank.grid)) throw ConfigError("lp_project: grid mismatch");
    const auto& phi = bank.block(k);
    SpectralField out(f.grid);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(out.coeffs.size()); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        out.coeffs[idx] = f.coeffs[idx] * phi[idx];
    }
    return out;
}

double lp_coverage_gap(const SpectralField& f, const LPBank& bank) {
    const std::size_t n = f.grid.n();
    const double total = kernels::sum_abs2(std::span<const complex>(f.coeffs));
    if (total == 0.0) return 0.0;
    const double covered_lo = std::ldexp(rho_lo, bank.k_min);
    const double covered_hi = std::ldexp(rho_hi, bank.k_max);
    const double gap = kernels::reduce_sum(f.grid.size(), [&](std::size_t idx) {
        const std::size_t iy = idx / n, ix = idx % n;
        const double axi = std::hypot(f.grid.frequency(ix), f.grid.frequency(iy));
        if (axi == 0.0) return 0.0; // zero mode excluded from homogeneous norms
        if (axi > covered_lo && axi < covered_hi) return 0.0;
        return std::norm(f.coeffs[idx]);
    });
    return gap / total;
}

} // namespace betaplane
