#include "betaplane/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

#include "betaplane/kernels.hpp"

namespace betaplane {

namespace {

// Plan cache keyed by (n, sign). Plans are created with FFTW_ESTIMATE for
// run-to-run determinism and FFTW_UNALIGNED so they work on std::vector
// storage via fftw_execute_dft (thread-safe on distinct buffers).
class PlanCache {
public:
    fftw_plan get(std::size_t n, int sign) {
        std::scoped_lock lock(mu_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<complex> scratch(n * n);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan p = fftw_plan_dft_2d(static_cast<int>(n), static_cast<int>(n),
                                       buf, buf,
                                       sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, p);
        return p;
    }

private:
    std::mutex mu_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

// (-1)^{k1+k2}; wave index parity equals storage index parity for even n.
inline double center_sign(std::size_t iy, std::size_t ix) {
    return ((ix + iy) & 1u) ? -1.0 : 1.0;
}

} // namespace

namespace fft_detail {
void execute_c2c(std::size_t n, complex* in, complex* out, int sign) {
    fftw_plan p = cache().get(n, sign);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(in),
                     reinterpret_cast<fftw_complex*>(out));
}
} // namespace fft_detail

SpectralField forward_transform(const RealField& f) {
    if (!all_finite(f)) throw ConfigError("forward_transform: non-finite input");
    const std::size_t n = f.grid.n();
    SpectralField out(f.grid);
    std::vector<complex> buf(f.grid.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(buf.size()); ++i)
        buf[static_cast<std::size_t>(i)] = complex(f.values[static_cast<std::size_t>(i)], 0.0);
    fft_detail::execute_c2c(n, buf.data(), out.coeffs.data(), -1);
    const double scale = f.grid.cell_area();
#pragma omp parallel for schedule(static)
    for (long long iy = 0; iy < static_cast<long long>(n); ++iy)
        for (std::size_t ix = 0; ix < n; ++ix) {
            const std::size_t idx = static_cast<std::size_t>(iy) * n + ix;
            out.coeffs[idx] *= scale * center_sign(static_cast<std::size_t>(iy), ix);
        }
    return out;
}

double hermitian_defect(const SpectralField& F) {
    const std::size_t n = F.grid.n();
    double worst = 0.0;
    for (std::size_t iy = 0; iy < n; ++iy) {
        const std::size_t jy = (n - iy) % n;
        for (std::size_t ix = 0; ix < n; ++ix) {
            const std::size_t jx = (n - ix) % n;
            const complex a = F.coeffs[iy * n + ix];
            const complex b = F.coeffs[jy * n + jx];
            worst = std::max(worst, std::abs(a - std::conj(b)));
        }
    }
    return worst;
}

RealField inverse_transform(const SpectralField& F) {
    const double ref = kernels::max_abs(std::span<const complex>(F.coeffs));
    if (hermitian_defect(F) > 1e-10 * std::max(ref, 1e-300))
        throw ConfigError("inverse_transform: Hermitian symmetry violated");
    return inverse_transform_nocheck(F);
}

RealField inverse_transform_nocheck(const SpectralField& F) {
    const std::size_t n = F.grid.n();
    RealField out(F.grid);
    std::vector<complex> buf(F.grid.size());
#pragma omp parallel for schedule(static)
    for (long long iy = 0; iy < static_cast<long long>(n); ++iy)
        for (std::size_t ix = 0; ix < n; ++ix) {
            const std::size_t idx = static_cast<std::size_t>(iy) * n + ix;
            buf[idx] = F.coeffs[idx] * center_sign(static_cast<std::size_t>(iy), ix);
        }
    std::vector<complex> res(F.grid.size());
    fft_detail::execute_c2c(n, buf.data(), res.data(), +1);
    const double scale = 1.0 / (F.grid.box_length() * F.grid.box_length());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(res.size()); ++i)
        out.values[static_cast<std::size_t>(i)] = res[static_cast<std::size_t>(i)].real() * scale;
    return out;
}

} // namespace betaplane
