// Times the OpenMP kernels against their serial references, plus the 2D
// transform, on a few grid sizes. Build with -DNDEBUG for meaningful numbers.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "betaplane/fft.hpp"
#include "betaplane/kernels.hpp"

using betaplane::complex;
namespace bk = betaplane::kernels;

namespace {

double now() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <class F>
double time_op(int reps, const F& f) {
    f(); // warm up
    const double t0 = now();
    for (int i = 0; i < reps; ++i) f();
    return (now() - t0) / reps * 1e3; // ms
}

} // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-26s %10s %10s %10s %8s\n", "kernel", "n", "serial ms", "omp ms", "speedup");

    for (std::size_t n : {256u, 512u, 1024u}) {
        const std::size_t m = n * n;
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::vector<complex> a(m), b(m), out(m);
        std::vector<double> ra(m), rb(m), rout(m);
        for (std::size_t i = 0; i < m; ++i) {
            a[i] = complex(u(rng), u(rng));
            b[i] = complex(u(rng), u(rng));
            ra[i] = u(rng);
            rb[i] = u(rng);
        }
        const int reps = n <= 512 ? 40 : 10;

        double ts = time_op(reps, [&] { bk::serial::multiply(std::span<const complex>(a), b, std::span<complex>(out)); });
        double tp = time_op(reps, [&] { bk::multiply(std::span<const complex>(a), b, std::span<complex>(out)); });
        std::printf("%-26s %10zu %10.3f %10.3f %8.2f\n", "complex multiply", n, ts, tp, ts / tp);

        ts = time_op(reps, [&] { bk::serial::multiply(std::span<const double>(ra), rb, std::span<double>(rout)); });
        tp = time_op(reps, [&] { bk::multiply(std::span<const double>(ra), rb, std::span<double>(rout)); });
        std::printf("%-26s %10zu %10.3f %10.3f %8.2f\n", "real multiply", n, ts, tp, ts / tp);

        ts = time_op(reps, [&] { (void)bk::serial::sum_abs2(std::span<const complex>(a)); });
        tp = time_op(reps, [&] { (void)bk::sum_abs2(std::span<const complex>(a)); });
        std::printf("%-26s %10zu %10.3f %10.3f %8.2f\n", "pairwise |.|^2 sum", n, ts, tp, ts / tp);

        ts = time_op(reps, [&] { (void)bk::serial::sum_abs_pow(std::span<const double>(ra), 3.0); });
        tp = time_op(reps, [&] { (void)bk::sum_abs_pow(std::span<const double>(ra), 3.0); });
        std::printf("%-26s %10zu %10.3f %10.3f %8.2f\n", "pairwise |.|^p sum", n, ts, tp, ts / tp);

        ts = time_op(reps, [&] { bk::serial::stage(std::span<const complex>(a), b, std::span<const complex>(b), a, std::span<complex>(out)); });
        tp = time_op(reps, [&] { bk::stage(std::span<const complex>(a), b, std::span<const complex>(b), a, std::span<complex>(out)); });
        std::printf("%-26s %10zu %10.3f %10.3f %8.2f\n", "stage combine", n, ts, tp, ts / tp);

        betaplane::GridSpec g(n, 40.0);
        betaplane::RealField f(g);
        for (std::size_t i = 0; i < m; ++i) f.values[i] = ra[i];
        const double tf = time_op(reps, [&] { (void)betaplane::forward_transform(f); });
        std::printf("%-26s %10zu %10s %10.3f %8s\n", "forward transform", n, "-", tf, "-");
    }
    return 0;
}
