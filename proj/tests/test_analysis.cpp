#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "betaplane/analysis.hpp"
#include "betaplane/fft.hpp"
#include "betaplane/initial_data.hpp"
#include "betaplane/kernels.hpp"
#include "betaplane/norms.hpp"
#include "betaplane/operators.hpp"
#include "test_helpers.hpp"

using namespace betaplane;
using namespace testutil;

namespace {
constexpr double dinf = std::numeric_limits<double>::infinity();
}

TEST_CASE("fit_decay recovers exact power laws") {
    std::vector<double> t, n;
    for (int i = 0; i < 20; ++i) {
        t.push_back(2.0 + i);
        n.push_back(3.0 * std::pow(t.back(), -2.5));
    }
    DecayFit fit = fit_decay(t, n, 2.0, 25.0);
    CHECK(std::abs(fit.slope + 2.5) < 1e-10);
    CHECK(std::abs(fit.intercept - std::log(3.0)) < 1e-10);
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fit_decay on constant data gives slope zero") {
    std::vector<double> t, n;
    for (int i = 0; i < 10; ++i) {
        t.push_back(1.0 + i);
        n.push_back(4.2);
    }
    DecayFit fit = fit_decay(t, n, 0.0, 100.0);
    CHECK(fit.slope == 0.0);
    CHECK(fit.r_squared == 1.0);
}

TEST_CASE("fit_decay input validation") {
    std::vector<double> t{1, 2, 3, 4, 5, 6, 7, 8}, n(8, 1.0);
    CHECK_NOTHROW(fit_decay(t, n, 0.5, 9.0));
    std::vector<double> t7(t.begin(), t.begin() + 7), n7(7, 1.0);
    CHECK_THROWS_AS(fit_decay(t7, n7, 0.5, 9.0), AnalysisError);
    std::vector<double> nbad = n;
    nbad[3] = 0.0;
    CHECK_THROWS_AS(fit_decay(t, nbad, 0.5, 9.0), AnalysisError);
    CHECK_THROWS_AS(fit_decay(t, n, 5.0, 5.0), AnalysisError);
}

TEST_CASE("fit_decay on the analytic heat L2 law over [5,50]") {
    std::vector<double> t, n;
    for (int i = 0; i < 16; ++i) {
        const double tt = 5.0 * std::pow(10.0, static_cast<double>(i) / 15.0);
        t.push_back(tt);
        n.push_back(std::pow(8.0 * pi * (1.0 + tt), -0.5));
    }
    DecayFit fit = fit_decay(t, n, 5.0, 50.0);
    CHECK(fit.slope >= -0.50);
    CHECK(fit.slope <= -0.46);
}

TEST_CASE("asymptotic deficit vanishes on the kernel itself and decays for heat") {
    GridSpec g(256, 40.0);
    const double beta = 3.0, t = 2.0;
    Symbol k = kernel_K_symbol(g, beta, t);
    SpectralField w(g, k.values);
    kernels::scale(std::span<complex>(w.coeffs), 1.7); // mass 1.7 kernel field
    CHECK(asymptotic_deficit(w, 1.7, beta, t, 0.0, 2.0) < 1e-13);

    // beta = 0: deficit(t) = M^{-1} ||G_{1+t} - G_t||, decreasing in t
    SpectralField g1 = forward_transform(gauss_kernel(g, 1.0));
    auto deficit_at = [&](double tt) {
        SpectralField wt = heat_propagate(g1, tt);
        return asymptotic_deficit(wt, 1.0, 0.0, tt, 0.0, 2.0);
    };
    const double d10 = deficit_at(10.0), d40 = deficit_at(40.0);
    CHECK(d10 > d40);

    // closed form: ||G_{1+t} - G_t||_2^2 = 1/(8 pi) (1/(1+t) + 1/t - 4/(1+2t)),
    // normalized by M_{0,2}(t) = t^{-1/2} (mean-mode correction is zero since
    // the difference field carries no mass)
    const double tt = 10.0;
    const double closed = std::sqrt((1.0 / (1.0 + tt) + 1.0 / tt - 4.0 / (1.0 + 2.0 * tt)) /
                                    (8.0 * pi));
    CHECK(deficit_at(tt) == doctest::Approx(closed * std::sqrt(tt)).epsilon(1e-6));

    CHECK_THROWS_AS(asymptotic_deficit(w, 1.0, beta, 0.0, 0.0, 2.0), AnalysisError);
}

TEST_CASE("strichartz quadrature: zero data, homogeneity, validation") {
    GridSpec g(64, 10.0);
    std::vector<double> grid;
    for (int i = 0; i <= 32; ++i) grid.push_back(4.0 * i / 32.0);

    CHECK(strichartz_quadrature(SpectralField(g), 5.0, 0.0, 3.0, 6.0, grid).value == 0.0);

    SpectralField f = forward_transform(dipole(g, 1.0, 1.0));
    const double v1 = strichartz_quadrature(f, 5.0, 0.0, 3.0, 6.0, grid).value;
    SpectralField f2(g, f.coeffs);
    kernels::scale(std::span<complex>(f2.coeffs), 2.0);
    const double v2 = strichartz_quadrature(f2, 5.0, 0.0, 3.0, 6.0, grid).value;
    CHECK(v2 == doctest::Approx(2.0 * v1).epsilon(1e-14));

    CHECK_THROWS_AS(strichartz_quadrature(f, 0.0, 0.0, 3.0, 6.0, grid), AnalysisError);
    std::vector<double> short_grid{0.0, 0.05, 0.1};
    CHECK_THROWS_AS(strichartz_quadrature(f, 5.0, 0.0, 3.0, 6.0, short_grid), AnalysisError);
    CHECK_THROWS_AS(strichartz_quadrature(f, 5.0, 0.0, 3.0, 1.5, grid), AnalysisError);
}

TEST_CASE("strichartz beta-scaling quotient matches lambda^{2+s-2/p-2/r}") {
    // (f, beta) on (n, L) against (lambda^2 f(lambda .), lambda^3 beta) on
    // (n, L/lambda) with the time grid contracted by lambda^2
    GridSpec ga(128, 20.0);
    GridSpec gb(128, 10.0);
    const double beta = 5.0, lambda = 2.0;
    RealField fa = dipole(ga, 1.0, 1.5);
    RealField fb(gb);
    for (std::size_t i = 0; i < fa.values.size(); ++i)
        fb.values[i] = lambda * lambda * fa.values[i];
    std::vector<double> grid_a, grid_b;
    for (int i = 0; i <= 64; ++i) {
        grid_a.push_back(4.0 * i / 64.0);
        grid_b.push_back(grid_a.back() / (lambda * lambda));
    }
    for (auto [s, p, r] : {std::array<double, 3>{0.0, 3.0, 6.0},
                           std::array<double, 3>{0.0, 3.0, 4.0}}) {
        const double va =
            strichartz_quadrature(forward_transform(fa), beta, s, p, r, grid_a).value;
        const double vb = strichartz_quadrature(forward_transform(fb),
                                                lambda * lambda * lambda * beta, s, p, r,
                                                grid_b)
                              .value;
        const double expect = std::pow(lambda, 2.0 + s - 2.0 / p - 2.0 / r);
        CHECK(vb / va == doctest::Approx(expect).epsilon(1e-3));
    }
}

TEST_CASE("dispersive scan: homogeneity, exact beta*t dependence, errors") {
    GridSpec g(128, 20.0);
    LPBank bank = LPBank::make(g);
    SpectralField f = forward_transform(gaussian_bump(g, 1.0, 1.0));
    const int ks[] = {0, 1};
    const double ts[] = {1.0, 2.0, 4.0};

    DispersiveScan s1 = dispersive_scan(f, 10.0, ks, ts, bank);
    SpectralField f3(g, f.coeffs);
    kernels::scale(std::span<complex>(f3.coeffs), 3.0);
    DispersiveScan s3 = dispersive_scan(f3, 10.0, ks, ts, bank);
    for (std::size_t i = 0; i < s1.ratios.size(); ++i)
        CHECK(s3.ratios[i] == doctest::Approx(s1.ratios[i]).epsilon(1e-12));

    // (beta, t) and (2 beta, t/2) coincide exactly: the multiplier is built
    // from the product beta*t
    const double ts_half[] = {0.5, 1.0, 2.0};
    DispersiveScan s2 = dispersive_scan(f, 20.0, ks, ts_half, bank);
    for (std::size_t i = 0; i < s1.ratios.size(); ++i) CHECK(s2.ratios[i] == s1.ratios[i]);

    for (double r : s1.ratios) CHECK(std::isfinite(r));

    CHECK_THROWS_AS(dispersive_scan(f, 0.0, ks, ts, bank), AnalysisError);
    // a block with no spectral content
    SpectralField lowpass(g);
    lowpass.coeffs[1] = complex(1.0);
    lowpass.coeffs[g.n() - 1] = complex(1.0);
    const int high_k[] = {4};
    CHECK_THROWS_AS(dispersive_scan(lowpass, 10.0, high_k, ts, bank), AnalysisError);
}

TEST_CASE("boundary mass: centered Gaussian, constant field, zero field") {
    GridSpec g(128, 40.0);
    RealField g1 = gauss_kernel(g, 1.0); // 4 sqrt(t) = 4 <= L/8
    BoundaryMassResult b = boundary_mass(g1);
    CHECK_FALSE(b.degenerate);
    CHECK(b.fraction < 1e-10);

    RealField c(g);
    for (double& v : c.values) v = 2.0;
    CHECK(boundary_mass(c).fraction == doctest::Approx(0.36).epsilon(0.01));

    BoundaryMassResult z = boundary_mass(RealField(g));
    CHECK(z.degenerate);
    CHECK(z.fraction == 0.0);
}

TEST_CASE("decay monitor: running supremum is nondecreasing and stable for the linear flow") {
    GridSpec g(256, 40.0);
    SpectralField bump = forward_transform(gaussian_bump(g, 1.0, 2.0));
    // L^1-normalized bump, beta = 1, L^2 decay
    const double l1 = lebesgue_norm(inverse_transform_nocheck(bump), 1.0);
    kernels::scale(std::span<complex>(bump.coeffs), 1.0 / l1);
    DecayMonitor mon(0.0, 2.0, 1.0);
    double sup5 = 0.0;
    std::vector<double> sups;
    for (double t : log_spaced_times()) {
        SpectralField wt = semigroup_propagate(bump, SemigroupParams{1.0, t});
        mon.observe(t, wt);
        sups.push_back(mon.supremum());
        if (t <= 5.0) sup5 = mon.supremum();
    }
    for (std::size_t i = 0; i + 1 < sups.size(); ++i) CHECK(sups[i + 1] >= sups[i]);
    CHECK(mon.supremum() <= 1.2 * sup5);
}
