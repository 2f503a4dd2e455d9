#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "betaplane/evolution.hpp"
#include "betaplane/fft.hpp"
#include "betaplane/initial_data.hpp"
#include "betaplane/kernels.hpp"
#include "betaplane/norms.hpp"
#include "betaplane/operators.hpp"
#include "betaplane/picard.hpp"
#include "betaplane/quadrature.hpp"
#include "test_helpers.hpp"

using namespace betaplane;
using namespace testutil;

namespace {

double rel_l2(const SpectralField& a, const SpectralField& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        num += std::norm(a.coeffs[i] - b.coeffs[i]);
        den += std::norm(b.coeffs[i]);
    }
    return std::sqrt(num / den);
}

} // namespace

TEST_CASE("config validation") {
    GridSpec g(64, 10.0);
    EvolveConfig bad;
    bad.dt = 0.0;
    CHECK_THROWS_AS(bad.validate(g), ConfigError);
    bad = EvolveConfig{};
    bad.t_end = bad.dt / 2.0;
    CHECK_THROWS_AS(bad.validate(g), ConfigError);
    bad = EvolveConfig{};
    bad.scheme = Scheme::ETDEuler;
    bad.dt = 1.0; // way past 2/max|xi|^2
    CHECK_THROWS_AS(bad.validate(g), ConfigError);
    bad = EvolveConfig{};
    bad.dt = 0.3;
    bad.t_end = 1.0; // not a multiple
    CHECK_THROWS_AS(bad.validate(g), ConfigError);
}

TEST_CASE("zero initial data stays zero") {
    GridSpec g(64, 10.0);
    EvolveConfig cfg;
    cfg.beta = 5.0;
    cfg.dt = 1e-2;
    cfg.t_end = 0.1;
    Trajectory tr = evolve(SpectralField(g), cfg);
    for (const auto& s : tr.snapshots)
        CHECK(kernels::max_abs(std::span<const complex>(s.coeffs)) == 0.0);
    EnergyLedger led = energy_check(tr);
    CHECK(led.degenerate);
    CHECK(led.residual == 0.0);
}

TEST_CASE("radial mean-zero data under beta = 0 reproduces the heat flow") {
    GridSpec g(128, 40.0);
    SpectralField w0 = forward_transform(radial_mean_zero(g, 2.0, 3.5, 2.0));
    EvolveConfig cfg;
    cfg.beta = 0.0;
    cfg.dt = 1e-3;
    cfg.t_end = 0.25;
    cfg.save_every = 50;
    Trajectory tr = evolve(w0, cfg);
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        SpectralField ref = heat_propagate(apply_symbol(w0, dealias_mask(g)), tr.times[i]);
        CHECK(rel_l2(tr.snapshots[i], ref) < 1e-10);
    }
}

TEST_CASE("snapshot at t = 0 equals the initial data and the mean is conserved") {
    // box and width chosen so both the physical tails and the dealias band
    // sit below 1e-13; a cut Gaussian tail at the seam would otherwise leave
    // a ~|tail|/k spectral floor
    GridSpec g(128, 12.0);
    SpectralField w0 = forward_transform(gaussian_bump(g, 2.0, 1.0, 0.3, -0.2));
    EvolveConfig cfg;
    cfg.beta = 8.0;
    cfg.dt = 2e-3;
    cfg.t_end = 0.2;
    cfg.save_every = 20;
    Trajectory tr = evolve(w0, cfg);
    CHECK(tr.times.front() == 0.0);
    // dealiasing of this well-resolved datum is far below 1e-12
    CHECK(rel_l2(tr.snapshots.front(), w0) < 1e-12);
    const complex mass = w0.coeffs[0];
    for (const auto& s : tr.snapshots)
        CHECK(std::abs(s.coeffs[0] - mass) <= 1e-12 * std::abs(mass));
}

TEST_CASE("L2 norm is nonincreasing along trajectories") {
    GridSpec g(64, 10.0);
    SpectralField w0 = forward_transform(dipole(g, 4.0, 1.0));
    EvolveConfig cfg;
    cfg.beta = 10.0;
    cfg.dt = 1e-3;
    cfg.t_end = 0.3;
    cfg.save_every = 10;
    Trajectory tr = evolve(w0, cfg);
    for (std::size_t i = 0; i + 1 < tr.l2_series.size(); ++i)
        CHECK(tr.l2_series[i + 1] <= tr.l2_series[i] * (1.0 + 1e-12));
}

TEST_CASE("ETDRK4 is fourth order (Richardson self-convergence)") {
    GridSpec g(64, 10.0);
    SpectralField w0 = forward_transform(dipole(g, 5.0, 1.0, 0.4, 0.2));
    auto run = [&](double dt) {
        EvolveConfig cfg;
        cfg.beta = 3.0;
        cfg.dt = dt;
        cfg.t_end = 0.16;
        cfg.save_every = 1u << 20; // final snapshot only
        return evolve(w0, cfg).snapshots.back();
    };
    SpectralField ref = run(0.001);
    SpectralField coarse = run(0.004);
    SpectralField mid = run(0.002);
    const double e1 = rel_l2(coarse, ref);
    const double e2 = rel_l2(mid, ref);
    // with the dt/4 run as reference the ideal ratio is 255/15 = 17
    CHECK(e1 / e2 >= 12.0);
    CHECK(e1 / e2 <= 20.0);
}

TEST_CASE("ETD-Euler is first order against the RK4 reference") {
    GridSpec g(64, 10.0);
    SpectralField w0 = forward_transform(dipole(g, 5.0, 1.0, 0.4, 0.2));
    auto run = [&](double dt, Scheme scheme) {
        EvolveConfig cfg;
        cfg.beta = 3.0;
        cfg.dt = dt;
        cfg.t_end = 0.16;
        cfg.scheme = scheme;
        cfg.save_every = 1u << 20;
        return evolve(w0, cfg).snapshots.back();
    };
    // stability guard allows dt up to 2/max|xi|^2 = 2.47e-3 on this grid
    SpectralField ref = run(0.0005, Scheme::ETDRK4);
    const double e1 = rel_l2(run(0.002, Scheme::ETDEuler), ref);
    const double e2 = rel_l2(run(0.001, Scheme::ETDEuler), ref);
    CHECK(e1 / e2 >= 1.6);
    CHECK(e1 / e2 <= 2.4);
}

TEST_CASE("blow-up aborts with the offending time") {
    GridSpec g(32, 10.0);
    SpectralField w0 = forward_transform(dipole(g, 1e8, 1.0));
    EvolveConfig cfg;
    cfg.beta = 0.0;
    cfg.dt = 0.1;
    cfg.t_end = 10.0;
    CHECK_THROWS_AS(evolve(w0, cfg), BlowUpError);
}

TEST_CASE("energy identity: pure heat run and generic nonlinear run") {
    GridSpec g(128, 40.0);
    // radial data, beta = 0: the flow is exactly heat, residual is pure
    // quadrature error
    {
        SpectralField w0 = forward_transform(radial_mean_zero(g, 2.0, 3.5, 2.0));
        EvolveConfig cfg;
        cfg.beta = 0.0;
        cfg.dt = 1e-3;
        cfg.t_end = 0.5;
        cfg.save_every = 100;
        EnergyLedger led = energy_check(evolve(w0, cfg));
        CHECK(led.residual <= 1e-8);
    }
    // dipole data with rotation
    {
        SpectralField w0 = forward_transform(dipole(g, 2.0, 1.5));
        EvolveConfig cfg;
        cfg.beta = 10.0;
        cfg.dt = 1e-3;
        cfg.t_end = 0.5;
        cfg.save_every = 100;
        EnergyLedger led = energy_check(evolve(w0, cfg));
        CHECK(led.residual <= 1e-6);
    }
}

TEST_CASE("ynorm: zero data, constant-in-time data, heat trajectory of G_1") {
    GridSpec g(256, 40.0);

    // zero trajectory
    std::vector<double> times;
    for (int i = 0; i <= 10; ++i) times.push_back(0.1 * i);
    Trajectory zero = linear_trajectory(SpectralField(g), 0.0, times);
    CHECK(ynorm(zero, 0.0, 2.0, 2.0) == 0.0);

    // constant-in-time: T^{1/r} * spatial norm
    SpectralField f = forward_transform(gaussian_bump(g, 1.0, 2.0));
    Trajectory constant;
    constant.beta = 0.0;
    for (int i = 0; i <= 10; ++i) {
        constant.times.push_back(0.1 * i);
        constant.snapshots.push_back(f);
    }
    const double r = 3.0, s = 0.5, p = 2.0;
    const double expect = std::pow(1.0, 1.0 / r) * sobolev_norm(f, s, p);
    CHECK(ynorm(constant, s, p, r) == doctest::Approx(expect).epsilon(1e-10));

    // heat trajectory of G_1 over [0,1], s=0, p=r=2. The homogeneous norm
    // excludes the mean mode, which carries (1/L^2)^2 * L^2 of the L^2 mass
    // of a unit-mass kernel, so the closed form
    // integral of (8 pi (1+tau))^{-1} = ln(2)/(8 pi) acquires a -T/L^2 shift.
    SpectralField g1 = forward_transform(gauss_kernel(g, 1.0));
    std::vector<double> tgrid;
    for (int i = 0; i <= 100; ++i) tgrid.push_back(0.01 * i);
    Trajectory heat = linear_trajectory(g1, 0.0, tgrid);
    const double L = g.box_length();
    const double expect_heat = std::sqrt(std::log(2.0) / (8.0 * pi) - 1.0 / (L * L));
    CHECK(ynorm(heat, 0.0, 2.0, 2.0) == doctest::Approx(expect_heat).epsilon(1e-4));

    CHECK_THROWS_AS(ynorm(constant, 0.0, 2.0, 0.5), ConfigError);
}

TEST_CASE("picard: zero data gives zero iterates and zero distances") {
    GridSpec g(32, 10.0);
    ExponentTuple t{0.05, canonical_p(0.05), 6.0, canonical_p(0.05), 4.0};
    PicardResult res = picard_solve(SpectralField(g), 50.0, t, 0.2, 3, 0.01);
    for (double v : res.report.y1_norms) CHECK(v == 0.0);
    for (double v : res.report.d_distances) CHECK(v == 0.0);
    CHECK(res.report.contractive);
    CHECK(kernels::max_abs(std::span<const complex>(res.final_iterate.coeffs)) == 0.0);
}

TEST_CASE("picard with the nonlinearity zeroed reproduces the linear flow") {
    GridSpec g(64, 10.0);
    SpectralField w0 = forward_transform(dipole(g, 1.0, 1.0));
    ExponentTuple t{0.0, 3.0, 6.0, 3.0, 4.0};
    PicardResult res = picard_solve(w0, 30.0, t, 0.5, 4, 5e-3, /*zero_nonlinearity=*/true);
    SpectralField lin = semigroup_propagate(apply_symbol(w0, dealias_mask(g)),
                                            SemigroupParams{30.0, 0.5});
    CHECK(rel_l2(res.final_iterate, lin) < 1e-12);
    for (double d : res.report.d_distances) CHECK(d <= 1e-12 * res.report.y1_norms[0]);
}

TEST_CASE("picard first correction matches a dense Duhamel quadrature") {
    GridSpec g(32, 10.0);
    SpectralField w0 = forward_transform(dipole(g, 2.0, 1.2));
    const double beta = 20.0, t_end = 0.08, dt = 0.01; // M = 8 nodes
    ExponentTuple t{0.0, 3.0, 6.0, 3.0, 4.0};
    PicardResult res = picard_solve(w0, beta, t, t_end, 2, dt);

    // dense oracle: Phi(lin)(T) = T(T) w0 - sum_j w_j T(T - tau_j) N(lin_j)
    SpectralField w0m = apply_symbol(w0, dealias_mask(g));
    const std::size_t M = 8;
    std::vector<double> wq = simpson_weights(M, dt);
    SpectralField acc(g);
    for (std::size_t j = 0; j <= M; ++j) {
        SpectralField lin_j = semigroup_propagate(w0m, SemigroupParams{beta, dt * j});
        SpectralField nj = nonlinear_term(lin_j);
        SpectralField prop = semigroup_propagate(nj, SemigroupParams{beta, t_end - dt * j});
        kernels::add_scaled(acc.coeffs, complex(wq[j]), prop.coeffs, acc.coeffs);
    }
    SpectralField dense = semigroup_propagate(w0m, SemigroupParams{beta, t_end});
    kernels::add_scaled(dense.coeffs, complex(-1.0), acc.coeffs, dense.coeffs);

    CHECK(rel_l2(res.final_iterate, dense) < 1e-12);
}

TEST_CASE("picard flags divergence on large data") {
    GridSpec g(32, 10.0);
    SpectralField w0 = forward_transform(dipole(g, 2e3, 1.0));
    ExponentTuple t{0.0, 3.0, 6.0, 3.0, 4.0};
    PicardResult res = picard_solve(w0, 1.0, t, 0.5, 6, 0.01);
    CHECK_FALSE(res.report.contractive);
    CHECK(res.report.iterate_count < 6); // aborted early
}

TEST_CASE("picard small-data run contracts") {
    GridSpec g(64, 10.0);
    const double beta = 200.0, delta = 0.05;
    RealField seed_field = dipole(g, 1.0, 1.0);
    SpectralField w0 = forward_transform(seed_field);
    const double current = smallness_value(w0, beta, delta);
    kernels::scale(std::span<complex>(w0.coeffs), 0.01 / current);
    const double p = canonical_p(delta);
    ExponentTuple t{delta, p, 6.0 / (1.0 - delta), p, 6.0 / (1.0 + 5.0 * delta)};
    PicardResult res = picard_solve(w0, beta, t, 0.5, 4, 2e-3);
    CHECK(res.report.contractive);
    REQUIRE(res.report.contraction_ratios.size() >= 2);
    for (double r : res.report.contraction_ratios) CHECK(r <= 0.5);
    CHECK_THROWS_AS(picard_solve(w0, beta, t, 0.5, 1, 2e-3), ConfigError);
    CHECK_THROWS_AS(picard_solve(w0, 0.0, t, 0.5, 3, 2e-3), ConfigError);
}
