#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <omp.h>

#include <cmath>
#include <limits>
#include <thread>

#include "betaplane/fft.hpp"
#include "betaplane/kernels.hpp"
#include "betaplane/littlewood_paley.hpp"
#include "betaplane/norms.hpp"
#include "betaplane/operators.hpp"
#include "betaplane/symbols.hpp"
#include "test_helpers.hpp"

using namespace betaplane;
using namespace testutil;

TEST_CASE("grid invariants") {
    CHECK_THROWS_AS(GridSpec(7, 1.0), ConfigError);
    CHECK_THROWS_AS(GridSpec(48, 1.0), ConfigError);
    CHECK_THROWS_AS(GridSpec(64, 0.0), ConfigError);
    GridSpec g(8, 2.0);
    CHECK(g.frequency(0) == 0.0);
    CHECK(g.wave_index(4) == -4);
    CHECK(g.wave_index(7) == -1);
}

TEST_CASE("forward transform matches the brute-force DFT on a random 8x8 field") {
    GridSpec g(8, 3.0);
    RealField f = random_field(g, 42);
    SpectralField fast = forward_transform(f);
    SpectralField slow = brute_force_dft(f);
    const double scale = kernels::max_abs(std::span<const complex>(slow.coeffs));
    CHECK(max_abs_diff(fast.coeffs, slow.coeffs) < 1e-12 * scale);
}

TEST_CASE("constant field transforms to L^2 c at the zero mode") {
    GridSpec g(16, 5.0);
    RealField f(g);
    for (double& v : f.values) v = 0.7;
    SpectralField F = forward_transform(f);
    CHECK(std::abs(F.coeffs[0] - complex(0.7 * 25.0)) < 1e-12 * 25.0);
    double off = 0.0;
    for (std::size_t i = 1; i < F.coeffs.size(); ++i) off = std::max(off, std::abs(F.coeffs[i]));
    CHECK(off < 1e-12 * 25.0);
}

TEST_CASE("cos(2 pi x1 / L) lands on k = (+-1, 0) with value L^2/2") {
    GridSpec g(32, 7.0);
    RealField f(g);
    for (std::size_t iy = 0; iy < 32; ++iy)
        for (std::size_t ix = 0; ix < 32; ++ix)
            f.values[iy * 32 + ix] = std::cos(2.0 * pi * g.x_coord(ix) / 7.0);
    SpectralField F = forward_transform(f);
    const double expect = 0.5 * 49.0;
    CHECK(std::abs(F.coeffs[1] - complex(expect)) < 1e-11 * expect);
    CHECK(std::abs(F.coeffs[31] - complex(expect)) < 1e-11 * expect);
    // everything else vanishes
    double off = 0.0;
    for (std::size_t i = 0; i < F.coeffs.size(); ++i) {
        if (i == 1 || i == 31) continue;
        off = std::max(off, std::abs(F.coeffs[i]));
    }
    CHECK(off < 1e-11 * expect);
}

TEST_CASE("single conjugate mode pair inverts to the cosine") {
    GridSpec g(32, 7.0);
    SpectralField F(g);
    F.coeffs[1] = complex(0.5 * 49.0);
    F.coeffs[31] = complex(0.5 * 49.0);
    RealField f = inverse_transform(F);
    double worst = 0.0;
    for (std::size_t iy = 0; iy < 32; ++iy)
        for (std::size_t ix = 0; ix < 32; ++ix)
            worst = std::max(worst, std::abs(f.values[iy * 32 + ix] -
                                             std::cos(2.0 * pi * g.x_coord(ix) / 7.0)));
    CHECK(worst < 1e-12);
}

TEST_CASE("round trip is the identity to 1e-12 on random fields") {
    for (std::size_t n : {64u, 128u}) {
        GridSpec g(n, 11.0);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            RealField f = random_field(g, seed);
            RealField back = inverse_transform(forward_transform(f));
            CHECK(rel_l2_error(back.values, f.values) < 1e-12);
        }
    }
}

TEST_CASE("forward transform rejects non-finite input") {
    GridSpec g(8, 1.0);
    RealField f(g);
    f.values[3] = std::nan("");
    CHECK_THROWS_AS(forward_transform(f), ConfigError);
}

TEST_CASE("inverse transform rejects broken Hermitian symmetry") {
    GridSpec g(16, 1.0);
    SpectralField F = forward_transform(random_field(g, 5));
    F.coeffs[1] += complex(0.0, 1.0); // breaks conjugate pairing with index n-1
    CHECK_THROWS_AS(inverse_transform(F), ConfigError);
    CHECK_NOTHROW(inverse_transform_nocheck(F));
}

TEST_CASE("zero spectrum inverts to the zero field") {
    GridSpec g(16, 2.0);
    RealField f = inverse_transform(SpectralField(g));
    for (double v : f.values) CHECK(v == 0.0);
}

TEST_CASE("Parseval identity is exact to 1e-12") {
    GridSpec g(64, 9.0);
    RealField f = random_field(g, 17);
    SpectralField F = forward_transform(f);
    const double lhs = lebesgue_norm(f, 2.0);
    const double rhs = l2_norm_spectral(F);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("apply_symbol: identity, annihilator, composition, linearity") {
    GridSpec g(32, 4.0);
    SpectralField F = forward_transform(random_field(g, 3));
    SpectralField G = forward_transform(random_field(g, 4));

    SpectralField id = apply_symbol(F, identity_symbol(g));
    CHECK(max_abs_diff(id.coeffs, F.coeffs) == 0.0);

    Symbol zero(g);
    SpectralField z = apply_symbol(F, zero);
    CHECK(kernels::max_abs(std::span<const complex>(z.coeffs)) == 0.0);

    Symbol m1 = heat_symbol(g, 0.3);
    Symbol m2 = riesz_symbol(g, 1.0);
    SpectralField two = apply_symbol(apply_symbol(F, m1), m2);
    Symbol prod(g);
    for (std::size_t i = 0; i < prod.values.size(); ++i)
        prod.values[i] = m1.values[i] * m2.values[i];
    SpectralField one = apply_symbol(F, prod);
    const double ref = kernels::max_abs(std::span<const complex>(one.coeffs));
    CHECK(max_abs_diff(two.coeffs, one.coeffs) < 1e-14 * std::max(ref, 1.0));

    // linearity: m(alpha f + g) = alpha m f + m g
    const complex alpha(2.5, 0.0);
    SpectralField combo(g);
    kernels::add_scaled(G.coeffs, alpha, F.coeffs, combo.coeffs);
    SpectralField lhs = apply_symbol(combo, m1);
    SpectralField rhs(g);
    SpectralField mf = apply_symbol(F, m1), mg = apply_symbol(G, m1);
    kernels::add_scaled(mg.coeffs, alpha, mf.coeffs, rhs.coeffs);
    const double scale = kernels::max_abs(std::span<const complex>(rhs.coeffs));
    CHECK(max_abs_diff(lhs.coeffs, rhs.coeffs) < 1e-13 * std::max(scale, 1.0));

    GridSpec other(64, 4.0);
    CHECK_THROWS_AS(apply_symbol(F, identity_symbol(other)), ConfigError);
}

TEST_CASE("riesz symbol values and inverse pair") {
    const double L = 2.0 * pi;
    GridSpec g(32, L);
    Symbol s0 = riesz_symbol(g, 0.0);
    CHECK(s0.values[0] == complex(0.0));
    for (std::size_t i = 1; i < s0.values.size(); ++i) CHECK(s0.values[i] == complex(1.0));

    Symbol s2 = riesz_symbol(g, 2.0);
    CHECK(s2.values[1].real() == doctest::Approx(1.0).epsilon(1e-14)); // xi = (1,0)

    Symbol sp = riesz_symbol(g, 1.3), sm = riesz_symbol(g, -1.3);
    for (std::size_t i = 1; i < sp.values.size(); ++i) {
        const double prod = (sp.values[i] * sm.values[i]).real();
        CHECK(std::abs(prod - 1.0) < 1e-13);
    }
}

TEST_CASE("Littlewood-Paley bank: supports, partition of unity, reproduction") {
    GridSpec g(128, 40.0);
    LPBank bank = LPBank::make(g);
    CHECK(bank.k_min <= -2);
    CHECK(bank.k_max >= 4);

    // support inside the dyadic annulus
    for (int k = bank.k_min; k <= bank.k_max; ++k) {
        const auto& phi = bank.block(k);
        for (std::size_t iy = 0; iy < g.n(); ++iy)
            for (std::size_t ix = 0; ix < g.n(); ++ix) {
                if (phi[iy * g.n() + ix] == 0.0) continue;
                const double axi = std::hypot(g.frequency(ix), g.frequency(iy));
                CHECK(axi >= 0.75 * std::pow(2.0, k));
                CHECK(axi <= (8.0 / 3.0) * std::pow(2.0, k));
            }
    }

    // partition of unity at covered frequencies
    const double lo = std::pow(2.0, bank.k_min + 1);
    const double hi = std::pow(2.0, bank.k_max - 1);
    for (std::size_t iy = 0; iy < g.n(); ++iy)
        for (std::size_t ix = 0; ix < g.n(); ++ix) {
            const double axi = std::hypot(g.frequency(ix), g.frequency(iy));
            if (axi <= lo || axi >= hi) continue;
            double sum = 0.0;
            for (int k = bank.k_min; k <= bank.k_max; ++k) sum += bank.block(k)[iy * g.n() + ix];
            CHECK(std::abs(sum - 1.0) < 1e-12);
        }

    // (P_{k-1} + P_k + P_{k+1}) P_k f = P_k f
    SpectralField f = forward_transform(random_field(g, 9));
    const int k = 1;
    SpectralField pk = lp_project(f, k, bank);
    SpectralField sum3(g);
    for (int j = k - 1; j <= k + 1; ++j) {
        SpectralField pj = lp_project(pk, j, bank);
        for (std::size_t i = 0; i < sum3.coeffs.size(); ++i) sum3.coeffs[i] += pj.coeffs[i];
    }
    const double ref = kernels::max_abs(std::span<const complex>(pk.coeffs));
    CHECK(max_abs_diff(sum3.coeffs, pk.coeffs) < 1e-12 * std::max(ref, 1e-30));

    // constants are annihilated
    RealField c(g);
    for (double& v : c.values) v = 3.0;
    SpectralField ch = forward_transform(c);
    for (int kk = bank.k_min; kk <= bank.k_max; ++kk) {
        SpectralField pc = lp_project(ch, kk, bank);
        CHECK(kernels::max_abs(std::span<const complex>(pc.coeffs)) < 1e-10);
    }

    // single mode at |xi| = 2^k reproduced by adjacent blocks
    SpectralField mode(g);
    // pick an axis mode with |xi| close to 2: k index = round(2 / dxi)
    const std::size_t kx = static_cast<std::size_t>(std::lround(2.0 / g.dxi()));
    mode.coeffs[kx] = complex(1.0);
    mode.coeffs[(g.n() - kx) % g.n()] = complex(1.0);
    SpectralField rec(g);
    for (int j = 0; j <= 2; ++j) {
        SpectralField pj = lp_project(mode, j, bank);
        for (std::size_t i = 0; i < rec.coeffs.size(); ++i) rec.coeffs[i] += pj.coeffs[i];
    }
    CHECK(max_abs_diff(rec.coeffs, mode.coeffs) < 1e-12);

    CHECK_THROWS_AS(lp_project(f, bank.k_max + 1, bank), ConfigError);
}

TEST_CASE("Lebesgue norms of the heat kernel at t = 1") {
    GridSpec g(256, 40.0);
    RealField g1 = gauss_kernel(g, 1.0);
    CHECK(lebesgue_norm(g1, 1.0) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(lebesgue_norm(g1, 2.0) ==
          doctest::Approx(std::pow(8.0 * pi, -0.5)).epsilon(1e-6));
    CHECK(lebesgue_norm(g1, std::numeric_limits<double>::infinity()) ==
          doctest::Approx(1.0 / (4.0 * pi)).epsilon(1e-6));
    CHECK_THROWS_AS(lebesgue_norm(g1, 0.5), ConfigError);
    RealField z(g);
    CHECK(lebesgue_norm(z, 3.0) == 0.0);
}

TEST_CASE("Sobolev norm: H^1 of the heat kernel and the Parseval route") {
    GridSpec g(256, 40.0);
    RealField g1 = gauss_kernel(g, 1.0);
    CHECK(sobolev_norm(g1, 1.0, 2.0) ==
          doctest::Approx(std::pow(16.0 * pi, -0.5)).epsilon(1e-5));

    SpectralField zero(g);
    CHECK(sobolev_norm(zero, 1.5, 3.0) == 0.0);

    // s = 0, a = 2 equals the spectral Plancherel sum for mean-zero data
    RealField f = random_field(g, 23);
    double mean = 0.0;
    for (double v : f.values) mean += v;
    mean /= static_cast<double>(f.values.size());
    for (double& v : f.values) v -= mean;
    SpectralField F = forward_transform(f);
    CHECK(sobolev_norm(F, 0.0, 2.0) ==
          doctest::Approx(hdot_norm_spectral(F, 0.0)).epsilon(1e-10));
    CHECK(sobolev_norm(F, 0.0, 2.0) == doctest::Approx(lebesgue_norm(f, 2.0)).epsilon(1e-10));

    CHECK_THROWS_AS(sobolev_norm(F, 0.0, 1.5), ConfigError);
}

TEST_CASE("Besov norm: zero field, single block, L^2 equivalence") {
    GridSpec g(128, 40.0);
    LPBank bank = LPBank::make(g);

    SpectralField zero(g);
    CHECK(besov_norm(zero, 0.7, 3.0, 2.0, bank) == 0.0);

    // single-block field: the norm reduces to 2^{sk} ||g||_p up to adjacent
    // leakage (factor <= 3 with the l^1 count, >= the k term alone)
    SpectralField f = forward_transform(random_field(g, 31));
    const int k = 2;
    SpectralField blk = lp_project(f, k, bank);
    const double s = 0.8, p = 2.0;
    const double single = std::pow(2.0, s * k) *
                          lebesgue_norm(inverse_transform_nocheck(blk), p);
    const double full = besov_norm(blk, s, p, 1.0, bank);
    CHECK(full >= single * (1.0 - 1e-12));
    CHECK(full <= 3.0 * single);

    // s=0, p=r=2: comparable to the L^2 norm on fields concentrated where a
    // single block dominates (the annulus (4/3, 3/2) * 2^k)
    SpectralField conc(g);
    for (std::size_t iy = 0; iy < g.n(); ++iy)
        for (std::size_t ix = 0; ix < g.n(); ++ix) {
            const double axi = std::hypot(g.frequency(ix), g.frequency(iy));
            for (int kk = -1; kk <= 3; ++kk) {
                const double r = axi / std::pow(2.0, kk);
                if (r > 4.0 / 3.0 + 0.01 && r < 1.5 - 0.01)
                    conc.coeffs[iy * g.n() + ix] = complex(1.0 / (1.0 + axi));
            }
        }
    const double bes = besov_norm(conc, 0.0, 2.0, 2.0, bank);
    const double sob = sobolev_norm(conc, 0.0, 2.0);
    CHECK(bes >= 0.9 * sob);
    CHECK(bes <= 1.1 * sob);
}

TEST_CASE("besov coverage gap flags spectrum outside the bank range") {
    GridSpec g(64, 10.0);
    LPBank full = LPBank::make(g);
    LPBank narrow = LPBank::make(g, 0, 1); // annuli [0.75, 5.33] only
    SpectralField f(g);
    f.coeffs[1] = complex(1.0); // |xi| = 0.628, below the narrow range
    f.coeffs[g.n() - 1] = complex(1.0);
    CHECK(lp_coverage_gap(f, full) < 1e-12);
    CHECK(lp_coverage_gap(f, narrow) > 0.99);
}

TEST_CASE("oversampled sup norm refines the grid maximum") {
    GridSpec g(32, 10.0);
    // a cosine with crest phase pi/7: incommensurate with the 2 pi/32 phase
    // lattice, so the coarse grid undershoots the true maximum 1 and the 2x
    // interpolant closes most of the gap
    SpectralField f(g);
    const std::size_t kx = 5, ky = 3;
    const double half = 0.5 * g.box_length() * g.box_length();
    const complex c = half * std::polar(1.0, pi / 7.0);
    f.coeffs[ky * g.n() + kx] = c;
    f.coeffs[(g.n() - ky) * g.n() + (g.n() - kx)] = std::conj(c);
    RealField fr = inverse_transform(f);
    const double grid_max = lebesgue_norm(fr, std::numeric_limits<double>::infinity());
    const double fine_max = sup_norm_oversampled(f);
    CHECK(grid_max <= 0.999);
    CHECK(fine_max >= grid_max);
    CHECK(fine_max >= 0.999);
    CHECK(fine_max <= 1.0 + 1e-12);
}

TEST_CASE("distinct transforms are safe to run concurrently") {
    GridSpec g(64, 10.0);
    RealField f1 = random_field(g, 101), f2 = random_field(g, 202);
    SpectralField s1 = forward_transform(f1), s2 = forward_transform(f2);
    SpectralField c1(g), c2(g);
    std::thread t1([&] { c1 = forward_transform(f1); });
    std::thread t2([&] { c2 = forward_transform(f2); });
    t1.join();
    t2.join();
    CHECK(c1.coeffs == s1.coeffs);
    CHECK(c2.coeffs == s2.coeffs);
}

TEST_CASE("serial and OpenMP kernels agree") {
    std::vector<complex> a(5000), b(5000), o1(5000), o2(5000);
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = complex(u(rng), u(rng));
        b[i] = complex(u(rng), u(rng));
    }
    kernels::multiply(std::span<const complex>(a), b, std::span<complex>(o1));
    kernels::serial::multiply(std::span<const complex>(a), b, std::span<complex>(o2));
    CHECK(max_abs_diff(o1, o2) == 0.0);

    kernels::stage(std::span<const complex>(a), b, std::span<const complex>(b), a,
                   std::span<complex>(o1));
    kernels::serial::stage(std::span<const complex>(a), b, std::span<const complex>(b), a,
                           std::span<complex>(o2));
    CHECK(max_abs_diff(o1, o2) == 0.0);

    CHECK(kernels::sum_abs2(std::span<const complex>(a)) ==
          kernels::serial::sum_abs2(std::span<const complex>(a)));

    std::vector<double> ra(4097);
    for (double& v : ra) v = u(rng);
    CHECK(kernels::sum(std::span<const double>(ra)) ==
          kernels::serial::sum(std::span<const double>(ra)));
    CHECK(kernels::sum_abs_pow(std::span<const double>(ra), 2.7) ==
          kernels::serial::sum_abs_pow(std::span<const double>(ra), 2.7));
    CHECK(kernels::max_abs(std::span<const double>(ra)) ==
          kernels::serial::max_abs(std::span<const double>(ra)));
}

TEST_CASE("pairwise reduction is bitwise stable across thread counts") {
    std::vector<double> a(100001);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double& v : a) v = u(rng);
    const int saved = omp_get_max_threads();
    std::vector<double> results;
    for (int th : {1, 2, 4}) {
        omp_set_num_threads(th);
        results.push_back(kernels::sum(std::span<const double>(a)));
    }
    omp_set_num_threads(saved);
    CHECK(results[0] == results[1]);
    CHECK(results[0] == results[2]);
}
