#include "betaplane/picard.hpp"

#include <cmath>
#include <limits>

#include "betaplane/kernels.hpp"
#include "betaplane/norms.hpp"
#include "betaplane/operators.hpp"
#include "betaplane/quadrature.hpp"

namespace betaplane {

namespace {

// Iterate trajectories live inside the 2/3 dealias box, so they are stored
// compactly as the (2c+1)^2 block of retained modes.
struct CompactTraj {
    int c = 0;
    std::size_t stride = 0;
    std::vector<std::vector<complex>> nodes;

    void store(std::size_t m, const SpectralField& f) {
        const std::size_t n = f.grid.n();
        auto& box = nodes[m];
        std::size_t out = 0;
        for (int ky = -c; ky <= c; ++ky) {
            const std::size_t iy = static_cast<std::size_t>(ky >= 0 ? ky : static_cast<int>(n) + ky);
            for (int kx = -c; kx <= c; ++kx) {
                const std::size_t ix = static_cast<std::size_t>(kx >= 0 ? kx : static_cast<int>(n) + kx);
                box[out++] = f.coeffs[iy * n + ix];
            }
        }
    }

    void load(std::size_t m, SpectralField& f) const {
        const std::size_t n = f.grid.n();
        std::fill(f.coeffs.begin(), f.coeffs.end(), complex(0.0));
        const auto& box = nodes[m];
        std::size_t in = 0;
        for (int ky = -c; ky <= c; ++ky) {
            const std::size_t iy = static_cast<std::size_t>(ky >= 0 ? ky : static_cast<int>(n) + ky);
            for (int kx = -c; kx <= c; ++kx) {
                const std::size_t ix = static_cast<std::size_t>(kx >= 0 ? kx : static_cast<int>(n) + kx);
                f.coeffs[iy * n + ix] = box[in++];
            }
        }
    }
};

CompactTraj make_traj(const GridSpec& g, std::size_t count) {
    CompactTraj t;
    t.c = static_cast<int>(g.n() / 3);
    t.stride = static_cast<std::size_t>(2 * t.c + 1) * static_cast<std::size_t>(2 * t.c + 1);
    t.nodes.assign(count, std::vector<complex>(t.stride, complex(0.0)));
    return t;
}

double lr_time_norm(const std::vector<double>& samples,
                    const std::vector<double>& weights, double r) {
    double acc = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i)
        acc += weights[i] * std::pow(samples[i], r);
    return std::pow(acc, 1.0 / r);
}

} // namespace

PicardResult picard_solve(const SpectralField& w0, double beta,
                          const ExponentTuple& exponents, double t_end,
                          int iterations, double dt, bool zero_nonlinearity) {
    if (iterations < 2) throw ConfigError("picard_solve: iterations must be >= 2");
    if (beta == 0.0) throw ConfigError("picard_solve: beta must be nonzero");
    if (!(dt > 0.0) || !(t_end >= dt)) throw ConfigError("picard_solve: bad time grid");
    const AdmissibilityReport adm = check_admissible(exponents);
    if (!adm.thm1_1)
        throw ConfigError("picard_solve: exponents fail the admissibility checks");

    const GridSpec& g = w0.grid;
    const std::size_t M = static_cast<std::size_t>(std::llround(t_end / dt));
    if (std::abs(static_cast<double>(M) * dt - t_end) > 1e-9 * t_end || M < 2)
        throw ConfigError("picard_solve: t_end must be an integer multiple of dt");

    const double d = exponents.delta;
    const double weight1 =
        std::pow(std::abs(beta), -(1.0 + d - 2.0 / exponents.p1 - 2.0 / exponents.r1) / 3.0);
    const double weight2 =
        std::pow(std::abs(beta), -(2.0 + d - 2.0 / exponents.p2 - 2.0 / exponents.r2) / 3.0);

    const std::vector<double> tw = simpson_weights(M, dt);

    // Linear solution at every node, each multiplier built independently.
    SpectralField w_masked = apply_symbol(w0, dealias_mask(g));
    CompactTraj lin = make_traj(g, M + 1);
    CompactTraj prev = make_traj(g, M + 1);
    CompactTraj curr = make_traj(g, M + 1);

    PicardReport rep;
    rep.exponents = exponents;
    rep.dt = dt;
    rep.t_end = t_end;

    {
        std::vector<double> s1(M + 1), s2(M + 1);
        SpectralField node(g);
        for (std::size_t m = 0; m <= M; ++m) {
            node = semigroup_propagate(w_masked,
                                       SemigroupParams{beta, static_cast<double>(m) * dt});
            lin.store(m, node);
            prev.store(m, node);
            s1[m] = sobolev_norm(node, -1.0 + d, exponents.p1);
            s2[m] = sobolev_norm(node, d, exponents.p2);
        }
        rep.y1_norms.push_back(lr_time_norm(s1, tw, exponents.r1));
        rep.y2_norms.push_back(lr_time_norm(s2, tw, exponents.r2));
        rep.iterate_count = 1;
    }

    const Symbol E = semigroup_symbol(g, SemigroupParams{beta, dt});
    SpectralField final_iterate = semigroup_propagate(w_masked, SemigroupParams{beta, t_end});

    for (int it = 1; it < iterations; ++it) {
        // Duhamel accumulator: A_m = E A_{m-1} + v_m N_m with running Simpson
        // weights v = [1,4,2,4,...]; for even m the integral is
        // (dt/3)(A_m - N_m), odd m appends a trapezoid panel to I_{m-1}.
        SpectralField A(g), I_even(g), I(g), N_prev(g), N_cur(g), node(g), prev_node(g), diff(g);
        std::vector<double> s1(M + 1), s2(M + 1), dn1(M + 1), dn2(M + 1);

        for (std::size_t m = 0; m <= M; ++m) {
            prev.load(m, prev_node);
            if (zero_nonlinearity) {
                std::fill(N_cur.coeffs.begin(), N_cur.coeffs.end(), complex(0.0));
            } else {
                N_cur = nonlinear_term(prev_node);
            }

            if (m == 0) {
                A.coeffs = N_cur.coeffs;
                std::fill(I.coeffs.begin(), I.coeffs.end(), complex(0.0));
                std::fill(I_even.coeffs.begin(), I_even.coeffs.end(), complex(0.0));
                node = w_masked;
            } else {
                const double v = (m % 2 == 1) ? 4.0 : 2.0;
                kernels::multiply(E.values, A.coeffs, A.coeffs);
                kernels::add_scaled(A.coeffs, complex(v), N_cur.coeffs, A.coeffs);
                if (m % 2 == 0) {
                    kernels::add_scaled(A.coeffs, complex(-1.0), N_cur.coeffs, I_even.coeffs);
                    kernels::scale(std::span<complex>(I_even.coeffs), dt / 3.0);
                    I.coeffs = I_even.coeffs;
                } else {
                    // I_m = E I_{m-1} + (dt/2)(E N_{m-1} + N_m)
                    kernels::multiply(E.values, I.coeffs, I.coeffs);
                    kernels::multiply(E.values, N_prev.coeffs, diff.coeffs);
                    kernels::add_scaled(diff.coeffs, complex(1.0), N_cur.coeffs, diff.coeffs);
                    kernels::add_scaled(I.coeffs, complex(0.5 * dt), diff.coeffs, I.coeffs);
                }
                // Phi(w)(t_m) = T(t_m) w0 - I_m
                lin.load(m, node);
                kernels::add_scaled(node.coeffs, complex(-1.0), I.coeffs, node.coeffs);
            }
            N_prev.coeffs = N_cur.coeffs;
            curr.store(m, node);

            s1[m] = sobolev_norm(node, -1.0 + d, exponents.p1);
            s2[m] = sobolev_norm(node, d, exponents.p2);
            kernels::add_scaled(node.coeffs, complex(-1.0), prev_node.coeffs, diff.coeffs);
            SpectralField diff_field(g, diff.coeffs);
            dn1[m] = sobolev_norm(diff_field, -1.0 + d, exponents.p1);
            dn2[m] = sobolev_norm(diff_field, d, exponents.p2);
            if (m == M) final_iterate.coeffs = node.coeffs;
        }

        rep.y1_norms.push_back(lr_time_norm(s1, tw, exponents.r1));
        rep.y2_norms.push_back(lr_time_norm(s2, tw, exponents.r2));
        const double dist = weight1 * lr_time_norm(dn1, tw, exponents.r1) +
                            weight2 * lr_time_norm(dn2, tw, exponents.r2);
        rep.d_distances.push_back(dist);
        rep.iterate_count += 1;

        const std::size_t nd = rep.d_distances.size();
        if (nd >= 2) {
            const double prev_d = rep.d_distances[nd - 2];
            double ratio;
            if (prev_d == 0.0)
                ratio = dist == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
            else
                ratio = dist / prev_d;
            rep.contraction_ratios.push_back(ratio);
            if (prev_d > 0.0 && dist > 10.0 * prev_d) {
                rep.contractive = false;
                break;
            }
        }
        std::swap(prev.nodes, curr.nodes);
    }

    return PicardResult{std::move(rep), std::move(final_iterate)};
}

} // namespace betaplane
