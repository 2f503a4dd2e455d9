#pragma once

#include <optional>
#include <string>
#include <vector>

#include "betaplane/errors.hpp"

namespace betaplane {

// Batch configuration: flat UTF-8 key=value file, # comments, unknown keys
// are hard errors. Defaults are chosen so that a file setting only the
// physics (grid, beta, initial data) runs out of the box.
struct RunConfig {
    // grid
    std::size_t grid_n = 256;
    double box_length = 40.0;

    // physics
    double beta = 0.0;
    double delta = 0.0;

    // exponent tuple
    bool exponents_canonical = true;
    double p1 = 3.0, r1 = 6.0, p2 = 3.0, r2 = 4.0;

    // initial data
    std::string family = "gaussian"; // gaussian | dipole | random | ring
    double mass = 1.0;
    double width = 2.0;
    double center_x = 0.0, center_y = 0.0;
    double amplitude = 1.0;
    double radius = 2.0;
    std::uint64_t seed = 1;
    int band_lo = 1, band_hi = 8;
    std::optional<double> scale_to_smallness;

    // evolution
    double dt = 1e-3;
    double t_end = 1.0;
    std::string scheme = "etdrk4"; // etdrk4 | etd-euler
    std::size_t save_every = 10;
    bool dealias = true;

    // analysis
    std::vector<std::pair<double, double>> norms = {{0.0, 2.0}}; // (s, a)
    double fit_t_lo = 5.0, fit_t_hi = 50.0;
    std::size_t samples = 16;
    std::vector<double> checkpoint_times = {5.0, 10.0, 20.0, 40.0};
    bool oversample = false;

    // picard
    int picard_iterations = 6;
    double picard_dt = 1e-3;

    // strichartz
    double str_s = 0.0, str_p = 3.0, str_r = 6.0;
    double str_t_end = 4.0;
    std::size_t str_samples = 64;

    // dispersive
    std::vector<int> k_set = {-1, 0, 1};
    double disp_t_lo = 1.0, disp_t_hi = 100.0;
    std::size_t disp_samples = 25;

    // io
    std::string output_dir = "out";
    std::string run_id = "run";
    bool linear_only = false;
    int threads = 0; // 0 keeps the runtime default
};

// Parses text; throws ConfigError with a line number for malformed lines and
// unknown keys.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// The key list for documentation and error messages.
std::vector<std::string> config_keys();

} // namespace betaplane
