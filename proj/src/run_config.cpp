#include "betaplane/run_config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace betaplane {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, int line) {
    if (v == "inf" || v == "Inf" || v == "INF")
        return std::numeric_limits<double>::infinity();
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config line " + std::to_string(line) + ": bad number '" + v + "'");
    }
}

long long parse_int(const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        const long long x = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config line " + std::to_string(line) + ": bad integer '" + v + "'");
    }
}

bool parse_bool(const std::string& v, int line) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("config line " + std::to_string(line) + ": bad boolean '" + v + "'");
}

std::vector<std::string> split(const std::string& v, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

// (s, a) pairs "0:2,0:inf,1:2"
std::vector<std::pair<double, double>> parse_norms(const std::string& v, int line) {
    std::vector<std::pair<double, double>> out;
    for (const auto& item : split(v, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() != 2)
            throw ConfigError("config line " + std::to_string(line) +
                              ": norm entries must look like s:a");
        const double s = parse_double(parts[0], line);
        const double a = parse_double(parts[1], line);
        if (s < 0.0 || (!(a >= 2.0) && !std::isinf(a)))
            throw ConfigError("config line " + std::to_string(line) +
                              ": norms require s >= 0 and a in [2, inf]");
        out.emplace_back(s, a);
    }
    if (out.empty())
        throw ConfigError("config line " + std::to_string(line) + ": empty norm list");
    return out;
}

using Setter = std::function<void(RunConfig&, const std::string&, int)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"grid.n", [](RunConfig& c, const std::string& v, int l) {
             c.grid_n = static_cast<std::size_t>(parse_int(v, l));
         }},
        {"grid.box_length", [](RunConfig& c, const std::string& v, int l) {
             c.box_length = parse_double(v, l);
         }},
        {"beta", [](RunConfig& c, const std::string& v, int l) { c.beta = parse_double(v, l); }},
        {"delta", [](RunConfig& c, const std::string& v, int l) { c.delta = parse_double(v, l); }},
        {"exponents.canonical", [](RunConfig& c, const std::string& v, int l) {
             c.exponents_canonical = parse_bool(v, l);
         }},
        {"exponents.p1", [](RunConfig& c, const std::string& v, int l) { c.p1 = parse_double(v, l); }},
        {"exponents.r1", [](RunConfig& c, const std::string& v, int l) { c.r1 = parse_double(v, l); }},
        {"exponents.p2", [](RunConfig& c, const std::string& v, int l) { c.p2 = parse_double(v, l); }},
        {"exponents.r2", [](RunConfig& c, const std::string& v, int l) { c.r2 = parse_double(v, l); }},
        {"initial.family", [](RunConfig& c, const std::string& v, int l) {
             if (v != "gaussian" && v != "dipole" && v != "random" && v != "ring")
                 throw ConfigError("config line " + std::to_string(l) +
                                   ": unknown initial data family '" + v + "'");
             c.family = v;
         }},
        {"initial.mass", [](RunConfig& c, const std::string& v, int l) { c.mass = parse_double(v, l); }},
        {"initial.width", [](RunConfig& c, const std::string& v, int l) { c.width = parse_double(v, l); }},
        {"initial.center_x", [](RunConfig& c, const std::string& v, int l) { c.center_x = parse_double(v, l); }},
        {"initial.center_y", [](RunConfig& c, const std::string& v, int l) { c.center_y = parse_double(v, l); }},
        {"initial.amplitude", [](RunConfig& c, const std::string& v, int l) { c.amplitude = parse_double(v, l); }},
        {"initial.radius", [](RunConfig& c, const std::string& v, int l) { c.radius = parse_double(v, l); }},
        {"initial.seed", [](RunConfig& c, const std::string& v, int l) {
             c.seed = static_cast<std::uint64_t>(parse_int(v, l));
         }},
        {"initial.band_lo", [](RunConfig& c, const std::string& v, int l) {
             c.band_lo = static_cast<int>(parse_int(v, l));
         }},
        {"initial.band_hi", [](RunConfig& c, const std::string& v, int l) {
             c.band_hi = static_cast<int>(parse_int(v, l));
         }},
        {"initial.scale_to_smallness", [](RunConfig& c, const std::string& v, int l) {
             c.scale_to_smallness = parse_double(v, l);
         }},
        {"evolve.dt", [](RunConfig& c, const std::string& v, int l) { c.dt = parse_double(v, l); }},
        {"evolve.t_end", [](RunConfig& c, const std::string& v, int l) { c.t_end = parse_double(v, l); }},
        {"evolve.scheme", [](RunConfig& c, const std::string& v, int l) {
             if (v != "etdrk4" && v != "etd-euler")
                 throw ConfigError("config line " + std::to_string(l) +
                                   ": scheme must be etdrk4 or etd-euler");
             c.scheme = v;
         }},
        {"evolve.save_every", [](RunConfig& c, const std::string& v, int l) {
             c.save_every = static_cast<std::size_t>(parse_int(v, l));
         }},
        {"evolve.dealias", [](RunConfig& c, const std::string& v, int l) {
             c.dealias = parse_bool(v, l);
         }},
        {"analysis.norms", [](RunConfig& c, const std::string& v, int l) {
             c.norms = parse_norms(v, l);
         }},
        {"analysis.fit_t_lo", [](RunConfig& c, const std::string& v, int l) { c.fit_t_lo = parse_double(v, l); }},
        {"analysis.fit_t_hi", [](RunConfig& c, const std::string& v, int l) { c.fit_t_hi = parse_double(v, l); }},
        {"analysis.samples", [](RunConfig& c, const std::string& v, int l) {
             c.samples = static_cast<std::size_t>(parse_int(v, l));
         }},
        {"analysis.checkpoint_times", [](RunConfig& c, const std::string& v, int l) {
             c.checkpoint_times.clear();
             for (const auto& item : split(v, ','))
                 c.checkpoint_times.push_back(parse_double(item, l));
         }},
        {"analysis.oversample", [](RunConfig& c, const std::string& v, int l) {
             c.oversample = parse_bool(v, l);
         }},
        {"picard.iterations", [](RunConfig& c, const std::string& v, int l) {
             c.picard_iterations = static_cast<int>(parse_int(v, l));
         }},
        {"picard.dt", [](RunConfig& c, const std::string& v, int l) { c.picard_dt = parse_double(v, l); }},
        {"strichartz.s", [](RunConfig& c, const std::string& v, int l) { c.str_s = parse_double(v, l); }},
        {"strichartz.p", [](RunConfig& c, const std::string& v, int l) { c.str_p = parse_double(v, l); }},
        {"strichartz.r", [](RunConfig& c, const std::string& v, int l) { c.str_r = parse_double(v, l); }},
        {"strichartz.t_end", [](RunConfig& c, const std::string& v, int l) { c.str_t_end = parse_double(v, l); }},
        {"strichartz.samples", [](RunConfig& c, const std::string& v, int l) {
             c.str_samples = static_cast<std::size_t>(parse_int(v, l));
         }},
        {"dispersive.k_set", [](RunConfig& c, const std::string& v, int l) {
             c.k_set.clear();
             for (const auto& item : split(v, ','))
                 c.k_set.push_back(static_cast<int>(parse_int(item, l)));
         }},
        {"dispersive.t_lo", [](RunConfig& c, const std::string& v, int l) { c.disp_t_lo = parse_double(v, l); }},
        {"dispersive.t_hi", [](RunConfig& c, const std::string& v, int l) { c.disp_t_hi = parse_double(v, l); }},
        {"dispersive.samples", [](RunConfig& c, const std::string& v, int l) {
             c.disp_samples = static_cast<std::size_t>(parse_int(v, l));
         }},
        {"output.dir", [](RunConfig& c, const std::string& v, int) { c.output_dir = v; }},
        {"run.id", [](RunConfig& c, const std::string& v, int l) {
             if (v.empty()) throw ConfigError("config line " + std::to_string(l) + ": empty run id");
             for (char ch : v)
                 if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '.' && ch != '_' && ch != '-')
                     throw ConfigError("config line " + std::to_string(l) +
                                       ": run id must be filesystem-safe");
             c.run_id = v;
         }},
        {"linear_only", [](RunConfig& c, const std::string& v, int l) {
             c.linear_only = parse_bool(v, l);
         }},
        {"threads", [](RunConfig& c, const std::string& v, int l) {
             c.threads = static_cast<int>(parse_int(v, l));
         }},
    };
    return table;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::stringstream ss(text);
    std::string raw;
    int line = 0;
    while (std::getline(ss, raw)) {
        ++line;
        const auto hash = raw.find('#');
        std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line) + ": expected key=value");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        const auto& table = setters();
        auto it = table.find(key);
        if (it == table.end())
            throw ConfigError("config line " + std::to_string(line) + ": unknown key '" + key + "'");
        it->second(cfg, value, line);
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::vector<std::string> config_keys() {
    std::vector<std::string> keys;
    for (const auto& [k, _] : setters()) keys.push_back(k);
    return keys;
}

} // namespace betaplane
