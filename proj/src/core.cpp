#include "cca/core.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cca {

ArrayParams validate(const ArrayParams& p) {
    if (p.n_cavities < 1)
        throw std::invalid_argument("n_cavities >= 1 violated");
    if (!(p.alpha > 0.0 && p.alpha < 0.5))
        throw std::invalid_argument("0 < alpha < 0.5 violated (weak-coupling regime)");
    if (!(p.q_factor > 100.0))
        throw std::invalid_argument("q_factor > 100 violated (high-Q regime)");
    if (!(p.omega_c > 0.0))
        throw std::invalid_argument("omega_c > 0 violated");
    if (!(p.period > 0.0))
        throw std::invalid_argument("period > 0 violated");
    return p;
}

DerivedRates derive_rates(const ArrayParams& p) {
    DerivedRates r;
    r.gamma = 2.0 * p.omega_c / p.q_factor;
    r.xi = 2.0 * p.alpha * p.omega_c;
    r.kappa = 2.0 * p.alpha * r.gamma;
    r.omega_eff = complexd(p.omega_c, -r.gamma);
    r.zeta = p.alpha * p.q_factor / p.n_cavities;
    return r;
}

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double to_double(const std::string& key, const std::string& v) {
    size_t pos = 0;
    double x;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: invalid number for key '" + key + "': " + v);
    }
    if (pos != v.size())
        throw std::invalid_argument("config: invalid number for key '" + key + "': " + v);
    return x;
}

}  // namespace

ConfigFile parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);

    ConfigFile cfg;
    std::map<std::string, bool> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " is not of the form key=value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (seen[key])
            throw std::invalid_argument("config: duplicate key '" + key + "'");
        seen[key] = true;

        if (key == "n_cavities") {
            double d = to_double(key, val);
            int n = static_cast<int>(d);
            if (static_cast<double>(n) != d)
                throw std::invalid_argument("config: n_cavities must be an integer");
            cfg.n_cavities = n;
        } else if (key == "omega_c") {
            cfg.omega_c = to_double(key, val);
        } else if (key == "alpha") {
            cfg.alpha = to_double(key, val);
        } else if (key == "xi") {
            cfg.xi = to_double(key, val);
        } else if (key == "q_factor") {
            cfg.q_factor = to_double(key, val);
        } else if (key == "period") {
            cfg.period = to_double(key, val);
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }
    if (cfg.alpha && cfg.xi)
        throw std::invalid_argument("config: alpha and xi are mutually exclusive");
    return cfg;
}

ArrayParams params_from_config(const ConfigFile& cfg) {
    ArrayParams p;
    if (!cfg.n_cavities)
        throw std::invalid_argument("config: n_cavities is required");
    if (!cfg.q_factor)
        throw std::invalid_argument("config: q_factor is required");
    if (!cfg.alpha && !cfg.xi)
        throw std::invalid_argument("config: one of alpha or xi is required");
    p.n_cavities = *cfg.n_cavities;
    p.omega_c = cfg.omega_c.value_or(1.0);
    p.q_factor = *cfg.q_factor;
    p.period = cfg.period.value_or(1.0);
    p.alpha = cfg.alpha ? *cfg.alpha : *cfg.xi / (2.0 * p.omega_c);
    return validate(p);
}

}  // namespace cca
