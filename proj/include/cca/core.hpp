#pragma once

#include <complex>
#include <optional>
#include <string>

namespace cca {

using complexd = std::complex<double>;

// Physical description of a coupled-cavity array: n_cavities single-mode
// resonators of frequency omega_c arranged with period `period`, coupled
// through the dimensionless nearest-neighbour overlap alpha, each with
// quality factor q_factor.
//
// Convention used throughout: q_factor = 2*omega_c/gamma, so a lossless
// array corresponds to q_factor = +infinity. Frequencies are usually quoted
// in units of omega_c (omega_c = 1, period = 1 are the defaults).
struct ArrayParams {
    int n_cavities = 1;
    double omega_c = 1.0;
    double alpha = 0.0;
    double q_factor = 1e6;
    double period = 1.0;
};

// Rates derived from ArrayParams:
//   gamma     per-cavity field decay rate, 2*omega_c/q_factor
//   xi        hopping bandwidth scale, 2*alpha*omega_c
//   kappa     dissipative hopping scale, 2*alpha*gamma
//   omega_eff complex effective cavity frequency, omega_c - i*gamma
//   zeta      array quality factor, alpha*q_factor/n_cavities
struct DerivedRates {
    double gamma;
    double xi;
    double kappa;
    complexd omega_eff;
    double zeta;
};

// One resonant mode of the open chain, k_n = n*pi/((N+1)*L) for n = 1..N.
// The frequency follows the cosine band omega_c*(1 + 2*alpha*cos(k_n*L)).
struct BandMode {
    int index;
    double wavevector;
    double frequency;
};

// Returns params unchanged when every invariant holds, otherwise throws
// std::invalid_argument naming the violated invariant:
//   n_cavities >= 1, 0 < alpha < 0.5, q_factor > 100,
//   omega_c > 0, period > 0.
ArrayParams validate(const ArrayParams& params);

DerivedRates derive_rates(const ArrayParams& params);

// Flat key=value configuration file. Recognised keys: n_cavities, omega_c,
// alpha (or xi), q_factor, period. '#' starts a comment. Unknown keys,
// duplicate keys, or giving both alpha and xi are errors.
struct ConfigFile {
    std::optional<int> n_cavities;
    std::optional<double> omega_c;
    std::optional<double> alpha;
    std::optional<double> xi;
    std::optional<double> q_factor;
    std::optional<double> period;
};

ConfigFile parse_config(const std::string& path);

// Applies defaults (omega_c = 1, period = 1), derives alpha from xi when xi
// was given, and validates. n_cavities, q_factor and one of alpha/xi are
// required.
ArrayParams params_from_config(const ConfigFile& cfg);

}  // namespace cca
