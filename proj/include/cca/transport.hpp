#pragma once

#include <utility>
#include <vector>

#include "cca/core.hpp"

namespace cca::transport {

// Local reflection/transmission pair of a single lossy site. The position
// dependent phase exp(i*2*k*j*L) carried by the reflection amplitude does not
// affect any transport observable and is stripped from r.
//
// |r|^2 + |t|^2 <= 1 on the open band, with equality only in the lossless
// limit.
struct ScatteringAmplitudes {
    complexd r;
    complexd t;
};

enum class SpectrumKind { discrete_modes, continuous_envelope };

// (omega, T) samples with omega strictly increasing and T in [0, 1].
struct TransmissionCurve {
    SpectrumKind kind;
    std::vector<std::pair<double, double>> points;
};

// Peak transmission at band centre:
//   exact       = (1 + gamma/xi)^(-2N)    (kappa dropped as second order)
//   first_order = 1/(1 + N*gamma/xi)^2
struct TmaxResult {
    double exact;
    double first_order;
};

// Inverts the cosine band: k*L = arccos((omega - omega_c)/(2*alpha*omega_c)).
// Throws std::domain_error outside the closed band
// [omega_c*(1-2*alpha), omega_c*(1+2*alpha)].
double wavevector_of(double omega, const ArrayParams& params);

ScatteringAmplitudes local_amplitudes(double omega, const ArrayParams& params);

// T = |t|^(2N) with the local t taken at omega.
double total_transmission(double omega, const ArrayParams& params);

// discrete_modes evaluates T at the N chain modes; continuous_envelope uses a
// uniform n_points grid strictly inside the open band interval.
TransmissionCurve spectrum(const ArrayParams& params, SpectrumKind kind, int n_points);

TmaxResult t_max(const ArrayParams& params);

// T_max as a function of the array quality factor zeta = alpha*Q/N alone:
// 1/(1 + 1/zeta)^2. Agrees with t_max(params).first_order exactly when
// zeta = alpha*Q/N, via N*gamma/xi = 1/zeta.
double t_max_from_zeta(double zeta);

}  // namespace cca::transport
