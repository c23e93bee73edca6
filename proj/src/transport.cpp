#include "cca/transport.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cca/hamiltonian.hpp"

namespace cca::transport {

double wavevector_of(double omega, const ArrayParams& p) {
    const double half_band = 2.0 * p.alpha * p.omega_c;
    double x = (omega - p.omega_c) / half_band;
    // omega_c*(1 +/- 2*alpha) itself lands a few ulps off +/-1, and acos
    // would amplify that into a sqrt-sized wavevector error; snap to the
    // exact edge inside a 1e-12 window
    if (!(std::abs(x) <= 1.0 + 1e-12))
        throw std::domain_error("frequency outside the band interval "
                                "[omega_c*(1-2*alpha), omega_c*(1+2*alpha)]");
    if (std::abs(x) > 1.0 - 1e-12) x = std::copysign(1.0, x);
    return std::acos(x);
}

ScatteringAmplitudes local_amplitudes(double omega, const ArrayParams& p) {
    const double kL = wavevector_of(omega, p);
    const double s = std::abs(std::sin(kL));
    const double c = std::cos(kL);
    const DerivedRates r = derive_rates(p);

    const complexd den(r.gamma + r.xi * s - r.kappa * c, -r.kappa * s);
    if (den == complexd(0.0, 0.0))
        throw std::domain_error("local amplitudes are singular at the band edge "
                                "of a lossless array");
    ScatteringAmplitudes a;
    a.r = (r.kappa * c - r.gamma) / den;
    a.t = complexd(r.xi, -r.kappa) * s / den;
    return a;
}

double total_transmission(double omega, const ArrayParams& p) {
    const ScatteringAmplitudes a = local_amplitudes(omega, p);
    return std::pow(std::norm(a.t), p.n_cavities);
}

TransmissionCurve spectrum(const ArrayParams& p, SpectrumKind kind, int n_points) {
    TransmissionCurve curve;
    curve.kind = kind;
    if (kind == SpectrumKind::discrete_modes) {
        auto modes = hamiltonian::mode_wavevectors(p);
        // k_n ascending means omega descending along the cosine band.
        std::sort(modes.begin(), modes.end(),
                  [](const BandMode& a, const BandMode& b) { return a.frequency < b.frequency; });
        for (const auto& m : modes)
            curve.points.emplace_back(m.frequency, total_transmission(m.frequency, p));
        return curve;
    }
    if (n_points < 2)
        throw std::invalid_argument("continuous spectrum requires n_points >= 2");
    const double lo = p.omega_c * (1.0 - 2.0 * p.alpha);
    const double hi = p.omega_c * (1.0 + 2.0 * p.alpha);
    for (int i = 0; i < n_points; ++i) {
        // open interval: endpoints are excluded
        const double omega = lo + (i + 1) * (hi - lo) / (n_points + 1);
        curve.points.emplace_back(omega, total_transmission(omega, p));
    }
    return curve;
}

TmaxResult t_max(const ArrayParams& p) {
    const DerivedRates r = derive_rates(p);
    const double ratio = r.gamma / r.xi;
    TmaxResult out;
    out.exact = std::pow(1.0 + ratio, -2.0 * p.n_cavities);
    out.first_order = 1.0 / ((1.0 + p.n_cavities * ratio) * (1.0 + p.n_cavities * ratio));
    return out;
}

double t_max_from_zeta(double zeta) {
    if (!(zeta > 0.0))
        throw std::invalid_argument("zeta must be positive");
    const double q = 1.0 + 1.0 / zeta;
    return 1.0 / (q * q);
}

}  // namespace cca::transport
