#pragma once

#include <utility>
#include <vector>

#include "cca/core.hpp"

namespace cca::bath {

// Scalar frequency profile used for the bath density of states rho(omega)
// and the coupling eta(omega): a flat value, a linear function, or a
// piecewise-linear table.
class ShapeFn {
  public:
    ShapeFn() = default;  // flat zero
    static ShapeFn flat(double value);
    static ShapeFn linear_tilt(double intercept, double slope);
    // points must be sorted by omega; evaluation outside the table clamps to
    // the end values.
    static ShapeFn tabulated(std::vector<std::pair<double, double>> points);

    double operator()(double omega) const;

  private:
    enum class Kind { flat, linear, table } kind_ = Kind::flat;
    double c0_ = 0.0, c1_ = 0.0;
    std::vector<std::pair<double, double>> table_;
};

// Continuum bath on [band_lo, band_hi] with band_lo < omega_c < band_hi.
// The physically relevant combination is rho(omega)*eta(omega)^2.
struct BathSpec {
    double omega_c;
    ShapeFn density;
    ShapeFn coupling;
    double band_lo;
    double band_hi;
};

// Midpoint-rule discretisation of the continuum: m modes on a uniform grid,
// couplings g_m = eta(omega_m)*sqrt(rho(omega_m)*d_omega).
struct DiscreteBath {
    std::vector<double> mode_frequencies;
    std::vector<double> mode_couplings;
};

DiscreteBath discretize(const BathSpec& spec, int m_modes);

// Dense single-excitation universe: the cavity plus M bath modes, an
// (M+1)x(M+1) real-symmetric arrowhead matrix, diagonalised once at
// construction.
class Universe {
  public:
    Universe(double omega_c, const DiscreteBath& bath);

    // Cavity survival probability P(t) = |sum_v |<v|c>|^2 exp(-i lambda_v t)|^2.
    double survival(double t) const;

    // Sum over all sites of |amplitude|^2 at time t; equals 1 up to
    // eigensolver error since the universe is Hermitian.
    double total_norm(double t) const;

    // Location of the dominant cavity spectral peak relative to omega_c,
    // refined by a three-point parabolic fit of log weight around the
    // maximum.
    double peak_shift() const;

    const std::vector<double>& eigenvalues() const { return eigenvalues_; }

  private:
    int dim_;
    double omega_c_;
    std::vector<double> eigenvalues_;
    std::vector<double> cavity_weight_;  // |<v|cavity>|^2
    std::vector<double> vectors_;        // column-major eigenvector matrix
};

std::vector<std::pair<double, double>> survival_probability(
    double omega_c, const DiscreteBath& bath, const std::vector<double>& time_grid);

// Least-squares slope of ln P versus t; returns -slope/2. Requires at least
// 8 samples with P > 0.
double fit_decay(const std::vector<std::pair<double, double>>& samples);

// gamma = pi * rho(omega_c) * eta(omega_c)^2.
double golden_rule(const BathSpec& spec);

// Cauchy principal value of
//   int rho(omega) eta(omega)^2 / (omega_c - omega) d omega
// over the band, by symmetric-pair quadrature around omega_c (the singular
// parts of the paired points cancel) plus ordinary midpoint quadrature on
// the remainder of the band.
double lamb_shift(const BathSpec& spec, int quadrature_points);

// Magnitude of the quasi-boson commutator's deviation from unity,
// 2*gamma/omega_c = 4/Q. Values above quasi_boson_warning_threshold mark the
// effective single-mode picture unreliable.
double bosonicity_deviation(const ArrayParams& params);

inline constexpr double quasi_boson_warning_threshold = 0.01;

}  // namespace cca::bath
