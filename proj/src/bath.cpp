#include "cca/bath.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <lapacke.h>

namespace cca::bath {

ShapeFn ShapeFn::flat(double value) {
    ShapeFn f;
    f.kind_ = Kind::flat;
    f.c0_ = value;
    return f;
}

ShapeFn ShapeFn::linear_tilt(double intercept, double slope) {
    ShapeFn f;
    f.kind_ = Kind::linear;
    f.c0_ = intercept;
    f.c1_ = slope;
    return f;
}

ShapeFn ShapeFn::tabulated(std::vector<std::pair<double, double>> points) {
    if (points.size() < 2)
        throw std::invalid_argument("tabulated shape needs at least 2 points");
    for (size_t i = 1; i < points.size(); ++i)
        if (!(points[i].first > points[i - 1].first))
            throw std::invalid_argument("tabulated shape must have strictly increasing omega");
    ShapeFn f;
    f.kind_ = Kind::table;
    f.table_ = std::move(points);
    return f;
}

double ShapeFn::operator()(double omega) const {
    switch (kind_) {
        case Kind::flat:
            return c0_;
        case Kind::linear:
            return c0_ + c1_ * omega;
        case Kind::table: {
            if (omega <= table_.front().first) return table_.front().second;
            if (omega >= table_.back().first) return table_.back().second;
            auto it = std::upper_bound(table_.begin(), table_.end(), omega,
                                       [](double w, const auto& p) { return w < p.first; });
            const auto& [x1, y1] = *it;
            const auto& [x0, y0] = *(it - 1);
            return y0 + (y1 - y0) * (omega - x0) / (x1 - x0);
        }
    }
    return 0.0;
}

namespace {

void check_band(const BathSpec& spec) {
    if (!(spec.band_lo < spec.omega_c && spec.omega_c < spec.band_hi))
        throw std::invalid_argument("bath band must contain omega_c strictly");
}

double spectral(const BathSpec& spec, double omega) {
    const double eta = spec.coupling(omega);
    return spec.density(omega) * eta * eta;
}

}  // namespace

DiscreteBath discretize(const BathSpec& spec, int m_modes) {
    check_band(spec);
    if (m_modes < 2)
        throw std::invalid_argument("discretize requires m_modes >= 2");
    const double dw = (spec.band_hi - spec.band_lo) / m_modes;
    DiscreteBath bath;
    bath.mode_frequencies.reserve(m_modes);
    bath.mode_couplings.reserve(m_modes);
    for (int m = 0; m < m_modes; ++m) {
        const double w = spec.band_lo + (m + 0.5) * dw;
        const double rho = spec.density(w);
        if (rho < 0.0)
            throw std::invalid_argument("bath density is negative inside the band");
        bath.mode_frequencies.push_back(w);
        bath.mode_couplings.push_back(spec.coupling(w) * std::sqrt(rho * dw));
    }
    return bath;
}

Universe::Universe(double omega_c, const DiscreteBath& bath) : omega_c_(omega_c) {
    const int m = static_cast<int>(bath.mode_frequencies.size());
    if (m < 1)
        throw std::invalid_argument("bath has no modes");
    dim_ = m + 1;
    // column-major dense symmetric arrowhead
    vectors_.assign(static_cast<size_t>(dim_) * dim_, 0.0);
    vectors_[0] = omega_c;
    for (int j = 1; j < dim_; ++j) {
        vectors_[static_cast<size_t>(j) * dim_ + j] = bath.mode_frequencies[j - 1];
        vectors_[static_cast<size_t>(j) * dim_] = bath.mode_couplings[j - 1];      // (0, j)
        vectors_[static_cast<size_t>(j)] = bath.mode_couplings[j - 1];             // (j, 0)
    }
    eigenvalues_.resize(dim_);
    const int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U', dim_, vectors_.data(), dim_,
                                    eigenvalues_.data());
    if (info != 0)
        throw std::runtime_error("dsyevd failed on the universe Hamiltonian, info = " +
                                 std::to_string(info));
    cavity_weight_.resize(dim_);
    for (int v = 0; v < dim_; ++v) {
        const double c = vectors_[static_cast<size_t>(v) * dim_];
        cavity_weight_[v] = c * c;
    }
}

double Universe::survival(double t) const {
    double re = 0.0, im = 0.0;
    for (int v = 0; v < dim_; ++v) {
        re += cavity_weight_[v] * std::cos(eigenvalues_[v] * t);
        im -= cavity_weight_[v] * std::sin(eigenvalues_[v] * t);
    }
    return re * re + im * im;
}

double Universe::total_norm(double t) const {
    // amplitude_s(t) = sum_v U(s,v) U(0,v) exp(-i lambda_v t)
    std::vector<double> re(dim_, 0.0), im(dim_, 0.0);
    for (int v = 0; v < dim_; ++v) {
        const double* col = &vectors_[static_cast<size_t>(v) * dim_];
        const double wc = col[0] * std::cos(eigenvalues_[v] * t);
        const double ws = -col[0] * std::sin(eigenvalues_[v] * t);
        for (int s = 0; s < dim_; ++s) {
            re[s] += col[s] * wc;
            im[s] += col[s] * ws;
        }
    }
    double norm = 0.0;
    for (int s = 0; s < dim_; ++s) norm += re[s] * re[s] + im[s] * im[s];
    return norm;
}

double Universe::peak_shift() const {
    int imax = 0;
    for (int v = 1; v < dim_; ++v)
        if (cavity_weight_[v] > cavity_weight_[imax]) imax = v;
    if (imax == 0 || imax == dim_ - 1)
        return eigenvalues_[imax] - omega_c_;
    const double l0 = std::log(cavity_weight_[imax - 1]);
    const double l1 = std::log(cavity_weight_[imax]);
    const double l2 = std::log(cavity_weight_[imax + 1]);
    const double denom = l0 - 2.0 * l1 + l2;
    double peak = eigenvalues_[imax];
    if (denom < 0.0) {
        const double half_span = 0.5 * (eigenvalues_[imax + 1] - eigenvalues_[imax - 1]);
        peak += 0.5 * (l0 - l2) / denom * half_span;
    }
    return peak - omega_c_;
}

std::vector<std::pair<double, double>> survival_probability(
    double omega_c, const DiscreteBath& bath, const std::vector<double>& time_grid) {
    for (size_t i = 0; i < time_grid.size(); ++i) {
        if (time_grid[i] < 0.0)
            throw std::invalid_argument("time grid must be nonnegative");
        if (i > 0 && !(time_grid[i] > time_grid[i - 1]))
            throw std::invalid_argument("time grid must be strictly increasing");
    }
    const Universe u(omega_c, bath);
    std::vector<std::pair<double, double>> out;
    out.reserve(time_grid.size());
    for (double t : time_grid) out.emplace_back(t, u.survival(t));
    return out;
}

double fit_decay(const std::vector<std::pair<double, double>>& samples) {
    std::vector<std::pair<double, double>> usable;
    for (const auto& [t, p] : samples)
        if (p > 0.0 && std::isfinite(p)) usable.emplace_back(t, std::log(p));
    if (usable.size() < 8)
        throw std::invalid_argument("fit_decay needs at least 8 usable samples with P > 0");
    double tbar = 0.0, ybar = 0.0;
    for (const auto& [t, y] : usable) { tbar += t; ybar += y; }
    tbar /= usable.size();
    ybar /= usable.size();
    double sxy = 0.0, sxx = 0.0;
    for (const auto& [t, y] : usable) {
        sxy += (t - tbar) * (y - ybar);
        sxx += (t - tbar) * (t - tbar);
    }
    if (sxx == 0.0)
        throw std::invalid_argument("fit_decay: degenerate time grid");
    return -0.5 * sxy / sxx;
}

double golden_rule(const BathSpec& spec) {
    check_band(spec);
    return std::numbers::pi * spectral(spec, spec.omega_c);
}

/*
 * PV int_band S(w)/(wc - w) dw  with S = rho*eta^2 splits at the symmetric
 * window [wc - d, wc + d], d = distance to the nearest band edge:
 *
 *   window part:  int_0^d [S(wc - u) - S(wc + u)]/u du   (integrand smooth,
 *                 the 1/u singularities of the pair cancel)
 *   remainder:    ordinary integral over the rest of the band
 *
 * Both parts use the composite midpoint rule (never evaluates u = 0), which
 * keeps the whole scheme second order in 1/n.
 */
double lamb_shift(const BathSpec& spec, int quadrature_points) {
    check_band(spec);
    if (quadrature_points < 2)
        throw std::invalid_argument("lamb_shift requires quadrature_points >= 2");
    const double wc = spec.omega_c;
    const double width = spec.band_hi - spec.band_lo;
    const double d = std::min(wc - spec.band_lo, spec.band_hi - wc);
    if (d < 1e-9 * width)
        throw std::domain_error("omega_c too close to a band edge for a symmetric window");

    const int n = quadrature_points;
    double value = 0.0;

    const double h = d / n;
    for (int i = 0; i < n; ++i) {
        const double u = (i + 0.5) * h;
        value += (spectral(spec, wc - u) - spectral(spec, wc + u)) / u;
    }
    value *= h;

    const auto segment = [&](double a, double b) {
        if (!(b > a)) return;
        const double hh = (b - a) / n;
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double w = a + (i + 0.5) * hh;
            acc += spectral(spec, w) / (wc - w);
        }
        value += acc * hh;
    };
    segment(spec.band_lo, wc - d);
    segment(wc + d, spec.band_hi);
    return value;
}

double bosonicity_deviation(const ArrayParams& p) {
    return 2.0 * (2.0 * p.omega_c / p.q_factor) / p.omega_c;
}

}  // namespace cca::bath
