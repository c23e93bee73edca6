#include "cca/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <lapacke.h>

#include "cca/io.hpp"

namespace cca::overlap {

namespace {

constexpr int kMaxScannedModes = 256;

int period_shift(const DielectricProfile1D& p) {
    const double ratio = p.period / p.spacing;
    const int shift = static_cast<int>(std::lround(ratio));
    if (shift < 1 || std::abs(ratio - shift) > 1e-9 * ratio)
        throw std::invalid_argument("period must be a positive integer multiple of the spacing");
    return shift;
}

double trapezoid(const std::vector<double>& f, double h) {
    double acc = 0.5 * (f.front() + f.back());
    for (size_t i = 1; i + 1 < f.size(); ++i) acc += f[i];
    return acc * h;
}

// int eps_single(x) phi(x + offset*h)^2 dx over the part of the grid where
// the shifted mode is defined.
double shifted_norm(const DielectricProfile1D& p, const std::vector<double>& phi, int offset) {
    std::vector<double> f(phi.size(), 0.0);
    for (size_t i = offset; i < phi.size(); ++i)
        f[i] = p.eps_single[i - offset] * phi[i] * phi[i];
    return trapezoid(f, p.spacing);
}

}  // namespace

void validate(const DielectricProfile1D& p) {
    const size_t n = p.eps_single.size();
    if (n < 200)
        throw std::invalid_argument("profile needs at least 200 grid points");
    if (p.eps_periodic.size() != n)
        throw std::invalid_argument("eps_single and eps_periodic must have equal length");
    if (!(p.spacing > 0.0))
        throw std::invalid_argument("grid spacing must be positive");
    double eps_max = 1.0;
    for (size_t i = 0; i < n; ++i) {
        if (p.eps_single[i] < 1.0 || p.eps_periodic[i] < 1.0)
            throw std::invalid_argument("dielectric values must be >= 1");
        eps_max = std::max({eps_max, p.eps_single[i], p.eps_periodic[i]});
    }
    const int shift = period_shift(p);
    const double tol = 1e-12 * (1.0 + eps_max);
    for (size_t i = 0; i + shift < n; ++i)
        if (std::abs(p.eps_periodic[i + shift] - p.eps_periodic[i]) > tol)
            throw std::invalid_argument("eps_periodic is not period-periodic on the interior");
}

LocalizedMode solve_defect_mode(const DielectricProfile1D& p) {
    validate(p);
    const int pts = static_cast<int>(p.eps_single.size());
    const int n = pts - 2;  // interior points
    const double h = p.spacing;

    // Symmetric-definite reduction of -phi'' = lambda eps phi: with
    // y = sqrt(eps) phi the operator becomes the symmetric tridiagonal
    //   d_i = 2/(h^2 eps_i),  e_i = -1/(h^2 sqrt(eps_i eps_{i+1})).
    std::vector<double> diag(n), off(n - 1);
    for (int i = 0; i < n; ++i) diag[i] = 2.0 / (h * h * p.eps_single[i + 1]);
    for (int i = 0; i + 1 < n; ++i)
        off[i] = -1.0 / (h * h * std::sqrt(p.eps_single[i + 1] * p.eps_single[i + 2]));

    const int k = std::min(n, kMaxScannedModes);
    std::vector<double> values(n), vectors(static_cast<size_t>(n) * k);
    std::vector<lapack_int> isuppz(2 * std::max(1, k));
    lapack_int found = 0;
    const int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, diag.data(), off.data(),
                                    0.0, 0.0, 1, k, 0.0, &found, values.data(), vectors.data(),
                                    n, isuppz.data());
    if (info != 0 || found < k)
        throw std::runtime_error("dstevr failed on the mode eigenproblem, info = " +
                                 std::to_string(info));

    LocalizedMode best;
    best.participation_ratio = 1.0;
    bool have = false;
    for (int j = 0; j < k; ++j) {
        std::vector<double> phi(pts, 0.0);
        for (int i = 0; i < n; ++i)
            phi[i + 1] = vectors[static_cast<size_t>(j) * n + i] / std::sqrt(p.eps_single[i + 1]);
        std::vector<double> w(pts);
        for (int i = 0; i < pts; ++i) w[i] = p.eps_single[i] * phi[i] * phi[i];
        const double nrm = std::sqrt(trapezoid(w, h));
        double s2 = 0.0, s4 = 0.0;
        for (int i = 0; i < pts; ++i) {
            phi[i] /= nrm;
            const double q = phi[i] * phi[i];
            s2 += q;
            s4 += q * q;
        }
        const double pr = s2 * s2 / (pts * s4);
        if (!have || pr < best.participation_ratio) {
            have = true;
            best.frequency = std::sqrt(values[j]);
            best.participation_ratio = pr;
            best.profile = std::move(phi);
        }
    }
    if (best.participation_ratio >= 0.5)
        throw std::runtime_error("no localized defect mode: participation ratio >= 0.5 "
                                 "for every scanned state");
    // orientation: largest-magnitude sample positive
    auto it = std::max_element(best.profile.begin(), best.profile.end(),
                               [](double a, double b) { return std::abs(a) < std::abs(b); });
    if (*it < 0.0)
        for (double& v : best.profile) v = -v;
    return best;
}

LocalizedMode shifted_by_period(const LocalizedMode& mode, const DielectricProfile1D& p) {
    const int shift = period_shift(p);
    const int pts = static_cast<int>(mode.profile.size());
    if (pts != static_cast<int>(p.eps_single.size()))
        throw std::invalid_argument("mode grid does not match the profile grid");
    LocalizedMode out;
    out.frequency = mode.frequency;
    out.participation_ratio = mode.participation_ratio;
    out.profile.assign(pts, 0.0);
    double dropped = 0.0;
    for (int i = 0; i < pts; ++i) {
        if (i + shift < pts)
            out.profile[i + shift] = mode.profile[i];
        else
            dropped += p.eps_single[i] * mode.profile[i] * mode.profile[i] * p.spacing;
    }
    if (dropped > 1e-10)
        throw std::runtime_error("translated mode tail leaves the grid; enlarge the domain");
    return out;
}

double overlap_alpha(const DielectricProfile1D& p, const LocalizedMode& mode_j,
                     const LocalizedMode& mode_j1) {
    validate(p);
    const int pts = static_cast<int>(p.eps_single.size());
    if (static_cast<int>(mode_j.profile.size()) != pts ||
        static_cast<int>(mode_j1.profile.size()) != pts)
        throw std::invalid_argument("mode grids do not match the profile grid");
    const int shift = period_shift(p);

    std::vector<double> w(pts);
    for (int i = 0; i < pts; ++i)
        w[i] = p.eps_single[i] * mode_j.profile[i] * mode_j.profile[i];
    if (std::abs(trapezoid(w, p.spacing) - 1.0) > 1e-6)
        throw std::invalid_argument("mode_j is not normalized to int eps|phi|^2 = 1");
    if (std::abs(shifted_norm(p, mode_j1.profile, shift) - 1.0) > 1e-6)
        throw std::invalid_argument("mode_j1 is not a normalized translated mode");

    double tail_overlap = 0.0;
    std::vector<double> integrand(pts);
    for (int i = 0; i < pts; ++i) {
        tail_overlap += mode_j.profile[i] * mode_j1.profile[i];
        integrand[i] =
            (p.eps_single[i] - p.eps_periodic[i]) * mode_j.profile[i] * mode_j1.profile[i];
    }
    double alpha = trapezoid(integrand, p.spacing);
    if (tail_overlap < 0.0) alpha = -alpha;
    return alpha;
}

namespace {

double lattice_eps(double x, double a) {
    const double c = 0.5 + 0.5 * std::cos(2.0 * std::numbers::pi * x / a);
    return 1.0 + 8.0 * c * c * c * c;
}

}  // namespace

DielectricProfile1D build_profile(const DefectLatticeSpec& s) {
    if (!(s.defect_depth > 0.0 && s.defect_depth <= 1.0))
        throw std::invalid_argument("defect_depth must lie in (0, 1]");
    const int pts = static_cast<int>(std::lround(s.domain / s.spacing)) + 1;
    if (std::abs((pts - 1) * s.spacing - s.domain) > 1e-9 * s.domain)
        throw std::invalid_argument("spacing must divide the domain");

    DielectricProfile1D p;
    p.x0 = 0.0;
    p.spacing = s.spacing;
    p.period = s.period;
    p.eps_single.resize(pts);
    p.eps_periodic.resize(pts);

    const double w2 = 2.0 * s.defect_width * s.defect_width;
    const int m_lo = static_cast<int>(std::floor(-s.defect_center / s.period)) - 1;
    const int m_hi = static_cast<int>(std::ceil((s.domain - s.defect_center) / s.period)) + 1;
    for (int i = 0; i < pts; ++i) {
        const double x = i * s.spacing;
        const double body = lattice_eps(x, s.lattice_const) - 1.0;
        const double g0 = std::exp(-(x - s.defect_center) * (x - s.defect_center) / w2);
        double g = 0.0;
        for (int m = m_lo; m <= m_hi; ++m) {
            const double xc = s.defect_center + m * s.period;
            g += std::exp(-(x - xc) * (x - xc) / w2);
        }
        p.eps_single[i] = 1.0 + (1.0 - s.defect_depth * g0) * body;
        p.eps_periodic[i] = 1.0 + (1.0 - s.defect_depth * g) * body;
    }
    return p;
}

DielectricProfile1D read_profile_csv(const std::string& path, double period) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open profile file: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "x,eps_single,eps_periodic")
        throw std::runtime_error("profile CSV must start with header x,eps_single,eps_periodic");
    DielectricProfile1D p;
    p.period = period;
    std::vector<double> xs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        double vals[3];
        for (int c = 0; c < 3; ++c) {
            if (!std::getline(row, cell, ','))
                throw std::runtime_error("profile CSV row with fewer than 3 columns");
            vals[c] = std::stod(cell);
        }
        xs.push_back(vals[0]);
        p.eps_single.push_back(vals[1]);
        p.eps_periodic.push_back(vals[2]);
    }
    if (xs.size() < 2)
        throw std::runtime_error("profile CSV has fewer than 2 rows");
    p.x0 = xs.front();
    p.spacing = xs[1] - xs[0];
    for (size_t i = 1; i < xs.size(); ++i)
        if (std::abs(xs[i] - xs[i - 1] - p.spacing) > 1e-9 * p.spacing)
            throw std::runtime_error("profile CSV grid is not uniform");
    return p;
}

std::string profile_to_csv(const DielectricProfile1D& p) {
    io::CsvBuilder csv({"x", "eps_single", "eps_periodic"});
    for (size_t i = 0; i < p.eps_single.size(); ++i)
        csv.add_row({p.x0 + i * p.spacing, p.eps_single[i], p.eps_periodic[i]});
    return csv.str();
}

}  // namespace cca::overlap
