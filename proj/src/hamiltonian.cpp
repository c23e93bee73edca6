#include "cca/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace cca::hamiltonian {

std::vector<BandMode> mode_wavevectors(const ArrayParams& p) {
    std::vector<BandMode> modes;
    modes.reserve(p.n_cavities);
    for (int n = 1; n <= p.n_cavities; ++n) {
        double kL = n * std::numbers::pi / (p.n_cavities + 1);
        BandMode m;
        m.index = n;
        m.wavevector = kL / p.period;
        m.frequency = p.omega_c * (1.0 + 2.0 * p.alpha * std::cos(kL));
        modes.push_back(m);
    }
    return modes;
}

ComplexTridiagonal build_effective(const ArrayParams& p) {
    const DerivedRates r = derive_rates(p);
    return ComplexTridiagonal{p.n_cavities, r.omega_eff, -p.alpha * r.omega_eff};
}

namespace {

void sort_by_real(std::vector<complexd>& v) {
    std::sort(v.begin(), v.end(), [](const complexd& a, const complexd& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

}  // namespace

ComplexSpectrum eigenfrequencies(const ComplexTridiagonal& h) {
    if (h.dimension < 1)
        throw std::invalid_argument("tridiagonal dimension must be >= 1");
    ComplexSpectrum spec;
    spec.eigenvalues.reserve(h.dimension);
    for (int n = 1; n <= h.dimension; ++n) {
        double c = std::cos(n * std::numbers::pi / (h.dimension + 1));
        spec.eigenvalues.push_back(h.diagonal + 2.0 * h.off_diagonal * c);
    }
    sort_by_real(spec.eigenvalues);
    return spec;
}

ComplexSpectrum eigenfrequencies_dense(const ComplexTridiagonal& h) {
    if (h.dimension < 1)
        throw std::invalid_argument("tridiagonal dimension must be >= 1");
    const int n = h.dimension;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = h.diagonal;
        if (i + 1 < n) {
            m(i, i + 1) = h.off_diagonal;
            m(i + 1, i) = h.off_diagonal;
        }
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("dense complex eigensolver failed to converge");
    ComplexSpectrum spec;
    spec.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    sort_by_real(spec.eigenvalues);
    return spec;
}

}  // namespace cca::hamiltonian
