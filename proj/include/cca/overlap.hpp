#pragma once

#include <string>
#include <vector>

#include "cca/core.hpp"

namespace cca::overlap {

// One-dimensional scalar analogue of the vector mode problem: localized
// modes phi of a dielectric profile obey -phi'' = (omega^2/c^2) eps(x) phi
// (c = 1) with zero boundary values, and the intercavity coupling is the
// overlap quadrature
//
//   alpha = int [eps_single(x) - eps_periodic(x)] phi_j(x) phi_{j+1}(x) dx
//
// with phi_{j+1} the defect mode translated by one array period.
//
// A uniform loss term added to the eigenvalue shifts the spectrum of the
// fixed difference operator without touching its eigenvectors, so modes
// computed from the lossless profile serve the dissipative array unchanged.
struct DielectricProfile1D {
    double x0 = 0.0;                   // coordinate of the first grid point
    double spacing = 0.0;              // h
    std::vector<double> eps_single;    // single-cavity profile eps_0(x)
    std::vector<double> eps_periodic;  // array profile eps(x), period-periodic
    double period = 0.0;               // L, an integer multiple of h
};

// phi is stored on the full grid with zero endpoints and normalized so that
// int eps_single |phi|^2 dx = 1 (trapezoid rule). participation_ratio is
// (sum phi^2)^2 / (P sum phi^4); values below 0.5 count as localized.
struct LocalizedMode {
    double frequency;
    std::vector<double> profile;
    double participation_ratio;
};

void validate(const DielectricProfile1D& profile);

// Solves the second-order central-difference generalized eigenproblem on
// eps_single and returns the eigenpair with the smallest participation ratio
// among the lowest eigenstates. Throws when no state is localized
// (participation ratio >= 0.5 everywhere).
LocalizedMode solve_defect_mode(const DielectricProfile1D& profile);

// The defect mode translated by one period (grid shift by period/spacing
// samples, zero fill). Throws if a non-negligible tail would fall off the
// grid.
LocalizedMode shifted_by_period(const LocalizedMode& mode, const DielectricProfile1D& profile);

// Trapezoid-rule overlap integral. The sign is fixed so that the translated
// pair has positive tail overlap; the magnitude is the physical content.
// Throws when either mode is not normalized.
double overlap_alpha(const DielectricProfile1D& profile, const LocalizedMode& mode_j,
                     const LocalizedMode& mode_j1);

// Smooth high-contrast test geometry: lattice
//   eps(x) = 1 + 8*(1/2 + cos(2 pi x / a)/2)^4
// with one Gaussian "removed tooth" of relative depth defect_depth and width
// defect_width per array period. The single-cavity profile keeps only the
// central defect.
struct DefectLatticeSpec {
    double lattice_const = 1.0;
    double domain = 48.0;        // multiple of lattice_const
    double defect_center = 24.0; // placed on a lattice maximum
    double defect_depth = 0.85;  // in (0, 1]
    double defect_width = 0.55;
    double period = 6.0;         // array period L, multiple of lattice_const
    double spacing = 1.0 / 32;   // h, must divide the domain
};

DielectricProfile1D build_profile(const DefectLatticeSpec& spec);

// CSV with header x,eps_single,eps_periodic; the grid must be uniform.
DielectricProfile1D read_profile_csv(const std::string& path, double period);
std::string profile_to_csv(const DielectricProfile1D& profile);

}  // namespace cca::overlap
