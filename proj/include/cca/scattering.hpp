#pragma once

#include <vector>

#include "cca/core.hpp"

namespace cca::scattering {

// Result of the exact stationary solve of the dissipative N-site chain
// embedded between semi-infinite lossless leads with the same omega_c and
// alpha. t_product is the single-pass product-formula transmission at the
// same frequency; relative_deviation = ||t_total|^2 - t_product|/t_product.
//
// near_edge marks |sin(kL)| < 1e-3, where the relative measure degrades and
// the numbers are reported but should not be asserted against.
struct OracleResult {
    complexd r_total;
    complexd t_total;
    double t_product;
    double relative_deviation;
    bool near_edge;
};

enum class Incidence { from_left, from_right };

// Solves omega*e_j = omega_eff*e_j - alpha*omega_eff*(e_{j-1} + e_{j+1}) for
// j = 1..N with plane-wave lead boundary conditions via a renormalised 2x2
// transfer-matrix product. Throws std::domain_error out of band and for
// alpha = 0 (decoupled chain).
OracleResult exact_scattering(double omega, const ArrayParams& params,
                              Incidence incidence = Incidence::from_left);

struct DeviationRow {
    double omega;
    double t_exact;
    double t_product;
    double deviation;
};

// Sweep over a uniform grid strictly inside the open band interval.
// max_midband_deviation restricts to |omega - omega_c| <= alpha*omega_c.
struct DeviationTable {
    std::vector<DeviationRow> rows;
    double max_deviation;
    double max_midband_deviation;
};

DeviationTable deviation_sweep(const ArrayParams& params, int n_points);

}  // namespace cca::scattering
