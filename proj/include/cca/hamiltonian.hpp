#pragma once

#include <vector>

#include "cca/core.hpp"

namespace cca::hamiltonian {

// Open-chain tight-binding matrix with uniform complex entries: every
// diagonal element equals `diagonal` and every first off-diagonal element
// equals `off_diagonal` (symmetric, not Hermitian when the entries are
// complex).
struct ComplexTridiagonal {
    int dimension;
    complexd diagonal;
    complexd off_diagonal;
};

// Eigenvalues sorted by ascending real part. For the dissipative array every
// imaginary part lies in [-gamma*(1+2*alpha), -gamma*(1-2*alpha)].
struct ComplexSpectrum {
    std::vector<complexd> eigenvalues;
};

// The N discrete modes k_n = n*pi/((N+1)*L) with the cosine-band frequency
// omega_c*(1 + 2*alpha*cos(k_n*L)), n = 1..N.
std::vector<BandMode> mode_wavevectors(const ArrayParams& params);

// Effective dissipative Hamiltonian: diagonal omega_eff, off-diagonal
// -alpha*omega_eff.
ComplexTridiagonal build_effective(const ArrayParams& params);

// Closed form for the uniform open tridiagonal:
//   lambda_n = diagonal + 2*off_diagonal*cos(n*pi/(dim+1)),  n = 1..dim.
ComplexSpectrum eigenfrequencies(const ComplexTridiagonal& h);

// General dense complex eigensolver on the assembled matrix. Cross-check
// route for the closed form; intended for dimension <= 200.
ComplexSpectrum eigenfrequencies_dense(const ComplexTridiagonal& h);

}  // namespace cca::hamiltonian
