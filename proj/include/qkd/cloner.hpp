// The two qudit cloning-machine families used against the 2-basis and
// (d+1)-basis key-distribution protocols, their amplitude matrices, the
// Fourier-dual machine seen by the eavesdropper, and closed-form fidelities.

#pragma once

#include <Eigen/Dense>

namespace qkd {

enum class ClonerKind {
    TwoBases,   // copies the computational and Fourier-dual bases equally well
    Universal,  // basis-covariant; x == y
};

// Real amplitudes of the d x d error-amplitude matrix
//
//     [ v  x ... x ]
//     [ x  y ... y ]
//     [ .  .     . ]
//     [ x  y ... y ]
//
// normalized as v^2 + 2(d-1)x^2 + (d-1)^2 y^2 = 1.  The factory operations
// produce nonnegative amplitudes; eve_params may return a negative x for
// low-fidelity universal machines and still satisfies the normalization.
struct ClonerParams {
    int dim = 0;
    ClonerKind kind = ClonerKind::TwoBases;
    double v = 0.0;
    double x = 0.0;
    double y = 0.0;
};

// v^2 + 2(d-1)x^2 + (d-1)^2 y^2 - 1
double normalization_residual(const ClonerParams& p);

// Optimal two-basis machine at Bob fidelity F in [1/d, 1]:
// x = sqrt(F(1-F)/(d-1)), y = (1-F)/(d-1), v = F.
ClonerParams two_basis_optimal(int dim, double fidelity);

// Universal machine at Bob fidelity F in [1/(d+1), 1]:
// x = y = sqrt((1-F)/(d(d-1))), v = sqrt(((d+1)F-1)/d).
ClonerParams universal_from_fidelity(int dim, double fidelity);

// Parameters of the effective machine acting on the eavesdropper's clone
// (the Fourier transform of the amplitude matrix, reduced to the same
// three-amplitude form).  An involution: eve_params(eve_params(p)) == p.
ClonerParams eve_params(const ClonerParams& p);

struct AmplitudeMatrix {
    int dim = 0;
    Eigen::MatrixXd entries;  // row = shift index m, column = phase index n
};

AmplitudeMatrix amplitude_matrix(const ClonerParams& p);

// b_{m,n} = (1/d) sum_{m',n'} exp(2*pi*i(n m' - m n')/d) a_{m',n'}.
// Real for the three-amplitude family above; throws if the transform of the
// given input has imaginary residue beyond 1e-9.
AmplitudeMatrix fourier_dual_amplitudes(const AmplitudeMatrix& a);

struct FidelityReport {
    double bob_fidelity = 0.0;       // F, computational basis
    double bob_dual_fidelity = 0.0;  // F in the Fourier-dual basis
    double eve_fidelity = 0.0;       // F_E
    double disturbance = 0.0;        // D = 1 - F
};

FidelityReport fidelities(const ClonerParams& p);

// Closed-form F_E of the optimal two-basis machine:
// F/d + (d-1)(1-F)/d + (2/d) sqrt((d-1)F(1-F)).
double two_basis_eve_fidelity(int dim, double fidelity);

}  // namespace qkd
