// d-dimensional Hilbert-space primitives: computational and Fourier-dual
// basis kets, generalized shift/phase error operators, and the d^2
// maximally entangled Bell kets of two qudits.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qkd {

using Complex = std::complex<double>;

// Reduce an index into [0, d); negative inputs wrap around.
inline int mod_index(int i, int d) {
    int r = i % d;
    return r < 0 ? r + d : r;
}

// omega_d^{k} = exp(2*pi*i * k / d)
Complex phase_root(int d, long k);

struct Ket {
    int dim = 0;
    Eigen::VectorXcd amplitudes;
};

// |k>: amplitude 1 at position k.
Ket computational_ket(int dim, int k);

// Fourier dual |l~>: amplitude exp(2*pi*i*k*l/d)/sqrt(d) at position k.
// Mutually unbiased with the computational basis: |<k|l~>| = 1/sqrt(d).
Ket fourier_dual_ket(int dim, int l);

// U_{m,n} = sum_k exp(2*pi*i*k*n/d) |k+m><k|  (indices mod d).
// shift extends the bit flip, phase extends the phase flip.
struct ErrorOp {
    int dim = 0;
    int shift = 0;  // m
    int phase = 0;  // n

    Eigen::MatrixXcd matrix() const;
};

Ket error_op_apply(const ErrorOp& op, const Ket& psi);

// |B_{m,n}> = 1/sqrt(d) sum_k exp(2*pi*i*k*n/d) |k>|k+m>.
// Two-register amplitudes indexed as e*dim + e'.
struct BellKet {
    int dim = 0;
    int shift = 0;  // m
    int phase = 0;  // n
    Eigen::VectorXcd amplitudes;
};

BellKet bell_ket(int dim, int m, int n);

// <a|b>
Complex inner(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

// true iff |<a|b>| == 1 within tol (equality up to global phase)
bool same_up_to_phase(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b,
                      double tol = 1e-12);

}  // namespace qkd
