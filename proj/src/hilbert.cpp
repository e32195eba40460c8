#include "qkd/hilbert.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qkd {

namespace {

void check_dim(int dim) {
    if (dim < 2) {
        throw std::invalid_argument("dimension must be at least 2, got " +
                                    std::to_string(dim));
    }
}

void check_index(int dim, int idx, const char* what) {
    if (idx < 0 || idx >= dim) {
        throw std::out_of_range(std::string(what) + " index " +
                                std::to_string(idx) + " outside [0, " +
                                std::to_string(dim) + ")");
    }
}

}  // namespace

Complex phase_root(int d, long k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / d;
    return {std::cos(theta), std::sin(theta)};
}

Ket computational_ket(int dim, int k) {
    check_dim(dim);
    check_index(dim, k, "basis");
    Ket psi{dim, Eigen::VectorXcd::Zero(dim)};
    psi.amplitudes(k) = 1.0;
    return psi;
}

Ket fourier_dual_ket(int dim, int l) {
    check_dim(dim);
    check_index(dim, l, "dual basis");
    Ket psi{dim, Eigen::VectorXcd(dim)};
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    for (int k = 0; k < dim; ++k) {
        psi.amplitudes(k) = norm * phase_root(dim, static_cast<long>(k) * l);
    }
    return psi;
}

Eigen::MatrixXcd ErrorOp::matrix() const {
    check_dim(dim);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        u(mod_index(k + shift, dim), k) =
            phase_root(dim, static_cast<long>(k) * phase);
    }
    return u;
}

Ket error_op_apply(const ErrorOp& op, const Ket& psi) {
    check_dim(op.dim);
    if (op.dim != psi.dim) {
        throw std::invalid_argument("operator dimension " +
                                    std::to_string(op.dim) +
                                    " does not match ket dimension " +
                                    std::to_string(psi.dim));
    }
    Ket out{psi.dim, Eigen::VectorXcd::Zero(psi.dim)};
    for (int k = 0; k < psi.dim; ++k) {
        out.amplitudes(mod_index(k + op.shift, psi.dim)) =
            phase_root(psi.dim, static_cast<long>(k) * op.phase) *
            psi.amplitudes(k);
    }
    return out;
}

BellKet bell_ket(int dim, int m, int n) {
    check_dim(dim);
    check_index(dim, m, "Bell shift");
    check_index(dim, n, "Bell phase");
    BellKet bell{dim, m, n, Eigen::VectorXcd::Zero(dim * dim)};
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    for (int k = 0; k < dim; ++k) {
        bell.amplitudes(k * dim + mod_index(k + m, dim)) =
            norm * phase_root(dim, static_cast<long>(k) * n);
    }
    return bell;
}

Complex inner(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("inner product of vectors with sizes " +
                                    std::to_string(a.size()) + " and " +
                                    std::to_string(b.size()));
    }
    return a.dot(b);  // Eigen's dot conjugates the left argument
}

bool same_up_to_phase(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b,
                      double tol) {
    return std::abs(std::abs(inner(a, b)) - 1.0) <= tol;
}

}  // namespace qkd
