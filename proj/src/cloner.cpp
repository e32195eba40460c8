#include "qkd/cloner.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qkd/hilbert.hpp"

namespace qkd {

namespace {

constexpr double kDomainSlack = 1e-12;

void check_dim(int dim) {
    if (dim < 2) {
        throw std::invalid_argument("dimension must be at least 2, got " +
                                    std::to_string(dim));
    }
}

void check_fidelity_range(double f, double lo, const char* family) {
    if (!(f >= lo - kDomainSlack && f <= 1.0 + kDomainSlack)) {
        throw std::domain_error(std::string(family) + " fidelity " +
                                std::to_string(f) + " outside [" +
                                std::to_string(lo) + ", 1]");
    }
}

}  // namespace

double normalization_residual(const ClonerParams& p) {
    const double d = p.dim;
    return p.v * p.v + 2.0 * (d - 1.0) * p.x * p.x +
           (d - 1.0) * (d - 1.0) * p.y * p.y - 1.0;
}

ClonerParams two_basis_optimal(int dim, double fidelity) {
    check_dim(dim);
    check_fidelity_range(fidelity, 1.0 / dim, "two-basis");
    const double f = std::clamp(fidelity, 1.0 / dim, 1.0);
    ClonerParams p;
    p.dim = dim;
    p.kind = ClonerKind::TwoBases;
    p.v = f;
    p.x = std::sqrt(f * (1.0 - f) / (dim - 1.0));
    p.y = (1.0 - f) / (dim - 1.0);
    return p;
}

ClonerParams universal_from_fidelity(int dim, double fidelity) {
    check_dim(dim);
    check_fidelity_range(fidelity, 1.0 / (dim + 1.0), "universal");
    const double f = std::clamp(fidelity, 1.0 / (dim + 1.0), 1.0);
    ClonerParams p;
    p.dim = dim;
    p.kind = ClonerKind::Universal;
    p.v = std::sqrt(((dim + 1.0) * f - 1.0) / dim);
    p.x = std::sqrt((1.0 - f) / (dim * (dim - 1.0)));
    p.y = p.x;
    return p;
}

ClonerParams eve_params(const ClonerParams& p) {
    check_dim(p.dim);
    const double d = p.dim;
    ClonerParams out;
    out.dim = p.dim;
    out.kind = p.kind;
    out.x = (p.v + (d - 2.0) * p.x + (1.0 - d) * p.y) / d;
    out.y = (p.v - 2.0 * p.x + p.y) / d;
    out.v = (p.v + 2.0 * (d - 1.0) * p.x + (d - 1.0) * (d - 1.0) * p.y) / d;
    return out;
}

AmplitudeMatrix amplitude_matrix(const ClonerParams& p) {
    check_dim(p.dim);
    AmplitudeMatrix a{p.dim, Eigen::MatrixXd(p.dim, p.dim)};
    a.entries.fill(p.y);
    a.entries.row(0).fill(p.x);
    a.entries.col(0).fill(p.x);
    a.entries(0, 0) = p.v;
    return a;
}

AmplitudeMatrix fourier_dual_amplitudes(const AmplitudeMatrix& a) {
    const int d = a.dim;
    check_dim(d);
    if (a.entries.rows() != d || a.entries.cols() != d) {
        throw std::invalid_argument("amplitude matrix shape does not match dim");
    }
    AmplitudeMatrix b{d, Eigen::MatrixXd(d, d)};
    double worst_imag = 0.0;
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            Complex acc = 0.0;
            for (int mp = 0; mp < d; ++mp) {
                for (int np = 0; np < d; ++np) {
                    acc += phase_root(d, static_cast<long>(n) * mp -
                                             static_cast<long>(m) * np) *
                           a.entries(mp, np);
                }
            }
            acc /= d;
            worst_imag = std::max(worst_imag, std::abs(acc.imag()));
            b.entries(m, n) = acc.real();
        }
    }
    if (worst_imag > 1e-9) {
        throw std::invalid_argument(
            "Fourier dual of the given amplitudes is not real (residue " +
            std::to_string(worst_imag) + ")");
    }
    return b;
}

FidelityReport fidelities(const ClonerParams& p) {
    const AmplitudeMatrix a = amplitude_matrix(p);
    FidelityReport r;
    r.bob_fidelity = a.entries.row(0).squaredNorm();       // phase errors harmless
    r.bob_dual_fidelity = a.entries.col(0).squaredNorm();  // shift errors harmless
    const ClonerParams e = eve_params(p);
    r.eve_fidelity = e.v * e.v + (p.dim - 1.0) * e.x * e.x;
    r.disturbance = 1.0 - r.bob_fidelity;
    return r;
}

double two_basis_eve_fidelity(int dim, double fidelity) {
    check_dim(dim);
    check_fidelity_range(fidelity, 1.0 / dim, "two-basis");
    const double f = std::clamp(fidelity, 1.0 / dim, 1.0);
    const double d = dim;
    return f / d + (d - 1.0) * (1.0 - f) / d +
           2.0 / d * std::sqrt((d - 1.0) * f * (1.0 - f));
}

}  // namespace qkd
