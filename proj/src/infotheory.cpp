#include "qkd/infotheory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qkd/cloner.hpp"

namespace qkd {

namespace {

constexpr double kDomainSlack = 1e-12;

// w * log2(r) with the 0 log 0 convention: exactly 0 when w == 0.
double wlog2(double w, double r) {
    if (w == 0.0) return 0.0;
    return w * std::log2(r);
}

void check_dim(int dim) {
    if (dim < 2) {
        throw std::invalid_argument("dimension must be at least 2, got " +
                                    std::to_string(dim));
    }
}

}  // namespace

double info_symmetric(int dim, double fidelity) {
    check_dim(dim);
    if (!(fidelity >= -kDomainSlack && fidelity <= 1.0 + kDomainSlack)) {
        throw std::domain_error("fidelity " + std::to_string(fidelity) +
                                " outside [0, 1]");
    }
    const double f = std::clamp(fidelity, 0.0, 1.0);
    return std::log2(static_cast<double>(dim)) + wlog2(f, f) +
           wlog2(1.0 - f, (1.0 - f) / (dim - 1.0));
}

double eve_info_two_bases(int dim, double fidelity) {
    const double fe = two_basis_eve_fidelity(dim, fidelity);
    return info_symmetric(dim, std::clamp(fe, 0.0, 1.0));
}

double eve_info_all_bases(int dim, double fidelity) {
    const ClonerParams eve = eve_params(universal_from_fidelity(dim, fidelity));
    const double f = std::clamp(fidelity, 1.0 / (dim + 1.0), 1.0);
    const double fe =
        std::clamp(eve.v * eve.v + (dim - 1.0) * eve.x * eve.x, 0.0, 1.0);
    double correct = f + fe - 1.0;
    if (correct < -kDomainSlack) {
        throw std::domain_error("F + F_E - 1 = " + std::to_string(correct) +
                                " negative at F = " + std::to_string(f));
    }
    correct = std::max(correct, 0.0);
    return std::log2(static_cast<double>(dim)) + wlog2(correct, correct / f) +
           wlog2(1.0 - fe, (1.0 - fe) / ((dim - 1.0) * f));
}

double ck_rate_lower(double info_ab, double info_ae,
                     std::optional<double> info_be) {
    double rate = info_ab - info_ae;
    if (info_be) rate = std::max(rate, info_ab - *info_be);
    return rate;
}

double hall_bound(int dim, double overlap_max) {
    check_dim(dim);
    const double lo = 1.0 / std::sqrt(static_cast<double>(dim));
    if (!(overlap_max >= lo - kDomainSlack &&
          overlap_max <= 1.0 + kDomainSlack)) {
        throw std::domain_error("basis overlap " + std::to_string(overlap_max) +
                                " outside [" + std::to_string(lo) + ", 1]");
    }
    return 2.0 * std::log2(dim * std::clamp(overlap_max, lo, 1.0));
}

double mutual_information_bits(const Eigen::MatrixXd& joint) {
    const Eigen::VectorXd pa = joint.rowwise().sum();
    const Eigen::VectorXd pb = joint.colwise().sum();
    double mi = 0.0;
    for (Eigen::Index i = 0; i < joint.rows(); ++i) {
        for (Eigen::Index j = 0; j < joint.cols(); ++j) {
            const double p = joint(i, j);
            if (p > 0.0) mi += p * std::log2(p / (pa(i) * pb(j)));
        }
    }
    return mi;
}

double sift_yield(int dim, Protocol protocol) {
    check_dim(dim);
    return protocol == Protocol::TwoBases ? 0.5 : 1.0 / (dim + 1.0);
}

const char* protocol_name(Protocol protocol) {
    return protocol == Protocol::TwoBases ? "two-bases" : "all-bases";
}

}  // namespace qkd
