#include "qkd/bounds.hpp"

#include <cmath>
#include <functional>
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

void check_f_tol(double f_tol) {
    if (!(f_tol >= 1e-15 && f_tol <= 1e-3)) {
        throw std::invalid_argument("bisection tolerance " +
                                    std::to_string(f_tol) +
                                    " outside [1e-15, 1e-3]");
    }
}

// Scan g downward from f_hi in steps of kScanStep until the sign changes,
// then bisect.  Scanning from the top guarantees the high-fidelity root when
// g has several roots.
constexpr double kScanStep = 1e-3;

double solve_descending(const std::function<double(double)>& g, double f_hi,
                        double f_lo, double f_tol, const char* what) {
    double b = f_hi;
    double gb = g(b);
    if (gb == 0.0) return b;
    double a = b;
    bool bracketed = false;
    while (a - kScanStep >= f_lo) {
        a -= kScanStep;
        const double ga = g(a);
        if (ga == 0.0) return a;
        if ((ga < 0.0) != (gb < 0.0)) {
            bracketed = true;
            break;
        }
        b = a;
        gb = ga;
    }
    if (!bracketed) {
        throw std::runtime_error(std::string("no sign change found for ") +
                                 what + " in [" + std::to_string(f_lo) + ", " +
                                 std::to_string(f_hi) + "]");
    }
    double ga = g(a);
    for (int iter = 0; iter < 200 && b - a > f_tol; ++iter) {
        const double mid = 0.5 * (a + b);
        const double gm = g(mid);
        if (gm == 0.0) return mid;
        if ((gm < 0.0) == (ga < 0.0)) {
            a = mid;
            ga = gm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

ThresholdResult make_result(int dim, BoundKind kind, double fidelity,
                            double residual) {
    ThresholdResult r;
    r.dim = dim;
    r.kind = kind;
    r.fidelity = fidelity;
    r.disturbance = 1.0 - fidelity;
    r.residual = std::abs(residual);
    return r;
}

}  // namespace

ThresholdResult threshold_two_bases(int dim, double f_tol) {
    check_dim(dim);
    check_f_tol(f_tol);
    const double f_closed =
        0.5 * (1.0 + 1.0 / std::sqrt(static_cast<double>(dim)));
    const auto gap = [dim](double f) {
        return info_symmetric(dim, f) - eve_info_two_bases(dim, f);
    };
    const double f_lo = 1.0 / dim + 1e-9;
    const double f_bisect = solve_descending(gap, 1.0, f_lo, f_tol,
                                             "the two-basis crossing");
    if (std::abs(f_bisect - f_closed) > 1e-9) {
        throw std::runtime_error(
            "two-basis crossing: bisection root " + std::to_string(f_bisect) +
            " disagrees with closed form " + std::to_string(f_closed));
    }
    return make_result(dim, BoundKind::IndTwoBases, f_closed, gap(f_closed));
}

ThresholdResult threshold_all_bases(int dim, double f_tol) {
    check_dim(dim);
    check_f_tol(f_tol);
    const auto gap = [dim](double f) {
        return info_symmetric(dim, f) - eve_info_all_bases(dim, f);
    };
    const double f_lo = 1.0 / (dim + 1.0) + 1e-9;
    const double f_star = solve_descending(gap, 1.0, f_lo, f_tol,
                                           "the all-bases crossing");
    return make_result(dim, BoundKind::IndAllBases, f_star, gap(f_star));
}

ThresholdResult threshold_coherent(int dim, double f_tol) {
    check_dim(dim);
    check_f_tol(f_tol);
    // log2(d)/2 - [log2(d) - I_AB(F)]; positive at F = 1, negative at the
    // uniform point F = 1/d, so the descending scan lands on the high root.
    const auto gap = [dim](double f) {
        return info_symmetric(dim, f) -
               0.5 * std::log2(static_cast<double>(dim));
    };
    const double f_lo = 1.0 / dim + 1e-9;
    const double f_star =
        solve_descending(gap, 1.0, f_lo, f_tol, "the coherent-attack bound");
    return make_result(dim, BoundKind::Coherent, f_star, gap(f_star));
}

ThresholdResult threshold(int dim, BoundKind kind, double f_tol) {
    switch (kind) {
        case BoundKind::IndTwoBases:
            return threshold_two_bases(dim, f_tol);
        case BoundKind::IndAllBases:
            return threshold_all_bases(dim, f_tol);
        case BoundKind::Coherent:
            return threshold_coherent(dim, f_tol);
    }
    throw std::invalid_argument("unknown bound kind");
}

std::vector<InfoPoint> scan_curves(int dim, Protocol protocol, double f_min,
                                   double f_max, int steps) {
    check_dim(dim);
    if (steps < 2) {
        throw std::invalid_argument("steps must be at least 2, got " +
                                    std::to_string(steps));
    }
    const double lo =
        protocol == Protocol::TwoBases ? 1.0 / dim : 1.0 / (dim + 1.0);
    if (!(f_min >= lo - 1e-12 && f_max <= 1.0 + 1e-12 && f_min <= f_max)) {
        throw std::domain_error(
            "F range [" + std::to_string(f_min) + ", " + std::to_string(f_max) +
            "] outside the " + protocol_name(protocol) + " domain [" +
            std::to_string(lo) + ", 1]");
    }
    std::vector<InfoPoint> points;
    points.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        const double f = f_min + (f_max - f_min) * i / (steps - 1.0);
        InfoPoint pt;
        pt.dim = dim;
        pt.protocol = protocol;
        pt.fidelity = f;
        pt.disturbance = 1.0 - f;
        pt.info_ab = info_symmetric(dim, f);
        pt.info_ae = protocol == Protocol::TwoBases
                         ? eve_info_two_bases(dim, f)
                         : eve_info_all_bases(dim, f);
        pt.rate_lower = ck_rate_lower(pt.info_ab, pt.info_ae);
        points.push_back(pt);
    }
    return points;
}

const char* bound_kind_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::IndTwoBases:
            return "ind2";
        case BoundKind::IndAllBases:
            return "indD1";
        case BoundKind::Coherent:
            return "coh";
    }
    return "?";
}

}  // namespace qkd
