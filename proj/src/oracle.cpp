#include "qkd/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qkd {

namespace {

constexpr int kOracleDimCap = 8;  // d^3 amplitudes stay small

void check_oracle_dim(int dim) {
    if (dim < 2 || dim > kOracleDimCap) {
        throw std::invalid_argument("oracle supports 2 <= d <= " +
                                    std::to_string(kOracleDimCap) + ", got " +
                                    std::to_string(dim));
    }
}

}  // namespace

JointState clone_state(const ClonerParams& p, const Ket& psi) {
    check_oracle_dim(p.dim);
    if (psi.dim != p.dim) {
        throw std::invalid_argument("input ket dimension " +
                                    std::to_string(psi.dim) +
                                    " does not match cloner dimension " +
                                    std::to_string(p.dim));
    }
    const int d = p.dim;
    const AmplitudeMatrix a = amplitude_matrix(p);
    JointState out{d, Eigen::VectorXcd::Zero(d * d * d)};
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            const double c = a.entries(m, n);
            if (c == 0.0) continue;
            const Ket shifted = error_op_apply({d, m, n}, psi);
            const BellKet bell = bell_ket(d, m, mod_index(-n, d));
            for (int b = 0; b < d; ++b) {
                const Complex amp_b = c * shifted.amplitudes(b);
                if (amp_b == 0.0) continue;
                for (int k = 0; k < d; ++k) {
                    const int pair = k * d + mod_index(k + m, d);
                    out.amplitudes(b * d * d + pair) +=
                        amp_b * bell.amplitudes(pair);
                }
            }
        }
    }
    const double norm2 = out.amplitudes.squaredNorm();
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw std::runtime_error("cloned state norm^2 = " +
                                 std::to_string(norm2) +
                                 "; cloner parameters not normalized?");
    }
    return out;
}

Eigen::MatrixXcd reduced_bob(const JointState& s) {
    const int d = s.dim;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
    for (int b = 0; b < d; ++b) {
        for (int bp = 0; bp < d; ++bp) {
            Complex acc = 0.0;
            for (int pair = 0; pair < d * d; ++pair) {
                acc += s.amplitudes(b * d * d + pair) *
                       std::conj(s.amplitudes(bp * d * d + pair));
            }
            rho(b, bp) = acc;
        }
    }
    return rho;
}

Eigen::MatrixXcd reduced_eve(const JointState& s) {
    const int d = s.dim;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
    for (int e = 0; e < d; ++e) {
        for (int e2 = 0; e2 < d; ++e2) {
            Complex acc = 0.0;
            for (int b = 0; b < d; ++b) {
                for (int ep = 0; ep < d; ++ep) {
                    acc += s.amplitudes(s.index(b, e, ep)) *
                           std::conj(s.amplitudes(s.index(b, e2, ep)));
                }
            }
            rho(e, e2) = acc;
        }
    }
    return rho;
}

Eigen::VectorXd bob_error_distribution(const ClonerParams& p,
                                       MeasureBasis basis) {
    const AmplitudeMatrix a = amplitude_matrix(p);
    const Eigen::MatrixXd sq = a.entries.array().square();
    if (basis == MeasureBasis::Computational) {
        return sq.rowwise().sum();  // P(shift m)
    }
    return sq.colwise().sum().transpose();  // P(phase n)
}

ConditionalStates eve_conditional_states_two_bases(const ClonerParams& p,
                                                   int shift) {
    check_oracle_dim(p.dim);
    const int d = p.dim;
    if (shift < 0 || shift >= d) {
        throw std::out_of_range("shift outcome " + std::to_string(shift) +
                                " outside [0, " + std::to_string(d) + ")");
    }
    if (p.kind != ClonerKind::TwoBases ||
        std::abs(p.x * p.x - p.v * p.y) > 1e-9) {
        throw std::invalid_argument(
            "conditional-state analysis requires optimal two-basis "
            "parameters (x^2 == v*y)");
    }
    const double outcome_prob =
        bob_error_distribution(p, MeasureBasis::Computational)(shift);
    if (outcome_prob <= 1e-15) {
        throw std::domain_error("Bell outcome m = " + std::to_string(shift) +
                                " has zero probability; conditional state "
                                "undefined");
    }

    // Projector onto span{ |B_{shift,nu}> : nu } applied per receiver block.
    std::vector<Eigen::VectorXcd> bells;
    bells.reserve(d);
    for (int nu = 0; nu < d; ++nu) {
        bells.push_back(bell_ket(d, shift, nu).amplitudes);
    }

    ConditionalStates result;
    result.shift = shift;
    result.states.reserve(d);
    for (int k = 0; k < d; ++k) {
        const JointState joint = clone_state(p, computational_ket(d, k));
        Eigen::VectorXcd conditional;
        double best_block_norm = 0.0;
        for (int b = 0; b < d; ++b) {
            const Eigen::VectorXcd block =
                joint.amplitudes.segment(b * d * d, d * d);
            Eigen::VectorXcd projected = Eigen::VectorXcd::Zero(d * d);
            for (const auto& bell : bells) {
                projected += inner(bell, block) * bell;
            }
            const double norm = projected.norm();
            if (norm > best_block_norm) {
                best_block_norm = norm;
                conditional = projected / norm;
            } else if (norm > 1e-9) {
                throw std::runtime_error(
                    "conditional state spreads over several receiver "
                    "outcomes; not a pure conditional");
            }
        }
        result.states.push_back(std::move(conditional));
    }
    result.overlaps = Eigen::MatrixXcd(d, d);
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            result.overlaps(j, k) = inner(result.states[j], result.states[k]);
        }
    }
    return result;
}

double srm_mutual_information(const std::vector<Eigen::VectorXcd>& states) {
    const int n = static_cast<int>(states.size());
    if (n < 2) {
        throw std::invalid_argument("need at least two states");
    }
    Eigen::MatrixXcd gram(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            gram(i, j) = inner(states[i], states[j]);
        }
    }
    // Symmetric set: unit norms, one common real overlap.
    double common = 0.0;
    for (int i = 0; i < n; ++i) {
        if (std::abs(gram(i, i).real() - 1.0) > 1e-9 ||
            std::abs(gram(i, i).imag()) > 1e-9) {
            throw std::invalid_argument("states are not normalized");
        }
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            common += gram(i, j).real();
        }
    }
    common /= n * (n - 1.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (std::abs(gram(i, j) - Complex(common, 0.0)) > 1e-9) {
                throw std::invalid_argument(
                    "state set is not symmetric: overlaps differ or are "
                    "complex");
            }
        }
    }

    // Square-root measurement: p(j|k) = |(G^{1/2})_{jk}|^2.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("Gram matrix eigendecomposition failed");
    }
    Eigen::VectorXd vals = es.eigenvalues().cwiseMax(0.0);
    const Eigen::MatrixXcd sqrt_gram = es.eigenvectors() *
                                       vals.cwiseSqrt().asDiagonal() *
                                       es.eigenvectors().adjoint();
    Eigen::MatrixXd joint(n, n);
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
            joint(k, j) = std::norm(sqrt_gram(j, k)) / n;
        }
    }
    return mutual_information_bits(joint);
}

JointDistribution all_bases_joint_distribution(int dim, double fidelity) {
    check_oracle_dim(dim);
    const ClonerParams p = universal_from_fidelity(dim, fidelity);
    JointDistribution dist;
    dist.dim = dim;
    dist.p.assign(static_cast<size_t>(dim) * dim * dim, 0.0);
    const double prior = 1.0 / dim;
    for (int a = 0; a < dim; ++a) {
        const JointState joint = clone_state(p, computational_ket(dim, a));
        for (int b = 0; b < dim; ++b) {
            for (int e = 0; e < dim; ++e) {
                double q = 0.0;
                for (int ep = 0; ep < dim; ++ep) {
                    q += std::norm(joint.amplitudes(joint.index(b, e, ep)));
                }
                dist.p[(a * dim + b) * dim + e] += prior * q;
            }
        }
    }
    double total = 0.0;
    for (double q : dist.p) total += q;
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::runtime_error("joint distribution sums to " +
                                 std::to_string(total));
    }
    return dist;
}

double eve_info_from_distribution(const JointDistribution& dist) {
    const int d = dist.dim;
    double info = 0.0;
    for (int m = 0; m < d; ++m) {
        Eigen::MatrixXd joint(d, d);
        double pm = 0.0;
        for (int a = 0; a < d; ++a) {
            const int b = mod_index(a + m, d);
            for (int e = 0; e < d; ++e) {
                joint(a, e) = dist.prob(a, b, e);
                pm += joint(a, e);
            }
        }
        if (pm <= 0.0) continue;
        info += pm * mutual_information_bits(joint / pm);
    }
    return info;
}

double prob_eve_correct_given_no_error(const JointDistribution& dist) {
    const int d = dist.dim;
    double correct = 0.0, total = 0.0;
    for (int a = 0; a < d; ++a) {
        for (int e = 0; e < d; ++e) {
            const double q = dist.prob(a, a, e);
            total += q;
            if (e == a) correct += q;
        }
    }
    if (total <= 0.0) {
        throw std::domain_error("receiver never receives the symbol intact");
    }
    return correct / total;
}

double prob_eve_correct_given_error(const JointDistribution& dist) {
    const int d = dist.dim;
    double correct = 0.0, total = 0.0;
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            if (b == a) continue;
            for (int e = 0; e < d; ++e) {
                const double q = dist.prob(a, b, e);
                total += q;
                if (e == a) correct += q;
            }
        }
    }
    if (total <= 0.0) {
        throw std::domain_error("receiver error has zero probability");
    }
    return correct / total;
}

}  // namespace qkd
