#include "qkd/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "qkd/bounds.hpp"
#include "qkd/cloner.hpp"
#include "qkd/hilbert.hpp"
#include "qkd/infotheory.hpp"
#include "qkd/montecarlo.hpp"
#include "qkd/oracle.hpp"

namespace qkd {

namespace {

// deterministic F draws strictly inside [lo, 1)
std::vector<double> fidelity_draws(SplitMix64& rng, double lo, int count) {
    std::vector<double> fs(count);
    for (double& f : fs) {
        f = lo + (1.0 - lo) * (0.02 + 0.96 * rng.uniform());
    }
    return fs;
}

Ket random_ket(SplitMix64& rng, int d) {
    Eigen::VectorXcd amps(d);
    for (int i = 0; i < d; ++i) {
        amps(i) = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
    }
    amps.normalize();
    return Ket{d, amps};
}

double check_mub_overlap(int d_max) {
    double worst = 0.0;
    for (int d = 2; d <= d_max; ++d) {
        const double expected = 1.0 / std::sqrt(static_cast<double>(d));
        for (int k = 0; k < d; ++k) {
            const Ket comp = computational_ket(d, k);
            for (int l = 0; l < d; ++l) {
                const Ket dual = fourier_dual_ket(d, l);
                worst = std::max(
                    worst, std::abs(std::abs(inner(comp.amplitudes,
                                                   dual.amplitudes)) -
                                    expected));
            }
        }
    }
    return worst;
}

double check_error_op_group(int d_max) {
    double worst = 0.0;
    for (int d = 2; d <= d_max; ++d) {
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
        std::vector<Eigen::MatrixXcd> ops(d * d);
        for (int m = 0; m < d; ++m) {
            for (int n = 0; n < d; ++n) {
                ops[m * d + n] = ErrorOp{d, m, n}.matrix();
                worst = std::max(worst, (ops[m * d + n] *
                                             ops[m * d + n].adjoint() -
                                         id)
                                            .cwiseAbs()
                                            .maxCoeff());
            }
        }
        worst = std::max(worst, (ops[0] - id).cwiseAbs().maxCoeff());
        // composition closes up to a phase
        for (int i = 0; i < d * d; ++i) {
            for (int j = 0; j < d * d; ++j) {
                const int m = (i / d + j / d) % d;
                const int n = (i % d + j % d) % d;
                const Eigen::MatrixXcd prod = ops[i] * ops[j];
                const Eigen::MatrixXcd& target = ops[m * d + n];
                Complex phase = 0.0;
                for (int c = 0; c < d && phase == 0.0; ++c) {
                    for (int r = 0; r < d; ++r) {
                        if (std::abs(target(r, c)) > 0.5) {
                            phase = prod(r, c) / target(r, c);
                            break;
                        }
                    }
                }
                worst = std::max(
                    worst, (prod - phase * target).cwiseAbs().maxCoeff());
                worst = std::max(worst, std::abs(std::abs(phase) - 1.0));
            }
        }
    }
    return worst;
}

double check_bell_orthonormal(int d_max) {
    double worst = 0.0;
    for (int d = 2; d <= d_max; ++d) {
        std::vector<BellKet> bells;
        for (int m = 0; m < d; ++m) {
            for (int n = 0; n < d; ++n) {
                bells.push_back(bell_ket(d, m, n));
            }
        }
        for (size_t i = 0; i < bells.size(); ++i) {
            for (size_t j = 0; j < bells.size(); ++j) {
                const double expected = i == j ? 1.0 : 0.0;
                worst = std::max(
                    worst, std::abs(inner(bells[i].amplitudes,
                                          bells[j].amplitudes) -
                                    Complex(expected, 0.0)));
            }
        }
    }
    return worst;
}

double check_bell_maximally_mixed(int d_max) {
    double worst = 0.0;
    for (int d = 2; d <= d_max; ++d) {
        for (int m = 0; m < d; ++m) {
            for (int n = 0; n < d; ++n) {
                const BellKet bell = bell_ket(d, m, n);
                Eigen::MatrixXcd rho_first = Eigen::MatrixXcd::Zero(d, d);
                Eigen::MatrixXcd rho_second = Eigen::MatrixXcd::Zero(d, d);
                for (int e = 0; e < d; ++e) {
                    for (int e2 = 0; e2 < d; ++e2) {
                        Complex first = 0.0, second = 0.0;
                        for (int t = 0; t < d; ++t) {
                            first += bell.amplitudes(e * d + t) *
                                     std::conj(bell.amplitudes(e2 * d + t));
                            second += bell.amplitudes(t * d + e) *
                                      std::conj(bell.amplitudes(t * d + e2));
                        }
                        rho_first(e, e2) = first;
                        rho_second(e, e2) = second;
                    }
                }
                for (const auto& rho : {rho_first, rho_second}) {
                    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
                    worst = std::max(
                        worst, (es.eigenvalues().array() - 1.0 / d)
                                   .abs()
                                   .maxCoeff());
                }
            }
        }
    }
    return worst;
}

double check_cloner_normalization(int d_max, SplitMix64& rng) {
    double worst = 0.0;
    for (int d = 2; d <= d_max; ++d) {
        for (double f : fidelity_draws(rng, 1.0 / d, 10)) {
            const ClonerParams p = two_basis_optimal(d, f);
            worst = std::max(worst, std::abs(normalization_residual(p)));
            worst = std::max(
                worst, std::abs(normalization_residual(eve_params(p))));
            worst = std::max(
                worst,
                std::abs(amplitude_matrix(p).entries.squaredNorm() - 1.0));
        }
        for (double f : fidelity_draws(rng, 1.0 / (d + 1.0), 10)) {
            const ClonerParams p = universal_from_fidelity(d, f);
            worst = std::max(worst, std::abs(normalization_residual(p)));
            worst = std::max(
                worst, std::abs(normalization_residual(eve_params(p))));
        }
    }
    return worst;
}

double check_fourier_dual_matches_eve_params(int d_max, SplitMix64& rng) {
    double worst = 0.0;
    for (int d = 2; d <= d_max; ++d) {
        for (int kind = 0; kind < 2; ++kind) {
            const double lo = kind == 0 ? 1.0 / d : 1.0 / (d + 1.0);
            for (double f : fidelity_draws(rng, lo, 10)) {
                const ClonerParams p = kind == 0
                                           ? two_basis_optimal(d, f)
                                           : universal_from_fidelity(d, f);
                const AmplitudeMatrix b =
                    fourier_dual_amplitudes(amplitude_matrix(p));
                const AmplitudeMatrix closed =
                    amplitude_matrix(eve_params(p));
                worst = std::max(
                    worst,
                    (b.entries - closed.entries).cwiseAbs().maxCoeff());
            }
        }
    }
    return worst;
}

double check_fourier_dual_involution(int d_max, SplitMix64& rng) {
    double worst = 0.0;
    for (int d = 2; d <= d_max; ++d) {
        for (double f : fidelity_draws(rng, 1.0 / d, 10)) {
            const ClonerParams p = two_basis_optimal(d, f);
            const AmplitudeMatrix a = amplitude_matrix(p);
            const AmplitudeMatrix back =
                fourier_dual_amplitudes(fourier_dual_amplitudes(a));
            worst = std::max(worst,
                             (back.entries - a.entries).cwiseAbs().maxCoeff());
            const ClonerParams twice = eve_params(eve_params(p));
            worst = std::max(worst, std::abs(twice.v - p.v));
            worst = std::max(worst, std::abs(twice.x - p.x));
            worst = std::max(worst, std::abs(twice.y - p.y));
        }
    }
    return worst;
}

double check_bob_mixture(int d_max, SplitMix64& rng) {
    double worst = 0.0;
    for (int d = 2; d <= std::min(d_max, 5); ++d) {
        for (int kind = 0; kind < 2; ++kind) {
            const double lo = kind == 0 ? 1.0 / d : 1.0 / (d + 1.0);
            for (double f : fidelity_draws(rng, lo, 20)) {
                const ClonerParams p = kind == 0
                                           ? two_basis_optimal(d, f)
                                           : universal_from_fidelity(d, f);
                const Ket psi = random_ket(rng, d);
                const Eigen::MatrixXcd rho =
                    reduced_bob(clone_state(p, psi));
                const AmplitudeMatrix a = amplitude_matrix(p);
                Eigen::MatrixXcd mixture = Eigen::MatrixXcd::Zero(d, d);
                for (int m = 0; m < d; ++m) {
                    for (int n = 0; n < d; ++n) {
                        const Ket u = error_op_apply({d, m, n}, psi);
                        mixture += a.entries(m, n) * a.entries(m, n) *
                                   (u.amplitudes * u.amplitudes.adjoint());
                    }
                }
                worst = std::max(worst,
                                 (rho - mixture).cwiseAbs().maxCoeff());
            }
        }
    }
    return worst;
}

double check_oracle_fidelities(int d_max, SplitMix64& rng) {
    double worst = 0.0;
    for (int d = 2; d <= d_max; ++d) {
        for (int kind = 0; kind < 2; ++kind) {
            const double lo = kind == 0 ? 1.0 / d : 1.0 / (d + 1.0);
            for (double f : fidelity_draws(rng, lo, 10)) {
                const ClonerParams p = kind == 0
                                           ? two_basis_optimal(d, f)
                                           : universal_from_fidelity(d, f);
                const FidelityReport rep = fidelities(p);
                const int k = static_cast<int>(rng.below(d));
                const Ket comp = computational_ket(d, k);
                const JointState joint = clone_state(p, comp);
                const Eigen::MatrixXcd rho_b = reduced_bob(joint);
                const double f_oracle =
                    (comp.amplitudes.adjoint() * rho_b * comp.amplitudes)(0)
                        .real();
                worst = std::max(worst, std::abs(f_oracle - rep.bob_fidelity));

                const Ket dual = fourier_dual_ket(d, k);
                const Eigen::MatrixXcd rho_b_dual =
                    reduced_bob(clone_state(p, dual));
                const double f_dual =
                    (dual.amplitudes.adjoint() * rho_b_dual *
                     dual.amplitudes)(0)
                        .real();
                worst = std::max(worst,
                                 std::abs(f_dual - rep.bob_dual_fidelity));

                const Eigen::MatrixXcd rho_e = reduced_eve(joint);
                const double fe_oracle =
                    (comp.amplitudes.adjoint() * rho_e * comp.amplitudes)(0)
                        .real();
                worst = std::max(worst,
                                 std::abs(fe_oracle - rep.eve_fidelity));
            }
        }
    }
    return worst;
}

double check_symmetric_errors(int d_max, SplitMix64& rng) {
    double worst = 0.0;
    for (int d = 2; d <= d_max; ++d) {
        for (double f : fidelity_draws(rng, 1.0 / d, 10)) {
            const ClonerParams p = two_basis_optimal(d, f);
            const Eigen::VectorXd dist =
                bob_error_distribution(p, MeasureBasis::Computational);
            const double expected = (1.0 - f) / (d - 1.0);
            worst = std::max(worst, std::abs(dist(0) - f));
            for (int m = 1; m < d; ++m) {
                worst = std::max(worst, std::abs(dist(m) - expected));
            }
        }
    }
    return worst;
}

double check_eve_conditional_overlaps(int d_max, SplitMix64& rng) {
    double worst = 0.0;
    for (int d = 2; d <= d_max; ++d) {
        for (double f : fidelity_draws(rng, 1.0 / d + 0.05, 5)) {
            const ClonerParams p = two_basis_optimal(d, f);
            const double expected = (d * f - 1.0) / (d - 1.0);
            for (int m = 0; m < d; ++m) {
                const ConditionalStates cond =
                    eve_conditional_states_two_bases(p, m);
                for (int j = 0; j < d; ++j) {
                    for (int k = 0; k < d; ++k) {
                        const Complex got = cond.overlaps(j, k);
                        const double want = j == k ? 1.0 : expected;
                        worst = std::max(worst,
                                         std::abs(got - Complex(want, 0.0)));
                    }
                }
            }
        }
    }
    return worst;
}

double check_srm_matches_closed_form(int d_max, SplitMix64& rng) {
    double worst = 0.0;
    for (int d = 2; d <= d_max; ++d) {
        for (double f : fidelity_draws(rng, 1.0 / d + 0.05, 10)) {
            const ClonerParams p = two_basis_optimal(d, f);
            const ConditionalStates cond =
                eve_conditional_states_two_bases(p, 0);
            const double mi = srm_mutual_information(cond.states);
            worst = std::max(worst, std::abs(mi - eve_info_two_bases(d, f)));
        }
    }
    return worst;
}

double check_all_bases_distribution(int d_max, SplitMix64& rng) {
    double worst = 0.0;
    for (int d = 2; d <= d_max; ++d) {
        for (double f : fidelity_draws(rng, 1.0 / (d + 1.0) + 0.05, 10)) {
            const JointDistribution dist = all_bases_joint_distribution(d, f);
            worst = std::max(worst, std::abs(eve_info_from_distribution(dist) -
                                             eve_info_all_bases(d, f)));
            const ClonerParams eve = eve_params(universal_from_fidelity(d, f));
            const double fe = eve.v * eve.v + (d - 1.0) * eve.x * eve.x;
            worst = std::max(worst,
                             std::abs(prob_eve_correct_given_no_error(dist) -
                                      (f + fe - 1.0) / f));
            if (f < 1.0 - 1e-9) {
                worst = std::max(
                    worst,
                    std::abs(prob_eve_correct_given_error(dist) - 1.0));
            }
        }
    }
    return worst;
}

double check_crossing_routes(int d_max) {
    double worst = 0.0;
    for (int d = 2; d <= d_max; ++d) {
        const ThresholdResult r = threshold_two_bases(d);
        const double closed =
            0.5 * (1.0 + 1.0 / std::sqrt(static_cast<double>(d)));
        worst = std::max(worst, std::abs(r.fidelity - closed));
        worst = std::max(worst, r.residual);
    }
    return worst;
}

// Densely scan the three-amplitude family at fixed Bob fidelity; nothing in
// the family should beat the closed-form Eve fidelity.
double check_grid_optimality(int d_max) {
    double worst = 0.0;
    for (int d : {2, 3, 5}) {
        if (d > d_max) continue;
        for (double f : {0.55, 0.65, 0.75, 0.85, 0.95}) {
            const double closed = two_basis_eve_fidelity(d, f);
            const double v_lo = std::sqrt(std::max(0.0, 2.0 * f - 1.0));
            const double v_hi = std::sqrt(f);
            const int grid = 20000;
            double best = 0.0;
            for (int i = 0; i <= grid; ++i) {
                const double v = v_lo + (v_hi - v_lo) * i / grid;
                const double x2 = (f - v * v) / (d - 1.0);
                const double y2 =
                    (1.0 - 2.0 * f + v * v) / ((d - 1.0) * (d - 1.0));
                if (x2 < 0.0 || y2 < 0.0) continue;
                ClonerParams p;
                p.dim = d;
                p.kind = ClonerKind::TwoBases;
                p.v = v;
                p.x = std::sqrt(x2);
                p.y = std::sqrt(y2);
                const ClonerParams e = eve_params(p);
                best = std::max(best,
                                e.v * e.v + (d - 1.0) * e.x * e.x);
            }
            worst = std::max(worst, best - closed);
        }
    }
    return std::max(worst, 0.0);
}

}  // namespace

std::vector<VerifyCheck> run_verification(int d_max) {
    if (d_max < 2 || d_max > 8) {
        throw std::invalid_argument("d_max must be in [2, 8], got " +
                                    std::to_string(d_max));
    }
    SplitMix64 rng(0x5EEDF00Du);
    std::vector<VerifyCheck> checks;
    const auto add = [&](std::string name, double residual, double tol) {
        checks.push_back(
            {std::move(name), residual, tol, residual <= tol});
    };
    add("mub_overlap", check_mub_overlap(d_max), 1e-12);
    add("error_op_group", check_error_op_group(d_max), 1e-12);
    add("bell_orthonormal", check_bell_orthonormal(d_max), 1e-12);
    add("bell_maximally_mixed", check_bell_maximally_mixed(d_max), 1e-9);
    add("cloner_normalization", check_cloner_normalization(d_max, rng), 1e-12);
    add("fourier_dual_matches_eve_params",
        check_fourier_dual_matches_eve_params(d_max, rng), 1e-12);
    add("fourier_dual_involution", check_fourier_dual_involution(d_max, rng),
        1e-12);
    add("bob_mixture_from_state", check_bob_mixture(d_max, rng), 1e-12);
    add("oracle_fidelity_agreement", check_oracle_fidelities(d_max, rng),
        1e-12);
    add("symmetric_shift_errors", check_symmetric_errors(d_max, rng), 1e-12);
    add("eve_conditional_overlaps",
        check_eve_conditional_overlaps(d_max, rng), 1e-9);
    add("srm_matches_two_basis_info",
        check_srm_matches_closed_form(d_max, rng), 1e-9);
    add("all_bases_distribution", check_all_bases_distribution(d_max, rng),
        1e-9);
    add("crossing_closed_vs_bisection", check_crossing_routes(d_max), 1e-9);
    add("two_basis_grid_optimality", check_grid_optimality(d_max), 1e-6);
    return checks;
}

}  // namespace qkd
