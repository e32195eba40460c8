// Brute-force ground truth: explicit state-vector construction of the
// cloning attack on registers (B, E, E'), density-matrix reductions,
// measurement simulation (partial Bell measurement, square-root
// measurement), and exact joint outcome distributions.
//
// Intended for d <= 8 (state vectors of d^3 amplitudes); everything here is
// cross-checked against the closed forms in cloner/infotheory.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qkd/cloner.hpp"
#include "qkd/hilbert.hpp"

namespace qkd {

// Pure state over (B, E, E') after cloning one input qudit.
// Amplitude index: (b * dim + e) * dim + ep.
struct JointState {
    int dim = 0;
    Eigen::VectorXcd amplitudes;

    int index(int b, int e, int ep) const { return (b * dim + e) * dim + ep; }
};

// Apply the cloning transformation to |psi>:
//   sum_{m,n} a_{m,n} (U_{m,n}|psi>)_B |B_{m,-n}>_{EE'}.
JointState clone_state(const ClonerParams& p, const Ket& psi);

// Reduced density matrices.
Eigen::MatrixXcd reduced_bob(const JointState& s);
Eigen::MatrixXcd reduced_eve(const JointState& s);

enum class MeasureBasis { Computational, FourierDual };

// Distribution of the receiver's error index: shift errors m in the
// computational basis (row sums of |a|^2), phase errors n in the dual basis
// (column sums).  Entry 0 is the no-error probability F.
Eigen::VectorXd bob_error_distribution(const ClonerParams& p,
                                       MeasureBasis basis);

// Eve's post-measurement pure states on (E, E') after a partial Bell
// measurement yielding shift outcome m, one state per sender symbol k,
// together with their Gram matrix.  Requires optimal two-basis parameters;
// the pairwise overlaps all equal (dF-1)/(d-1).
struct ConditionalStates {
    int shift = 0;
    std::vector<Eigen::VectorXcd> states;  // d states of dimension d^2
    Eigen::MatrixXcd overlaps;             // Gram matrix <chi_j|chi_k>
};

ConditionalStates eve_conditional_states_two_bases(const ClonerParams& p,
                                                   int shift);

// Mutual information (bits) extracted by the square-root measurement on a
// symmetric set of pure states with uniform priors.  Throws if the set is
// not symmetric (pairwise-equal real overlaps).
double srm_mutual_information(const std::vector<Eigen::VectorXcd>& states);

// Exact probability table p(a, b, e): sender symbol a, receiver outcome b,
// eavesdropper outcome e (her E register; the E' outcome is redundant given
// a and b).  Entries nonnegative, summing to 1.
struct JointDistribution {
    int dim = 0;
    std::vector<double> p;

    double prob(int a, int b, int e) const { return p[(a * dim + b) * dim + e]; }
};

// Distribution produced by the universal machine at Bob fidelity F against
// the (d+1)-basis protocol, with every register measured in the disclosed
// basis; built from clone_state amplitudes.
JointDistribution all_bases_joint_distribution(int dim, double fidelity);

// I(A;E | M) in bits, conditioning on the receiver's error m = (b-a) mod d.
double eve_info_from_distribution(const JointDistribution& dist);

// P(e == a | b == a) and P(e == a | b != a).
double prob_eve_correct_given_no_error(const JointDistribution& dist);
double prob_eve_correct_given_error(const JointDistribution& dist);

}  // namespace qkd
