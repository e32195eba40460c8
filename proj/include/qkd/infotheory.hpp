// Mutual-information curves for the legitimate receiver and the
// eavesdropper under both protocols, the one-way secret-key-rate lower
// bound, and the entropic uncertainty bound on I_AB + I_AE.

#pragma once

#include <optional>

#include <Eigen/Dense>

namespace qkd {

enum class Protocol {
    TwoBases,  // computational + Fourier-dual; sift yield 1/2
    AllBases,  // all d+1 mutually unbiased bases; sift yield 1/(d+1)
};

// Mutual information (bits per sifted symbol) of a uniform d-ary input sent
// through a symmetric channel: correct with probability F, each of the d-1
// errors with probability (1-F)/(d-1):
//   log2(d) + F log2(F) + (1-F) log2((1-F)/(d-1)),   0 log 0 := 0.
double info_symmetric(int dim, double fidelity);

// Eavesdropper information against the two-basis protocol with the optimal
// two-basis machine: info_symmetric evaluated at her fidelity F_E(F).
double eve_info_two_bases(int dim, double fidelity);

// Eavesdropper information against the (d+1)-basis protocol with the
// universal machine, averaged over the receiver's error:
//   log2(d) + (F+F_E-1) log2((F+F_E-1)/F) + (1-F_E) log2((1-F_E)/((d-1)F)).
double eve_info_all_bases(int dim, double fidelity);

// One-way secret-key-rate lower bound: max(I_AB - I_AE, I_AB - I_BE);
// without I_BE it is I_AB - I_AE.  May be negative.
double ck_rate_lower(double info_ab, double info_ae,
                     std::optional<double> info_be = std::nullopt);

// Entropic bound on I_AB + I_AE given the largest overlap between the two
// measured bases: 2 log2(d * overlap_max).  Complementary observables
// (overlap 1/sqrt(d)) give log2(d).
double hall_bound(int dim, double overlap_max);

// One sample on the information-vs-disturbance curves.
struct InfoPoint {
    int dim = 0;
    Protocol protocol = Protocol::TwoBases;
    double fidelity = 0.0;     // F
    double disturbance = 0.0;  // D = 1 - F
    double info_ab = 0.0;      // bits per sifted symbol
    double info_ae = 0.0;
    double rate_lower = 0.0;   // info_ab - info_ae
};

// I(A;B) in bits of a finite joint table (rows = A, columns = B).
double mutual_information_bits(const Eigen::MatrixXd& joint);

// Fraction of transmissions surviving sifting: 1/2 or 1/(d+1).
double sift_yield(int dim, Protocol protocol);

const char* protocol_name(Protocol protocol);

}  // namespace qkd
