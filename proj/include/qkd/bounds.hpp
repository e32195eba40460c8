// Disturbance thresholds: the fidelity where the eavesdropper's information
// catches up with the receiver's (per protocol), and the entropic bound
// guaranteeing a positive key rate against joint attacks.

#pragma once

#include <vector>

#include "qkd/infotheory.hpp"

namespace qkd {

enum class BoundKind {
    IndTwoBases,  // I_AB = I_AE crossing, two-basis protocol
    IndAllBases,  // I_AB = I_AE crossing, (d+1)-basis protocol
    Coherent,     // I_AB = log2(d)/2, from the entropic uncertainty bound
};

struct ThresholdResult {
    int dim = 0;
    BoundKind kind = BoundKind::IndTwoBases;
    double disturbance = 0.0;  // D*
    double fidelity = 0.0;     // 1 - D*
    double residual = 0.0;     // |equation residual| at the returned root
};

// D* = (1 - 1/sqrt(d))/2 in closed form, cross-checked against bisection of
// I_AB(F) - I_AE(F); throws if the two routes disagree beyond 1e-9.
ThresholdResult threshold_two_bases(int dim, double f_tol = 1e-13);

// Root of info_symmetric(d,F) = eve_info_all_bases(d,F), found by a
// descending coarse scan from F = 1 followed by bisection.
ThresholdResult threshold_all_bases(int dim, double f_tol = 1e-13);

// High-fidelity root of
//   F log2(1/F) + (1-F) log2((d-1)/(1-F)) = log2(d)/2,
// i.e. the largest D with I_AB > log2(d)/2 below it.
ThresholdResult threshold_coherent(int dim, double f_tol = 1e-13);

ThresholdResult threshold(int dim, BoundKind kind, double f_tol = 1e-13);

// Evenly spaced F grid with I_AB, I_AE and the rate lower bound per point.
std::vector<InfoPoint> scan_curves(int dim, Protocol protocol, double f_min,
                                   double f_max, int steps);

const char* bound_kind_name(BoundKind kind);  // "ind2" | "indD1" | "coh"

}  // namespace qkd
