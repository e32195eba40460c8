// Oracle-vs-closed-form verification battery: every identity the library
// promises, checked by brute force up to a dimension cap, reporting the
// worst residual per check.

#pragma once

#include <string>
#include <vector>

namespace qkd {

struct VerifyCheck {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Runs all checks for 2 <= d <= d_max (d_max in [2, 8]).
std::vector<VerifyCheck> run_verification(int d_max);

}  // namespace qkd
