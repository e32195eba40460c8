// Command-line front end: threshold table reproduction, single-threshold
// queries, information-curve scans, protocol simulation, and the
// oracle-vs-closed-form verification battery.
//
// stdout carries data (JSON or CSV), stderr carries diagnostics.
// Exit codes: 0 success, 1 verification/solver failure, 2 usage error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qkd {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qkd
