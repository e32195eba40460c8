// Seeded, reproducible Monte Carlo simulation of sifted-key statistics.
// The channel is the stochastic error process of the matching cloner: the
// symbol survives with probability F = 1 - D, otherwise one of the d-1
// equiprobable errors is applied.
//
// Reproducibility contract: every round r consumes an independent
// splitmix64 stream keyed by (seed, r), so the report depends only on
// (config) and never on worker count or chunking.

#pragma once

#include <cstdint>
#include <string>

#include "qkd/infotheory.hpp"

namespace qkd {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // uniform in [0, 1), 53 random bits
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [0, n) for small n
    std::uint32_t below(std::uint32_t n) {
        return static_cast<std::uint32_t>(((next() >> 32) * n) >> 32);
    }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // stream key for one protocol round
    static std::uint64_t round_key(std::uint64_t seed, std::uint64_t round) {
        return mix(seed + 0x9E3779B97F4A7C15ULL * (round + 1));
    }

  private:
    std::uint64_t state_;
};

struct SimConfig {
    int dim = 2;
    Protocol protocol = Protocol::TwoBases;
    double disturbance = 0.0;  // in [0, 1 - 1/d]
    std::uint64_t rounds = 1;
    std::uint64_t seed = 0;
};

struct SimReport {
    SimConfig config;
    std::uint64_t rounds_kept = 0;
    std::uint64_t sifted_errors = 0;
    double sift_fraction = 0.0;   // rounds_kept / rounds
    double sift_expected = 0.0;   // 1/2 or 1/(d+1)
    double sift_std_error = 0.0;  // sqrt(p(1-p)/rounds) at the expected p
    double qber = 0.0;            // sifted_errors / rounds_kept; 0 if none kept
    double qber_expected = 0.0;   // the configured disturbance
    double qber_std_error = 0.0;  // sqrt(D(1-D)/rounds_kept); 0 if none kept
    std::string rng_description;
};

// Run the protocol; `workers` threads split the rounds into contiguous
// ranges.  The report is identical for any worker count.
SimReport run_protocol(const SimConfig& cfg, int workers = 1);

}  // namespace qkd
