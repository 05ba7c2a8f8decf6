#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ecsum/curve.hpp"

namespace ecsum {

// Outcome of one randomized property suite. Trials are independently seeded
// from (seed, trial index), so any failure note can be replayed.
struct SuiteResult {
    std::string name;
    uint64_t seed = 0;
    uint64_t trials = 0;
    uint64_t checks = 0;
    uint64_t failures = 0;
    std::map<std::string, uint64_t> counters;
    std::vector<std::string> failure_notes;  // first few only

    bool passed() const { return failures == 0; }

    void count(const std::string& key, uint64_t by = 1) { counters[key] += by; }
    void check(bool ok, uint64_t trial, const std::string& what);
};

// Associativity of the addition law on random triples, with the degenerate
// configurations (P2 = P1, P3 = P1, P3 = -P1, P3 = -(P1+P2)) injected every
// few trials; the P3 = -P1 runs also pin (P1+P2)+P3 = P2. Commutativity,
// closure and inverses ride along on every trial.
SuiteResult run_assoc_suite(const Curve& curve, uint64_t trials, uint64_t seed);

// The closed three-point form against the iterated oracle on generic
// triples, plus permutation invariance, the slope-sum identity, the parabola
// incidence of (x4, -y4), and det M = 0. A slice of trials forces P3 = -P1
// and checks alpha + alpha~ = 0.
SuiteResult run_sum3_suite(const Curve& curve, uint64_t trials, uint64_t seed);

// Closed-form n-point sums against the iterated oracle for each
// n in [n_min, n_max], including the n = 3 coefficient bridge and the n = 2
// chord-law degeneration.
SuiteResult run_multisum_suite(const Curve& curve, int n_min, int n_max,
                               uint64_t trials_per_n, uint64_t seed);

// det M = 0 for the true sum, for each n in [n_min, n_max].
SuiteResult run_vanishing_suite(const Curve& curve, int n_min, int n_max,
                                uint64_t trials_per_n, uint64_t seed);

}  // namespace ecsum
