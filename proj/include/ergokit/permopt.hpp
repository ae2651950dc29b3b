#pragma once

#include <cstdint>
#include <vector>

#include "ergokit/cyclic.hpp"
#include "ergokit/spectrum.hpp"

namespace ergokit {

struct PermutationSearchResult {
    std::vector<int> best_q;
    double best_eps = 0.0;
    double sorted_eps = 0.0;
    long long n_evaluated = 0;
    long long ties = 0;  // permutations within 1e-12 of the optimum
};

// Evaluates eps_C(p, t0, q) over all d! level permutations in lexicographic
// order; the reported optimum breaks ties by lexicographic rank. Refuses
// d > d_max.
PermutationSearchResult exhaustive_optimal_q(const Spectrum& s, double t0,
                                             long long p, int d_max = 8);

struct SmallPermCheck {
    bool ok = true;
    double worst_margin = 0.0;  // min over trials of var(Delta') - var(Delta)
    long long trials = 0;
    long long violations = 0;
};

// Draws random permutations whose cycles stay within a window of d/2 slots,
// and checks that each one raises the summed squared mode fluctuations of
// the sorted baseline (levels shifted so sum Delta = 0 first).
SmallPermCheck small_permutation_variance_check(const Spectrum& s, double t0,
                                                int trials,
                                                std::uint64_t seed);

struct VarianceTargets {
    double sigma2 = 0.0;
    double alpha = 0.0;  // sqrt(4 pi^2 sigma2 / ln d)
    double beta = 0.0;   // 4 / alpha^2
};

VarianceTargets variance_vs_targets(const Spectrum& s,
                                    const CyclicConfig& cfg);

}  // namespace ergokit
