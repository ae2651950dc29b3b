#include "ergokit/permopt.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include "ergokit/rng.hpp"

namespace ergokit {

namespace {

// eps_C(p, t0, q) with per-level and per-slot phase factors precomputed;
// O(d) complex work per permutation.
struct EpsEvaluator {
    std::vector<std::complex<double>> slot;   // exp(+i p 2 pi n / d)
    std::vector<std::complex<double>> level;  // exp(-i p E_j t0)
    double d;

    EpsEvaluator(const Spectrum& s, double t0, long long p) {
        const int n = s.d();
        d = static_cast<double>(n);
        slot.resize(n);
        level.resize(n);
        for (int i = 0; i < n; ++i) {
            slot[i] = std::polar(1.0, static_cast<double>(p) * 2.0 * M_PI *
                                          static_cast<double>(i) / d);
            level[i] = std::polar(1.0, -static_cast<double>(p) * s.levels[i] * t0);
        }
    }

    double operator()(const std::vector<int>& q) const {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t n = 0; n < q.size(); ++n) acc += slot[n] * level[q[n]];
        const double z = std::abs(acc) / d;
        return 1.0 - z * z;
    }
};

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

PermutationSearchResult exhaustive_optimal_q(const Spectrum& s, double t0,
                                             long long p, int d_max) {
    const int d = s.d();
    if (d > d_max)
        throw std::invalid_argument(
            "exhaustive_optimal_q: d exceeds d_max (factorial cost); raise "
            "d_max explicitly to force the search");
    if (d < 1) throw std::invalid_argument("exhaustive_optimal_q: empty spectrum");

    const EpsEvaluator eps(s, t0, p);
    PermutationSearchResult res;
    res.sorted_eps = eps(sorting_permutation(s));
    res.n_evaluated = factorial(d);

    // one block per leading element, each enumerated in lexicographic order;
    // the min-reduction breaks ties toward the lower lexicographic rank
    std::vector<double> block_best(d);
    std::vector<std::vector<int>> block_perm(d);
#pragma omp parallel for schedule(static)
    for (int lead = 0; lead < d; ++lead) {
        std::vector<int> tail;
        for (int i = 0; i < d; ++i)
            if (i != lead) tail.push_back(i);
        std::vector<int> q(d);
        q[0] = lead;
        double best = 2.0;
        std::vector<int> best_q;
        do {
            std::copy(tail.begin(), tail.end(), q.begin() + 1);
            const double e = eps(q);
            if (e < best) {
                best = e;
                best_q = q;
            }
        } while (std::next_permutation(tail.begin(), tail.end()));
        block_best[lead] = best;
        block_perm[lead] = best_q;
    }

    res.best_eps = 2.0;
    for (int lead = 0; lead < d; ++lead) {
        if (block_best[lead] < res.best_eps) {
            res.best_eps = block_best[lead];
            res.best_q = block_perm[lead];
        }
    }

    // second sweep counts near-ties with the optimum
    long long ties = 0;
    std::vector<int> q(d);
    std::iota(q.begin(), q.end(), 0);
    do {
        if (std::abs(eps(q) - res.best_eps) <= 1e-12) ++ties;
    } while (std::next_permutation(q.begin(), q.end()));
    res.ties = ties;
    return res;
}

SmallPermCheck small_permutation_variance_check(const Spectrum& s, double t0,
                                                int trials,
                                                std::uint64_t seed) {
    const int d = s.d();
    if (d < 2)
        throw std::invalid_argument("small_permutation_variance_check: d >= 2");

    const auto qs = sorting_permutation(s);
    const double scale = t0 * static_cast<double>(d) / (2.0 * M_PI);
    std::vector<double> delta(d);
    for (int n = 0; n < d; ++n)
        delta[n] = scale * s.levels[qs[n]] - static_cast<double>(n);
    // center so that sum Delta = 0 (additive energy shift)
    double mean = 0.0;
    for (const double v : delta) mean += v;
    mean /= static_cast<double>(d);
    for (double& v : delta) v -= mean;

    double base = 0.0;
    for (const double v : delta) base += v * v;

    Philox rng(seed, 0);
    SmallPermCheck out;
    out.trials = trials;
    out.worst_margin = 1e300;

    const int max_window = std::max(2, d / 2);  // cycle spread stays < d/2
    for (int t = 0; t < trials; ++t) {
        const int w =
            2 + static_cast<int>(rng.u01() * static_cast<double>(max_window - 1));
        const int start =
            static_cast<int>(rng.u01() * static_cast<double>(d - w + 1));
        std::vector<int> pi(d);
        std::iota(pi.begin(), pi.end(), 0);
        for (int i = w - 1; i > 0; --i) {  // Fisher-Yates within the window
            const int j = static_cast<int>(rng.u01() * (i + 1));
            std::swap(pi[start + i], pi[start + j]);
        }
        double ssq = 0.0;
        for (int n = 0; n < d; ++n) {
            const double dn =
                delta[pi[n]] + static_cast<double>(pi[n]) - static_cast<double>(n);
            ssq += dn * dn;
        }
        const double margin = ssq - base;
        out.worst_margin = std::min(out.worst_margin, margin);
        if (margin < -1e-9) {
            out.ok = false;
            ++out.violations;
        }
    }
    if (trials == 0) out.worst_margin = 0.0;
    return out;
}

VarianceTargets variance_vs_targets(const Spectrum& s,
                                    const CyclicConfig& cfg) {
    const auto delta = mode_fluctuations(s, cfg);
    const double d = static_cast<double>(delta.size());
    double mean = 0.0;
    for (const double v : delta) mean += v;
    mean /= d;
    double var = 0.0;
    for (const double v : delta) var += (v - mean) * (v - mean);
    var /= d;

    VarianceTargets out;
    out.sigma2 = var;
    const double ln_d = std::log(d);
    out.alpha = std::sqrt(4.0 * M_PI * M_PI * var / ln_d);
    out.beta = out.alpha > 0.0 ? 4.0 / (out.alpha * out.alpha)
                               : std::numeric_limits<double>::infinity();
    return out;
}

}  // namespace ergokit
