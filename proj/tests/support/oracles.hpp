#pragma once

// Test-only oracles, independent of the library implementation paths they
// check: dense matrix products for persistence amplitudes, closed-form
// reference CDFs, and a one-sample Kolmogorov-Smirnov test.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "ergokit/cyclic.hpp"
#include "ergokit/spectrum.hpp"

namespace oracles {

using CMat = Eigen::MatrixXcd;

// Cycling operator of the Fourier basis built from the q-ordered levels,
// as a dense matrix in the energy basis.
inline CMat dense_cycling_operator(const ergokit::Spectrum& s,
                                   const std::vector<int>& q) {
    const int d = s.d();
    CMat F(d, d);  // F(n,k) = <E_{q(n)}|C_k>
    for (int n = 0; n < d; ++n)
        for (int k = 0; k < d; ++k)
            F(n, k) = std::polar(1.0 / std::sqrt(static_cast<double>(d)),
                                 -2.0 * M_PI * n * k / static_cast<double>(d));
    CMat S = CMat::Zero(d, d);  // |C_k> -> |C_{k+1}>
    for (int k = 0; k < d; ++k) S((k + 1) % d, k) = 1.0;
    return F * S * F.adjoint();
}

inline CMat dense_evolution(const ergokit::Spectrum& s,
                            const std::vector<int>& q, double t) {
    const int d = s.d();
    CMat U = CMat::Zero(d, d);
    for (int n = 0; n < d; ++n)
        U(n, n) = std::polar(1.0, -s.levels[q[n]] * t);
    return U;
}

// z(p) = |Tr[U_H(p t0) U_C^{-p}]| / d via explicit matrix powers.
inline double dense_persistence(const ergokit::Spectrum& s,
                                const ergokit::CyclicConfig& cfg,
                                long long p) {
    const int d = s.d();
    const CMat Uc = dense_cycling_operator(s, cfg.q);
    const CMat UcDag = Uc.adjoint();
    CMat M = CMat::Identity(d, d);
    for (long long i = 0; i < std::llabs(p); ++i)
        M = (p > 0 ? UcDag : Uc) * M;
    const CMat Uh =
        dense_evolution(s, cfg.q, static_cast<double>(p) * cfg.t0);
    return std::abs((Uh * M).trace()) / static_cast<double>(d);
}

// Per-slot persistence amplitudes z_k(p) for an arbitrary orthonormal basis
// given as matrix columns; used by the step-bound recurrence check.
inline std::vector<double> basis_persistence(const CMat& basis, const CMat& U,
                                             long long p) {
    const int d = static_cast<int>(basis.cols());
    CMat Up = CMat::Identity(d, d);
    for (long long i = 0; i < p; ++i) Up = U * Up;
    std::vector<double> z(d);
    for (int k = 0; k < d; ++k) {
        const int kp = static_cast<int>((k + p) % d);
        z[k] = std::abs(
            (basis.col(kp).adjoint() * Up * basis.col(k)).value());
    }
    return z;
}

// One-sample KS statistic for samples against a CDF.
inline double ks_statistic(std::vector<double> samples,
                           const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double F = cdf(samples[i]);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        worst = std::max({worst, std::abs(F - lo), std::abs(F - hi)});
    }
    return worst;
}

// Critical value at significance 0.01 (Stephens' approximation).
inline double ks_critical_001(std::size_t n) {
    const double rn = std::sqrt(static_cast<double>(n));
    return 1.6276 / (rn + 0.12 + 0.11 / rn);
}

inline double mean(const std::vector<double>& v) {
    double m = 0.0;
    for (const double x : v) m += x;
    return m / static_cast<double>(v.size());
}

// Welford's algorithm; cross-checks the library's two-pass variance.
inline double variance_welford(const std::vector<double>& v) {
    double m = 0.0, m2 = 0.0;
    long long n = 0;
    for (const double x : v) {
        ++n;
        const double dx = x - m;
        m += dx / static_cast<double>(n);
        m2 += dx * (x - m);
    }
    return m2 / static_cast<double>(n);
}

}  // namespace oracles
