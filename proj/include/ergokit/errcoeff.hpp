#pragma once

#include <complex>
#include <vector>

#include "ergokit/cyclic.hpp"
#include "ergokit/spectrum.hpp"

namespace ergokit {

// Split of the p-th power of the error unitary into a part proportional to
// the identity (weight sqrt(1-eps_p), overall phase phi_delta) and a random
// part expanded over powers of the cycling operator with coefficients nu_m.
struct ErrorDecomposition {
    long long p = 1;
    double eps_p = 0.0;
    double phi_delta = 0.0;
    std::vector<std::complex<double>> nu;  // nu[0] == 0
    bool periodic_only = false;   // eps_p below cutoff; nu undefined
    bool phase_undefined = false; // |c_0| below cutoff; phi_delta set to 0
};

ErrorDecomposition decompose(const Spectrum& s, const CyclicConfig& cfg,
                             long long p);

struct NuConstraintReport {
    double normalization_violation = 0.0;  // |sum |nu_m|^2 - 1|
    double bilinear_violation = 0.0;       // max_m |nu_m + conj(nu_-m) + g_p sum_k conj(nu_k) nu_{k+m}|
};

// Checks both unitarity constraints; throws on periodic-only input.
NuConstraintReport verify_nu_constraints(const ErrorDecomposition& dec);

// Returns (K(p t0) computed from the spectrum, eps_p |nu_{-p mod d}|^2).
// p must not be 0 modulo d.
std::pair<double, double> nu_sff_identity(const Spectrum& s,
                                          const CyclicConfig& cfg,
                                          long long p);

// exp(-(1/2) (eps1/(1-eps1)) p^2 - (1/2) eps1 |p|); requires eps1 in [0,1).
double gaussian_estimate(double eps1, double p);

struct PairingResiduals {
    std::vector<double> residual2;  // |nu~_m(1) - nu~_m(p)|^2 per m
    double mean_residual2 = 0.0;
    double mean_magnitude2 = 0.0;   // mean |nu~_m(1)|^2
    double ratio = 0.0;             // mean_residual2 / mean_magnitude2
};

// Compares the rescaled coefficients nu~_m(p) = nu_m(p) / (p z(p)) against
// nu~_m(1); small residuals indicate the paired-coefficient regime.
PairingResiduals pairing_diagnostic(const Spectrum& s, const CyclicConfig& cfg,
                                    long long p);

// nu_C = -sum_r nu_r nu_{-r}; close to 1 when the coefficients pair up
// antisymmetrically.
std::complex<double> pairing_quality(const ErrorDecomposition& dec);

// Smooth power-law form-factor fit K(t) = lambda t^gamma with sum cutoff
// multiplier M >= 1.
struct SffFit {
    double lambda = 0.0;
    double gamma = 0.0;
    double t0 = 1.0;
    double M = 2.0;
};

// Lower bound on the one-step error implied by the form factor:
//   2 lambda t0^gamma zeta(2-gamma)                       0 <= gamma < 1
//   lambda t0^gamma ln(1/lambda)                          gamma == 1
//   [2 lambda t0^gamma (gamma-1) / M^(gamma-1)]^(2/(gamma+1))   gamma > 1
double min_error_bound(const SffFit& fit);

// zeta(s) for s > 1, Euler-Maclaurin accelerated; zeta(2) special-cased.
double riemann_zeta(double s);

struct RigidityTargets {
    // sigma^2 targets alpha^2 ln d / (4 pi^2) for alpha = 1, sqrt(2), 2,
    // identical pairwise to ln d / (beta pi^2) for beta = 4, 2, 1.
    struct Row {
        double alpha;
        double beta;
        double sigma2;
        double p_R;  // predicted randomization step d sqrt(beta) / 2
    };
    std::vector<Row> rows;
};

RigidityTargets rigidity_targets(int d);

}  // namespace ergokit
