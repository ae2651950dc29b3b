#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ergokit/spectrum.hpp"

namespace ergokit {

// Step time plus a level permutation; fully determines the cyclic basis
// built from discrete Fourier transforms of the eigenstates. q[n] is the
// index of the level assigned to slot n.
struct CyclicConfig {
    double t0 = 1.0;
    std::vector<int> q;
};

// Natural step time 2*pi*Omega/d with Omega = (d-1)/(E_max - E_min).
double heisenberg_t0(const Spectrum& s);

// Stable ascending-sort permutation of the levels (ties keep input order).
std::vector<int> sorting_permutation(const Spectrum& s);

CyclicConfig sorted_config(const Spectrum& s);                // t0 = heisenberg
CyclicConfig sorted_config(const Spectrum& s, double t0);     // explicit t0
void validate_config(const Spectrum& s, const CyclicConfig& cfg);

// Delta_n = (t0 d / 2pi) E_{q(n)} - n, without unfolding.
std::vector<double> mode_fluctuations(const Spectrum& s,
                                      const CyclicConfig& cfg);

// phi_n = 2 pi n / d - E_{q(n)} t0; the one-step eigenphases of the error
// unitary whose powers give every persistence amplitude.
std::vector<double> cycle_phases(const Spectrum& s, const CyclicConfig& cfg);

struct PersistenceSeries {
    std::vector<long long> p_values;
    std::vector<double> z;    // persistence amplitude in [0,1]
    std::vector<double> eps;  // 1 - z^2
};

PersistenceSeries persistence(const Spectrum& s, const CyclicConfig& cfg,
                              const std::vector<long long>& p_values);

// Spectral form factor K(t) = |(1/d) sum_n exp(-i E_n t)|^2.
std::vector<double> sff(const Spectrum& s, const std::vector<double>& t_values);

// eps_C(p) = 1 - z(p)^2.
double p_step_error(const Spectrum& s, const CyclicConfig& cfg, long long p);

// One-step bound on the persistence probability:
// cos^2(p sqrt(eps1)) while |p| < pi / sqrt(4 eps1), zero beyond.
double persistence_lower_bound(double eps1, double p);

// Interval recursion for theta(p) = arccos z(p) from the per-step angles
// theta1[k] = arccos z_k(1), starting at slot k = 0:
//   theta(p+1) in [ |theta(p) - a|, min(theta(p) + a, pi/2) ],
// with a = theta1[(k0 + p) mod d]. Valid for any cyclic permutation.
struct AngleInterval {
    double lo = 0.0;
    double hi = 0.0;
};
AngleInterval step_bound_recurrence(const std::vector<double>& theta1,
                                    long long p);

struct ClassifyThresholds {
    double c_e = 10.0;  // ergodicity floor multiple of 1/d
    double c_a = 10.0;  // aperiodicity ceiling multiple of 1/d
    double c_r = 10.0;  // randomization crossing multiple of 1/d
    double window = 2.0;  // aperiodicity window extends to window*d steps
};

struct ErgodicityReport {
    bool ergodic = false;
    bool aperiodic = false;
    bool quasiperiodic = false;
    std::optional<long long> t_R;  // first step with z^2 <= c_r/d, if any
    double sigma2 = 0.0;           // sample variance of the mode fluctuations
    double eps1 = 0.0;
    ClassifyThresholds thresholds;
    bool ergodicity_bound_sufficient = false;   // eps1 <= pi^2/d^2
    bool aperiodicity_bound_necessary = false;  // eps1 >= pi^2/(4 d^2)
    double min_z2_ergodic_window = 0.0;  // min of z^2 over 0 < p <= ceil(d/2)
    std::vector<double> z2;              // z^2 over p = 0..window*d
};

ErgodicityReport classify(const Spectrum& s, const CyclicConfig& cfg,
                          const ClassifyThresholds& th = {});

// First p in [1, span] with z^2(p) <= c_r/d, if any.
std::optional<long long> randomization_step(const std::vector<double>& z2,
                                            int d, double c_r);

struct SpacingHistogram {
    std::vector<double> edges;    // bins+1 edges on [0, s_max]
    std::vector<double> density;  // unit-mean-normalized spacing density
    // surmise overlays evaluated at bin centers
    std::vector<double> goe, gue, gse, poisson;
    std::vector<double> spacings;  // the normalized spacings themselves
};

// Nearest-neighbor spacings normalized to unit mean. Floquet spectra use
// the d circular spacings (including the wrap-around gap), Hamiltonian
// spectra the d-1 linear ones.
SpacingHistogram spacing_histogram(const Spectrum& s, int bins,
                                   double s_max = 4.0);

// Wigner surmise densities and CDFs, unit mean spacing.
double wigner_surmise_pdf(int beta, double s);
double wigner_surmise_cdf(int beta, double s);

// Polar representation of the trajectory: theta = 2 pi p / d,
// r = g(z(p))/g(1) with g(x) = 1 + tanh(ln(x^2 d / 2)/6); x^2 is floored
// at 1e-300 before the logarithm.
std::vector<std::pair<double, double>> polar_trajectory(const Spectrum& s,
                                                        const CyclicConfig& cfg,
                                                        long long p_max);

}  // namespace ergokit
