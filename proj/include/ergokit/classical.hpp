#pragma once

#include <cstdint>
#include <vector>

#include "ergokit/spectrum.hpp"

namespace ergokit {

// Finite disjoint union of half-open arcs on the unit circle, coordinates
// normalized to [0,1). Arcs are kept canonical: sorted, merged, split at
// the wrap point, endpoints merged at 1e-12 tolerance.
class ArcSet {
public:
    ArcSet() = default;

    // Arc from a to b going forward (mod 1); a == b gives the empty set,
    // full = true gives the whole circle.
    static ArcSet interval(double a, double b);
    static ArcSet circle();

    double measure() const;
    bool empty() const { return arcs_.empty(); }

    ArcSet unite(const ArcSet& other) const;
    ArcSet intersect(const ArcSet& other) const;
    ArcSet symdiff(const ArcSet& other) const;
    ArcSet complement() const;
    ArcSet rotate(double theta) const;  // measure preserving

    const std::vector<std::pair<double, double>>& arcs() const {
        return arcs_;
    }

    static constexpr double kTol = 1e-12;

private:
    void normalize();
    std::vector<std::pair<double, double>> arcs_;  // disjoint [a,b) in [0,1)
};

struct Rational {
    long long p = 0;
    long long q = 1;
};

// Continued-fraction convergents p/q of alpha, at most k_max of them;
// terminates early on exact rationals. Each satisfies |alpha - p/q| < 1/q^2.
std::vector<Rational> convergents(double alpha, int k_max);

struct RotationPermutation {
    long long q = 1;            // number of cells
    Rational convergent;        // p/q used for the cycling order
    std::vector<ArcSet> cells;  // canonical cyclic order: T C_k ~ C_{k+1}
    double alpha = 0.0;         // rotation per step (mod 1)
    double epsbar = 0.0;        // (1/2) sum_k mu[(T C_k) symdiff C_{k+1}]
    bool convergent_matched = true;  // false if q matched no convergent
};

// Partition of the circle into q equal arcs, relabeled along the cycle
// k -> k + p (mod q) of the convergent p/q, with the exact classical error
// of approximating rotation by alpha.
RotationPermutation rotation_cyclic_permutation(double alpha, long long q);

struct TorusPermutation {
    long long n_x = 1;
    long long n_y = 1;
    long long n = 1;  // n_x * n_y cells
    Rational convergent;
    double epsbar = 0.0;      // error at t_m = T_x / n_x
    double epsbar_rot = 0.0;  // underlying rotation error (epsbar * n_x)
};

// Product construction on the 2-torus: n_x exact strips in the flow
// direction crossed with the q-cell rotation permutation transverse to it.
TorusPermutation torus_cyclic_permutation(double alpha, long long n_x,
                                          long long q);

struct ClassicalErrorReport {
    double epsbar = 0.0;
    std::vector<double> step_symdiff;  // mu[(T C_k) symdiff C_{k+1}] per k
    // drift[l-1][k] = mu[(T^l C_k) symdiff C_{k+l}]
    std::vector<std::vector<double>> drift;
};

// Error of a user partition under rotation by `angle` per step, plus the
// multi-step drifts used by the cascade inequality. The partition must
// cover the circle to 1e-9.
ClassicalErrorReport classical_error(const std::vector<ArcSet>& partition,
                                     double angle, int steps);

}  // namespace ergokit
