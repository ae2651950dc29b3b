#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "ergokit/spectrum.hpp"

namespace ergokit {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Orthogonal split of a d-dimensional space into n blocks of nearly equal
// size, embedded in a padded space of dimension d_n = n*ceil(d/n). Padding
// directions are held fixed by the evolution operator.
struct SubspacePartition {
    int d = 0;
    int n = 1;
    int d_n = 0;
    std::vector<CMat> bases;  // each d_n x (d_n/n), orthonormal columns
};

// Blocks are spanned by the columns of a random unitary over the first d
// coordinates; padding (if any) fills the remaining d_n - d coordinates,
// distributed one per block from the end.
SubspacePartition random_partition(int d, int n, std::uint64_t seed);

// Evolution operator given by eigenphases and an eigenvector matrix over
// the d physical coordinates; acts as the identity on padding directions.
struct UnitaryEig {
    std::vector<double> phases;  // eigenvalues exp(-i phase t)
    CMat vectors;                // d x d unitary of eigenvectors
};

UnitaryEig random_unitary_eig(int d, std::uint64_t seed);
UnitaryEig unitary_from_spectrum(const Spectrum& s, std::uint64_t seed);

// Dense matrix of U(t) on the padded space (identity on padding).
CMat evolution_matrix(const UnitaryEig& u, int d_n, double t);

// Singular values of B^dagger A, descending; requires both inputs
// orthonormal to 1e-8 (Gram deviation), else throws.
std::vector<double> principal_cosines(const CMat& A, const CMat& B);

// Z_k(1, t_m) = (d_n / n^2) Tr[U rho_k U^dagger rho_{k+1}] for each block,
// rho_k the unit-trace projector onto block k. The dense overload takes any
// unitary on the padded space that keeps padding directions fixed.
std::vector<double> mixed_persistence(const CMat& U,
                                      const SubspacePartition& part);
std::vector<double> mixed_persistence(const UnitaryEig& u,
                                      const SubspacePartition& part,
                                      double t_m);

// floor(P) + sqrt(P - floor(P)).
double pure_from_mixed_bound(double P);

struct MixedTheoremReport {
    struct Pair {
        double P = 0.0;       // Tr[Pi_k(t_m) Pi_{k+1}]
        double R = 0.0;       // sum of principal cosines
        double bound = 0.0;   // floor(P) + sqrt(frac(P))
        double margin = 0.0;  // R - bound
    };
    std::vector<Pair> pairs;
    int violations = 0;             // pairs with margin < -1e-9
    double mean_guaranteed = 0.0;   // (1/d) sum_k bound_k
};

MixedTheoremReport verify_mixed_theorem(const CMat& U,
                                        const SubspacePartition& part);
MixedTheoremReport verify_mixed_theorem(const UnitaryEig& u,
                                        const SubspacePartition& part,
                                        double t_m);

}  // namespace ergokit
