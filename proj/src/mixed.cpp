#include "ergokit/mixed.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "ergokit/rng.hpp"

namespace ergokit {

namespace {

CMat random_unitary_matrix(int d, Philox& rng) {
    CMat A(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) A(i, j) = rng.complex_normal();
    Eigen::HouseholderQR<CMat> qr(A);
    CMat Q = qr.householderQ() * CMat::Identity(d, d);
    // fix the diagonal phases so the distribution is exactly Haar
    const CMat R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        const std::complex<double> r = R(j, j);
        const double a = std::abs(r);
        if (a > 0.0) Q.col(j) *= r / a;
    }
    return Q;
}

}  // namespace

SubspacePartition random_partition(int d, int n, std::uint64_t seed) {
    if (d < 1 || n < 1 || n > d)
        throw std::invalid_argument("random_partition: need 1 <= n <= d");
    const int block = (d + n - 1) / n;  // ceil(d/n)
    const int d_n = n * block;

    Philox rng(seed, 1);
    const CMat V = random_unitary_matrix(d, rng);

    SubspacePartition part;
    part.d = d;
    part.n = n;
    part.d_n = d_n;

    // physical columns of a random unitary are dealt to the blocks in order;
    // the d_n - d padding coordinates fill the trailing blocks, one each
    const int pad = d_n - d;
    int next_col = 0;
    int next_pad = 0;
    for (int k = 0; k < n; ++k) {
        const bool padded = k >= n - pad;
        const int phys = block - (padded ? 1 : 0);
        CMat B = CMat::Zero(d_n, block);
        for (int j = 0; j < phys; ++j) B.block(0, j, d, 1) = V.col(next_col++);
        if (padded) B(d + next_pad++, block - 1) = 1.0;
        part.bases.push_back(std::move(B));
    }
    return part;
}

UnitaryEig random_unitary_eig(int d, std::uint64_t seed) {
    Philox rng(seed, 2);
    UnitaryEig u;
    u.phases.resize(d);
    for (int i = 0; i < d; ++i) u.phases[i] = 2.0 * M_PI * rng.u01();
    u.vectors = random_unitary_matrix(d, rng);
    return u;
}

UnitaryEig unitary_from_spectrum(const Spectrum& s, std::uint64_t seed) {
    Philox rng(seed, 2);
    UnitaryEig u;
    u.phases = s.levels;
    u.vectors = random_unitary_matrix(s.d(), rng);
    return u;
}

CMat evolution_matrix(const UnitaryEig& u, int d_n, double t) {
    const int d = static_cast<int>(u.phases.size());
    if (d_n < d) throw std::invalid_argument("evolution_matrix: d_n < d");
    CMat U = CMat::Identity(d_n, d_n);  // padding directions are stationary
    CMat D = CMat::Zero(d, d);
    for (int i = 0; i < d; ++i) D(i, i) = std::polar(1.0, -u.phases[i] * t);
    U.topLeftCorner(d, d) = u.vectors * D * u.vectors.adjoint();
    return U;
}

std::vector<double> principal_cosines(const CMat& A, const CMat& B) {
    if (A.rows() != B.rows())
        throw std::invalid_argument("principal_cosines: dimension mismatch");
    const auto check_orthonormal = [](const CMat& M, const char* name) {
        const CMat G = M.adjoint() * M;
        const double dev =
            (G - CMat::Identity(M.cols(), M.cols())).cwiseAbs().maxCoeff();
        if (dev > 1e-8)
            throw std::invalid_argument(std::string("principal_cosines: ") +
                                        name + " is not orthonormal");
    };
    check_orthonormal(A, "A");
    check_orthonormal(B, "B");

    const CMat M = B.adjoint() * A;
    Eigen::JacobiSVD<CMat> svd(M);
    std::vector<double> sv(svd.singularValues().data(),
                           svd.singularValues().data() +
                               svd.singularValues().size());
    for (double& v : sv) v = std::min(v, 1.0);
    return sv;  // Eigen returns them descending
}

std::vector<double> mixed_persistence(const CMat& U,
                                      const SubspacePartition& part) {
    if (U.rows() != part.d_n || U.cols() != part.d_n)
        throw std::invalid_argument("mixed_persistence: dimension mismatch");
    const double d_n = static_cast<double>(part.d_n);

    std::vector<double> Z(part.n);
    for (int k = 0; k < part.n; ++k) {
        const CMat& A = part.bases[k];
        const CMat& B = part.bases[(k + 1) % part.n];
        // Tr[U Pi_k U^dag Pi_{k+1}] through the cross-Gram matrix
        const CMat M = B.adjoint() * (U * A);
        const double overlap = M.squaredNorm();
        // rho = (n/d_n) Pi, so (d_n/n^2) Tr[U rho U^dag rho'] = overlap/d_n
        Z[k] = overlap / d_n;
    }
    return Z;
}

double pure_from_mixed_bound(double P) {
    if (P < 0.0)
        throw std::invalid_argument("pure_from_mixed_bound: P must be >= 0");
    const double fl = std::floor(P);
    return fl + std::sqrt(std::max(0.0, P - fl));
}

MixedTheoremReport verify_mixed_theorem(const CMat& U,
                                        const SubspacePartition& part) {
    if (U.rows() != part.d_n || U.cols() != part.d_n)
        throw std::invalid_argument("verify_mixed_theorem: dimension mismatch");
    MixedTheoremReport rep;
    double bound_sum = 0.0;
    for (int k = 0; k < part.n; ++k) {
        const CMat UA = U * part.bases[k];
        const CMat& B = part.bases[(k + 1) % part.n];
        const auto sv = principal_cosines(UA, B);
        MixedTheoremReport::Pair pr;
        pr.P = 0.0;
        pr.R = 0.0;
        for (const double v : sv) {
            pr.P += v * v;
            pr.R += v;
        }
        pr.bound = pure_from_mixed_bound(pr.P);
        pr.margin = pr.R - pr.bound;
        if (pr.margin < -1e-9) ++rep.violations;
        bound_sum += pr.bound;
        rep.pairs.push_back(pr);
    }
    rep.mean_guaranteed = bound_sum / static_cast<double>(part.d);
    return rep;
}

std::vector<double> mixed_persistence(const UnitaryEig& u,
                                      const SubspacePartition& part,
                                      double t_m) {
    if (static_cast<int>(u.phases.size()) != part.d)
        throw std::invalid_argument("mixed_persistence: dimension mismatch");
    return mixed_persistence(evolution_matrix(u, part.d_n, t_m), part);
}

MixedTheoremReport verify_mixed_theorem(const UnitaryEig& u,
                                        const SubspacePartition& part,
                                        double t_m) {
    return verify_mixed_theorem(evolution_matrix(u, part.d_n, t_m), part);
}

}  // namespace ergokit
