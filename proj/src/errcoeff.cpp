#include "ergokit/errcoeff.hpp"

#include <cmath>
#include <stdexcept>

#include "ergokit/kernels.hpp"

namespace ergokit {

namespace {
constexpr double kEpsCutoff = 1e-14;
}

ErrorDecomposition decompose(const Spectrum& s, const CyclicConfig& cfg,
                             long long p) {
    const int d = s.d();
    if (d < 2) throw std::invalid_argument("decompose: need d >= 2");
    const auto phi = cycle_phases(s, cfg);

    // eigenphases of the p-th error-unitary power, then their inverse DFT
    std::vector<double> theta(d);
    for (int n = 0; n < d; ++n) theta[n] = static_cast<double>(p) * phi[n];
    const auto c = kernel::unit_phase_dft(theta);

    ErrorDecomposition dec;
    dec.p = p;
    const double z = std::abs(c[0]);
    dec.eps_p = 1.0 - z * z;
    if (z < kEpsCutoff) {
        dec.phase_undefined = true;
        dec.phi_delta = 0.0;
    } else {
        dec.phi_delta = std::arg(c[0]);
    }

    dec.nu.assign(d, {0.0, 0.0});
    if (dec.eps_p < kEpsCutoff) {
        dec.periodic_only = true;
        dec.eps_p = std::max(dec.eps_p, 0.0);
        return dec;
    }
    const std::complex<double> scale =
        std::sqrt(dec.eps_p) * std::polar(1.0, dec.phi_delta);
    for (int m = 1; m < d; ++m) dec.nu[m] = c[m] / scale;
    return dec;
}

NuConstraintReport verify_nu_constraints(const ErrorDecomposition& dec) {
    if (dec.periodic_only)
        throw std::invalid_argument(
            "verify_nu_constraints: periodic-only decomposition has no nu");
    const int d = static_cast<int>(dec.nu.size());
    NuConstraintReport rep;

    double norm = 0.0;
    for (const auto& v : dec.nu) norm += std::norm(v);
    rep.normalization_violation = std::abs(norm - 1.0);

    const double g_p = std::sqrt(dec.eps_p / (1.0 - dec.eps_p));
    double worst = 0.0;
    for (int m = 1; m < d; ++m) {
        std::complex<double> corr(0.0, 0.0);
        for (int k = 1; k < d; ++k) {
            const int km = (k + m) % d;
            corr += std::conj(dec.nu[k]) * dec.nu[km];
        }
        const std::complex<double> lhs =
            dec.nu[m] + std::conj(dec.nu[(d - m) % d]) + g_p * corr;
        worst = std::max(worst, std::abs(lhs));
    }
    rep.bilinear_violation = worst;
    return rep;
}

std::pair<double, double> nu_sff_identity(const Spectrum& s,
                                          const CyclicConfig& cfg,
                                          long long p) {
    const int d = s.d();
    const long long m = ((-p) % d + d) % d;
    if (m == 0)
        throw std::invalid_argument(
            "nu_sff_identity: p must not be 0 modulo d");
    const auto dec = decompose(s, cfg, p);
    if (dec.periodic_only)
        throw std::invalid_argument(
            "nu_sff_identity: periodic-only decomposition (eps = 0)");
    const double K_direct =
        sff(s, {static_cast<double>(p) * cfg.t0})[0];
    const double K_from_nu = dec.eps_p * std::norm(dec.nu[m]);
    return {K_direct, K_from_nu};
}

double gaussian_estimate(double eps1, double p) {
    if (!(eps1 >= 0.0 && eps1 < 1.0))
        throw std::invalid_argument("gaussian_estimate: eps1 must be in [0,1)");
    if (eps1 == 0.0) return 1.0;
    const double g2 = eps1 / (1.0 - eps1);
    return std::exp(-0.5 * g2 * p * p - 0.5 * eps1 * std::abs(p));
}

PairingResiduals pairing_diagnostic(const Spectrum& s, const CyclicConfig& cfg,
                                    long long p) {
    const int d = s.d();
    const auto dec1 = decompose(s, cfg, 1);
    const auto decp = decompose(s, cfg, p);
    if (dec1.periodic_only || decp.periodic_only)
        throw std::invalid_argument("pairing_diagnostic: eps = 0 input");

    const double z1 = std::sqrt(1.0 - dec1.eps_p);
    const double zp = std::sqrt(std::max(0.0, 1.0 - decp.eps_p));
    if (zp < 1e-12)
        throw std::invalid_argument(
            "pairing_diagnostic: z(p) too small; diagnostic needs p << "
            "1/sqrt(eps1)");

    PairingResiduals out;
    out.residual2.resize(d, 0.0);
    double sum_res = 0.0, sum_mag = 0.0;
    for (int m = 1; m < d; ++m) {
        const std::complex<double> a = dec1.nu[m] / (1.0 * z1);
        const std::complex<double> b =
            decp.nu[m] / (static_cast<double>(p) * zp);
        out.residual2[m] = std::norm(a - b);
        sum_res += out.residual2[m];
        sum_mag += std::norm(a);
    }
    out.mean_residual2 = sum_res / static_cast<double>(d - 1);
    out.mean_magnitude2 = sum_mag / static_cast<double>(d - 1);
    out.ratio = out.mean_residual2 / out.mean_magnitude2;
    return out;
}

std::complex<double> pairing_quality(const ErrorDecomposition& dec) {
    if (dec.periodic_only)
        throw std::invalid_argument("pairing_quality: periodic-only input");
    const int d = static_cast<int>(dec.nu.size());
    std::complex<double> acc(0.0, 0.0);
    for (int r = 1; r < d; ++r) acc += dec.nu[r] * dec.nu[d - r];
    return -acc;
}

double riemann_zeta(double s) {
    if (!(s > 1.0)) throw std::invalid_argument("riemann_zeta: need s > 1");
    if (std::abs(s - 2.0) < 1e-15) return M_PI * M_PI / 6.0;
    // Euler-Maclaurin: sum_{k<N} k^-s + N^(1-s)/(s-1) + N^-s/2
    //                  + s N^(-s-1)/12 - s(s+1)(s+2) N^(-s-3)/720
    const int N = 64;
    double sum = 0.0;
    for (int k = 1; k < N; ++k) sum += std::pow(k, -s);
    const double Nd = static_cast<double>(N);
    sum += std::pow(Nd, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(Nd, -s);
    sum += s * std::pow(Nd, -s - 1.0) / 12.0;
    sum -= s * (s + 1.0) * (s + 2.0) * std::pow(Nd, -s - 3.0) / 720.0;
    return sum;
}

double min_error_bound(const SffFit& fit) {
    if (fit.gamma < 0.0)
        throw std::invalid_argument("min_error_bound: gamma must be >= 0");
    if (!(fit.lambda > 0.0))
        throw std::invalid_argument("min_error_bound: lambda must be > 0");
    if (!(fit.M >= 1.0))
        throw std::invalid_argument("min_error_bound: M must be >= 1");
    const double g = fit.gamma;
    const double pref = fit.lambda * std::pow(fit.t0, g);
    if (std::abs(g - 1.0) < 1e-9)  // both neighboring branches diverge here
        return pref * std::log(1.0 / fit.lambda);
    if (g < 1.0) return 2.0 * pref * riemann_zeta(2.0 - g);
    return std::pow(2.0 * pref * (g - 1.0) / std::pow(fit.M, g - 1.0),
                    2.0 / (g + 1.0));
}

RigidityTargets rigidity_targets(int d) {
    RigidityTargets t;
    const double ln_d = std::log(static_cast<double>(d));
    for (const double beta : {4.0, 2.0, 1.0}) {
        RigidityTargets::Row row;
        row.beta = beta;
        row.alpha = 2.0 / std::sqrt(beta);
        row.sigma2 = row.alpha * row.alpha * ln_d / (4.0 * M_PI * M_PI);
        row.p_R = static_cast<double>(d) * std::sqrt(beta) / 2.0;
        t.rows.push_back(row);
    }
    return t;
}

}  // namespace ergokit
