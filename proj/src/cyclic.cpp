#include "ergokit/cyclic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ergokit/kernels.hpp"

namespace ergokit {

double heisenberg_t0(const Spectrum& s) {
    if (s.d() < 2) throw std::invalid_argument("heisenberg_t0: need d >= 2");
    const double span = s.max() - s.min();
    if (!(span > 0.0))
        throw std::invalid_argument("heisenberg_t0: all levels degenerate");
    const double omega = static_cast<double>(s.d() - 1) / span;
    return 2.0 * M_PI * omega / static_cast<double>(s.d());
}

std::vector<int> sorting_permutation(const Spectrum& s) {
    std::vector<int> q(s.d());
    std::iota(q.begin(), q.end(), 0);
    std::stable_sort(q.begin(), q.end(), [&](int a, int b) {
        return s.levels[a] < s.levels[b];
    });
    return q;
}

CyclicConfig sorted_config(const Spectrum& s) {
    return CyclicConfig{heisenberg_t0(s), sorting_permutation(s)};
}

CyclicConfig sorted_config(const Spectrum& s, double t0) {
    return CyclicConfig{t0, sorting_permutation(s)};
}

void validate_config(const Spectrum& s, const CyclicConfig& cfg) {
    if (!(cfg.t0 > 0.0)) throw std::invalid_argument("config: t0 must be > 0");
    if (static_cast<int>(cfg.q.size()) != s.d())
        throw std::invalid_argument("config: permutation size != d");
    std::vector<char> seen(s.d(), 0);
    for (const int v : cfg.q) {
        if (v < 0 || v >= s.d() || seen[v])
            throw std::invalid_argument("config: q is not a permutation");
        seen[v] = 1;
    }
}

std::vector<double> mode_fluctuations(const Spectrum& s,
                                      const CyclicConfig& cfg) {
    validate_config(s, cfg);
    const int d = s.d();
    const double scale = cfg.t0 * static_cast<double>(d) / (2.0 * M_PI);
    std::vector<double> delta(d);
    for (int n = 0; n < d; ++n)
        delta[n] = scale * s.levels[cfg.q[n]] - static_cast<double>(n);
    return delta;
}

std::vector<double> cycle_phases(const Spectrum& s, const CyclicConfig& cfg) {
    validate_config(s, cfg);
    const int d = s.d();
    std::vector<double> phi(d);
    for (int n = 0; n < d; ++n)
        phi[n] = 2.0 * M_PI * static_cast<double>(n) / static_cast<double>(d) -
                 s.levels[cfg.q[n]] * cfg.t0;
    return phi;
}

PersistenceSeries persistence(const Spectrum& s, const CyclicConfig& cfg,
                              const std::vector<long long>& p_values) {
    const auto phi = cycle_phases(s, cfg);
    PersistenceSeries out;
    out.p_values = p_values;
    out.z = kernel::persistence_sweep(phi, p_values);
    out.eps.resize(out.z.size());
    for (std::size_t i = 0; i < out.z.size(); ++i)
        out.eps[i] = 1.0 - out.z[i] * out.z[i];
    return out;
}

std::vector<double> sff(const Spectrum& s,
                        const std::vector<double>& t_values) {
    return kernel::sff_sweep(s.levels, t_values);
}

double p_step_error(const Spectrum& s, const CyclicConfig& cfg, long long p) {
    const auto series = persistence(s, cfg, {p});
    return series.eps[0];
}

double persistence_lower_bound(double eps1, double p) {
    if (eps1 < 0.0 || eps1 > 1.0)
        throw std::invalid_argument("persistence_lower_bound: eps1 not in [0,1]");
    if (eps1 == 0.0) return 1.0;
    if (std::abs(p) >= M_PI / std::sqrt(4.0 * eps1)) return 0.0;
    const double c = std::cos(p * std::sqrt(eps1));
    return c * c;
}

AngleInterval step_bound_recurrence(const std::vector<double>& theta1,
                                    long long p) {
    if (theta1.empty())
        throw std::invalid_argument("step_bound_recurrence: empty angle list");
    for (const double a : theta1)
        if (!(a >= 0.0 && a <= M_PI / 2.0 + 1e-12))
            throw std::invalid_argument(
                "step_bound_recurrence: angles must lie in [0, pi/2]");
    if (p < 0)
        throw std::invalid_argument("step_bound_recurrence: p must be >= 0");

    const std::size_t d = theta1.size();
    AngleInterval iv{0.0, 0.0};
    for (long long step = 0; step < p; ++step) {
        const double a = theta1[static_cast<std::size_t>(step) % d];
        const double lo = (a >= iv.lo && a <= iv.hi)
                              ? 0.0
                              : std::min(std::abs(iv.lo - a), std::abs(iv.hi - a));
        const double hi = std::min(iv.hi + a, M_PI / 2.0);
        iv = {lo, hi};
    }
    return iv;
}

std::optional<long long> randomization_step(const std::vector<double>& z2,
                                            int d, double c_r) {
    const double floor_value = c_r / static_cast<double>(d);
    for (std::size_t p = 1; p < z2.size(); ++p)
        if (z2[p] <= floor_value) return static_cast<long long>(p);
    return std::nullopt;
}

ErgodicityReport classify(const Spectrum& s, const CyclicConfig& cfg,
                          const ClassifyThresholds& th) {
    const int d = s.d();
    if (d < 2) throw std::invalid_argument("classify: need d >= 2");

    ErgodicityReport rep;
    rep.thresholds = th;

    const long long span =
        static_cast<long long>(std::llround(th.window * static_cast<double>(d)));
    std::vector<long long> ps(span + 1);
    std::iota(ps.begin(), ps.end(), 0LL);
    const auto series = persistence(s, cfg, ps);
    rep.z2.resize(series.z.size());
    for (std::size_t i = 0; i < series.z.size(); ++i)
        rep.z2[i] = series.z[i] * series.z[i];
    rep.eps1 = 1.0 - rep.z2[1];

    const long long half = (d + 1) / 2;
    double min_z2 = 1.0;
    for (long long p = 1; p <= half; ++p) min_z2 = std::min(min_z2, rep.z2[p]);
    rep.min_z2_ergodic_window = min_z2;
    rep.ergodic = min_z2 >= th.c_e / static_cast<double>(d);

    rep.t_R = randomization_step(rep.z2, d, th.c_r);

    if (rep.ergodic && rep.t_R) {
        bool stays_low = true;
        for (long long p = *rep.t_R; p <= span; ++p)
            if (rep.z2[p] > th.c_a / static_cast<double>(d)) {
                stays_low = false;
                break;
            }
        rep.aperiodic = stays_low;
    }
    rep.quasiperiodic = rep.ergodic && !rep.aperiodic;

    const double dd = static_cast<double>(d);
    rep.ergodicity_bound_sufficient = rep.eps1 <= M_PI * M_PI / (dd * dd);
    rep.aperiodicity_bound_necessary =
        rep.eps1 >= M_PI * M_PI / (4.0 * dd * dd);

    const auto delta = mode_fluctuations(s, cfg);
    double mean = 0.0;
    for (const double v : delta) mean += v;
    mean /= dd;
    double var = 0.0;
    for (const double v : delta) var += (v - mean) * (v - mean);
    rep.sigma2 = var / dd;
    return rep;
}

double wigner_surmise_pdf(int beta, double s) {
    switch (beta) {
        case 1:
            return 0.5 * M_PI * s * std::exp(-0.25 * M_PI * s * s);
        case 2:
            return (32.0 / (M_PI * M_PI)) * s * s *
                   std::exp(-4.0 * s * s / M_PI);
        case 4: {
            const double A = 262144.0 / (729.0 * M_PI * M_PI * M_PI);
            const double B = 64.0 / (9.0 * M_PI);
            return A * std::pow(s, 4) * std::exp(-B * s * s);
        }
        default:
            throw std::invalid_argument("wigner_surmise_pdf: beta must be 1,2,4");
    }
}

double wigner_surmise_cdf(int beta, double s) {
    if (s <= 0.0) return 0.0;
    switch (beta) {
        case 1:
            return 1.0 - std::exp(-0.25 * M_PI * s * s);
        case 2:
            return std::erf(2.0 * s / std::sqrt(M_PI)) -
                   (4.0 * s / M_PI) * std::exp(-4.0 * s * s / M_PI);
        case 4: {
            const double A = 262144.0 / (729.0 * M_PI * M_PI * M_PI);
            const double B = 64.0 / (9.0 * M_PI);
            const double e = std::exp(-B * s * s);
            const double erf_term = (3.0 / (4.0 * B * B)) *
                                    (std::sqrt(M_PI) / (2.0 * std::sqrt(B))) *
                                    std::erf(std::sqrt(B) * s);
            const double poly_term =
                e * (s * s * s / (2.0 * B) + 3.0 * s / (4.0 * B * B));
            return A * (erf_term - poly_term);
        }
        default:
            throw std::invalid_argument("wigner_surmise_cdf: beta must be 1,2,4");
    }
}

SpacingHistogram spacing_histogram(const Spectrum& s, int bins, double s_max) {
    if (s.d() < 2)
        throw std::invalid_argument("spacing_histogram: need d >= 2");
    if (bins < 1) throw std::invalid_argument("spacing_histogram: bins >= 1");

    std::vector<double> sp;
    for (int i = 0; i + 1 < s.d(); ++i)
        sp.push_back(s.levels[i + 1] - s.levels[i]);
    if (s.kind == SpectrumKind::floquet)
        sp.push_back(s.levels.front() + 2.0 * M_PI - s.levels.back());

    double mean = 0.0;
    for (const double v : sp) mean += v;
    mean /= static_cast<double>(sp.size());
    if (!(mean > 0.0))
        throw std::invalid_argument("spacing_histogram: zero mean spacing");
    for (double& v : sp) v /= mean;

    SpacingHistogram h;
    h.spacings = sp;
    h.edges.resize(bins + 1);
    for (int i = 0; i <= bins; ++i)
        h.edges[i] = s_max * static_cast<double>(i) / static_cast<double>(bins);
    h.density.assign(bins, 0.0);
    const double bw = s_max / static_cast<double>(bins);
    for (const double v : sp) {
        int b = static_cast<int>(v / bw);
        if (b >= 0 && b < bins) h.density[b] += 1.0;
    }
    for (double& v : h.density) v /= static_cast<double>(sp.size()) * bw;

    h.goe.resize(bins);
    h.gue.resize(bins);
    h.gse.resize(bins);
    h.poisson.resize(bins);
    for (int i = 0; i < bins; ++i) {
        const double mid = 0.5 * (h.edges[i] + h.edges[i + 1]);
        h.goe[i] = wigner_surmise_pdf(1, mid);
        h.gue[i] = wigner_surmise_pdf(2, mid);
        h.gse[i] = wigner_surmise_pdf(4, mid);
        h.poisson[i] = std::exp(-mid);
    }
    return h;
}

std::vector<std::pair<double, double>> polar_trajectory(
    const Spectrum& s, const CyclicConfig& cfg, long long p_max) {
    if (p_max < 1) throw std::invalid_argument("polar_trajectory: p_max >= 1");
    const double d = static_cast<double>(s.d());
    std::vector<long long> ps;
    for (long long p = -p_max; p <= p_max; ++p) ps.push_back(p);
    const auto series = persistence(s, cfg, ps);

    const auto g = [&](double x) {
        const double x2 = std::max(x * x, 1e-300);
        return 1.0 + std::tanh(std::log(x2 * d / 2.0) / 6.0);
    };
    const double g1 = g(1.0);

    std::vector<std::pair<double, double>> out(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const double theta = 2.0 * M_PI * static_cast<double>(ps[i]) / d;
        out[i] = {theta, g(series.z[i]) / g1};
    }
    return out;
}

}  // namespace ergokit
