#include "ergokit/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ergokit/rng.hpp"
#include "json.hpp"

namespace ergokit {

namespace {

void stable_sort_levels(std::vector<double>& levels) {
    std::stable_sort(levels.begin(), levels.end());
}

// Accumulated phase of z Phi_{d-1}(z)/Phi*_{d-1}(z) at z = exp(i theta),
// evaluated through the Szego recursion written as a Mobius step
//   B_{k+1} = z (B_k - conj(a_k)) / (1 - a_k B_k).
// On the unit circle |B_k| = 1 and the step adds theta - 2 arg(1 - a_k B_k)
// to the lifted phase; Re(1 - a_k B_k) > 1 - |a_k| > 0 keeps the principal
// branch continuous, and the lift is strictly increasing in theta with
// total winding 2 pi d. Eigenphases solve psi(theta) = -arg(a_{d-1}) mod 2pi.
class PruferPhase {
public:
    explicit PruferPhase(const std::vector<std::complex<double>>& alpha)
        : alpha_(alpha) {}

    // lift psi(theta); optionally also d psi / d theta (always positive)
    double operator()(double theta, double* deriv = nullptr) const {
        const int dm1 = static_cast<int>(alpha_.size()) - 1;
        const double zr = std::cos(theta), zi = std::sin(theta);
        double br = zr, bi = zi;
        double arg_sum = 0.0;
        double slope = 1.0;
        for (int k = 0; k < dm1; ++k) {
            const double ar = alpha_[k].real(), ai = alpha_[k].imag();
            // u = 1 - a*B; Re(u) >= 1 - |a| > 0
            const double abr = ar * br - ai * bi;
            const double abi = ar * bi + ai * br;
            const double ur = 1.0 - abr, ui = -abi;
            arg_sum += std::atan(ui / ur);
            const double inv = 1.0 / (ur * ur + ui * ui);
            if (deriv) {
                // d/dpsi [psi - 2 arg(1 - a e^{i psi})] = 1 + 2 Re[aB/(1-aB)]
                const double re_frac = (abr * ur + abi * ui) * inv;
                slope = 1.0 + slope * (1.0 + 2.0 * re_frac);
            }
            // B <- z (B - conj(a)) / u
            const double nr = br - ar, ni = bi + ai;
            const double tr = (nr * ur + ni * ui) * inv;
            const double ti = (ni * ur - nr * ui) * inv;
            br = zr * tr - zi * ti;
            bi = zr * ti + zi * tr;
        }
        if (deriv) *deriv = slope;
        return static_cast<double>(dm1 + 1) * theta - 2.0 * arg_sum;
    }

private:
    const std::vector<std::complex<double>>& alpha_;
};

}  // namespace

Spectrum sample_circular_beta(int d, int beta, std::uint64_t seed) {
    if (d < 1) throw spectrum_error("sample_circular_beta: d must be >= 1");
    if (beta != 1 && beta != 2 && beta != 4)
        throw spectrum_error("sample_circular_beta: beta must be 1, 2 or 4");

    Philox rng(seed, 0);
    std::vector<std::complex<double>> alpha(d);
    for (int k = 0; k < d - 1; ++k) {
        // |alpha_k|^2 ~ Beta(1, beta*(d-k-1)/2), phase uniform
        const double b = 0.5 * beta * static_cast<double>(d - k - 1);
        const double s = 1.0 - std::pow(rng.u01_open(), 1.0 / b);
        const double phase = 2.0 * M_PI * rng.u01();
        alpha[k] = std::polar(std::sqrt(std::max(0.0, s)), phase);
    }
    alpha[d - 1] = std::polar(1.0, 2.0 * M_PI * rng.u01());

    std::vector<double> phases(d);
    if (d == 1) {
        // single eigenphase: Phi_1(z) = z - conj(a_0) with |a_0| = 1
        phases[0] = std::fmod(std::arg(std::conj(alpha[0])) + 2.0 * M_PI,
                              2.0 * M_PI);
    } else {
        const PruferPhase psi(alpha);
        const double tau = -std::arg(alpha[d - 1]);

        // coarse grid brackets each of the d monotone crossings
        const int grid = 4 * d;
        std::vector<double> gtheta(grid + 1), gpsi(grid + 1);
        for (int i = 0; i <= grid; ++i) {
            gtheta[i] = 2.0 * M_PI * static_cast<double>(i) /
                        static_cast<double>(grid);
            gpsi[i] = psi(gtheta[i]);
        }
        const long long j0 =
            static_cast<long long>(std::ceil((gpsi[0] - tau) / (2.0 * M_PI)));

#pragma omp parallel for schedule(static)
        for (int r = 0; r < d; ++r) {
            const double target = tau + 2.0 * M_PI * static_cast<double>(j0 + r);
            const auto it =
                std::lower_bound(gpsi.begin(), gpsi.end(), target);
            int hi_idx = static_cast<int>(it - gpsi.begin());
            if (hi_idx == 0) hi_idx = 1;
            if (hi_idx > grid) hi_idx = grid;
            double lo = gtheta[hi_idx - 1], hi = gtheta[hi_idx];
            const double flo = gpsi[hi_idx - 1] - target;
            const double fhi = gpsi[hi_idx] - target;
            // secant start, then safeguarded Newton on the monotone lift
            double x = lo + (hi - lo) * (flo / (flo - fhi));
            if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
            for (int iter = 0; iter < 60 && hi - lo > 1e-13; ++iter) {
                double slope;
                const double f = psi(x, &slope) - target;
                if (f < 0.0)
                    lo = x;
                else
                    hi = x;
                if (std::abs(f) < 5e-14 * slope) break;
                double nx = x - f / slope;
                if (!(nx > lo && nx < hi)) nx = 0.5 * (lo + hi);
                x = nx;
            }
            phases[r] = std::fmod(0.5 * (lo + hi), 2.0 * M_PI);
            if (phases[r] < 0.0) phases[r] += 2.0 * M_PI;
        }
    }

    Spectrum s;
    s.kind = SpectrumKind::floquet;
    s.levels = std::move(phases);
    stable_sort_levels(s.levels);
    s.meta["generator"] = "circular_beta";
    s.meta["beta"] = std::to_string(beta);
    s.meta["d"] = std::to_string(d);
    s.meta["seed"] = std::to_string(seed);
    return s;
}

Spectrum sample_poisson(int d, std::uint64_t seed) {
    if (d < 1) throw spectrum_error("sample_poisson: d must be >= 1");
    Philox rng(seed, 0);
    Spectrum s;
    s.kind = SpectrumKind::floquet;
    s.levels.resize(d);
    for (int i = 0; i < d; ++i) s.levels[i] = 2.0 * M_PI * rng.u01();
    stable_sort_levels(s.levels);
    s.meta["generator"] = "poisson";
    s.meta["d"] = std::to_string(d);
    s.meta["seed"] = std::to_string(seed);
    return s;
}

Spectrum torus_spectrum(const TorusParams& p) {
    if (!(p.omega_x > 0.0) || !(p.L1 > 0.0) || !(p.L2 > 0.0))
        throw spectrum_error("torus_spectrum: need omega_x > 0, L1 > 0, L2 > 0");
    const double wx = p.omega_x, wy = p.omega_y;
    const double norm2 = wx * wx + wy * wy;
    const long long jx_max = static_cast<long long>(
        std::ceil((p.L1 * std::abs(wx) + p.L2 * std::abs(wy)) / norm2)) + 1;
    const long long jy_max = static_cast<long long>(
        std::ceil((p.L1 * std::abs(wy) + p.L2 * std::abs(wx)) / norm2)) + 1;

    std::vector<double> levels;
    for (long long jx = -jx_max; jx <= jx_max; ++jx) {
        for (long long jy = -jy_max; jy <= jy_max; ++jy) {
            const double e = static_cast<double>(jx) * wx +
                             static_cast<double>(jy) * wy;
            const double g = static_cast<double>(jx) * wy -
                             static_cast<double>(jy) * wx;
            if (std::abs(e) < p.L1 && std::abs(g) < p.L2) levels.push_back(e);
        }
    }
    if (levels.empty())
        throw spectrum_error("torus_spectrum: cutoffs exclude every lattice point");

    Spectrum s;
    s.kind = SpectrumKind::hamiltonian;
    s.levels = std::move(levels);
    stable_sort_levels(s.levels);
    s.meta["generator"] = "torus";
    std::ostringstream os;
    os.precision(17);
    os << wx << "," << wy << "," << p.L1 << "," << p.L2;
    s.meta["params"] = os.str();
    s.meta["d"] = std::to_string(s.d());
    return s;
}

Spectrum picket_fence(int d, double spacing) {
    if (d < 1) throw spectrum_error("picket_fence: d must be >= 1");
    if (!(spacing > 0.0)) throw spectrum_error("picket_fence: spacing must be > 0");
    Spectrum s;
    s.kind = SpectrumKind::hamiltonian;
    s.levels.resize(d);
    for (int n = 0; n < d; ++n) s.levels[n] = spacing * static_cast<double>(n);
    s.meta["generator"] = "picket_fence";
    s.meta["d"] = std::to_string(d);
    return s;
}

Spectrum load_spectrum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw spectrum_error("load_spectrum: cannot open " + path);
    Spectrum s;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::size_t consumed = 0;
        double v;
        try {
            v = std::stod(line.substr(first), &consumed);
        } catch (const std::exception&) {
            throw spectrum_error("load_spectrum: parse error at " + path +
                                 ":" + std::to_string(lineno));
        }
        const auto rest = line.find_first_not_of(" \t\r", first + consumed);
        if (rest != std::string::npos)
            throw spectrum_error("load_spectrum: trailing junk at " + path +
                                 ":" + std::to_string(lineno));
        s.levels.push_back(v);
    }
    if (s.levels.empty())
        throw spectrum_error("load_spectrum: no levels in " + path);

    const bool was_sorted = std::is_sorted(s.levels.begin(), s.levels.end());
    stable_sort_levels(s.levels);
    s.kind = SpectrumKind::hamiltonian;
    s.meta["generator"] = "file";
    s.meta["source"] = path;
    s.meta["input_sorted"] = was_sorted ? "true" : "false";

    // sidecar, if present, restores kind and generator metadata
    std::ifstream side(path + ".meta.json");
    if (side) {
        try {
            nlohmann::json j;
            side >> j;
            if (j.contains("kind") && j["kind"] == "floquet")
                s.kind = SpectrumKind::floquet;
            if (j.contains("meta"))
                for (auto& [k, v] : j["meta"].items())
                    if (!s.meta.count(k)) s.meta[k] = v.get<std::string>();
        } catch (const std::exception&) {
            // unreadable sidecar is ignored; the level file stands alone
        }
    }
    return s;
}

void save_spectrum(const Spectrum& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw spectrum_error("save_spectrum: cannot write " + path);
    out.precision(17);
    for (const double v : s.levels) out << v << "\n";
    out.close();

    nlohmann::json j;
    j["kind"] = s.kind == SpectrumKind::floquet ? "floquet" : "hamiltonian";
    j["meta"] = s.meta;
    std::ofstream side(path + ".meta.json");
    side << j.dump(2) << "\n";
}

}  // namespace ergokit
