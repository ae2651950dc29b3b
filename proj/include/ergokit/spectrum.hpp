#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ergokit {

enum class SpectrumKind { hamiltonian, floquet };

// Ordered energy levels (or eigenphases in [0,2pi) for floquet spectra)
// plus provenance metadata. Levels are non-decreasing after construction;
// degenerate levels are kept and ties preserve generator order.
struct Spectrum {
    std::vector<double> levels;
    SpectrumKind kind = SpectrumKind::hamiltonian;
    std::map<std::string, std::string> meta;

    int d() const { return static_cast<int>(levels.size()); }
    double min() const { return levels.front(); }
    double max() const { return levels.back(); }
};

struct TorusParams {
    double omega_x = 1.0;
    double omega_y = 1.0;
    double L1 = 1.0;
    double L2 = 1.0;
};

class spectrum_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Circular beta-ensemble eigenphases (beta = 1, 2, 4: COE/CUE/CSE).
// Sampled through the sparse Verblunsky-coefficient construction and a
// monotone phase-counting root finder; no dense eigensolver involved.
// For beta = 4 the d phases are the non-degenerate half of the doubled
// spectrum. Deterministic in (d, beta, seed).
Spectrum sample_circular_beta(int d, int beta, std::uint64_t seed);

// d i.i.d. uniform eigenphases on [0,2pi), sorted.
Spectrum sample_poisson(int d, std::uint64_t seed);

// Linear-flow torus levels E = Jx*wx + Jy*wy over integer (Jx,Jy) with
// |Jx*wx + Jy*wy| < L1 and |Jx*wy - Jy*wx| < L2 (strict at both walls;
// lattice points exactly on a wall are excluded).
Spectrum torus_spectrum(const TorusParams& params);

// Equally spaced ladder E_n = n * spacing, n = 0..d-1.
Spectrum picket_fence(int d, double spacing);

// One decimal level per line; '#' starts a comment line. The spectrum is
// sorted on load and meta records whether the input was already sorted.
Spectrum load_spectrum(const std::string& path);

// Writes one level per line at full double precision, plus the sidecar
// <path>.meta.json holding kind and meta.
void save_spectrum(const Spectrum& s, const std::string& path);

}  // namespace ergokit
