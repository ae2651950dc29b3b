#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace ergokit::kernel {

// Data-parallel inner loops shared by the diagnostics. Each output entry is
// a fixed-order serial sum over the spectrum, and the OpenMP versions only
// distribute output entries over threads, so results are bit-identical to
// the serial reference for any thread count.

// |(1/d) sum_n exp(i p phi[n])| for each requested integer step p.
std::vector<double> persistence_sweep(const std::vector<double>& phi,
                                      const std::vector<long long>& p_values);

// |(1/d) sum_n exp(-i E[n] t)|^2 for each requested time t.
std::vector<double> sff_sweep(const std::vector<double>& levels,
                              const std::vector<double>& t_values);

// c_m = (1/d) sum_n exp(i theta[n]) exp(+2pi i n m / d) for m = 0..d-1.
std::vector<std::complex<double>> unit_phase_dft(
    const std::vector<double>& theta);

// Serial reference implementations, kept for tests and the kernel benchmark.
namespace reference {
std::vector<double> persistence_sweep(const std::vector<double>& phi,
                                      const std::vector<long long>& p_values);
std::vector<double> sff_sweep(const std::vector<double>& levels,
                              const std::vector<double>& t_values);
std::vector<std::complex<double>> unit_phase_dft(
    const std::vector<double>& theta);
}  // namespace reference

}  // namespace ergokit::kernel
