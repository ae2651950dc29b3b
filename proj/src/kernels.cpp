#include "ergokit/kernels.hpp"

#include <cmath>

namespace ergokit::kernel {

namespace reference {

std::vector<double> persistence_sweep(const std::vector<double>& phi,
                                      const std::vector<long long>& p_values) {
    const std::size_t d = phi.size();
    std::vector<double> z(p_values.size());
    for (std::size_t i = 0; i < p_values.size(); ++i) {
        const double p = static_cast<double>(p_values[i]);
        double re = 0.0, im = 0.0;
        for (std::size_t n = 0; n < d; ++n) {
            const double a = p * phi[n];
            re += std::cos(a);
            im += std::sin(a);
        }
        z[i] = std::sqrt(re * re + im * im) / static_cast<double>(d);
    }
    return z;
}

std::vector<double> sff_sweep(const std::vector<double>& levels,
                              const std::vector<double>& t_values) {
    const std::size_t d = levels.size();
    std::vector<double> K(t_values.size());
    for (std::size_t i = 0; i < t_values.size(); ++i) {
        const double t = t_values[i];
        double re = 0.0, im = 0.0;
        for (std::size_t n = 0; n < d; ++n) {
            const double a = -levels[n] * t;
            re += std::cos(a);
            im += std::sin(a);
        }
        const double dd = static_cast<double>(d);
        K[i] = (re * re + im * im) / (dd * dd);
    }
    return K;
}

std::vector<std::complex<double>> unit_phase_dft(
    const std::vector<double>& theta) {
    const std::size_t d = theta.size();
    std::vector<std::complex<double>> v(d), w(d), c(d);
    for (std::size_t n = 0; n < d; ++n) {
        v[n] = std::polar(1.0, theta[n]);
        w[n] = std::polar(1.0, 2.0 * M_PI * static_cast<double>(n) /
                                   static_cast<double>(d));
    }
    for (std::size_t m = 0; m < d; ++m) {
        std::complex<double> acc(0.0, 0.0);
        std::size_t idx = 0;
        for (std::size_t n = 0; n < d; ++n) {
            acc += v[n] * w[idx];  // w[idx] = exp(2 pi i n m / d)
            idx += m;
            if (idx >= d) idx -= d;
        }
        c[m] = acc / static_cast<double>(d);
    }
    return c;
}

}  // namespace reference

std::vector<double> persistence_sweep(const std::vector<double>& phi,
                                      const std::vector<long long>& p_values) {
    const std::size_t d = phi.size();
    std::vector<double> z(p_values.size());
    const long long np = static_cast<long long>(p_values.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < np; ++i) {
        const double p = static_cast<double>(p_values[i]);
        double re = 0.0, im = 0.0;
        for (std::size_t n = 0; n < d; ++n) {
            const double a = p * phi[n];
            re += std::cos(a);
            im += std::sin(a);
        }
        z[i] = std::sqrt(re * re + im * im) / static_cast<double>(d);
    }
    return z;
}

std::vector<double> sff_sweep(const std::vector<double>& levels,
                              const std::vector<double>& t_values) {
    const std::size_t d = levels.size();
    std::vector<double> K(t_values.size());
    const long long nt = static_cast<long long>(t_values.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < nt; ++i) {
        const double t = t_values[i];
        double re = 0.0, im = 0.0;
        for (std::size_t n = 0; n < d; ++n) {
            const double a = -levels[n] * t;
            re += std::cos(a);
            im += std::sin(a);
        }
        const double dd = static_cast<double>(d);
        K[i] = (re * re + im * im) / (dd * dd);
    }
    return K;
}

std::vector<std::complex<double>> unit_phase_dft(
    const std::vector<double>& theta) {
    const std::size_t d = theta.size();
    std::vector<std::complex<double>> v(d), w(d), c(d);
    for (std::size_t n = 0; n < d; ++n) {
        v[n] = std::polar(1.0, theta[n]);
        w[n] = std::polar(1.0, 2.0 * M_PI * static_cast<double>(n) /
                                   static_cast<double>(d));
    }
    const long long dd = static_cast<long long>(d);
#pragma omp parallel for schedule(static)
    for (long long m = 0; m < dd; ++m) {
        std::complex<double> acc(0.0, 0.0);
        std::size_t idx = 0;
        for (std::size_t n = 0; n < d; ++n) {
            acc += v[n] * w[idx];
            idx += static_cast<std::size_t>(m);
            if (idx >= d) idx -= d;
        }
        c[m] = acc / static_cast<double>(d);
    }
    return c;
}

}  // namespace ergokit::kernel
