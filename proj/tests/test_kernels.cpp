#include "doctest.h"

#include <cmath>

#include "ergokit/kernels.hpp"
#include "ergokit/rng.hpp"

using namespace ergokit;

TEST_CASE("parallel kernels match the serial reference bit for bit") {
    Philox rng(17, 0);
    std::vector<double> phi(357), levels(357);
    for (auto& v : phi) v = 4.0 * M_PI * (rng.u01() - 0.5);
    for (auto& v : levels) v = 10.0 * rng.u01();

    std::vector<long long> ps;
    for (long long p = -40; p <= 700; p += 7) ps.push_back(p);
    std::vector<double> ts;
    for (int i = 0; i < 200; ++i) ts.push_back(0.05 * i);

    CHECK(kernel::persistence_sweep(phi, ps) ==
          kernel::reference::persistence_sweep(phi, ps));
    CHECK(kernel::sff_sweep(levels, ts) ==
          kernel::reference::sff_sweep(levels, ts));
    CHECK(kernel::unit_phase_dft(phi) == kernel::reference::unit_phase_dft(phi));
}

TEST_CASE("persistence sweep normalizes to one at p = 0") {
    std::vector<double> phi = {0.1, -0.7, 2.9};
    const auto z = kernel::persistence_sweep(phi, {0});
    CHECK(z[0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("unit phase dft satisfies Parseval") {
    Philox rng(3, 0);
    std::vector<double> theta(129);
    for (auto& v : theta) v = 2.0 * M_PI * rng.u01();
    const auto c = kernel::unit_phase_dft(theta);
    double norm = 0.0;
    for (const auto& v : c) norm += std::norm(v);
    // sum_m |c_m|^2 = (1/d) sum_n |e^{i theta}|^2 = 1 for unit-modulus input
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}
