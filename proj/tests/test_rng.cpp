#include "doctest.h"

#include <cmath>
#include <vector>

#include "ergokit/rng.hpp"

using ergokit::Philox;

TEST_CASE("philox streams are deterministic and independent") {
    Philox a(42, 0), b(42, 0), c(42, 1), d(43, 0);
    bool same = true, diff_stream = false, diff_seed = false;
    for (int i = 0; i < 64; ++i) {
        const auto va = a.next_u64();
        same = same && (va == b.next_u64());
        diff_stream = diff_stream || (va != c.next_u64());
        diff_seed = diff_seed || (va != d.next_u64());
    }
    CHECK(same);
    CHECK(diff_stream);
    CHECK(diff_seed);
}

TEST_CASE("philox uniforms stay in range with sane moments") {
    Philox rng(7, 0);
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.u01();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        sum2 += u * u;
    }
    const double m = sum / n;
    const double var = sum2 / n - m * m;
    CHECK(std::abs(m - 0.5) < 0.005);
    CHECK(std::abs(var - 1.0 / 12.0) < 0.005);

    Philox g(7, 1);
    double gs = 0.0, gs2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = g.normal();
        gs += x;
        gs2 += x * x;
    }
    CHECK(std::abs(gs / n) < 0.01);
    CHECK(std::abs(gs2 / n - 1.0) < 0.02);
}

TEST_CASE("u01_open never returns zero") {
    Philox rng(1234, 5);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.u01_open();
        REQUIRE(u > 0.0);
        REQUIRE(u <= 1.0);
    }
}
