#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "ergokit/spectrum.hpp"
#include "support/oracles.hpp"

using namespace ergokit;

namespace {
std::vector<double> circular_spacings(const Spectrum& s) {
    std::vector<double> sp;
    for (int i = 0; i + 1 < s.d(); ++i)
        sp.push_back(s.levels[i + 1] - s.levels[i]);
    sp.push_back(s.levels.front() + 2.0 * M_PI - s.levels.back());
    return sp;
}
}  // namespace

TEST_CASE("circular beta basic contracts") {
    const auto s = sample_circular_beta(5, 2, 42);
    REQUIRE(s.d() == 5);
    CHECK(std::is_sorted(s.levels.begin(), s.levels.end()));
    for (const double v : s.levels) {
        CHECK(v >= 0.0);
        CHECK(v < 2.0 * M_PI);
    }
    CHECK(s.kind == SpectrumKind::floquet);

    const auto again = sample_circular_beta(5, 2, 42);
    CHECK(again.levels == s.levels);  // bit-reproducible

    const auto one = sample_circular_beta(1, 1, 3);
    REQUIRE(one.d() == 1);
    CHECK(one.levels[0] >= 0.0);
    CHECK(one.levels[0] < 2.0 * M_PI);

    CHECK_THROWS_AS(sample_circular_beta(4, 3, 0), spectrum_error);
}

TEST_CASE("circular beta spacings match the Wigner surmises" *
          doctest::timeout(300)) {
    for (const int beta : {1, 2, 4}) {
        const auto s = sample_circular_beta(2048, beta, 7);
        auto sp = circular_spacings(s);
        const double m = oracles::mean(sp);
        for (double& v : sp) v /= m;
        const double ks = oracles::ks_statistic(
            sp, [&](double x) { return wigner_surmise_cdf(beta, x); });
        INFO("beta = ", beta, ", KS = ", ks);
        CHECK(ks < oracles::ks_critical_001(sp.size()));
    }
}

TEST_CASE("circular beta mean spacing approaches 2 pi / d") {
    std::vector<double> means;
    for (int seed = 0; seed < 8; ++seed) {
        const auto s = sample_circular_beta(256, 2, 100 + seed);
        means.push_back(oracles::mean(circular_spacings(s)));
    }
    CHECK(std::abs(oracles::mean(means) - 2.0 * M_PI / 256.0) <
          0.02 * 2.0 * M_PI / 256.0);
}

TEST_CASE("poisson generator contracts") {
    const auto s = sample_poisson(3, 11);
    REQUIRE(s.d() == 3);
    CHECK(std::is_sorted(s.levels.begin(), s.levels.end()));
    CHECK(sample_poisson(3, 11).levels == s.levels);

    const auto one = sample_poisson(1, 0);
    REQUIRE(one.d() == 1);
    CHECK(one.levels[0] < 2.0 * M_PI);

    // mean linear nearest-neighbor spacing over an ensemble
    std::vector<double> means;
    for (int seed = 0; seed < 20; ++seed) {
        const auto sp = sample_poisson(2048, 7 + seed);
        std::vector<double> gaps;
        for (int i = 0; i + 1 < sp.d(); ++i)
            gaps.push_back(sp.levels[i + 1] - sp.levels[i]);
        means.push_back(oracles::mean(gaps));
    }
    const double target = 2.0 * M_PI / 2048.0;
    CHECK(std::abs(oracles::mean(means) - target) < 0.05 * target);
}

TEST_CASE("poisson number variance grows linearly" * doctest::timeout(300)) {
    // disjoint windows of length L mean spacings; counts are ~Poisson so the
    // variance across windows and seeds should equal L with unit slope
    const int d = 2048;
    const std::vector<int> Ls = {4, 8, 16, 32};
    std::vector<double> vars;
    for (const int L : Ls) {
        const double win = static_cast<double>(L) * 2.0 * M_PI / d;
        const int nwin = static_cast<int>((2.0 * M_PI) / win);
        std::vector<double> counts;
        for (int seed = 0; seed < 50; ++seed) {
            const auto s = sample_poisson(d, 1000 + seed);
            std::vector<int> c(nwin, 0);
            for (const double v : s.levels) {
                const int w = std::min(nwin - 1, static_cast<int>(v / win));
                ++c[w];
            }
            for (const int x : c) counts.push_back(static_cast<double>(x));
        }
        vars.push_back(oracles::variance_welford(counts));
    }
    // least-squares slope through the origin of var vs L
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < Ls.size(); ++i) {
        num += vars[i] * Ls[i];
        den += static_cast<double>(Ls[i]) * Ls[i];
    }
    const double slope = num / den;
    INFO("slope = ", slope);
    CHECK(slope > 0.85);
    CHECK(slope < 1.15);
}

TEST_CASE("torus spectrum counts and symmetry") {
    const auto irr = torus_spectrum({1.0, std::sqrt(2.0), 40.0, 40.0});
    CHECK(irr.d() == 2133);
    const auto rat = torus_spectrum({1.0, 2.0, 50.0, 50.0});
    CHECK(rat.d() == 1961);

    // lattice symmetry J -> -J makes the spectrum symmetric about zero
    for (int i = 0; i < irr.d(); ++i)
        CHECK(irr.levels[i] == doctest::Approx(-irr.levels[irr.d() - 1 - i])
                                   .epsilon(1e-12));

    const auto tiny = torus_spectrum({1.0, std::sqrt(2.0), 0.5, 0.5});
    REQUIRE(tiny.d() == 1);
    CHECK(tiny.levels[0] == 0.0);

    CHECK_THROWS_AS(torus_spectrum({1.0, 1.0, -1.0, 1.0}), spectrum_error);
}

TEST_CASE("picket fence") {
    const auto s = picket_fence(4, 1.0);
    CHECK(s.levels == std::vector<double>{0.0, 1.0, 2.0, 3.0});
    const auto one = picket_fence(1, 5.0);
    CHECK(one.levels == std::vector<double>{0.0});
    CHECK_THROWS_AS(picket_fence(0, 1.0), spectrum_error);
}

TEST_CASE("spectrum file round trip") {
    const std::string path = "spectra_roundtrip_test.txt";
    const auto s = sample_circular_beta(64, 2, 5);
    save_spectrum(s, path);
    const auto back = load_spectrum(path);
    CHECK(back.levels == s.levels);  // full double precision
    CHECK(back.kind == SpectrumKind::floquet);
    std::remove(path.c_str());
    std::remove((path + ".meta.json").c_str());
}

TEST_CASE("spectrum loader handles comments, sorting and errors") {
    const std::string path = "spectra_loader_test.txt";
    {
        std::ofstream out(path);
        out << "# comment\n2.0\n1.0\n";
    }
    const auto s = load_spectrum(path);
    CHECK(s.levels == std::vector<double>{1.0, 2.0});
    CHECK(s.meta.at("input_sorted") == "false");
    std::remove(path.c_str());

    {
        std::ofstream out(path);
        out << "0.0\n1.0\n2.0\n";
    }
    const auto sorted = load_spectrum(path);
    CHECK(sorted.levels == std::vector<double>{0.0, 1.0, 2.0});
    CHECK(sorted.meta.at("input_sorted") == "true");
    std::remove(path.c_str());

    {
        std::ofstream out(path);
        out << "1.0\nnot_a_number\n";
    }
    CHECK_THROWS_WITH_AS(load_spectrum(path),
                         doctest::Contains(":2"), spectrum_error);
    std::remove(path.c_str());

    {
        std::ofstream out(path);
        out << "# only comments\n";
    }
    CHECK_THROWS_AS(load_spectrum(path), spectrum_error);
    std::remove(path.c_str());
}
