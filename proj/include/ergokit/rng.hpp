#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace ergokit {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
//
// A stream is fully determined by (seed, stream); draws are a pure function
// of the block counter. Ensemble sweeps give each realization its own stream
// index, so results do not depend on scheduling or thread count.
class Philox {
public:
    explicit Philox(std::uint64_t seed, std::uint64_t stream = 0)
        : key0_(static_cast<std::uint32_t>(seed)),
          key1_(static_cast<std::uint32_t>(seed >> 32)),
          ctr2_(static_cast<std::uint32_t>(stream)),
          ctr3_(static_cast<std::uint32_t>(stream >> 32)) {}

    std::uint32_t next_u32() {
        if (have_ == 0) refill();
        return buf_[--have_];
    }

    std::uint64_t next_u64() {
        const std::uint64_t hi = next_u32();
        const std::uint64_t lo = next_u32();
        return (hi << 32) | lo;
    }

    // uniform in [0,1), 53-bit mantissa
    double u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in (0,1]; safe as a logarithm argument
    double u01_open() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    double normal() {
        if (have_normal_) {
            have_normal_ = false;
            return cached_normal_;
        }
        const double r = std::sqrt(-2.0 * std::log(u01_open()));
        const double a = 2.0 * M_PI * u01();
        cached_normal_ = r * std::sin(a);
        have_normal_ = true;
        return r * std::cos(a);
    }

    std::complex<double> complex_normal() {
        const double r = std::sqrt(-2.0 * std::log(u01_open()));
        const double a = 2.0 * M_PI * u01();
        // real and imaginary parts each N(0,1)
        return {r * std::cos(a), r * std::sin(a)};
    }

private:
    static void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                        std::uint32_t& lo) {
        const std::uint64_t prod =
            static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b);
        hi = static_cast<std::uint32_t>(prod >> 32);
        lo = static_cast<std::uint32_t>(prod);
    }

    void refill() {
        std::uint32_t x0 = ctr0_, x1 = ctr1_, x2 = ctr2_, x3 = ctr3_;
        std::uint32_t k0 = key0_, k1 = key1_;
        for (int round = 0; round < 10; ++round) {
            std::uint32_t hi0, lo0, hi1, lo1;
            mulhilo(0xD2511F53u, x0, hi0, lo0);
            mulhilo(0xCD9E8D57u, x2, hi1, lo1);
            const std::uint32_t y0 = hi1 ^ x1 ^ k0;
            const std::uint32_t y1 = lo1;
            const std::uint32_t y2 = hi0 ^ x3 ^ k1;
            const std::uint32_t y3 = lo0;
            x0 = y0; x1 = y1; x2 = y2; x3 = y3;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        buf_[0] = x0; buf_[1] = x1; buf_[2] = x2; buf_[3] = x3;
        have_ = 4;
        if (++ctr0_ == 0) ++ctr1_;  // 64-bit block counter
    }

    std::uint32_t key0_, key1_;
    std::uint32_t ctr0_ = 0, ctr1_ = 0, ctr2_, ctr3_;
    std::uint32_t buf_[4] = {0, 0, 0, 0};
    int have_ = 0;
    bool have_normal_ = false;
    double cached_normal_ = 0.0;
};

}  // namespace ergokit
