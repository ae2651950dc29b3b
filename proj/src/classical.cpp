#include "ergokit/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ergokit {

namespace {
double frac(double x) {
    double f = x - std::floor(x);
    if (f >= 1.0) f = 0.0;
    return f;
}
}  // namespace

ArcSet ArcSet::interval(double a, double b) {
    ArcSet s;
    const double len = b - a;
    if (len <= kTol) return s;
    if (len >= 1.0 - kTol) return circle();
    const double start = frac(a);
    if (start + len <= 1.0) {
        s.arcs_.push_back({start, start + len});
    } else {
        s.arcs_.push_back({start, 1.0});
        s.arcs_.push_back({0.0, start + len - 1.0});
    }
    s.normalize();
    return s;
}

ArcSet ArcSet::circle() {
    ArcSet s;
    s.arcs_.push_back({0.0, 1.0});
    return s;
}

void ArcSet::normalize() {
    std::sort(arcs_.begin(), arcs_.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& [a, b] : arcs_) {
        if (b - a <= kTol) continue;
        if (!merged.empty() && a <= merged.back().second + kTol)
            merged.back().second = std::max(merged.back().second, b);
        else
            merged.push_back({a, b});
    }
    arcs_ = std::move(merged);
}

double ArcSet::measure() const {
    double m = 0.0;
    for (const auto& [a, b] : arcs_) m += b - a;
    return m;
}

ArcSet ArcSet::complement() const {
    ArcSet out;
    double cursor = 0.0;
    for (const auto& [a, b] : arcs_) {
        if (a > cursor + kTol) out.arcs_.push_back({cursor, a});
        cursor = b;
    }
    if (cursor < 1.0 - kTol) out.arcs_.push_back({cursor, 1.0});
    out.normalize();
    return out;
}

ArcSet ArcSet::intersect(const ArcSet& other) const {
    ArcSet out;
    std::size_t i = 0, j = 0;
    while (i < arcs_.size() && j < other.arcs_.size()) {
        const auto& [a1, b1] = arcs_[i];
        const auto& [a2, b2] = other.arcs_[j];
        const double lo = std::max(a1, a2);
        const double hi = std::min(b1, b2);
        if (hi - lo > kTol) out.arcs_.push_back({lo, hi});
        if (b1 < b2)
            ++i;
        else
            ++j;
    }
    out.normalize();
    return out;
}

ArcSet ArcSet::unite(const ArcSet& other) const {
    ArcSet out;
    out.arcs_ = arcs_;
    out.arcs_.insert(out.arcs_.end(), other.arcs_.begin(), other.arcs_.end());
    out.normalize();
    return out;
}

ArcSet ArcSet::symdiff(const ArcSet& other) const {
    const ArcSet a_only = intersect(other.complement());
    const ArcSet b_only = other.intersect(complement());
    return a_only.unite(b_only);
}

ArcSet ArcSet::rotate(double theta) const {
    ArcSet out;
    const double t = frac(theta);
    for (const auto& [a, b] : arcs_) {
        const double na = a + t, nb = b + t;
        if (nb <= 1.0 + kTol) {
            out.arcs_.push_back({std::min(na, 1.0), std::min(nb, 1.0)});
        } else if (na >= 1.0) {
            out.arcs_.push_back({na - 1.0, nb - 1.0});
        } else {
            out.arcs_.push_back({na, 1.0});
            out.arcs_.push_back({0.0, nb - 1.0});
        }
    }
    out.normalize();
    return out;
}

std::vector<Rational> convergents(double alpha, int k_max) {
    std::vector<Rational> out;
    if (k_max < 1) return out;
    double x = alpha;
    long long p_prev = 1, q_prev = 0;  // p_{-1}/q_{-1}
    long long p_cur = 0, q_cur = 1;    // p_{-2}/q_{-2} seeds the recurrence
    for (int k = 0; k < k_max; ++k) {
        const double fa = std::floor(x);
        if (fa > 9e17 || fa < -9e17) break;
        const long long a = static_cast<long long>(fa);
        const long long p_next = a * p_prev + p_cur;
        const long long q_next = a * q_prev + q_cur;
        if (q_next > 1000000000000LL || q_next < 0) break;
        p_cur = p_prev;
        q_cur = q_prev;
        p_prev = p_next;
        q_prev = q_next;
        out.push_back({p_next, q_next});
        const double rem = x - fa;
        if (std::abs(alpha - static_cast<double>(p_next) /
                                 static_cast<double>(q_next)) <
                1e-15 * std::max(1.0, std::abs(alpha)) ||
            rem < 1e-15)
            break;  // rational input: expansion terminates
        x = 1.0 / rem;
    }
    return out;
}

RotationPermutation rotation_cyclic_permutation(double alpha, long long q) {
    if (q < 1)
        throw std::invalid_argument("rotation_cyclic_permutation: q >= 1");
    RotationPermutation out;
    out.q = q;
    out.alpha = frac(alpha);

    // locate the convergent with this denominator
    out.convergent_matched = false;
    for (const auto& c : convergents(alpha, 64)) {
        if (c.q == q) {
            out.convergent = c;
            out.convergent_matched = true;
            break;
        }
    }
    if (!out.convergent_matched) {
        // still computable: nearest integer rotation count
        out.convergent.q = q;
        out.convergent.p =
            static_cast<long long>(std::llround(out.alpha * static_cast<double>(q)));
    }
    const long long p =
        ((out.convergent.p % q) + q) % q;  // shift per step, mod q

    // cells in canonical cyclic order: D_j = [k_j/q, (k_j+1)/q) with
    // k_j = j*p mod q, so the rotation carries D_j approximately onto D_{j+1}
    out.cells.resize(q);
    const bool single_cycle = std::gcd(p == 0 ? q : p, q) == 1;
    for (long long j = 0; j < q; ++j) {
        const long long k = single_cycle ? (j * p) % q : j;
        out.cells[j] = ArcSet::interval(static_cast<double>(k) / q,
                                        static_cast<double>(k + 1) / q);
    }

    double err = 0.0;
    for (long long j = 0; j < q; ++j) {
        const ArcSet moved = out.cells[j].rotate(out.alpha);
        const ArcSet& target =
            single_cycle ? out.cells[(j + 1) % q]
                         : out.cells[(j + p) % q];  // label shift when not coprime
        err += moved.symdiff(target).measure();
    }
    out.epsbar = 0.5 * err;
    return out;
}

TorusPermutation torus_cyclic_permutation(double alpha, long long n_x,
                                          long long q) {
    if (n_x < 1)
        throw std::invalid_argument("torus_cyclic_permutation: n_x >= 1");
    const RotationPermutation rot = rotation_cyclic_permutation(alpha, q);
    TorusPermutation out;
    out.n_x = n_x;
    out.n_y = q;
    out.n = n_x * q;
    out.convergent = rot.convergent;
    out.epsbar_rot = rot.epsbar;
    // strips along the flow cycle exactly; only the wrap step pays the
    // rotation error, diluted by the strip measure 1/n_x
    out.epsbar = rot.epsbar / static_cast<double>(n_x);
    return out;
}

ClassicalErrorReport classical_error(const std::vector<ArcSet>& partition,
                                     double angle, int steps) {
    const std::size_t n = partition.size();
    if (n < 1) throw std::invalid_argument("classical_error: empty partition");

    ArcSet all;
    double total = 0.0;
    for (const auto& c : partition) {
        all = all.unite(c);
        total += c.measure();
    }
    if (std::abs(all.measure() - 1.0) > 1e-9 || std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument(
            "classical_error: partition does not cover the circle");

    ClassicalErrorReport rep;
    rep.step_symdiff.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const ArcSet moved = partition[k].rotate(angle);
        rep.step_symdiff[k] = moved.symdiff(partition[(k + 1) % n]).measure();
    }
    rep.epsbar =
        0.5 * std::accumulate(rep.step_symdiff.begin(), rep.step_symdiff.end(), 0.0);

    rep.drift.resize(steps);
    for (int l = 1; l <= steps; ++l) {
        rep.drift[l - 1].resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            const ArcSet moved =
                partition[k].rotate(static_cast<double>(l) * angle);
            rep.drift[l - 1][k] =
                moved.symdiff(partition[(k + l) % n]).measure();
        }
    }
    return rep;
}

}  // namespace ergokit
