#pragma once

// Test-only reference computations. Everything here works on raw std::vector<double>
// and never calls into the library, so it can serve as an independent route.

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;

inline double dot(const Vec &a, const Vec &b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Dense projector matrix onto span(cols) via modified Gram-Schmidt, then M = Q Q^T.
inline std::vector<Vec> projector_matrix(const std::vector<Vec> &spanning, std::size_t n) {
    std::vector<Vec> q;
    for (const auto &v : spanning) {
        Vec w = v;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &b : q) {
                const double c = dot(w, b);
                for (std::size_t i = 0; i < n; ++i) w[i] -= c * b[i];
            }
        }
        const double r = std::sqrt(dot(w, w));
        if (r > 1e-10) {
            for (auto &e : w) e /= r;
            q.push_back(w);
        }
    }
    std::vector<Vec> m(n, Vec(n, 0.0));
    for (const auto &b : q) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m[i][j] += b[i] * b[j];
        }
    }
    return m;
}

inline Vec apply(const std::vector<Vec> &m, const Vec &x) {
    Vec out(x.size(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = dot(m[i], x);
    return out;
}

/// D(x,y|P) from raw coordinates and the dense matrix.
inline double d_function(const std::vector<Vec> &m, const Vec &x, const Vec &y) {
    const Vec px = apply(m, x);
    const Vec py = apply(m, y);
    Vec rx(x.size()), ry(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        rx[i] = x[i] - px[i];
        ry[i] = y[i] - py[i];
    }
    return std::sqrt(dot(px, px) * dot(py, py)) + std::sqrt(dot(rx, rx) * dot(ry, ry));
}

/// E f(X) over weights, summed term by term.
template <typename F>
double expect(const Vec &w, F f) {
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * f(i);
    return s;
}

struct HoelderValues {
    double lhs, refined, classical, young;
};

/// Every expectation of the refined Hoelder bound evaluated straight from its definition.
inline HoelderValues hoelder(const Vec &w, const Vec &x, const Vec &y, double p) {
    const double q = p / (p - 1.0);
    const double nx = std::pow(expect(w, [&](std::size_t i) { return std::pow(std::fabs(x[i]), p); }), 1.0 / p);
    const double ny = std::pow(expect(w, [&](std::size_t i) { return std::pow(std::fabs(y[i]), q); }), 1.0 / q);
    auto u = [&](std::size_t i) { return std::pow(std::fabs(x[i]), p / 2.0); };
    auto v = [&](std::size_t i) { return std::pow(std::fabs(y[i]), q / 2.0); };
    const double eu = expect(w, u);
    const double ev = expect(w, v);
    const double su = std::sqrt(expect(w, [&](std::size_t i) { return (u(i) - eu) * (u(i) - eu); }));
    const double sv = std::sqrt(expect(w, [&](std::size_t i) { return (v(i) - ev) * (v(i) - ev); }));
    const double euv = expect(w, [&](std::size_t i) { return u(i) * v(i); });
    HoelderValues h{};
    h.lhs = expect(w, [&](std::size_t i) { return std::fabs(x[i] * y[i]); });
    h.classical = nx * ny;
    if (h.classical == 0.0) return h;
    const double ratio = (sv * eu - su * ev) / (std::pow(nx, p / 2.0) * std::pow(ny, q / 2.0));
    h.refined = nx * ny * (1.0 / (p * p) + 1.0 / (q * q) + 2.0 / (p * q) * std::sqrt(1.0 - ratio * ratio));
    h.young = (1.0 / (p * p) + 1.0 / (q * q)) * nx * ny +
              2.0 / (p * q) * std::pow(nx, 1.0 - p / 2.0) * std::pow(ny, 1.0 - q / 2.0) * euv;
    return h;
}

/// Small deterministic generator helpers for property tests.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng); }
    std::size_t index(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(eng); }
    Vec vec(std::size_t n, double lo = -10.0, double hi = 10.0) {
        Vec v(n);
        for (auto &e : v) e = uniform(lo, hi);
        return v;
    }
    Vec weights(std::size_t m) {
        Vec w(m);
        double s = 0.0;
        for (auto &e : w) s += (e = std::exponential_distribution<double>(1.0)(eng));
        for (auto &e : w) e /= s;
        return w;
    }
};

} // namespace oracle
