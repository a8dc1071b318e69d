#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "algpos/matrix.hpp"

namespace testutil {

// deterministic splitmix64, independent of the library's sampler
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + u01() * (hi - lo); }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

// dense matrix with log-uniform magnitudes and random signs; zeros with
// probability zero_p
inline algpos::RealMatrix random_matrix(Rng& rng, int n, double zero_p = 0.2) {
    algpos::RealMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (rng.u01() < zero_p) continue;
            const double mag = std::pow(10.0, rng.uniform(-2.0, 2.0));
            m(i, j) = (rng.u01() < 0.5 ? -1.0 : 1.0) * mag;
        }
    return m;
}

// --- independent characteristic-polynomial oracle ---------------------------
// cofactor expansion of det(xI - A) with dense polynomial arithmetic; no code
// shared with the implementation under test

using Poly = std::vector<double>;  // coefficient of x^i at index i

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline Poly poly_add(Poly a, const Poly& b, double scale = 1.0) {
    if (b.size() > a.size()) a.resize(b.size(), 0.0);
    for (size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
    return a;
}

inline Poly det_oracle(const std::vector<std::vector<Poly>>& m) {
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly acc{0.0};
    for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Poly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        acc = poly_add(acc, poly_mul(m[0][c], det_oracle(minor)), (c % 2 == 0) ? 1.0 : -1.0);
    }
    return acc;
}

inline Poly char_poly_oracle(const algpos::RealMatrix& a) {
    const int n = a.n();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                m[i][j] = Poly{-a(i, j), 1.0};  // x - a_ii
            else
                m[i][j] = Poly{-a(i, j)};
        }
    return det_oracle(m);
}

}  // namespace testutil
