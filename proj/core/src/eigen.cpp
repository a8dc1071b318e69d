#include "algpos/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace algpos {

namespace {

using cplx = std::complex<double>;

cplx horner(const std::vector<double>& c, cplx x) {
    cplx acc = 0.0;
    for (size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

cplx horner_deriv(const std::vector<double>& c, cplx x) {
    cplx acc = 0.0;
    for (size_t k = c.size(); k-- > 1;) acc = acc * x + static_cast<double>(k) * c[k];
    return acc;
}

void newton_polish(const std::vector<double>& c, cplx& z) {
    for (int it = 0; it < 3; ++it) {
        cplx d = horner_deriv(c, z);
        if (std::abs(d) == 0.0) break;
        cplx step = horner(c, z) / d;
        z -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
    }
}

std::vector<cplx> roots_quadratic(double b, double c) {
    // x^2 + b x + c
    const double disc = b * b - 4.0 * c;
    if (disc >= 0.0) {
        const double s = std::sqrt(disc);
        const double q = -0.5 * (b + (b >= 0 ? s : -s));
        double r1 = q;
        double r2 = (q != 0.0) ? c / q : -b - q;
        return {cplx(r1, 0), cplx(r2, 0)};
    }
    const double s = std::sqrt(-disc) * 0.5;
    return {cplx(-b * 0.5, s), cplx(-b * 0.5, -s)};
}

std::vector<cplx> roots_cubic(double b, double c, double d) {
    // x^3 + b x^2 + c x + d, depressed via x = t - b/3
    const double p = c - b * b / 3.0;
    const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    const double shift = -b / 3.0;
    const double disc = -4.0 * p * p * p - 27.0 * q * q;
    std::vector<cplx> out;
    if (disc >= 0.0) {
        // three real roots
        if (p == 0.0) {
            const double r = std::cbrt(-q);
            out = {cplx(r, 0), cplx(r, 0), cplx(r, 0)};
        } else {
            const double m = 2.0 * std::sqrt(-p / 3.0);
            double arg = 3.0 * q / (p * m);
            arg = std::clamp(arg, -1.0, 1.0);
            const double theta = std::acos(arg) / 3.0;
            for (int k = 0; k < 3; ++k)
                out.emplace_back(m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0), 0.0);
        }
    } else {
        // one real root via Cardano, plus a conjugate pair
        const double rt = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
        const double u = std::cbrt(-q / 2.0 + rt);
        const double v = (u != 0.0) ? -p / (3.0 * u) : std::cbrt(-q / 2.0 - rt);
        const double t1 = u + v;
        const double re = -t1 / 2.0;
        const double im = std::sqrt(3.0) / 2.0 * std::fabs(u - v);
        out = {cplx(t1, 0), cplx(re, im), cplx(re, -im)};
    }
    for (auto& z : out) z += shift;
    return out;
}

std::vector<cplx> roots_aberth(const std::vector<double>& c) {
    const int deg = static_cast<int>(c.size()) - 1;
    double radius = 0.0;
    for (int k = 0; k < deg; ++k) radius = std::max(radius, std::fabs(c[k]));
    radius = 1.0 + radius;
    std::vector<cplx> z(deg);
    for (int k = 0; k < deg; ++k) {
        const double ang = 2.0 * std::numbers::pi * (k + 0.25) / deg + 0.7391;
        z[k] = radius * cplx(std::cos(ang), std::sin(ang));
    }
    const int budget = 200;
    for (int it = 0; it < budget; ++it) {
        double worst = 0.0;
        for (int i = 0; i < deg; ++i) {
            cplx d = horner_deriv(c, z[i]);
            if (std::abs(d) == 0.0) {
                z[i] += cplx(1e-8, 1e-8);
                d = horner_deriv(c, z[i]);
            }
            const cplx w = horner(c, z[i]) / d;
            cplx sum = 0.0;
            for (int j = 0; j < deg; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            const cplx denom = 1.0 - w * sum;
            const cplx step = (std::abs(denom) == 0.0) ? w : w / denom;
            z[i] -= step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        if (worst <= 1e-14) return z;
    }
    throw RootFindingFailure("Aberth iteration did not converge within budget");
}

// Null-space vector of m by row-echelon reduction with partial pivoting.
// Columns that never produce a pivot are free; with numerical full rank the
// smallest-pivot column is freed instead. Reports the numerical null-space
// dimension so callers can spot multidimensional null spaces.
std::vector<double> null_vector(RealMatrix m, double pivot_tol, int* null_dim) {
    const int n = m.n();
    std::vector<int> pivot_row_of_col(n, -1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = row;
        for (int i = row + 1; i < n; ++i)
            if (std::fabs(m(i, col)) > std::fabs(m(piv, col))) piv = i;
        if (std::fabs(m(piv, col)) <= pivot_tol) continue;  // free column
        if (piv != row)
            for (int j = 0; j < n; ++j) std::swap(m(row, j), m(piv, j));
        for (int i = row + 1; i < n; ++i) {
            const double f = m(i, col) / m(row, col);
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) m(i, j) -= f * m(row, j);
        }
        pivot_row_of_col[col] = row;
        ++row;
    }
    const int rank = row;
    if (null_dim) *null_dim = std::max(n - rank, 1);

    int free_col = -1;
    for (int col = 0; col < n; ++col)
        if (pivot_row_of_col[col] < 0) {
            free_col = col;
            break;
        }
    if (free_col < 0) {
        // numerically full rank: free the weakest pivot column
        double smallest = std::numeric_limits<double>::infinity();
        for (int col = 0; col < n; ++col) {
            const double p = std::fabs(m(pivot_row_of_col[col], col));
            if (p < smallest) {
                smallest = p;
                free_col = col;
            }
        }
        pivot_row_of_col[free_col] = -1;
    }

    std::vector<double> x(n, 0.0);
    x[free_col] = 1.0;
    for (int col = n - 1; col >= 0; --col) {
        const int r = pivot_row_of_col[col];
        if (r < 0) continue;
        double s = 0.0;
        for (int j = col + 1; j < n; ++j) s += m(r, j) * x[j];
        x[col] = -s / m(r, col);
    }
    return x;
}

// Unit max-norm, first nonzero coordinate positive.
void normalize(std::vector<double>& v) {
    double big = 0.0;
    for (double x : v) big = std::max(big, std::fabs(x));
    if (big == 0.0) return;
    for (double& x : v) x /= big;
    for (double x : v) {
        if (x != 0.0) {
            if (x < 0.0)
                for (double& y : v) y = -y;
            break;
        }
    }
}

}  // namespace

std::vector<cplx> poly_roots(const Polynomial& p) {
    std::vector<double> c = p.coeffs;
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg <= 0) return {};
    // monic normalization
    if (c.back() != 1.0) {
        const double lead = c.back();
        for (double& x : c) x /= lead;
    }
    std::vector<cplx> roots;
    switch (deg) {
        case 1: roots = {cplx(-c[0], 0.0)}; break;
        case 2: roots = roots_quadratic(c[1], c[0]); break;
        case 3: roots = roots_cubic(c[2], c[1], c[0]); break;
        default: roots = roots_aberth(c); break;
    }
    for (auto& z : roots) newton_polish(c, z);
    return roots;
}

std::vector<EigenPair> eigen_all(const RealMatrix& a, double tol) {
    const int n = a.n();
    if (n > kMaxEigenDim) throw DimensionMismatch("dimension above eigen cap");
    if (tol <= 0.0) throw DimensionMismatch("tolerance must be positive");
    const std::vector<cplx> roots = poly_roots(char_poly(a));
    const double scale = a.inf_norm();
    const double pivot_tol = std::max(1e-300, 1e-10 * std::max(1.0, scale));

    std::vector<EigenPair> out;
    for (size_t i = 0; i < roots.size(); ++i) {
        const cplx z = roots[i];
        if (std::fabs(z.imag()) > tol * (1.0 + std::abs(z))) continue;
        EigenPair pair;
        pair.value = z.real();
        double gap = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < roots.size(); ++j)
            if (j != i) gap = std::min(gap, std::abs(z - roots[j]));
        if (roots.size() == 1) gap = std::numeric_limits<double>::infinity();

        RealMatrix shifted = a.shifted(-pair.value);
        int dim_right = 1, dim_left = 1;
        pair.right = null_vector(shifted, pivot_tol, &dim_right);
        pair.left = null_vector(shifted.transposed(), pivot_tol, &dim_left);
        normalize(pair.right);
        normalize(pair.left);
        // a numerically multidimensional null space is never simple,
        // whatever the root multiset says
        pair.gap = (dim_right > 1 || dim_left > 1) ? 0.0 : gap;
        out.push_back(std::move(pair));
    }
    std::sort(out.begin(), out.end(),
              [](const EigenPair& x, const EigenPair& y) { return x.value > y.value; });
    return out;
}

}  // namespace algpos
