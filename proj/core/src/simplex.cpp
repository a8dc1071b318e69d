#include "algpos/simplex.hpp"

#include <cmath>
#include <limits>

namespace algpos {

SimplexResult simplex_maximize(const std::vector<std::vector<double>>& a,
                               const std::vector<double>& b,
                               const std::vector<double>& c,
                               int pivot_budget) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(a[i].size()) != n)
            throw LpNumericalFailure("constraint row width mismatch");
        if (b[i] < 0.0) throw LpNumericalFailure("rhs must be nonnegative for the slack start");
    }
    const int width = n + m + 1;  // vars, slacks, rhs
    std::vector<std::vector<double>> t(static_cast<size_t>(m) + 1,
                                       std::vector<double>(width, 0.0));
    for (int i = 0; i < m; ++i) {
        // scale each row by its max entry so the pivot tolerance is uniform
        double rowmax = std::fabs(b[i]);
        for (int j = 0; j < n; ++j) rowmax = std::max(rowmax, std::fabs(a[i][j]));
        const double s = rowmax > 0.0 ? 1.0 / rowmax : 1.0;
        for (int j = 0; j < n; ++j) t[i][j] = a[i][j] * s;
        t[i][n + i] = s;
        t[i][width - 1] = b[i] * s;
    }
    for (int j = 0; j < n; ++j) t[m][j] = -c[j];

    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    const double eps = 1e-12;
    for (int pivots = 0; pivots < pivot_budget; ++pivots) {
        // Bland: entering = lowest-index column with negative objective entry
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (t[m][j] < -eps) {
                enter = j;
                break;
            }
        if (enter < 0) {
            SimplexResult res;
            res.objective = t[m][width - 1];
            res.x.assign(n, 0.0);
            for (int i = 0; i < m; ++i)
                if (basis[i] < n) res.x[basis[i]] = t[i][width - 1];
            return res;
        }
        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= eps) continue;
            const double ratio = t[i][width - 1] / t[i][enter];
            // ties broken on the smallest basis index (Bland)
            if (ratio < best_ratio - 1e-15 ||
                (ratio <= best_ratio + 1e-15 && (leave < 0 || basis[i] < basis[leave]))) {
                best_ratio = ratio;
                leave = i;
            }
        }
        if (leave < 0) throw LpNumericalFailure("objective unbounded");
        const double piv = t[leave][enter];
        for (int j = 0; j < width; ++j) t[leave][j] /= piv;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            const double f = t[i][enter];
            if (f == 0.0) continue;
            for (int j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    throw LpNumericalFailure("pivot budget exhausted");
}

}  // namespace algpos
