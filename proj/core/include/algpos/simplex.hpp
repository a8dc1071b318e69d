#pragma once

#include <vector>

#include "algpos/errors.hpp"

namespace algpos {

struct SimplexResult {
    double objective = 0.0;
    std::vector<double> x;
};

// maximize c.x subject to A x <= b, x >= 0, with b >= 0 so the slack basis
// is feasible from the start. Dense tableau, Bland's rule throughout (no
// cycling); throws LpNumericalFailure past pivot_budget.
SimplexResult simplex_maximize(const std::vector<std::vector<double>>& a,
                               const std::vector<double>& b,
                               const std::vector<double>& c,
                               int pivot_budget = 10000);

}  // namespace algpos
