#pragma once

#include <functional>
#include <vector>

namespace ddlab {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0; // sum of per-panel Kronrod-Gauss differences
    long evaluations = 0;
    bool converged = true;
};

// Adaptive Gauss-Kronrod 7/15 integration over the panels defined by `edges`
// (ascending, >= 2 entries). Panels are bisected worst-error-first until
// sum |err_i| <= max(abs_tol, rel_tol * |I|) or the panel budget is exhausted.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    const std::vector<double>& edges, double rel_tol,
                                    double abs_tol, int max_panels);

} // namespace ddlab
