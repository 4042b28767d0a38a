#pragma once

// Scalar root finding and minimization on brackets.

#include <functional>

namespace tanlaw {

struct RootResult {
    double x;
    int iterations;
    double residual;  // |f(x)|
};

/// Newton steps safeguarded by bisection: a step leaving the current bracket is
/// replaced by the midpoint. f(lo) and f(hi) must have opposite signs.
RootResult newton_bisect(const std::function<double(double)>& f, const std::function<double(double)>& df,
                         double lo, double hi, double tol, int max_iter = 200);

/// Plain bisection to |hi - lo| < tol.
RootResult bisect(const std::function<double(double)>& f, double lo, double hi, double tol, int max_iter = 400);

struct MinResult {
    double x;
    double value;
    int iterations;
};

/// Golden-section search for a unimodal f on [lo, hi].
MinResult golden_section_min(const std::function<double(double)>& f, double lo, double hi, double tol);

}  // namespace tanlaw
