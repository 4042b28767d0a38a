#include "tanlaw/solvers.hpp"

#include "tanlaw/errors.hpp"

#include <cmath>

namespace tanlaw {

RootResult newton_bisect(const std::function<double(double)>& f, const std::function<double(double)>& df,
                         double lo, double hi, double tol, int max_iter) {
    if (!(tol > 0)) throw ArgumentError("newton_bisect: tol must be positive");
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0) return {lo, 0, 0};
    if (fhi == 0) return {hi, 0, 0};
    if ((flo < 0) == (fhi < 0)) throw ArgumentError("newton_bisect: root is not bracketed");

    double x = 0.5 * (lo + hi);
    for (int it = 1; it <= max_iter; ++it) {
        const double fx = f(x);
        if (std::abs(fx) < tol) return {x, it, std::abs(fx)};
        if ((fx < 0) == (flo < 0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        const double d = df(x);
        double next = d != 0 ? x - fx / d : lo - 1;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == x) return {x, it, std::abs(fx)};
        x = next;
    }
    throw NumericError("newton_bisect: no convergence");
}

RootResult bisect(const std::function<double(double)>& f, double lo, double hi, double tol, int max_iter) {
    double flo = f(lo);
    if ((flo < 0) == (f(hi) < 0)) throw ArgumentError("bisect: root is not bracketed");
    int it = 0;
    while (hi - lo > tol && it < max_iter) {
        ++it;
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    const double x = 0.5 * (lo + hi);
    return {x, it, std::abs(f(x))};
}

MinResult golden_section_min(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double g = (std::sqrt(5.0) - 1) / 2;
    double c = hi - g * (hi - lo);
    double d = lo + g * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    int it = 0;
    while (hi - lo > tol && it < 500) {
        ++it;
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - g * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + g * (hi - lo);
            fd = f(d);
        }
    }
    const double x = 0.5 * (lo + hi);
    return {x, f(x), it};
}

}  // namespace tanlaw
