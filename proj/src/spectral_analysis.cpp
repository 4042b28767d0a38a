#include "tanlaw/spectral_analysis.hpp"

#include "tanlaw/errors.hpp"
#include "tanlaw/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

namespace tanlaw {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

}  // namespace

double dottie(double tol) {
    if (!(tol > 0)) throw ArgumentError("dottie: tol must be positive");
    return newton_bisect([](double x) { return x - std::cos(x); }, [](double x) { return 1 + std::sin(x); }, 0.0,
                         1.0, tol)
        .x;
}

RadiusResult spectral_radius_alpha(double alpha, double tol) {
    if (!(alpha > 0 && alpha < kPi)) throw ArgumentError("spectral_radius: alpha must lie in (0, pi)");
    RadiusResult out;
    const auto root = newton_bisect([&](double x) { return x - std::sin(alpha - x); },
                                    [&](double x) { return 1 + std::cos(alpha - x); }, 0.0, alpha, tol);
    out.u = root.x;
    out.iterations = root.iterations;
    out.residual = std::abs(out.u - std::sin(alpha - out.u));
    out.rho = (std::sin(alpha) + std::sin(out.u)) / out.u;

    const double b = std::sin(alpha);
    auto k = [&](double t) { return 1 / t + std::sin(b * t) / std::sin(alpha - b * t); };
    const double hi = alpha / b;
    const auto m = golden_section_min(k, hi * 1e-9, hi * (1 - 1e-9), 1e-10 * hi);
    out.rho_direct = m.value;
    out.t_min = m.x;
    return out;
}

RadiusResult spectral_radius(const LawParams& p, double tol) { return spectral_radius_alpha(p.alpha(), tol); }

cd atom_mass_probe(const LawParams& p, double x, double eps) {
    const cd z(x, eps);
    return cd(0, eps) * r_transform(p, 1.0 / z) / (x * x);
}

double atom_mass_extrapolated(const LawParams& p, double x, double eps) {
    const cd v1 = atom_mass_probe(p, x, eps);
    const cd v2 = atom_mass_probe(p, x, eps / 10);
    return ((10.0 * v2 - v1) / 9.0).real();
}

LevyMeasure levy_atoms(const LawParams& p, int k_max, bool check_masses) {
    if (k_max < 1) throw ArgumentError("levy_atoms: k_max must be >= 1");
    const double alpha = p.alpha();
    LevyMeasure out;
    out.truncation_index = k_max;
    for (int k = -k_max; k < k_max; ++k) {
        const double x = p.b / (alpha + k * kPi);
        // the probe scale follows the atom spacing, which shrinks like x^2
        const double mass = check_masses ? atom_mass_extrapolated(p, x, 1e-3 * x * x) : 1.0;
        out.atoms.push_back({k, x, 1.0, mass});
    }
    std::sort(out.atoms.begin(), out.atoms.end(),
              [](const LevyAtom& l, const LevyAtom& r) {
                  const double al = std::abs(l.location), ar = std::abs(r.location);
                  return al != ar ? al > ar : l.location > r.location;
              });
    return out;
}

cd levy_cumulant_transform(const LawParams& p, cd z, int k_max) {
    if (k_max < 1) throw ArgumentError("levy_cumulant_transform: k_max must be >= 1");
    const double alpha = p.alpha();
    cd sum = 0;
    // smallest atoms first
    for (int j = k_max - 1; j >= 0; --j) {
        for (int k : {j, -j - 1}) {
            const double x = p.b / (alpha + k * kPi);
            const cd xz = x * z;
            if (std::abs(1.0 - xz) < 1e-8) throw PoleError("levy_cumulant_transform: z is at 1/atom", 1.0 / x);
            sum += xz * xz / (1.0 - xz);
        }
    }
    return sum;
}

cd inverse_reciprocal_cauchy(const LawParams& p, cd z) { return z + r_transform(p, 1.0 / z); }

double huang_v(const LawParams& p, double x, double tol) {
    if (!(tol > 0)) throw ArgumentError("huang_v: tol must be positive");
    auto positive = [&](double y) {
        try {
            return inverse_reciprocal_cauchy(p, cd(x, y)).imag() > 0;
        } catch (const PoleError&) {
            return false;
        }
    };
    double hi = 1.0;
    while (!positive(hi)) {
        hi *= 2;
        if (hi > 1e6) return 0.0;
    }
    double lo = hi / 2;
    while (positive(lo)) {
        hi = lo;
        lo /= 2;
        if (lo < 1e-14) return 0.0;
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (positive(mid) ? hi : lo) = mid;
    }
    return hi;
}

std::pair<double, double> parameter_edges(const LawParams& p) {
    const double alpha = p.alpha();
    const double u_pos = spectral_radius_alpha(alpha).u;
    const double u_neg = spectral_radius_alpha(kPi - alpha).u;
    return {-p.b / u_neg, p.b / u_pos};
}

double DensityGrid::moment(int k) const {
    double acc = 0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const auto& l = points[i];
        const auto& r = points[i + 1];
        acc += 0.5 * (r.psi - l.psi) * (std::pow(l.psi, k) * l.f + std::pow(r.psi, k) * r.f);
    }
    return acc;
}

namespace {

DensityPoint evaluate_point(const LawParams& p, double x, double tol, bool edge) {
    if (edge) return {x, inverse_reciprocal_cauchy(p, cd(x, 0)).real(), 0.0};
    const double v = huang_v(p, x, tol);
    const double psi = inverse_reciprocal_cauchy(p, cd(x, v)).real();
    return {x, psi, v / (kPi * (x * x + v * v))};
}

void evaluate_all(const LawParams& p, const std::vector<double>& xs, std::vector<DensityPoint>& out, double tol,
                  int threads, double lo, double hi) {
    out.resize(xs.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) out[i] = evaluate_point(p, xs[i], tol, xs[i] == lo || xs[i] == hi);
    };
    const std::size_t n = xs.size();
    const std::size_t t = std::clamp<std::size_t>(threads, 1, 64);
    if (t == 1 || n < 64) {
        work(0, n);
        return;
    }
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < t; ++j) pool.emplace_back(work, n * j / t, n * (j + 1) / t);
    for (auto& th : pool) th.join();
}

DensityGrid finish(std::vector<DensityPoint> pts) {
    DensityGrid g;
    g.points = std::move(pts);
    g.mass = g.moment(0);
    g.support_edges = {g.points.front().psi, g.points.back().psi};
    return g;
}

}  // namespace

DensityGrid density_grid(const LawParams& p, int n_points, double tol, int threads) {
    if (n_points < 8) throw ArgumentError("density_grid: need at least 8 points");
    const auto [lo, hi] = parameter_edges(p);
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    std::vector<double> xs(n_points + 1);
    for (int j = 0; j <= n_points; ++j) xs[j] = center - half * std::cos(kPi * j / n_points);
    xs.front() = lo;
    xs.back() = hi;

    std::vector<DensityPoint> pts;
    evaluate_all(p, xs, pts, tol, threads, lo, hi);
    const double gap = (pts.back().psi - pts.front().psi) / n_points;

    constexpr std::size_t kMaxPoints = 400000;
    for (int pass = 0; pass < 40; ++pass) {
        std::vector<double> mids;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            if (pts[i + 1].psi - pts[i].psi > gap) mids.push_back(0.5 * (pts[i].x_param + pts[i + 1].x_param));
        if (mids.empty()) break;
        if (pts.size() + mids.size() > kMaxPoints) throw NumericError("density_grid: refinement exceeds point cap");
        std::vector<DensityPoint> extra;
        evaluate_all(p, mids, extra, tol, threads, lo, hi);
        pts.insert(pts.end(), extra.begin(), extra.end());
        std::sort(pts.begin(), pts.end(),
                  [](const DensityPoint& l, const DensityPoint& r) { return l.x_param < r.x_param; });
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (!(pts[i + 1].psi > pts[i].psi))
            throw NumericError("density_grid: psi is not increasing at x = " + std::to_string(pts[i].x_param));
    return finish(std::move(pts));
}

DensityGrid density_grid_from_function(const std::function<double(double)>& f, double lo, double hi, int n_points) {
    if (n_points < 2 || !(hi > lo)) throw ArgumentError("density_grid_from_function: bad grid");
    std::vector<DensityPoint> pts;
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (int j = 0; j <= n_points; ++j) {
        const double x = j == 0 ? lo : j == n_points ? hi : center - half * std::cos(kPi * j / n_points);
        pts.push_back({x, x, f(x)});
    }
    return finish(std::move(pts));
}

cd cauchy_transform_from_density(const DensityGrid& grid, cd z) {
    if (!(z.imag() > 0)) throw ArgumentError("cauchy_transform_from_density: need Im z > 0");
    cd acc = 0;
    for (std::size_t i = 0; i + 1 < grid.points.size(); ++i) {
        const auto& l = grid.points[i];
        const auto& r = grid.points[i + 1];
        acc += 0.5 * (r.psi - l.psi) * (l.f / (z - l.psi) + r.f / (z - r.psi));
    }
    return acc;
}

double voiculescu_round_trip(const LawParams& p, const DensityGrid& grid, cd w) {
    const cd zeta = inverse_reciprocal_cauchy(p, w);
    return std::abs(1.0 / cauchy_transform_from_density(grid, zeta) - w);
}

}  // namespace tanlaw
