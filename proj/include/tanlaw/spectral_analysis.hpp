#pragma once

// Spectral radius, Levy atoms and density reconstruction for the limit laws.

#include "tanlaw/limit_laws.hpp"

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace tanlaw {

/// Fixed point of cos on [0, 1].
double dottie(double tol = 1e-12);

struct RadiusResult {
    double u = 0;          // solution of x = sin(alpha - x) on (0, alpha)
    double rho = 0;        // (sin alpha + sin u)/u
    int iterations = 0;
    double residual = 0;
    double rho_direct = 0;  // inf over t of 1/t + R(t), by golden section
    double t_min = 0;
};

RadiusResult spectral_radius(const LawParams& p, double tol = 1e-13);
RadiusResult spectral_radius_alpha(double alpha, double tol = 1e-13);

struct LevyAtom {
    int k;
    double location;
    double mass;
    double mass_check;  // extrapolated nontangential limit; should be 1
};

struct LevyMeasure {
    std::vector<LevyAtom> atoms;
    int truncation_index = 0;
};

/// Atoms b/(alpha + k pi), mass 1, for k = -k_max..k_max-1 (for a = 0 these
/// are 2/(n pi) with odd |n| < 2 k_max).
LevyMeasure levy_atoms(const LawParams& p, int k_max, bool check_masses = true);

/// (1/x^2) i eps phi(x + i eps) with phi(z) = R(1/z); tends to the atom mass at x.
std::complex<double> atom_mass_probe(const LawParams& p, double x, double eps);
/// Two-term Richardson extrapolation over eps and eps/10.
double atom_mass_extrapolated(const LawParams& p, double x, double eps = 1e-3);

/// sum over the truncated atoms of (x z)^2/(1 - x z); tends to z R(z).
std::complex<double> levy_cumulant_transform(const LawParams& p, std::complex<double> z, int k_max);

/// F^{-1}(z) = z + R(1/z).
std::complex<double> inverse_reciprocal_cauchy(const LawParams& p, std::complex<double> z);

/// inf{y > 0 : Im F^{-1}(x + iy) > 0} to `tol` in y; 0 off the support preimage.
double huang_v(const LawParams& p, double x, double tol = 1e-10);

struct DensityPoint {
    double x_param;
    double psi;
    double f;
};

struct DensityGrid {
    std::vector<DensityPoint> points;
    double mass = 0;
    std::pair<double, double> support_edges{0, 0};

    /// Trapezoid quadrature of psi^k f over the psi grid.
    double moment(int k) const;
};

/// Edges of the parameter domain where v > 0: (-b/u_{pi-alpha}, b/u_alpha).
std::pair<double, double> parameter_edges(const LawParams& p);

/// Density on the psi axis from a parameter grid clustered at the edges, refined
/// until psi gaps are below (support width)/n_points. NumericError when psi is
/// not increasing.
DensityGrid density_grid(const LawParams& p, int n_points = 4000, double tol = 1e-10, int threads = 1);

/// Grid for an explicit density on [lo, hi] (psi = x), e.g. for reference laws.
DensityGrid density_grid_from_function(const std::function<double(double)>& f, double lo, double hi, int n_points);

/// G(z) = integral f(y)/(z - y) dy by trapezoid on the grid. Requires Im z > 0.
std::complex<double> cauchy_transform_from_density(const DensityGrid& grid, std::complex<double> z);

/// |1/G(F^{-1}(w)) - w| with G from the grid.
double voiculescu_round_trip(const LawParams& p, const DensityGrid& grid, std::complex<double> w);

}  // namespace tanlaw
