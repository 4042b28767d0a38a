#pragma once

// The free limit laws with R-transform tan(bz)/(b - a tan(bz)), a^2 + b^2 = 1:
// cumulants, moments, finite-n approximants and the degenerate and classical
// counterparts.

#include "tanlaw/exact.hpp"
#include "tanlaw/nc_partitions.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace tanlaw {

struct LawParams {
    double a = 0.0;
    double b = 1.0;
    /// a/b when it is known exactly; enables rational cumulants.
    std::optional<ExactRational> ratio;

    /// Throws ArgumentError unless |a^2 + b^2 - 1| < 1e-12 and b > 0.
    static LawParams from_ab(double a, double b, std::optional<ExactRational> ratio = std::nullopt);
    static LawParams from_ratio(const ExactRational& x);
    static LawParams from_angle(double alpha);
    static LawParams tangent() { return from_ratio(0); }

    double alpha() const;
};

/// sin(bz)/sin(alpha - bz). PoleError within 1e-8 of a pole (alpha - k pi)/b.
std::complex<double> r_transform(const LawParams& p, std::complex<double> z);

/// 1 + z R(z).
std::complex<double> moment_generating_limit(const LawParams& p, std::complex<double> z);

struct LimitCumulant {
    int r = 0;
    double value = 0.0;
    std::optional<ExactRational> exact;
    std::string formula;
    bool checks_ok = true;
};

struct LimitCumulants {
    std::vector<LimitCumulant> entries;

    int size() const { return static_cast<int>(entries.size()); }
    const LimitCumulant& operator[](int r) const { return entries.at(r - 1); }
    CumulantSeq<double> values() const;
    /// All entries exact, else std::nullopt.
    std::optional<CumulantSeq<ExactRational>> exact_values() const;
};

/// K_1 = 0 and, for r >= 2, three routes that must agree to 1e-10:
///   b^{r-2} (T_{r-1}(x)/x) / (r-1)!    tangent polynomial, x = a/b
///   b^r P_{r-1}(x) / (r-1)!             derivative polynomial
///   (-1)^{r-1} b^r cot^{(r-1)}(alpha) / (r-1)!
/// Exact routes are compared exactly. ConsistencyError on disagreement.
LimitCumulants limit_cumulants(const LawParams& p, int r_max);

/// Values of the three routes for a single order (diagnostics, CLI).
struct CumulantRoutes {
    double tangent_poly;
    double derivative_poly;
    double cot_derivative;
};
CumulantRoutes cumulant_routes(const LawParams& p, int r);

/// R-transform of Q_n = sum a_ij X_i X_j / n for the structured matrix with
/// upper entry w = a + bi and zero diagonal.
std::complex<double> finite_n_r_transform(const LawParams& p, long long n, std::complex<double> z);
/// Its Taylor coefficients: entry r-1 approximates K_r(Q_n) = Tr(A_n^r)/n^r.
std::vector<std::complex<double>> finite_n_r_series(const LawParams& p, int n, int r_max);

/// K_r = T_{r-1}/(r-1)! for even r.
LimitCumulants tangent_law_cumulants(int r_max);
/// R = (tan z + sec z - 1)/2: K_1 = 0, K_r = E_{r-1}/(2 (r-1)!).
LimitCumulants zigzag_law_cumulants(int r_max);

/// P_n(1) against 2^n E_n for n = 0..n_max; equivalent to the zigzag law scaled
/// by sqrt 2 being the a = b law.
std::vector<std::pair<ExactInt, ExactInt>> rescaling_identity(int n_max);

/// (R at a = sqrt(1 - b^2), z/(1 - z)).
std::pair<std::complex<double>, std::complex<double>> marchenko_pastur_limit_check(double b,
                                                                                    std::complex<double> z);

MomentSeq<double> moments_of_limit(const LawParams& p, int n_max);

struct BPCumulant {
    int k = 0;
    ExactRational closed;  // c_{2k} through Euler's zeta(2k) formula
    double direct = 0.0;   // sum over odd n of 2 (2/(n pi))^{2k}, tail estimate added
    double tail_bound = 0.0;
    ExactRational free_cumulant;  // T_{2k-1}/(2k-1)!
};

/// Even classical cumulants of sum_{n odd} (2/(n pi)) X_n, X_n Skellam(1,1).
/// `depth` odd terms are summed directly; NumericError when the tail bound
/// exceeds tol, ConsistencyError when any route disagrees.
std::vector<BPCumulant> bp_classical_cumulants(int k_max, long long depth = 1000000, double tol = 1e-6);

}  // namespace tanlaw
