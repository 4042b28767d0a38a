#include "tanlaw/limit_laws.hpp"

#include "tanlaw/combinatorics.hpp"
#include "tanlaw/errors.hpp"
#include "tanlaw/series.hpp"

#include <cmath>
#include <numbers>

namespace tanlaw {

namespace {

using cd = std::complex<double>;

constexpr double kPoleTol = 1e-8;

double eval(const IntPolynomial& poly, double x) {
    double acc = 0;
    const auto& c = poly.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

ExactRational eval(const IntPolynomial& poly, const ExactRational& x) {
    ExactRational acc = 0;
    const auto& c = poly.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + ExactRational(*it);
    return acc;
}

/// T_n(x)/x.
IntPolynomial reduced_tangent_polynomial(int n) {
    const IntPolynomial t = tangent_polynomial(n);
    const auto& c = t.coefficients();
    return IntPolynomial(std::vector<ExactInt>(c.begin() + 1, c.end()));
}

/// b^e exactly when b^2 = 1/(1 + x^2) allows it.
std::optional<ExactRational> exact_b_power(const ExactRational& x, int e) {
    const ExactRational b2 = 1 / (1 + x * x);
    if (e % 2 == 0) return ipow(b2, e / 2);
    ExactRational b;
    if (!exact_sqrt(b2, b)) return std::nullopt;
    return ipow(b, e);
}

cd log1p(cd x) {
    const cd u = 1.0 + x;
    if (u == 1.0) return x;
    return std::log(u) * x / (u - 1.0);
}

cd nearest_limit_pole(const LawParams& p, cd z) {
    const double alpha = p.alpha();
    const double k = std::round((alpha - p.b * z.real()) / std::numbers::pi);
    return {(alpha - k * std::numbers::pi) / p.b, 0.0};
}

}  // namespace

LawParams LawParams::from_ab(double a, double b, std::optional<ExactRational> ratio) {
    if (!(b > 0)) throw ArgumentError("law parameters need b > 0");
    if (std::abs(a * a + b * b - 1) >= 1e-12) throw ArgumentError("law parameters need a^2 + b^2 = 1");
    return {a, b, std::move(ratio)};
}

LawParams LawParams::from_ratio(const ExactRational& x) {
    const double xd = to_double(x);
    const double b = 1 / std::sqrt(1 + xd * xd);
    return {xd * b, b, x};
}

LawParams LawParams::from_angle(double alpha) {
    if (!(alpha > 0 && alpha < std::numbers::pi)) throw ArgumentError("angle must lie in (0, pi)");
    return {std::cos(alpha), std::sin(alpha), std::nullopt};
}

double LawParams::alpha() const { return std::atan2(b, a); }

cd r_transform(const LawParams& p, cd z) {
    const double alpha = p.alpha();
    const cd u = p.b * z;
    const cd i(0, 1);
    if (std::abs(u.imag()) < 20 && std::abs(std::sin(alpha - u)) < kPoleTol)
        throw PoleError("r_transform: z is within tolerance of a pole", nearest_limit_pole(p, z));
    // sin(u)/sin(alpha - u), scaled by e^{+-iu} so that nothing overflows
    const cd ea = std::exp(i * alpha);
    if (u.imag() >= 0) {
        const cd e2 = std::exp(2.0 * i * u);
        return (e2 - 1.0) / (ea - std::conj(ea) * e2);
    }
    const cd e2 = std::exp(-2.0 * i * u);
    return (1.0 - e2) / (ea * e2 - std::conj(ea));
}

cd moment_generating_limit(const LawParams& p, cd z) { return 1.0 + z * r_transform(p, z); }

CumulantSeq<double> LimitCumulants::values() const {
    std::vector<double> v;
    for (const auto& e : entries) v.push_back(e.value);
    return CumulantSeq<double>(std::move(v));
}

std::optional<CumulantSeq<ExactRational>> LimitCumulants::exact_values() const {
    std::vector<ExactRational> v;
    for (const auto& e : entries) {
        if (!e.exact) return std::nullopt;
        v.push_back(*e.exact);
    }
    return CumulantSeq<ExactRational>(std::move(v));
}

CumulantRoutes cumulant_routes(const LawParams& p, int r) {
    if (r < 2) throw ArgumentError("cumulant_routes: r must be >= 2");
    const double x = p.a / p.b;
    const double fact = ExactRational(factorial(r - 1)).get_d();
    const IntPolynomial deriv = derivative_polynomial(r - 1);
    const double alpha = p.alpha();
    const double cot_alpha = std::cos(alpha) / std::sin(alpha);
    const double sign = (r - 1) % 2 == 0 ? 1.0 : -1.0;
    // cot^{(n)}(alpha) = (-1)^n P_n(cot alpha)
    const double cot_derivative = sign * eval(deriv, cot_alpha);
    return {
        std::pow(p.b, r - 2) * eval(reduced_tangent_polynomial(r - 1), x) / fact,
        std::pow(p.b, r) * eval(deriv, x) / fact,
        sign * std::pow(p.b, r) * cot_derivative / fact,
    };
}

LimitCumulants limit_cumulants(const LawParams& p, int r_max) {
    if (r_max < 1) throw ArgumentError("limit_cumulants: r_max must be >= 1");
    LimitCumulants out;
    out.entries.push_back({1, 0.0, ExactRational(0), "zero-diagonal", true});
    for (int r = 2; r <= r_max; ++r) {
        const CumulantRoutes v = cumulant_routes(p, r);
        const double scale = std::max({std::abs(v.tangent_poly), std::abs(v.derivative_poly), 1e-300});
        const double tol = 1e-10 * scale + 1e-15;
        const bool agree = std::abs(v.tangent_poly - v.derivative_poly) <= tol &&
                           std::abs(v.derivative_poly - v.cot_derivative) <= tol;
        if (!agree)
            throw ConsistencyError("limit cumulant K_" + std::to_string(r) + ": formula routes disagree");

        LimitCumulant e{r, v.derivative_poly, std::nullopt, "tangent-poly|derivative-poly|cot-derivative", true};
        if (p.ratio) {
            const auto bpow_r = exact_b_power(*p.ratio, r);
            const auto bpow_r2 = exact_b_power(*p.ratio, r - 2);
            if (bpow_r && bpow_r2) {
                const ExactRational fact(factorial(r - 1));
                const ExactRational via_t = *bpow_r2 * eval(reduced_tangent_polynomial(r - 1), *p.ratio) / fact;
                const ExactRational via_p = *bpow_r * eval(derivative_polynomial(r - 1), *p.ratio) / fact;
                if (via_t != via_p)
                    throw ConsistencyError("limit cumulant K_" + std::to_string(r) + ": exact routes disagree");
                e.exact = via_p;
            }
        }
        out.entries.push_back(std::move(e));
    }
    return out;
}

cd finite_n_r_transform(const LawParams& p, long long n, cd z) {
    if (n < 1) throw ArgumentError("finite_n_r_transform: n must be >= 1");
    const cd w(p.a, p.b);
    const cd wb = std::conj(w);
    const double nd = static_cast<double>(n);
    const cd lb = log1p(z * wb / nd);
    const cd lw = log1p(z * w / nd);
    const cd num = -std::norm(w) * (std::exp((nd - 1) * lb) - std::exp((nd - 1) * lw));
    const cd den = w * std::exp(nd * lb) - wb * std::exp(nd * lw);
    if (std::abs(den) < kPoleTol) throw PoleError("finite_n_r_transform: denominator vanishes", z);
    return num / den;
}

std::vector<cd> finite_n_r_series(const LawParams& p, int n, int r_max) {
    if (n < 1 || r_max < 1) throw ArgumentError("finite_n_r_series: need n >= 1 and r_max >= 1");
    const cd w(p.a, p.b);
    const cd wb = std::conj(w);
    const unsigned order = r_max;
    // (1 + z v / n)^m expanded by the binomial theorem
    auto binom_series = [&](cd v, int m) {
        Series<cd> s(order);
        for (int j = 0; j <= std::min<int>(m, order); ++j)
            s[j] = ExactRational(binomial(m, j)).get_d() * std::pow(v / static_cast<double>(n), j);
        return s;
    };
    const Series<cd> num = -std::norm(w) * (binom_series(wb, n - 1) - binom_series(w, n - 1));
    const Series<cd> den = w * binom_series(wb, n) - wb * binom_series(w, n);
    const Series<cd> r = num * den.reciprocal();
    std::vector<cd> out;
    for (int i = 0; i < r_max; ++i) out.push_back(r[i]);
    return out;
}

LimitCumulants tangent_law_cumulants(int r_max) {
    if (r_max < 1) throw ArgumentError("tangent_law_cumulants: r_max must be >= 1");
    const auto t = tangent_numbers(std::max(1, r_max / 2));
    LimitCumulants out;
    for (int r = 1; r <= r_max; ++r) {
        ExactRational k = 0;
        if (r % 2 == 0) k = ExactRational(t[r / 2 - 1]) / ExactRational(factorial(r - 1));
        out.entries.push_back({r, k.get_d(), k, "tangent-numbers", true});
    }
    return out;
}

LimitCumulants zigzag_law_cumulants(int r_max) {
    if (r_max < 1) throw ArgumentError("zigzag_law_cumulants: r_max must be >= 1");
    const auto e = zigzag_numbers(r_max);
    LimitCumulants out;
    out.entries.push_back({1, 0.0, ExactRational(0), "zigzag-numbers", true});
    for (int r = 2; r <= r_max; ++r) {
        const ExactRational k = ExactRational(e[r - 1]) / ExactRational(2 * factorial(r - 1));
        out.entries.push_back({r, k.get_d(), k, "zigzag-numbers", true});
    }
    return out;
}

std::vector<std::pair<ExactInt, ExactInt>> rescaling_identity(int n_max) {
    if (n_max < 0) throw ArgumentError("rescaling_identity: n_max must be >= 0");
    const auto e = zigzag_numbers(n_max);
    std::vector<std::pair<ExactInt, ExactInt>> out;
    for (int n = 0; n <= n_max; ++n) {
        const auto pn = derivative_polynomial(n);
        ExactInt at_one = 0;
        for (const auto& c : pn.coefficients()) at_one += c;
        out.emplace_back(at_one, ipow(ExactInt(2), n) * e[n]);
    }
    return out;
}

std::pair<cd, cd> marchenko_pastur_limit_check(double b, cd z) {
    if (!(b > 0 && b < 1)) throw ArgumentError("marchenko_pastur_limit_check: need 0 < b < 1");
    if (std::abs(z) >= 1) throw ArgumentError("marchenko_pastur_limit_check: need |z| < 1");
    const LawParams p = LawParams::from_ab(std::sqrt(1 - b * b), b);
    return {r_transform(p, z), z / (1.0 - z)};
}

MomentSeq<double> moments_of_limit(const LawParams& p, int n_max) {
    return moments_from_cumulants(limit_cumulants(p, std::max(n_max, 1)).values(), n_max);
}

std::vector<BPCumulant> bp_classical_cumulants(int k_max, long long depth, double tol) {
    if (k_max < 1) throw ArgumentError("bp_classical_cumulants: k_max must be >= 1");
    if (depth < 1) throw ArgumentError("bp_classical_cumulants: depth must be >= 1");
    const auto t = tangent_numbers(k_max);
    const double two_over_pi = 2 / std::numbers::pi;
    const double last = 2.0 * depth - 1;
    std::vector<BPCumulant> out;
    for (int k = 1; k <= k_max; ++k) {
        BPCumulant row;
        row.k = k;
        const ExactInt four_k = ipow(ExactInt(4), k);
        // zeta(2k)/pi^{2k} = (-1)^{k+1} 2^{2k-1} B_{2k} / (2k)!
        ExactRational zeta_over = ExactRational(ipow(ExactInt(2), 2 * k - 1)) * bernoulli(k) /
                                  ExactRational(factorial(2 * k));
        if (k % 2 == 0) zeta_over = -zeta_over;
        row.closed = 2 * ExactRational(four_k - 1) * zeta_over;
        row.free_cumulant = ExactRational(t[k - 1]) / ExactRational(factorial(2 * k - 1));
        if (row.closed != row.free_cumulant)
            throw ConsistencyError("classical cumulant c_" + std::to_string(2 * k) + " differs from free K");

        const double pref = 2 * std::pow(two_over_pi, 2 * k);
        double sum = 0;
        for (long long j = depth - 1; j >= 0; --j) sum += std::pow(2.0 * j + 1, -2 * k);
        // sum over odd n > last of n^{-2k} lies in [0, last^{1-2k}/(2(2k-1))]
        row.tail_bound = pref * std::pow(last, 1 - 2 * k) / (2 * (2 * k - 1));
        const double tail_estimate = pref * std::pow(last + 1, 1 - 2 * k) / (2 * (2 * k - 1));
        if (row.tail_bound > tol)
            throw NumericError("bp_classical_cumulants: tail bound exceeds tolerance; increase depth");
        row.direct = pref * sum + tail_estimate;
        if (std::abs(row.direct - row.closed.get_d()) > row.tail_bound + 1e-12)
            throw ConsistencyError("classical cumulant c_" + std::to_string(2 * k) + ": direct sum disagrees");
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace tanlaw
