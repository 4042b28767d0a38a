#include "tanlaw/combinatorics.hpp"

#include "tanlaw/errors.hpp"

#include <string>

namespace tanlaw {

RationalSeries sin_series(unsigned order) {
    RationalSeries s(order);
    for (unsigned n = 1; n <= order; n += 2) {
        ExactRational c = make_rational(1, factorial(n));
        s[n] = ((n / 2) % 2 == 0) ? c : ExactRational(-c);
    }
    return s;
}

RationalSeries cos_series(unsigned order) {
    RationalSeries s(order);
    for (unsigned n = 0; n <= order; n += 2) {
        ExactRational c = make_rational(1, factorial(n));
        s[n] = ((n / 2) % 2 == 0) ? c : ExactRational(-c);
    }
    return s;
}

RationalSeries tan_series(unsigned order) { return sin_series(order) * cos_series(order).reciprocal(); }

RationalSeries arctan_series(unsigned order) {
    // 1/(1+z^2) = sum (-1)^j z^{2j}
    RationalSeries geo(order);
    for (unsigned n = 0; n <= order; n += 2) geo[n] = ((n / 2) % 2 == 0) ? 1 : -1;
    return geo.integral();
}

RationalSeries atanh_series(unsigned order) {
    RationalSeries geo(order);
    for (unsigned n = 0; n <= order; n += 2) geo[n] = 1;
    return geo.integral();
}

std::vector<ExactRational> bernoulli_table(int n) {
    if (n < 0) throw ArgumentError("bernoulli_table: negative index");
    std::vector<ExactRational> b(n + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        // (m+1) B_m = -sum_{j<m} C(m+1, j) B_j
        ExactRational acc = 0;
        for (int j = 0; j < m; ++j) acc += ExactRational(binomial(m + 1, j)) * b[j];
        b[m] = -acc / (m + 1);
    }
    return b;
}

ExactRational bernoulli(int k) {
    if (k < 1) throw ArgumentError("bernoulli: k must be >= 1, got " + std::to_string(k));
    return bernoulli_table(2 * k)[2 * k];
}

ExactInt tangent_number_from_bernoulli(int k) {
    if (k < 1) throw ArgumentError("tangent_number_from_bernoulli: k must be >= 1");
    const ExactInt four_k = ipow(ExactInt(4), k);
    ExactRational t = ExactRational(four_k * (four_k - 1)) * bernoulli(k) / (2 * k);
    if (k % 2 == 0) t = -t;
    if (t.get_den() != 1) throw ConsistencyError("tangent number from Bernoulli is not an integer");
    return t.get_num();
}

std::vector<ExactInt> zigzag_numbers(int n_max) {
    if (n_max < 0) throw ArgumentError("zigzag_numbers: n_max must be >= 0");
    std::vector<ExactInt> e(n_max + 1);
    std::vector<ExactInt> row{1};
    e[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<ExactInt> next(n + 1);
        next[0] = 0;
        for (int k = 1; k <= n; ++k) next[k] = next[k - 1] + row[n - k];
        e[n] = next[n];
        row = std::move(next);
    }
    return e;
}

std::vector<ExactInt> tangent_numbers(int k_max) {
    if (k_max < 1) throw ArgumentError("tangent_numbers: k_max must be >= 1");
    const auto zigzag = zigzag_numbers(2 * k_max - 1);
    std::vector<ExactInt> out;
    out.reserve(k_max);
    for (int k = 1; k <= k_max; ++k) {
        ExactInt via_bernoulli = tangent_number_from_bernoulli(k);
        if (via_bernoulli != zigzag[2 * k - 1])
            throw ConsistencyError("tangent number T_" + std::to_string(2 * k - 1) +
                                   ": Bernoulli route " + via_bernoulli.get_str() +
                                   " != boustrophedon route " + zigzag[2 * k - 1].get_str());
        out.push_back(std::move(via_bernoulli));
    }
    return out;
}

ExactInt tangent_number(int n) {
    if (n < 0) throw ArgumentError("tangent_number: negative index");
    if (n % 2 == 0) return 0;
    return tangent_numbers((n + 1) / 2).back();
}

namespace {

ExactInt egf_power_coefficient(const RationalSeries& base, int n, int k, bool over_k_factorial) {
    ExactRational c = base.pow(k)[n] * ExactRational(factorial(n));
    if (over_k_factorial) c /= ExactRational(factorial(k));
    if (c.get_den() != 1) throw ConsistencyError("egf coefficient is not an integer");
    return c.get_num();
}

void check_nk(const char* what, int n, int k) {
    if (k < 1 || n < 0) throw ArgumentError(std::string(what) + ": need k >= 1 and n >= 0");
}

}  // namespace

ExactInt arctangent_number(int n, int k) {
    check_nk("arctangent_number", n, k);
    if (n < k || (n - k) % 2 != 0) return 0;
    return egf_power_coefficient(arctan_series(n), n, k, true);
}

ExactInt hyperbolic_arctangent_number(int n, int k) {
    check_nk("hyperbolic_arctangent_number", n, k);
    if (n < k || (n - k) % 2 != 0) return 0;
    return egf_power_coefficient(atanh_series(n), n, k, true);
}

ExactInt higher_tangent_number(int n, int k) {
    check_nk("higher_tangent_number", n, k);
    if (n < k || (n - k) % 2 != 0) return 0;
    return egf_power_coefficient(tan_series(n), n, k, false);
}

IntPolynomial derivative_polynomial(int n) {
    if (n < 0) throw ArgumentError("derivative_polynomial: n must be >= 0");
    const IntPolynomial one_plus_x2{1, 0, 1};
    IntPolynomial p{0, 1};
    for (int i = 1; i <= n; ++i) p = one_plus_x2 * p.derivative();
    return p;
}

IntPolynomial tangent_polynomial(int n) {
    if (n < 1) throw ArgumentError("tangent_polynomial: n must be >= 1");
    const IntPolynomial x{0, 1};
    const IntPolynomial one_plus_x2{1, 0, 1};
    auto [quot, rem] = divmod_monic(x * derivative_polynomial(n), one_plus_x2);
    if (!rem.is_zero())
        throw ConsistencyError("x P_" + std::to_string(n) + "(x) is not divisible by 1 + x^2");

    // Coefficients must be the higher tangent numbers T_n^{(k)}.
    const RationalSeries tan = tan_series(n);
    RationalSeries power = RationalSeries::constant(1, n);
    const ExactRational nfact(factorial(n));
    if (quot.coeff(0) != 0) throw ConsistencyError("tangent polynomial has a constant term");
    for (int k = 1; k <= n + 1; ++k) {
        power = power * tan;
        ExactRational expect = power[n] * nfact;
        if (ExactRational(quot.coeff(k)) != expect)
            throw ConsistencyError("tangent polynomial coefficient mismatch at n=" + std::to_string(n) +
                                   ", k=" + std::to_string(k));
    }
    return quot;
}

std::pair<ExactInt, ExactInt> zigzag_sum_identity(int n) {
    if (n < 1) throw ArgumentError("zigzag_sum_identity: n must be >= 1");
    const RationalSeries tan = tan_series(n);
    const ExactRational nfact(factorial(n));
    RationalSeries power = RationalSeries::constant(1, n);
    ExactRational lhs = 0;
    for (int k = 0; k < n; ++k) {
        power = power * tan;
        lhs += power[n] * nfact;
    }
    if (lhs.get_den() != 1) throw ConsistencyError("zigzag sum is not an integer");
    ExactInt rhs = ipow(ExactInt(2), n - 1) * zigzag_numbers(n)[n];
    return {lhs.get_num(), rhs};
}

bool derivative_tangent_series_identity(unsigned order) {
    using Poly = RationalPolynomial;
    using PSeries = Series<Poly>;
    const RationalSeries tan = tan_series(order);
    PSeries tan_x(order);
    for (unsigned n = 0; n <= order; ++n) tan_x[n] = Poly{tan[n]};

    const Poly x{0, 1};
    const Poly x2{0, 0, 1};
    const Poly one_plus_x2{1, 0, 1};
    const PSeries one = PSeries::constant(Poly{1}, order);
    const PSeries xs = PSeries::constant(x, order);

    const PSeries x_tan = x * tan_x;
    const PSeries inv = (one - x_tan).reciprocal();
    const PSeries lhs = x * ((xs + tan_x) * inv);
    const PSeries rhs = one_plus_x2 * (x_tan * inv) + PSeries::constant(x2, order);
    return lhs == rhs;
}

}  // namespace tanlaw
