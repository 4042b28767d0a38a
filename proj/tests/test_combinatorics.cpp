#include <doctest.h>

#include "tanlaw/combinatorics.hpp"
#include "tanlaw/errors.hpp"

#include <algorithm>
#include <numeric>

using namespace tanlaw;

namespace {

// Alternating (down-up) permutations of {1..n}, counted by brute force.
long count_alternating(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    long count = 0;
    do {
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i) ok = i % 2 == 0 ? p[i] > p[i + 1] : p[i] < p[i + 1];
        count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

// n! [z^n] f, for an exact series f.
ExactInt egf_coefficient(const RationalSeries& f, int n) {
    const ExactRational v = f[n] * ExactRational(factorial(n));
    REQUIRE(v.get_den() == 1);
    return v.get_num();
}

}  // namespace

TEST_SUITE("combinatorics") {

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(1) == ExactRational(1, 6));
    CHECK(bernoulli(2) == ExactRational(-1, 30));
    CHECK(bernoulli(6) == ExactRational(691, 2730) * -1);
    CHECK_THROWS_AS(bernoulli(0), ArgumentError);
    CHECK(bernoulli_table(1)[1] == ExactRational(-1, 2));
}

TEST_CASE("tangent numbers by both routes and against the tan series") {
    const auto t = tangent_numbers(13);
    CHECK(t[0] == 1);
    CHECK(t[1] == 2);
    CHECK(t[2] == 16);
    CHECK(t[3] == 272);
    CHECK(t[4] == 7936);
    const auto tan = tan_series(25);
    for (int k = 1; k <= 13; ++k) {
        CHECK(tangent_number_from_bernoulli(k) == t[k - 1]);
        CHECK(egf_coefficient(tan, 2 * k - 1) == t[k - 1]);
    }
    CHECK(t[12] > ExactInt("9223372036854775807"));
    for (int n = 0; n <= 12; n += 2) CHECK(tangent_number(n) == 0);
}

TEST_CASE("zigzag numbers count alternating permutations") {
    const auto e = zigzag_numbers(8);
    const std::vector<long> expect{1, 1, 1, 2, 5, 16, 61, 272, 1385};
    for (int n = 0; n <= 8; ++n) CHECK(e[n] == expect[n]);
    for (int n = 1; n <= 8; ++n) CHECK(e[n] == count_alternating(n));
    const auto t = tangent_numbers(6);
    const auto e11 = zigzag_numbers(11);
    for (int k = 1; k <= 6; ++k) CHECK(e11[2 * k - 1] == t[k - 1]);
}

TEST_CASE("arctangent numbers and the atanh sign relation") {
    CHECK(arctangent_number(1, 1) == 1);
    CHECK(arctangent_number(3, 1) == -2);
    CHECK(hyperbolic_arctangent_number(3, 1) == 2);
    CHECK(arctangent_number(2, 1) == 0);
    CHECK(arctangent_number(1, 2) == 0);
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k) {
            const ExactInt h = hyperbolic_arctangent_number(n, k);
            CHECK(h >= 0);
            if ((n - k) % 2) {
                CHECK(h == 0);
                continue;
            }
            // (-i)^k i^n = i^{n-k}
            const int sign = ((n - k) / 2) % 2 ? -1 : 1;
            CHECK(arctangent_number(n, k) == sign * h);
        }
}

TEST_CASE("higher tangent numbers") {
    CHECK(higher_tangent_number(2, 2) == 2);
    CHECK(higher_tangent_number(4, 2) == 16);
    CHECK(higher_tangent_number(3, 2) == 0);
    for (int n = 1; n <= 15; ++n) CHECK(higher_tangent_number(n, 1) == tangent_number(n));
    const auto tan = tan_series(14);
    for (int k = 1; k <= 6; ++k) {
        const auto p = tan.pow(k);
        for (int n = k; n <= 14; ++n) {
            CHECK(higher_tangent_number(n, k) == egf_coefficient(p, n));
            CHECK(higher_tangent_number(n, k) >= 0);
        }
    }
}

TEST_CASE("derivative polynomials") {
    CHECK(derivative_polynomial(0) == IntPolynomial{0, 1});
    CHECK(derivative_polynomial(1) == IntPolynomial{1, 0, 1});
    CHECK(derivative_polynomial(3) == IntPolynomial{2, 0, 8, 0, 6});
    for (int n = 0; n <= 20; ++n) CHECK(derivative_polynomial(n).degree() == n + 1);
    // P_n(0) is the n-th derivative of tan at 0
    for (int n = 0; n <= 15; ++n) CHECK(derivative_polynomial(n).coeff(0) == tangent_number(n));
}

TEST_CASE("tangent polynomials") {
    CHECK(tangent_polynomial(1) == IntPolynomial{0, 1});
    CHECK(tangent_polynomial(2) == IntPolynomial{0, 0, 2});
    CHECK(tangent_polynomial(3) == IntPolynomial{0, 2, 0, 6});
    const IntPolynomial one_plus_x2{1, 0, 1};
    const IntPolynomial x{0, 1};
    for (int n = 1; n <= 20; ++n) {
        const IntPolynomial t = tangent_polynomial(n);
        CHECK(x * derivative_polynomial(n) == one_plus_x2 * t);
        for (int k = 1; k <= n; ++k) CHECK(t.coeff(k) == higher_tangent_number(n, k));
    }
}

TEST_CASE("zigzag sum identity") {
    CHECK(zigzag_sum_identity(1) == std::pair<ExactInt, ExactInt>(1, 1));
    CHECK(zigzag_sum_identity(3) == std::pair<ExactInt, ExactInt>(8, 8));
    for (int n = 1; n <= 20; ++n) {
        const auto [l, r] = zigzag_sum_identity(n);
        CHECK(l == r);
    }
}

TEST_CASE("generating-function identity for the tangent polynomials") {
    CHECK(derivative_tangent_series_identity(10));
}

}
