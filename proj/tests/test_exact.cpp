#include <doctest.h>

#include "tanlaw/errors.hpp"
#include "tanlaw/exact.hpp"
#include "tanlaw/polynomial.hpp"
#include "tanlaw/series.hpp"

using namespace tanlaw;

TEST_SUITE("exact") {

TEST_CASE("rationals are canonical") {
    const ExactRational q = make_rational(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(to_string(q) == "-3/2");
    CHECK(to_string(make_rational(8, 4)) == "2");
    CHECK_THROWS_AS(make_rational(1, 0), ArgumentError);
}

TEST_CASE("factorial and binomial beyond 64 bits") {
    CHECK(to_string(factorial(25)) == "15511210043330985984000000");
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(100, 50) == factorial(100) / (factorial(50) * factorial(50)));
    CHECK(ipow(ExactInt(2), 70) == ExactInt("1180591620717411303424"));
    CHECK(ipow(ExactRational(-1, 2), 3) == ExactRational(-1, 8));
}

TEST_CASE("exact square roots") {
    ExactRational r;
    CHECK(exact_sqrt(ExactRational(9, 4), r));
    CHECK(r == ExactRational(3, 2));
    CHECK_FALSE(exact_sqrt(ExactRational(2), r));
    CHECK_FALSE(exact_sqrt(ExactRational(-4), r));
}

TEST_CASE("Gaussian rationals") {
    const GaussRational a(ExactRational(1, 2), ExactRational(1, 2));
    const GaussRational b = conj(a);
    CHECK(a * b == GaussRational(ExactRational(1, 2)));
    CHECK(kImagUnit * kImagUnit == GaussRational(-1));
    CHECK(a / a == GaussRational(1));
    CHECK((a - a).is_zero());
    CHECK(a.to_complex() == std::complex<double>(0.5, 0.5));
}

TEST_CASE("Gaussian-rational Eigen matrices multiply exactly") {
    Eigen::Matrix<GaussRational, 2, 2> m;
    m << GaussRational(0), kImagUnit, -kImagUnit, GaussRational(0);
    const Eigen::Matrix<GaussRational, 2, 2> sq = m * m;
    CHECK(sq(0, 0) == GaussRational(1));
    CHECK(sq(0, 1).is_zero());
    CHECK(sq.trace() == GaussRational(2));
}

TEST_CASE("polynomial arithmetic") {
    // (1 + x^2)(x) divided by (1 + x^2)
    const IntPolynomial one_plus_x2{1, 0, 1};
    const IntPolynomial x{0, 1};
    const IntPolynomial prod = one_plus_x2 * x;
    CHECK(prod.degree() == 3);
    const auto [q, r] = divmod_monic(prod, one_plus_x2);
    CHECK(q == x);
    CHECK(r.is_zero());
    CHECK(x.derivative() == IntPolynomial{1});
    CHECK(prod.str() == "1*x + 1*x^3");
}

TEST_CASE("series reciprocal and composition") {
    // 1/(1 - z) = sum z^n
    Series<ExactRational> s(6);
    s[0] = 1;
    s[1] = -1;
    const auto inv = s.reciprocal();
    for (int i = 0; i < 6; ++i) CHECK(inv[i] == 1);
    // -log(1 - z) as the integral of the geometric series
    const auto log = inv.integral();
    CHECK(log[0] == 0);
    CHECK(log[3] == ExactRational(1, 3));
}

TEST_CASE("tan series from sin/cos and arctan inverts it") {
    const auto t = tan_series(9);
    CHECK(t[1] == 1);
    CHECK(t[3] == ExactRational(1, 3));
    CHECK(t[5] == ExactRational(2, 15));
    CHECK(t[7] == ExactRational(17, 315));
    const auto id = arctan_series(9).compose(t);
    CHECK(id == RationalSeries::variable(9));
    const auto th = atanh_series(7);
    CHECK(th[3] == ExactRational(1, 3));
}

}
