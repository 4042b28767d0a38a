#include <doctest.h>

#include "tanlaw/errors.hpp"
#include "tanlaw/limit_laws.hpp"
#include "tanlaw/matrix_spectra.hpp"
#include "tanlaw/series.hpp"

#include <cmath>
#include <numbers>

using namespace tanlaw;
using cd = std::complex<double>;

namespace {

// [w^n] tan w / (1 - x tan w), exactly.
ExactRational reduced_coefficient(const ExactRational& x, int n) {
    const auto t = tan_series(n + 1);
    const auto den = RationalSeries::constant(1, n + 1) - x * t;
    return (t * den.reciprocal())[n];
}

}  // namespace

TEST_SUITE("limit_laws") {

TEST_CASE("parameters") {
    CHECK_THROWS_AS(LawParams::from_ab(0.6, 0.7), ArgumentError);
    CHECK_THROWS_AS(LawParams::from_ab(1.0, 0.0), ArgumentError);
    CHECK_THROWS_AS(LawParams::from_ab(0.6, -0.8), ArgumentError);
    CHECK(LawParams::tangent().alpha() == doctest::Approx(std::numbers::pi / 2));
    const LawParams p = LawParams::from_ratio(ExactRational(3, 4));
    CHECK(p.a == doctest::Approx(0.6));
    CHECK(p.b == doctest::Approx(0.8));
    CHECK(LawParams::from_angle(1.1).alpha() == doctest::Approx(1.1));
    CHECK(LawParams::from_ratio(-1).alpha() == doctest::Approx(3 * std::numbers::pi / 4));
}

TEST_CASE("R-transform") {
    CHECK(r_transform(LawParams::tangent(), 0.5).real() == doctest::Approx(std::tan(0.5)).epsilon(1e-14));
    CHECK(std::abs(r_transform(LawParams::from_angle(0.4), 0.0)) == 0);
    const LawParams p = LawParams::from_ratio(ExactRational(3, 4));
    const double h = 1e-6;
    const double d = (r_transform(p, h) - r_transform(p, -h)).real() / (2 * h);
    CHECK(d == doctest::Approx(1).epsilon(1e-8));
    // direct formula tan(bz)/(b - a tan(bz)) at a complex point
    const cd z(0.3, 0.2);
    const cd direct = std::tan(p.b * z) / (p.b - p.a * std::tan(p.b * z));
    CHECK(std::abs(r_transform(p, z) - direct) < 1e-13);
    try {
        r_transform(LawParams::tangent(), std::numbers::pi / 2);
        FAIL("no pole error");
    } catch (const PoleError& e) {
        CHECK(e.nearest_pole().real() == doctest::Approx(std::numbers::pi / 2));
    }
    CHECK(moment_generating_limit(LawParams::tangent(), 0.0) == cd(1));
    CHECK(moment_generating_limit(LawParams::tangent(), 0.5).real() == doctest::Approx(1 + 0.5 * std::tan(0.5)));
}

TEST_CASE("tangent law cumulants") {
    const auto k = tangent_law_cumulants(8);
    const std::vector<ExactRational> expect{0, 1, 0, ExactRational(1, 3), 0, ExactRational(2, 15), 0,
                                            ExactRational(17, 315)};
    for (int r = 1; r <= 8; ++r) CHECK(*k[r].exact == expect[r - 1]);
    const auto g = limit_cumulants(LawParams::tangent(), 8);
    for (int r = 1; r <= 8; ++r) CHECK(*g[r].exact == expect[r - 1]);
}

TEST_CASE("limit cumulants against the R-transform series") {
    // a/b = 3/4, b = 4/5
    const LawParams p = LawParams::from_ratio(ExactRational(3, 4));
    const auto k = limit_cumulants(p, 12);
    CHECK(*k[1].exact == 0);
    for (int r = 2; r <= 12; ++r) {
        const ExactRational expect = ipow(ExactRational(4, 5), r - 2) * reduced_coefficient(ExactRational(3, 4), r - 1);
        REQUIRE(k[r].exact.has_value());
        CHECK(*k[r].exact == expect);
        CHECK(k[r].checks_ok);
    }
}

TEST_CASE("limit cumulants for irrational parameters") {
    for (double alpha : {0.3, 1.0, 2.0, 2.9}) {
        const LawParams p = LawParams::from_angle(alpha);
        const auto k = limit_cumulants(p, 16);
        CHECK(k[2].value == doctest::Approx(1));
        const auto routes = cumulant_routes(p, 7);
        CHECK(routes.tangent_poly == doctest::Approx(routes.derivative_poly).epsilon(1e-10));
        CHECK(routes.cot_derivative == doctest::Approx(routes.derivative_poly).epsilon(1e-10));
        // Cauchy integral of R over a small circle as an independent check of K_3, K_4
        const int m = 256;
        const double rad = 0.2;
        cd c3 = 0, c4 = 0;
        for (int j = 0; j < m; ++j) {
            const cd z = std::polar(rad, 2 * std::numbers::pi * j / m);
            const cd f = r_transform(p, z);
            c3 += f / (z * z) / double(m);
            c4 += f / (z * z * z) / double(m);
        }
        CHECK(std::abs(c3.real() - k[3].value) < 1e-10);
        CHECK(std::abs(c4.real() - k[4].value) < 1e-10);
    }
}

TEST_CASE("zigzag law") {
    const auto z = zigzag_law_cumulants(8);
    CHECK(*z[1].exact == 0);
    CHECK(*z[2].exact == ExactRational(1, 2));
    CHECK(*z[3].exact == ExactRational(1, 4));
    CHECK(*z[4].exact == ExactRational(1, 6));
    // (tan + sec - 1)/2 as an exact series
    const auto sec = cos_series(9).reciprocal();
    const auto r = ExactRational(1, 2) * (tan_series(9) + sec - RationalSeries::constant(1, 9));
    for (int n = 1; n <= 8; ++n) CHECK(*z[n].exact == r[n - 1]);
    // sqrt 2 times the zigzag law is the a = b law
    const auto ab = limit_cumulants(LawParams::from_ratio(1), 8);
    for (int n = 2; n <= 8; n += 2) CHECK(*ab[n].exact == *z[n].exact * ipow(ExactRational(2), n / 2));
    for (const auto& [p, e] : rescaling_identity(20)) CHECK(p == e);
}

TEST_CASE("finite-n R-transform") {
    const LawParams t = LawParams::tangent();
    CHECK(std::abs(finite_n_r_transform(t, 7, 0.0)) == 0);
    CHECK(finite_n_r_series(t, 3, 2)[1].real() == doctest::Approx(2.0 / 3));
    CHECK(std::abs(finite_n_r_transform(t, 1000000, 0.3) - std::tan(0.3)) < 1e-5);
    for (double alpha : {0.5, 1.3, 2.4}) {
        const LawParams p = LawParams::from_angle(alpha);
        for (int n : {1, 2, 5, 17, 32}) {
            const auto s = finite_n_r_series(p, n, 8);
            for (int r = 1; r <= 8; ++r) {
                const double tr = trace_power({n, 0.0, {p.a, p.b}}, r) / std::pow(double(n), r);
                CHECK(std::abs(s[r - 1] - tr) < 1e-9);
            }
            // the closed form against its own Taylor polynomial at small z
            cd poly = 0;
            const cd z(0.01, 0.005);
            for (int r = 8; r >= 1; --r) poly = poly * z + s[r - 1];
            CHECK(std::abs(finite_n_r_transform(p, n, z) - poly) < 1e-12);
        }
    }
}

TEST_CASE("degeneration to the free Poisson R-transform") {
    const auto [g, mp] = marchenko_pastur_limit_check(1e-4, 0.5);
    CHECK(std::abs(g - mp) < 1e-7);
    CHECK(mp.real() == doctest::Approx(1));
    const auto [g0, mp0] = marchenko_pastur_limit_check(1e-3, 0.0);
    CHECK(std::abs(g0) == 0);
    CHECK(std::abs(mp0) == 0);
    const double e2 = std::abs(marchenko_pastur_limit_check(1e-2, 0.5).first - 1.0);
    const double e3 = std::abs(marchenko_pastur_limit_check(1e-3, 0.5).first - 1.0);
    CHECK(e2 / e3 == doctest::Approx(100).epsilon(0.02));
}

TEST_CASE("moments of the limit laws") {
    const auto m = moments_of_limit(LawParams::tangent(), 6);
    CHECK(m[1] == 0);
    CHECK(m[2] == doctest::Approx(1));
    CHECK(m[4] == doctest::Approx(7.0 / 3));
    const auto mz = moments_of_limit(LawParams::from_ratio(1), 3);
    CHECK(mz[2] == doctest::Approx(1));
    CHECK(mz[3] == doctest::Approx(std::sqrt(8.0) / 4));
}

TEST_CASE("classical counterpart") {
    const auto c = bp_classical_cumulants(8);
    CHECK(c[0].closed == 1);
    CHECK(c[1].closed == ExactRational(1, 3));
    for (const auto& e : c) {
        CHECK(e.closed == e.free_cumulant);
        CHECK(std::abs(e.direct - to_double(e.closed)) <= 1e-6 * std::max(1.0, to_double(e.closed)));
    }
    // Basel check for k = 1: 2 (4/pi^2)(3/4) zeta(2) = 1
    CHECK(2 * (4 / (std::numbers::pi * std::numbers::pi)) * 0.75 * (std::numbers::pi * std::numbers::pi / 6) ==
          doctest::Approx(1));
}

}
