#include <doctest.h>

#include "tanlaw/errors.hpp"
#include "tanlaw/solvers.hpp"

#include <cmath>

using namespace tanlaw;

TEST_SUITE("solvers") {

TEST_CASE("Newton with bisection safeguard") {
    const auto r = newton_bisect([](double x) { return x * x - 2; }, [](double x) { return 2 * x; }, 0.0, 2.0, 1e-14);
    CHECK(r.x == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(r.residual < 1e-13);
    // the Newton step from x = 0 leaves the bracket; the safeguard must catch it
    const auto a = newton_bisect([](double x) { return std::atan(x - 0.3); },
                                 [](double x) { return 1 / (1 + (x - 0.3) * (x - 0.3)); }, -10.0, 30.0, 1e-13);
    CHECK(a.x == doctest::Approx(0.3).epsilon(1e-12));
    CHECK_THROWS_AS(newton_bisect([](double x) { return x * x + 1; }, [](double x) { return 2 * x; }, -1.0, 1.0, 1e-10),
                    ArgumentError);
}

TEST_CASE("bisection") {
    const auto r = bisect([](double x) { return std::cos(x) - x; }, 0.0, 1.0, 1e-13);
    CHECK(std::abs(std::cos(r.x) - r.x) < 1e-12);
}

TEST_CASE("golden-section minimum") {
    const auto m = golden_section_min([](double x) { return (x - 1.25) * (x - 1.25) + 3; }, -4.0, 5.0, 1e-10);
    CHECK(m.x == doctest::Approx(1.25).epsilon(1e-8));
    CHECK(m.value == doctest::Approx(3));
}

}
