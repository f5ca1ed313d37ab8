#include <doctest.h>

#include <cmath>

#include "hh/quad.hpp"

using namespace hh;

TEST_CASE("gauss16 panel is exact for monomials up to degree 31") {
    for (int k = 0; k <= 31; ++k) {
        double got = gauss16([k](double x) { return std::pow(x, k); }, 0.0, 1.0);
        double want = 1.0 / (k + 1);
        CHECK(std::abs(got - want) <= 1e-13 * want);
    }
}

TEST_CASE("integrate_1d basics") {
    QuadResult q = integrate_1d([](double x) { return x; }, {0, 1}, 1e-9);
    CHECK(std::abs(q.value - 0.5) <= 1e-14);
    CHECK(q.err_estimate <= 1e-15);

    q = integrate_1d([](double x) { return std::pow(x, 1.5); }, {0, 1}, 1e-9);
    CHECK(std::abs(q.value - 0.4) <= 1e-9);

    // equality-case integrand of the 1-D product bound at s = 0.5
    q = integrate_1d([](double x) { return std::pow(x, 1.5); }, {0, 1}, 1e-12);
    CHECK(std::abs(q.value - 0.4) <= 1e-11);
}

TEST_CASE("integrate_2d basics") {
    QuadResult q = integrate_2d([](double, double) { return 1.0; }, {0, 1, 0, 1}, 1e-9);
    CHECK(std::abs(q.value - 1.0) <= 1e-14);

    q = integrate_2d([](double x, double y) { return (x - 1) * (y - 1); }, {0, 1, 0, 1}, 1e-9);
    CHECK(std::abs(q.value - 0.25) <= 1e-13);

    // (x+y)*sqrt(x*y) integrates to 2*(2/5)*(2/3) = 8/15
    q = integrate_2d([](double x, double y) { return (x + y) * std::sqrt(x * y); }, {0, 1, 0, 1},
                     1e-9);
    CHECK(std::abs(q.value - 8.0 / 15.0) <= 1e-9);
}

TEST_CASE("riemann midpoint oracle") {
    CHECK(riemann_2d([](double, double) { return 1.0; }, {0.25, 1.5, -1, 3}, 7) ==
          doctest::Approx(1.25 * 4.0).epsilon(1e-14));
    // midpoint rule is exact for linear integrands even at n = 1
    CHECK(riemann_2d([](double x, double) { return x; }, {0, 1, 0, 1}, 1) == 0.5);
    double r = riemann_2d([](double x, double y) { return (x + y) * std::sqrt(x * y); },
                          {0, 1, 0, 1}, 512);
    CHECK(std::abs(r - 8.0 / 15.0) <= 1e-4);
}

TEST_CASE("quadrature agrees with the midpoint oracle") {
    auto check = [](const Fn2& f) {
        double q = integrate_2d(f, {0, 1, 0, 1}, 1e-9).value;
        double r = riemann_2d(f, {0, 1, 0, 1}, 1024);
        CHECK(std::abs(q - r) <= 1e-5 * std::max(1.0, std::abs(q)));
    };
    check([](double x, double y) { return x * y; });
    check([](double x, double y) { return std::exp(x) + std::exp(y); });
    check([](double x, double y) { return std::sqrt(x * y); });
    check([](double x, double y) { return std::pow(x, 0.3) + std::pow(y, 0.3); });
}

TEST_CASE("linearity within combined error estimates") {
    Fn1 f = [](double x) { return std::exp(x); };
    Fn1 g = [](double x) { return std::sqrt(x); };
    double alpha = 2.5, beta = -1.25;
    QuadResult qf = integrate_1d(f, {0, 2}, 1e-10);
    QuadResult qg = integrate_1d(g, {0, 2}, 1e-10);
    QuadResult qc = integrate_1d([&](double x) { return alpha * f(x) + beta * g(x); }, {0, 2},
                                 1e-10);
    double lhs = qc.value;
    double rhs = alpha * qf.value + beta * qg.value;
    double tol = qc.err_estimate + std::abs(alpha) * qf.err_estimate +
                 std::abs(beta) * qg.err_estimate + 1e-12;
    CHECK(std::abs(lhs - rhs) <= tol);
}

TEST_CASE("fubini for smooth integrands") {
    Fn2 f = [](double x, double y) { return std::exp(x) * (1 + y * y); };
    Rect r{0, 1.5, -0.5, 1};
    double direct = integrate_2d(f, r, 1e-11).value;
    double iterated = integrate_1d(
                          [&](double x) {
                              return integrate_1d([&](double y) { return f(x, y); },
                                                  {r.c, r.d}, 1e-11)
                                  .value;
                          },
                          {r.a, r.b}, 1e-11)
                          .value;
    CHECK(std::abs(direct - iterated) <= 1e-9 * std::max(1.0, std::abs(direct)));
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(integrate_1d([](double) { return 0.0; }, {1, 0}, 1e-9),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate_1d([](double x) { return x; }, {0, 1}, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate_2d([](double, double) { return 0.0; }, {0, 1, 2, 2}, 1e-9),
                    std::invalid_argument);
    CHECK_THROWS_AS(riemann_2d([](double, double) { return 0.0; }, {0, 1, 0, 1}, 0),
                    std::invalid_argument);
}

TEST_CASE("non-convergence is a hard error") {
    // divergent integral: every split of the panel at 0 contributes another ln 2
    Fn1 f = [](double x) { return 1.0 / x; };
    CHECK_THROWS_AS(integrate_1d(f, {0, 1}, 1e-9), NumericalError);
}
