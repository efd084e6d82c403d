#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <numbers>

#include "radpd/quadrature.hpp"

using namespace radpd::quad;

TEST_CASE("Neumaier summation keeps small terms next to huge ones") {
    NeumaierSum s;
    for (double x : {1.0, 1e100, 1.0, -1e100}) {
        s.add(x);
    }
    CHECK(s.value() == 2.0);
    CHECK(s.abs_sum() == 2e100 + 2.0);
}

TEST_CASE("adaptive integration of smooth and peaked integrands") {
    AdaptiveResult r = integrate([](double x) { return std::exp(x); }, 0.0, 1.0);
    CHECK(r.converged);
    CHECK(std::fabs(r.value - std::expm1(1.0)) < 1e-14);

    r = integrate([](double x) { return 1.0 / (1e-4 + x * x); }, -1.0, 1.0);
    CHECK(r.converged);
    const double exact = 2.0 * std::atan(100.0) * 100.0;
    CHECK(std::fabs(r.value / exact - 1.0) < 1e-12);

    r = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0);
    CHECK(std::fabs(r.value - 2.0 / 3.0) < 1e-12);
}

TEST_CASE("Gauss-Jacobi moments match the beta-function oracle") {
    for (double a : {0.0, -0.5, 0.7, 3.0}) {
        for (double b : {0.0, 0.25, -0.3, 4.5}) {
            const Rule& rule = gauss_jacobi(12, a, b);
            REQUIRE(rule.nodes.size() == 12);
            for (int p = 0; p <= 2 * 12 - 1; p += 3) {
                double q = 0.0;
                for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                    q += rule.weights[i] * std::pow(1.0 + rule.nodes[i], p);
                }
                // int (1-x)^a (1+x)^(b+p) dx = 2^(a+b+p+1) B(a+1, b+p+1)
                const double exact =
                    std::pow(2.0, a + b + p + 1.0) * boost::math::beta(a + 1.0, b + p + 1.0);
                CHECK(std::fabs(q / exact - 1.0) < 1e-12);
            }
        }
    }
}

TEST_CASE("Gauss-Legendre nodes are sorted and symmetric") {
    const Rule& r = gauss_legendre(9);
    for (std::size_t i = 0; i + 1 < r.nodes.size(); ++i) {
        CHECK(r.nodes[i] < r.nodes[i + 1]);
    }
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        CHECK(std::fabs(r.nodes[i] + r.nodes[r.nodes.size() - 1 - i]) < 1e-14);
    }
    CHECK(std::fabs(r.nodes[4]) < 1e-14);
}
