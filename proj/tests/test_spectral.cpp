#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>

#include "radpd/errors.hpp"
#include "radpd/kernels.hpp"
#include "radpd/spectral.hpp"

using namespace radpd;
using std::numbers::pi;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace

TEST_CASE("Matern density: exponential kernel in one and three dimensions") {
    for (double z : {0.0, 0.5, 1.0, 3.0, 40.0}) {
        CHECK(rel(matern_spectral(z, 0.5, 1.0, 1), 1.0 / (pi * (1.0 + z * z))) < 1e-13);
        const double d3 = 1.0 / (pi * pi * std::pow(1.0 + z * z, 2.0));
        CHECK(rel(matern_spectral(z, 0.5, 1.0, 3), d3) < 1e-13);
    }
}

TEST_CASE("hankel_numeric reproduces known transforms") {
    const auto expo = [](double t) { return std::exp(-t); };
    for (double z : {0.5, 1.0, 3.0}) {
        CHECK(rel(hankel_numeric(expo, 1, z), 1.0 / (pi * (1.0 + z * z))) < 1e-8);
    }
    // (1 - t)_+ in one dimension: (1 - cos z) / (pi z^2)
    const auto tri = [](double t) { return t < 1.0 ? 1.0 - t : 0.0; };
    for (double z : {0.3, 2.0, 11.0}) {
        const double oracle = (1.0 - std::cos(z)) / (pi * z * z);
        CHECK(rel(hankel_numeric(tri, 1, z, 1.0), oracle) < 1e-10);
    }
    // Gaussian exp(-t^2/2) is self-dual up to (2 pi)^{-d/2}
    const auto gauss = [](double t) { return std::exp(-0.5 * t * t); };
    for (int d : {1, 2, 3, 5}) {
        for (double z : {0.2, 1.5, 4.0}) {
            const double oracle = std::pow(2.0 * pi, -0.5 * d) * std::exp(-0.5 * z * z);
            CHECK(rel(hankel_numeric(gauss, d, z), oracle) < 1e-8);
        }
    }
}

TEST_CASE("delta = 2 Cauchy density against the Bessel-K formula") {
    for (double lambda : {3.0, 5.0}) {
        for (int d : {1, 2, 3}) {
            for (double z : {0.2, 1.0, 4.0}) {
                const double nu = 0.5 * (lambda - d);
                const double oracle = std::pow(2.0, 1.0 - nu - d) * std::pow(pi, -0.5 * d) /
                                      boost::math::tgamma(0.5 * lambda) * std::pow(z, nu) *
                                      boost::math::cyl_bessel_k(nu, z);
                CHECK(rel(cauchy_delta2_spectral(z, lambda, 1.0, d), oracle) < 1e-13);
            }
        }
    }
    CHECK_THROWS_AS(cauchy_delta2_spectral(0.0, 2.0, 1.0, 2), UnboundedAtOriginError);
    CHECK(std::isfinite(cauchy_delta2_spectral(0.0, 5.0, 1.0, 2)));
}

TEST_CASE("Cauchy series agrees with numeric Hankel") {
    for (double delta : {0.5, 1.0, 1.5}) {
        for (int d : {1, 2, 3}) {
            for (double lambda : {d + 0.5, d + 2.0}) {
                const auto phi = [=](double t) { return gen_cauchy(t, delta, lambda); };
                for (double z : {0.1, 1.0, 5.0}) {
                    const DensityValue v = cauchy_spectral_series(z, delta, lambda, 1.0, d);
                    CHECK(rel(v.value, hankel_numeric(phi, d, z)) < 1e-6);
                    CHECK(v.diagnostics.terms_used > 0);
                }
            }
        }
    }
}

TEST_CASE("Cauchy series flags pole collisions and stays accurate there") {
    // delta = 1, lambda = 4, d = 2: the exponents 2 + n and 2m meet at every even n
    const DensityValue v = cauchy_spectral_series(1.0, 1.0, 4.0, 1.0, 2);
    CHECK(v.diagnostics.pole_collision_detected);
    const auto phi = [](double t) { return gen_cauchy(t, 1.0, 4.0); };
    CHECK(rel(v.value, hankel_numeric(phi, 2, 1.0)) < 1e-6);
}

TEST_CASE("Cauchy series at the origin") {
    CHECK_THROWS_AS(cauchy_spectral_series(0.0, 1.0, 1.0, 1.0, 2), UnboundedAtOriginError);
    // lambda > d: the finite limit
    const double delta = 1.0;
    const double lambda = 4.0;
    const int d = 1;
    // (1/pi) int_0^inf (1+t)^{-4} dt = 1/(3 pi)
    CHECK(rel(cauchy_spectral_series(0.0, delta, lambda, 1.0, d).value, 1.0 / (3.0 * pi)) <
          1e-13);
}

TEST_CASE("Cauchy series falls back under heavy cancellation") {
    const DensityValue v = cauchy_spectral_series(200.0, 1.0, 3.0, 1.0, 1);
    CHECK(v.method == DensityMethod::NumericHankel);
    CHECK(v.value > 0.0);
}

TEST_CASE("density of the scaled kernel obeys the scaling identity") {
    const ScaledKernel ks[] = {make_scaled(make_matern(1.5), 2.0),
                               make_scaled(make_gen_cauchy(1.0, 4.0), 0.5),
                               make_scaled(make_gen_wendland(1.0, 4.0), 2.0)};
    for (const auto& k : ks) {
        const auto scaled = [&](double t) { return eval_scaled(k, t); };
        const double support = support_radius(k.family) * k.beta;
        for (int d : {1, 2, 3}) {
            for (double z : {0.5, 1.0, 3.0}) {
                const double direct = hankel_numeric(scaled, d, z, support);
                CHECK(rel(family_spectral(k.family, k.beta, d, z).value, direct) < 1e-6);
            }
        }
    }
}

TEST_CASE("Zastavnyi density is the weighted combination") {
    const ZastavnyiSpec s(make_matern(0.5), -2.0, 0.075, 0.15);
    for (double z : {0.1, 3.0, 30.0}) {
        const double combo = s.weight2() * matern_spectral(z, 0.5, 0.15, 2) +
                             s.weight1() * matern_spectral(z, 0.5, 0.075, 2);
        CHECK(rel(zastavnyi_spectral(s, 2, z).value, combo) < 1e-14);
    }
    const SpectralDensity dens(s, 3);
    CHECK(dens.dimension() == 3);
    CHECK(dens.method() == DensityMethod::ClosedFormMatern);
    CHECK(dens(0.001) < 0.0);
}

TEST_CASE("density integrates to phi(0)") {
    // one dimension: 2 int_0^inf F(z) dz = phi(0) = 1, here for delta = 1, lambda = 3
    const auto f = [](double z) { return cauchy_spectral_series(z, 1.0, 3.0, 1.0, 1).value; };
    double total = 0.0;
    const int n = 4000;
    // map z = u / (1 - u) and use the midpoint rule in u
    for (int i = 0; i < n; ++i) {
        const double u = (i + 0.5) / n;
        const double z = u / (1.0 - u);
        total += f(z) / ((1.0 - u) * (1.0 - u)) / n;
    }
    CHECK(std::fabs(2.0 * total - 1.0) < 1e-4);
}

TEST_CASE("method names and validation") {
    CHECK(to_string(DensityMethod::ClosedFormMatern) == "closed_form_matern");
    CHECK(to_string(DensityMethod::NumericHankel) == "numeric_hankel");
    CHECK_THROWS_AS(matern_spectral(-1.0, 0.5, 1.0, 1), DomainError);
    CHECK_THROWS_AS(cauchy_spectral_series(1.0, 2.0, 1.0, 1.0, 1), DomainError);
    CHECK_THROWS_AS(SpectralDensity(make_scaled(make_matern(1.0), 1.0), 0), DomainError);
    const auto slow = [](double t) { return 1.0 / (1.0 + t); };
    HankelOptions opts;
    opts.max_panels = 20;
    opts.rel_tol = 1e-15;
    CHECK_THROWS_AS(hankel_numeric(slow, 3, 1.0, std::numeric_limits<double>::infinity(), opts),
                    ConvergenceError);
}
