#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <vector>

#include "radpd/errors.hpp"
#include "radpd/quadrature.hpp"
#include "radpd/spectral.hpp"
#include "radpd/specfun.hpp"

namespace radpd {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double panel(const std::function<double(double)>& f, double a, double b) {
    quad::AdaptiveOptions o;
    o.rel_tol = 1e-14;
    o.max_subdivisions = 2000;
    return quad::integrate(f, a, b, o).value;
}

// Repeated averaging of consecutive partial sums (Euler transform of the tail).
double euler_average(const std::deque<double>& sums) {
    std::vector<double> v(sums.begin(), sums.end());
    for (std::size_t level = v.size(); level > 1; --level) {
        for (std::size_t i = 0; i + 1 < level; ++i) {
            v[i] = 0.5 * (v[i] + v[i + 1]);
        }
    }
    return v.front();
}

}  // namespace

double hankel_numeric(const std::function<double(double)>& phi, int d, double z, double support,
                      const HankelOptions& opts) {
    if (d < 1) {
        throw DomainError("hankel_numeric: requires d >= 1");
    }
    if (!std::isfinite(z) || z <= 0.0) {
        throw DomainError("hankel_numeric: requires finite z > 0");
    }
    if (!(support > 0.0)) {
        throw DomainError("hankel_numeric: requires a positive support radius");
    }
    const double nu = 0.5 * d - 1.0;
    // Integrate in s = t z between consecutive zeros of J_nu(s).
    const auto integrand = [&](double s) {
        return std::pow(s, d - 1) * specfun::omega(d, s) * phi(s / z);
    };
    const double scale = std::pow(2.0 * std::numbers::pi, -0.5 * d) * std::pow(z, -d);

    quad::NeumaierSum sum;
    double lo = 0.0;
    if (std::isfinite(support)) {
        const double end = support * z;
        for (int k = 1; k <= opts.max_panels; ++k) {
            const double hi = std::min(specfun::bessel_j_zero(nu, k), end);
            sum.add(panel(integrand, lo, hi));
            lo = hi;
            if (hi >= end) {
                return scale * sum.value();
            }
        }
        throw ConvergenceError("hankel_numeric: support spans too many panels",
                               scale * sum.value());
    }

    constexpr std::size_t kWindow = 16;
    std::deque<double> partial;
    double max_abs = 0.0;
    double prev_estimate = std::numeric_limits<double>::quiet_NaN();
    int quiet = 0;
    for (int k = 1; k <= opts.max_panels; ++k) {
        const double hi = specfun::bessel_j_zero(nu, k);
        sum.add(panel(integrand, lo, hi));
        lo = hi;
        const double s = sum.value();
        max_abs = std::max(max_abs, std::fabs(s));
        partial.push_back(s);
        if (partial.size() > kWindow) {
            partial.pop_front();
        }
        if (k < 8) {
            continue;
        }
        const double estimate = euler_average(partial);
        const double delta = std::fabs(estimate - prev_estimate);
        const double tol = std::max(opts.rel_tol * std::fabs(estimate), 8.0 * kEps * max_abs);
        quiet = delta <= tol ? quiet + 1 : 0;
        prev_estimate = estimate;
        if (quiet >= 2) {
            return scale * estimate;
        }
    }
    throw ConvergenceError("hankel_numeric: panel sums did not converge",
                           scale * (std::isnan(prev_estimate) ? sum.value() : prev_estimate));
}

}  // namespace radpd
