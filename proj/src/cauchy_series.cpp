#include <cmath>
#include <limits>
#include <numbers>

#include "radpd/errors.hpp"
#include "radpd/kernels.hpp"
#include "radpd/spectral.hpp"
#include "radpd/specfun.hpp"

namespace radpd {

namespace {

using specfun::gamma_sign;
using specfun::log_gamma;

constexpr double kCollisionTol = 1e-8;
constexpr double kPairTol = 1e-4;
constexpr double kCancellationLimit = 1e6;
constexpr int kMaxTerms = 10000;

struct Term {
    double value;
    bool collision;
};

// Distance of x from the nearest non-positive integer (infinity if x > 1/2).
double pole_distance(double x) {
    if (x > 0.5) {
        return std::numeric_limits<double>::infinity();
    }
    return std::fabs(x - std::round(x));
}

// First series, without the common factor beta^d 2^{-d} pi^{-d/2}:
// (-1)^n / n! Gamma(l/d + n) / Gamma(l/d) Gamma((d - l - n delta)/2)
//   / Gamma((l + n delta)/2) (x/2)^{l + n delta - d}
Term first_term(int n, double delta, double lambda, int d, double log_y) {
    const double a = 0.5 * (d - lambda - n * delta);
    if (pole_distance(a) < 0.5 * kCollisionTol) {
        return {0.0, true};
    }
    const double r = lambda / delta;
    const double logm = log_gamma(r + n) - log_gamma(r) - std::lgamma(n + 1.0) + log_gamma(a) -
                        log_gamma(0.5 * (lambda + n * delta)) +
                        (lambda + n * delta - d) * log_y;
    const int sign = (n % 2 == 0 ? 1 : -1) * gamma_sign(a);
    return {sign * std::exp(logm), false};
}

// Second series, same common factor removed:
// 2/(delta Gamma(l/d)) (-1)^m / m! Gamma((2m + d)/delta) Gamma((l - 2m - d)/delta)
//   / Gamma(m + d/2) (x/2)^{2m}
Term second_term(int m, double delta, double lambda, int d, double log_y) {
    const double b = (lambda - 2.0 * m - d) / delta;
    if (pole_distance(b) < kCollisionTol / delta) {
        return {0.0, true};
    }
    const double logm = std::numbers::ln2 - std::log(delta) - log_gamma(lambda / delta) -
                        std::lgamma(m + 1.0) + log_gamma((2.0 * m + d) / delta) + log_gamma(b) -
                        log_gamma(m + 0.5 * d) + (m == 0 ? 0.0 : 2.0 * m * log_y);
    const int sign = (m % 2 == 0 ? 1 : -1) * gamma_sign(b);
    return {sign * std::exp(logm), false};
}

// Limit of first_term(n) + second_term(m) when lambda + n delta = 2m + d: the simple
// poles of the two Gamma factors cancel and leave a digamma combination.
double collision_term(int n, int m, double delta, double lambda, int d, double log_y) {
    using specfun::digamma;
    const double r = lambda / delta;
    const double logc = std::numbers::ln2 - std::lgamma(n + 1.0) - std::lgamma(m + 1.0) +
                        log_gamma((2.0 * m + d) / delta) - log_gamma(r) -
                        log_gamma(m + 0.5 * d) + (m == 0 ? 0.0 : 2.0 * m * log_y);
    const double bracket = -digamma(r + n) / delta + 0.5 * digamma(0.5 * (lambda + n * delta)) -
                           log_y + 0.5 * digamma(m + 1.0) + digamma(n + 1.0) / delta;
    const int sign = (n + m) % 2 == 0 ? 1 : -1;
    return sign * std::exp(logc) * bracket;
}

struct RawSeries {
    double sum = 0.0;
    double max_partial = 0.0;
    SeriesDiagnostics diag;
    bool collision = false;
    bool overflow = false;
};

// Both series merged in order of increasing power of x, with near-equal powers
// added pairwise before entering the running sum.
RawSeries raw_series(double x, double delta, double lambda, int d) {
    RawSeries out;
    const double log_y = std::log(0.5 * x);
    int n = 0;
    int m = 0;
    int small_run = 0;
    double prev_mag = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    double comp = 0.0;  // Neumaier compensation
    for (int count = 1; count <= kMaxTerms; ++count) {
        const double ea = lambda + n * delta - d;
        const double eb = 2.0 * m;
        double term = 0.0;
        if (std::fabs(ea - eb) < kCollisionTol) {
            term = collision_term(n, m, delta, lambda, d, log_y);
            out.diag.pole_collision_detected = true;
            ++n;
            ++m;
        } else if (std::fabs(ea - eb) < kPairTol) {
            const Term t1 = first_term(n, delta, lambda, d, log_y);
            const Term t2 = second_term(m, delta, lambda, d, log_y);
            if (t1.collision || t2.collision) {
                out.collision = true;
                return out;
            }
            term = t1.value + t2.value;
            ++n;
            ++m;
        } else if (ea < eb) {
            const Term t1 = first_term(n, delta, lambda, d, log_y);
            if (t1.collision) {
                out.collision = true;
                return out;
            }
            term = t1.value;
            ++n;
        } else {
            const Term t2 = second_term(m, delta, lambda, d, log_y);
            if (t2.collision) {
                out.collision = true;
                return out;
            }
            term = t2.value;
            ++m;
        }
        const double mag = std::fabs(term);
        if (!std::isfinite(term) || mag > 1e300) {
            out.overflow = true;
            out.diag.terms_used = count;
            out.diag.max_term_magnitude = std::numeric_limits<double>::infinity();
            return out;
        }
        const double t = sum + term;
        comp += std::fabs(sum) >= mag ? (sum - t) + term : (term - t) + sum;
        sum = t;
        const double partial = sum + comp;
        out.max_partial = std::max(out.max_partial, std::fabs(partial));
        out.diag.max_term_magnitude = std::max(out.diag.max_term_magnitude, mag);
        out.diag.terms_used = count;
        if (mag < 1e-16 * std::fabs(partial) && mag <= prev_mag) {
            if (++small_run >= 3) {
                out.sum = partial;
                return out;
            }
        } else {
            small_run = 0;
        }
        prev_mag = mag;
    }
    throw ConvergenceError("cauchy_spectral_series: term limit reached", sum + comp);
}

void validate_series_args(double z, double delta, double lambda, double beta, int d) {
    if (!std::isfinite(z) || z < 0.0) {
        throw DomainError("cauchy_spectral_series: requires finite z >= 0");
    }
    if (!(delta > 0.0 && delta < 2.0)) {
        throw DomainError("cauchy_spectral_series: requires delta in (0, 2)");
    }
    if (!std::isfinite(lambda) || lambda <= 0.0) {
        throw DomainError("cauchy_spectral_series: requires lambda > 0");
    }
    if (!std::isfinite(beta) || beta <= 0.0) {
        throw DomainError("cauchy_spectral_series: requires beta > 0");
    }
    if (d < 1) {
        throw DomainError("cauchy_spectral_series: requires d >= 1");
    }
}

}  // namespace

DensityValue cauchy_spectral_series(double z, double delta, double lambda, double beta, int d) {
    validate_series_args(z, delta, lambda, beta, d);
    const double common =
        std::pow(beta, d) * std::pow(2.0, -d) * std::pow(std::numbers::pi, -0.5 * d);
    DensityValue out;
    out.method = DensityMethod::CauchySeries;
    if (z == 0.0) {
        if (lambda <= d) {
            throw UnboundedAtOriginError("cauchy density is unbounded at z = 0 when lambda <= d");
        }
        out.value = common * second_term(0, delta, lambda, d, 0.0).value;
        out.diagnostics.terms_used = 1;
        out.diagnostics.max_term_magnitude = std::fabs(out.value / common);
        return out;
    }

    const double x = beta * z;
    const RawSeries raw = raw_series(x, delta, lambda, d);
    if (raw.collision) {
        throw PoleCollisionError("cauchy_spectral_series: unresolved pole collision");
    }
    out.diagnostics = raw.diag;
    const double ratio = raw.overflow || raw.sum == 0.0
                             ? std::numeric_limits<double>::infinity()
                             : std::max(1.0, raw.max_partial / std::fabs(raw.sum));
    out.diagnostics.cancellation_ratio = ratio;
    if (ratio > kCancellationLimit) {
        const auto phi = [=](double t) { return gen_cauchy(t, delta, lambda); };
        out.value = std::pow(beta, d) * hankel_numeric(phi, d, x);
        out.method = DensityMethod::NumericHankel;
        return out;
    }
    out.value = common * raw.sum;
    return out;
}

}  // namespace radpd
