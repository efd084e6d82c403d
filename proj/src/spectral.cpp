#include "radpd/spectral.hpp"

#include <cmath>
#include <numbers>

#include "radpd/errors.hpp"
#include "radpd/quadrature.hpp"
#include "radpd/specfun.hpp"

namespace radpd {

namespace {

constexpr double kPi = std::numbers::pi;

void check_common(double z, double beta, int d, const char* fn) {
    if (!std::isfinite(z) || z < 0.0) {
        throw DomainError(std::string(fn) + ": requires finite z >= 0");
    }
    if (!std::isfinite(beta) || beta <= 0.0) {
        throw DomainError(std::string(fn) + ": requires beta > 0");
    }
    if (d < 1) {
        throw DomainError(std::string(fn) + ": requires d >= 1");
    }
}

double wendland_density(const GeneralizedWendland& w, double beta, int d, double z) {
    const auto phi = [&](double t) { return gen_wendland(t, w.kappa, w.mu); };
    if (z == 0.0) {
        quad::AdaptiveOptions o;
        o.rel_tol = 1e-13;
        const auto r = quad::integrate(
            [&](double t) { return std::pow(t, d - 1) * phi(t); }, 0.0, 1.0, o);
        return std::pow(beta, d) * std::pow(2.0 * kPi, -0.5 * d) * specfun::omega(d, 0.0) *
               r.value;
    }
    return std::pow(beta, d) * hankel_numeric(phi, d, beta * z, 1.0);
}

}  // namespace

std::string to_string(DensityMethod m) {
    switch (m) {
        case DensityMethod::ClosedFormMatern: return "closed_form_matern";
        case DensityMethod::CauchySeries: return "cauchy_series";
        case DensityMethod::CauchyDelta2: return "cauchy_delta2";
        case DensityMethod::NumericHankel: return "numeric_hankel";
    }
    return "unknown";
}

double matern_spectral(double z, double nu, double beta, int d) {
    check_common(z, beta, d, "matern_spectral");
    if (!std::isfinite(nu) || nu <= 0.0) {
        throw DomainError("matern_spectral: requires nu > 0");
    }
    const double a = nu + 0.5 * d;
    const double bz = beta * z;
    const double logv = std::lgamma(a) - 0.5 * d * std::log(kPi) - std::lgamma(nu) +
                        d * std::log(beta) - a * std::log1p(bz * bz);
    return std::exp(logv);
}

double cauchy_delta2_spectral(double z, double lambda, double beta, int d) {
    check_common(z, beta, d, "cauchy_delta2_spectral");
    if (!std::isfinite(lambda) || lambda <= 0.0) {
        throw DomainError("cauchy_delta2_spectral: requires lambda > 0");
    }
    // beta^d 2^{1-nu-d} pi^{-d/2} / Gamma(lambda/2) (beta z)^nu K_nu(beta z), nu = (lambda-d)/2
    const double nu = 0.5 * (lambda - d);
    const double base = d * std::log(beta) - 0.5 * d * std::log(kPi) - std::lgamma(0.5 * lambda);
    if (z == 0.0) {
        if (nu <= 0.0) {
            throw UnboundedAtOriginError(
                "cauchy_delta2_spectral: density is unbounded at z = 0 when lambda <= d");
        }
        return std::exp(base - d * std::numbers::ln2 + std::lgamma(nu));
    }
    const double x = beta * z;
    const double logv = base + (1.0 - nu - d) * std::numbers::ln2 + nu * std::log(x) +
                        specfun::log_bessel_k(nu, x);
    return std::exp(logv);
}

DensityMethod nominal_method(const KernelFamily& family) {
    if (std::holds_alternative<Matern>(family)) {
        return DensityMethod::ClosedFormMatern;
    }
    if (const auto* c = std::get_if<GeneralizedCauchy>(&family)) {
        return c->delta == 2.0 ? DensityMethod::CauchyDelta2 : DensityMethod::CauchySeries;
    }
    return DensityMethod::NumericHankel;
}

DensityValue family_spectral(const KernelFamily& family, double beta, int d, double z) {
    validate(family);
    check_common(z, beta, d, "family_spectral");
    DensityValue out;
    out.method = nominal_method(family);
    if (const auto* m = std::get_if<Matern>(&family)) {
        out.value = matern_spectral(z, m->nu, beta, d);
    } else if (const auto* c = std::get_if<GeneralizedCauchy>(&family)) {
        if (c->delta == 2.0) {
            out.value = cauchy_delta2_spectral(z, c->lambda, beta, d);
        } else {
            out = cauchy_spectral_series(z, c->delta, c->lambda, beta, d);
        }
    } else {
        out.value = wendland_density(std::get<GeneralizedWendland>(family), beta, d, z);
    }
    return out;
}

DensityValue zastavnyi_spectral(const ZastavnyiSpec& spec, int d, double z) {
    const DensityValue f2 = family_spectral(spec.family(), spec.beta2(), d, z);
    const DensityValue f1 = family_spectral(spec.family(), spec.beta1(), d, z);
    DensityValue out;
    out.value = spec.weight2() * f2.value + spec.weight1() * f1.value;
    // Report the weaker of the two methods (a numeric fallback on either side).
    out.method = f2.method == DensityMethod::NumericHankel ? f2.method : f1.method;
    out.diagnostics = f1.diagnostics.cancellation_ratio >= f2.diagnostics.cancellation_ratio
                          ? f1.diagnostics
                          : f2.diagnostics;
    out.diagnostics.pole_collision_detected =
        f1.diagnostics.pole_collision_detected || f2.diagnostics.pole_collision_detected;
    return out;
}

SpectralDensity::SpectralDensity(const ScaledKernel& kernel, int d)
    : source_(make_scaled(kernel.family, kernel.beta)),
      d_(d),
      method_(nominal_method(kernel.family)) {
    if (d < 1) {
        throw DomainError("SpectralDensity: requires d >= 1");
    }
}

SpectralDensity::SpectralDensity(const ZastavnyiSpec& spec, int d)
    : source_(spec), d_(d), method_(nominal_method(spec.family())) {
    if (d < 1) {
        throw DomainError("SpectralDensity: requires d >= 1");
    }
}

double SpectralDensity::beta() const noexcept {
    if (const auto* k = std::get_if<ScaledKernel>(&source_)) {
        return k->beta;
    }
    return std::get<ZastavnyiSpec>(source_).beta1();
}

DensityValue SpectralDensity::evaluate(double z) const {
    if (const auto* k = std::get_if<ScaledKernel>(&source_)) {
        return family_spectral(k->family, k->beta, d_, z);
    }
    return zastavnyi_spectral(std::get<ZastavnyiSpec>(source_), d_, z);
}

}  // namespace radpd
