#pragma once

#include <functional>
#include <limits>
#include <string>
#include <variant>

#include "radpd/kernels.hpp"

// Radial Fourier transforms in R^d, normalised as
//   phi_hat_d(z) = (2 pi)^{-d/2} int_0^inf t^{d-1} Omega_d(t z) phi(t) dt,
// so that phi(0) is the integral of the density over R^d. Scaled kernels satisfy
// phi(./beta) -> beta^d phi_hat_d(beta z).

namespace radpd {

enum class DensityMethod { ClosedFormMatern, CauchySeries, CauchyDelta2, NumericHankel };

std::string to_string(DensityMethod m);

struct SeriesDiagnostics {
    int terms_used = 0;
    double max_term_magnitude = 0.0;
    double cancellation_ratio = 1.0;
    bool pole_collision_detected = false;
};

struct DensityValue {
    double value = 0.0;
    DensityMethod method = DensityMethod::NumericHankel;
    SeriesDiagnostics diagnostics;  ///< populated for the Cauchy series only
};

/// Closed-form Matern density, z >= 0.
double matern_spectral(double z, double nu, double beta, int d);

/// Series density of the Generalized Cauchy family, delta in (0, 2), z >= 0.
/// Delegates to hankel_numeric (and reports NumericHankel) when the series loses
/// more than six digits to cancellation.
DensityValue cauchy_spectral_series(double z, double delta, double lambda, double beta, int d);

/// Density of (1 + (t/beta)^2)^{-lambda/2}, a Bessel-K shape in z.
double cauchy_delta2_spectral(double z, double lambda, double beta, int d);

struct HankelOptions {
    double rel_tol = 1e-8;
    int max_panels = 10000;
};

/// Numerical radial transform of phi, z > 0. Pass the support radius for
/// compactly supported phi (the integral stops there) or infinity.
double hankel_numeric(const std::function<double(double)>& phi, int d, double z,
                      double support = std::numeric_limits<double>::infinity(),
                      const HankelOptions& opts = {});

/// Density of phi(./beta) by the best available method.
DensityValue family_spectral(const KernelFamily& family, double beta, int d, double z);

/// Density of the Zastavnyi operator, combining the two scaled family densities.
DensityValue zastavnyi_spectral(const ZastavnyiSpec& spec, int d, double z);

/// Immutable evaluator z -> phi_hat_d(z) for a scaled kernel or an operator spec.
class SpectralDensity {
public:
    using Source = std::variant<ScaledKernel, ZastavnyiSpec>;

    SpectralDensity(const ScaledKernel& kernel, int d);
    SpectralDensity(const ZastavnyiSpec& spec, int d);

    DensityValue evaluate(double z) const;
    double operator()(double z) const { return evaluate(z).value; }

    int dimension() const noexcept { return d_; }
    /// Scale of a kernel source; beta1 for an operator source.
    double beta() const noexcept;
    /// Nominal method; series evaluations may still fall back per frequency.
    DensityMethod method() const noexcept { return method_; }
    const Source& source() const noexcept { return source_; }

private:
    Source source_;
    int d_;
    DensityMethod method_;
};

/// Nominal density method for a family.
DensityMethod nominal_method(const KernelFamily& family);

}  // namespace radpd
