#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "radpd/kernels.hpp"
#include "radpd/spectral.hpp"

namespace radpd {

/// Geometric grid of n points from lo to hi inclusive.
struct GeometricGrid {
    double lo = 1e-3;
    double hi = 1e3;
    int n = 400;

    Eigen::ArrayXd points() const;
    std::string describe() const;
};

enum class PDMethod { SpectralGrid, GramEigen, CompleteMonotonicity };
enum class Verdict { consistent, refuted };

std::string to_string(PDMethod m);
std::string to_string(Verdict v);

/// Outcome of a numerical positive-definiteness test. Evidence, not proof.
struct PDVerdict {
    PDMethod method = PDMethod::SpectralGrid;
    Verdict verdict = Verdict::consistent;
    double witness_location = 0.0;  ///< z, s, or the Gram point index
    int witness_order = 0;          ///< difference order k (complete monotonicity only)
    double witness_value = 0.0;     ///< the minimum inspected value
    double tolerance = 0.0;
    std::string grid_spec;
};

using RadialFunction = std::function<double(double)>;

struct SpectralCheckOptions {
    GeometricGrid grid{};
    double rel_tol = 1e-10;
    /// Extend the grid decade by decade up to extend_max when no witness is found.
    /// Applies only to closed-form densities.
    bool extend = true;
    double extend_max = 1e6;
};

PDVerdict spectral_nonnegativity(const SpectralDensity& density,
                                 const SpectralCheckOptions& opts = {});
PDVerdict spectral_nonnegativity(const ZastavnyiSpec& spec, int d,
                                 const SpectralCheckOptions& opts = {});
PDVerdict spectral_nonnegativity(const ScaledKernel& kernel, int d,
                                 const SpectralCheckOptions& opts = {});

/// Minimum eigenvalue of [f(|x_k - x_h|)] on n_points uniform points in [0,1]^d.
/// Consistent iff the minimum is >= -1e-8 * n_points.
PDVerdict gram_min_eigenvalue(const RadialFunction& f, int d, int n_points,
                              std::uint64_t seed);

/// The Gram sample points (row per point), reproducible from the seed.
Eigen::MatrixXd gram_points(int d, int n_points, std::uint64_t seed);

struct MonotonicityOptions {
    int k_max = 8;
    GeometricGrid t_grid{1e-3, 10.0, 200};
    double tol = 1e-10;
};

/// Checks (-1)^k Delta_h^k psi(s) >= -tol, psi(s) = f(sqrt(s)), h = s/20, k = 0..k_max.
PDVerdict complete_monotonicity_check(const RadialFunction& f,
                                      const MonotonicityOptions& opts = {});

enum class TheoremId { T2_matern, T3_wendland, T4_cauchy, T5_cauchy2, GW_base, GW_positive_eps };
enum class Expectation { member, non_member, outside_theorem_scope };

std::string to_string(TheoremId id);
std::string to_string(Expectation e);

struct TheoremClaim {
    TheoremId theorem_id = TheoremId::GW_base;
    Expectation expected = Expectation::outside_theorem_scope;
    KernelFamily family = Matern{0.5};
    std::optional<double> eps;  ///< empty for the base family
    std::optional<int> d;       ///< empty stands for d = infinity
    /// Class the claim refers to: empty for Phi_inf, otherwise Phi_d.
    std::optional<int> target_dim;
    bool iff = false;  ///< the expectation comes from an "if and only if" clause
    std::string condition;
};

/// Expected membership from the theorem conditions. eps empty means the base family.
TheoremClaim theorem_predicate(const KernelFamily& family, std::optional<double> eps,
                               std::optional<int> d);

struct Lemma1Report {
    double nu = 0.0;
    int points = 0;
    bool upper_holds = true;
    double upper_worst_margin = 0.0;  ///< min over the grid of (bound - ratio) > 0
    bool lower_checked = false;
    bool lower_holds = true;
    double lower_worst_margin = 0.0;  ///< min over the grid of (ratio - bound) > 0
    bool small_z_checked = false;
    double small_z_ratio = 0.0;  ///< ratio at z = 1e-4
    bool small_z_ok = true;
    double large_z_slope = 0.0;  ///< ratio / z at z = 1e3
    bool large_z_ok = true;

    bool passed() const;
};

/// Checks the two-sided bound on z K'_nu/K_nu and its limits.
Lemma1Report lemma1_bounds_check(double nu, const GeometricGrid& z_grid = {1e-3, 50.0, 100});

struct Lemma2Report {
    double eps = 0.0;
    double lambda = 0.0;
    int d = 0;
    int points = 0;
    bool decreasing = true;
    double max_log_step = 0.0;  ///< max of log g(b_{i+1}) - log g(b_i); < 0 when decreasing
    bool sign_condition = true;
    double max_sign_value = 0.0;  ///< max of exponent + b K'/K; < 0 when the condition holds
    double max_derivative_mismatch = 0.0;  ///< analytic vs central-difference g', relative
    bool derivative_ok = true;

    bool passed() const;
};

/// Checks g(b) = b^{eps + (2d + lambda)/4} K_{(2d - lambda)/4}(b) is decreasing.
/// Throws HypothesisError unless d > lambda/2 + 2 and 2 eps < -lambda.
Lemma2Report lemma2_monotonicity_check(double eps, double lambda, int d,
                                       const GeometricGrid& beta_grid = {0.01, 20.0, 200});

}  // namespace radpd
