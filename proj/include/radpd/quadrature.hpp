#pragma once

#include <functional>
#include <vector>

namespace radpd::quad {

/// Compensated (Neumaier) summation.
class NeumaierSum {
public:
    void add(double x) noexcept;
    double value() const noexcept { return sum_ + comp_; }
    /// Running sum of |x|, useful as a roundoff scale.
    double abs_sum() const noexcept { return abs_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
    double abs_ = 0.0;
};

struct AdaptiveOptions {
    double abs_tol = 0.0;
    double rel_tol = 1e-12;
    int max_subdivisions = 4000;
};

struct AdaptiveResult {
    double value = 0.0;
    double abs_error = 0.0;
    double abs_integral = 0.0;  ///< estimate of the integral of |f|
    int subdivisions = 0;
    bool converged = false;
};

/// Global adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b].
/// Never throws on non-convergence; inspect `converged`.
AdaptiveResult integrate(const std::function<double(double)>& f, double a, double b,
                         const AdaptiveOptions& opts = {});

struct Rule {
    std::vector<double> nodes;    ///< on [-1, 1], ascending
    std::vector<double> weights;
};

/// n-point Gauss-Jacobi rule for the weight (1 - x)^alpha (1 + x)^beta on [-1, 1],
/// alpha, beta > -1, built by Golub-Welsch. Rules are cached; the reference stays valid.
const Rule& gauss_jacobi(int n, double alpha, double beta);

/// n-point Gauss-Legendre rule (alpha = beta = 0).
inline const Rule& gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

}  // namespace radpd::quad
