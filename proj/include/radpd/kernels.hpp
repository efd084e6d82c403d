#pragma once

#include <Eigen/Core>
#include <string>
#include <variant>

namespace radpd {

struct Matern {
    double nu;
};

struct GeneralizedCauchy {
    double delta;
    double lambda;
};

struct GeneralizedWendland {
    double kappa;
    double mu;
};

/// Radial part phi(.; theta) of one of the three parametric families.
/// Construct through the make_* helpers, which validate parameter ranges.
using KernelFamily = std::variant<Matern, GeneralizedCauchy, GeneralizedWendland>;

KernelFamily make_matern(double nu);
KernelFamily make_gen_cauchy(double delta, double lambda);
KernelFamily make_gen_wendland(double kappa, double mu);

/// Throws DomainError if the parameters are out of range.
void validate(const KernelFamily& family);

std::string family_name(const KernelFamily& family);

/// Support radius of the unscaled family: 1 for Generalized Wendland, infinity otherwise.
double support_radius(const KernelFamily& family);

struct ScaledKernel {
    KernelFamily family;
    double beta;
};

ScaledKernel make_scaled(const KernelFamily& family, double beta);

/// Zastavnyi operator specification. Holds 0 < beta1 < beta2 and eps != 0.
class ZastavnyiSpec {
public:
    ZastavnyiSpec(const KernelFamily& family, double eps, double beta1, double beta2);

    const KernelFamily& family() const noexcept { return family_; }
    double eps() const noexcept { return eps_; }
    double beta1() const noexcept { return beta1_; }
    double beta2() const noexcept { return beta2_; }

    /// Weights with K = w2 phi(t/beta2) + w1 phi(t/beta1); w1 + w2 = 1.
    double weight1() const noexcept { return w1_; }
    double weight2() const noexcept { return w2_; }

private:
    KernelFamily family_;
    double eps_;
    double beta1_;
    double beta2_;
    double w1_;
    double w2_;
};

double matern(double t, double nu);
double gen_cauchy(double t, double delta, double lambda);
double gen_wendland(double t, double kappa, double mu);

/// phi(t; theta).
double eval(const KernelFamily& family, double t);
/// phi(t / beta; theta).
double eval_scaled(const ScaledKernel& k, double t);
/// K_{eps; theta; beta2, beta1}[phi](t).
double zastavnyi_eval(const ZastavnyiSpec& spec, double t);

Eigen::ArrayXd eval(const KernelFamily& family, const Eigen::ArrayXd& t);
Eigen::ArrayXd eval_scaled(const ScaledKernel& k, const Eigen::ArrayXd& t);
Eigen::ArrayXd zastavnyi_eval(const ZastavnyiSpec& spec, const Eigen::ArrayXd& t);

}  // namespace radpd
