#include "radpd/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "radpd/errors.hpp"
#include "radpd/quadrature.hpp"
#include "radpd/specfun.hpp"

namespace radpd {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& msg) {
    if (!ok) {
        throw DomainError(msg);
    }
}

bool finite(double x) { return std::isfinite(x); }

void check_t(double t, const char* fn) {
    require(finite(t) && t >= 0.0, std::string(fn) + ": requires finite t >= 0");
}

// Integral of the unnormalised Wendland integrand
// u (u - t)^(kappa-1) (u + t)^(kappa-1) (1 - u)^mu over [t, 1], with an n-point rule set.
double wendland_integral(double t, double kappa, double mu, int n) {
    const double km1 = kappa - 1.0;
    const bool integer_kappa = kappa == std::floor(kappa);
    if (integer_kappa || t >= 0.25) {
        // u = t + (1 - t)(1 + x)/2; weight (1 - x)^mu (1 + x)^(kappa - 1).
        const quad::Rule& r = quad::gauss_jacobi(n, mu, km1);
        const double half = 0.5 * (1.0 - t);
        quad::NeumaierSum s;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            const double u = t + half * (1.0 + r.nodes[i]);
            s.add(r.weights[i] * u * std::pow(u + t, km1));
        }
        return std::pow(half, kappa + mu) * s.value();
    }

    quad::NeumaierSum total;
    // [t, 3t]: the (u - t)^(kappa - 1) endpoint factor goes into the weight.
    {
        const quad::Rule& r = quad::gauss_jacobi(n, 0.0, km1);
        quad::NeumaierSum s;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            const double u = t + t * (1.0 + r.nodes[i]);
            s.add(r.weights[i] * u * std::pow(u + t, km1) * std::pow(1.0 - u, mu));
        }
        total.add(std::pow(t, kappa) * s.value());
    }
    // Geometric middle pieces, away from both endpoint singularities.
    double b = 3.0 * t;
    const quad::Rule& leg = quad::gauss_legendre(n);
    while (3.0 * b <= 0.75) {
        const double e = 3.0 * b;
        const double half = 0.5 * (e - b);
        const double mid = 0.5 * (e + b);
        quad::NeumaierSum s;
        for (std::size_t i = 0; i < leg.nodes.size(); ++i) {
            const double u = mid + half * leg.nodes[i];
            s.add(leg.weights[i] * u * std::pow((u - t) * (u + t), km1) * std::pow(1.0 - u, mu));
        }
        total.add(half * s.value());
        b = e;
    }
    // [b, 1]: the (1 - u)^mu endpoint factor goes into the weight.
    {
        const quad::Rule& r = quad::gauss_jacobi(n, mu, 0.0);
        const double half = 0.5 * (1.0 - b);
        quad::NeumaierSum s;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            const double u = b + half * (1.0 + r.nodes[i]);
            s.add(r.weights[i] * u * std::pow((u - t) * (u + t), km1));
        }
        total.add(std::pow(half, mu + 1.0) * s.value());
    }
    return total.value();
}

}  // namespace

KernelFamily make_matern(double nu) {
    KernelFamily f = Matern{nu};
    validate(f);
    return f;
}

KernelFamily make_gen_cauchy(double delta, double lambda) {
    KernelFamily f = GeneralizedCauchy{delta, lambda};
    validate(f);
    return f;
}

KernelFamily make_gen_wendland(double kappa, double mu) {
    KernelFamily f = GeneralizedWendland{kappa, mu};
    validate(f);
    return f;
}

void validate(const KernelFamily& family) {
    std::visit(overloaded{
                   [](const Matern& m) {
                       require(finite(m.nu) && m.nu > 0.0, "matern: requires nu > 0");
                   },
                   [](const GeneralizedCauchy& c) {
                       require(finite(c.delta) && c.delta > 0.0 && c.delta <= 2.0,
                               "gen_cauchy: requires delta in (0, 2]");
                       require(finite(c.lambda) && c.lambda > 0.0,
                               "gen_cauchy: requires lambda > 0");
                   },
                   [](const GeneralizedWendland& w) {
                       require(finite(w.kappa) && w.kappa >= 0.0,
                               "gen_wendland: requires kappa >= 0");
                       require(finite(w.mu) && w.mu > 0.0, "gen_wendland: requires mu > 0");
                   },
               },
               family);
}

std::string family_name(const KernelFamily& family) {
    return std::visit(overloaded{
                          [](const Matern&) { return std::string("matern"); },
                          [](const GeneralizedCauchy&) { return std::string("cauchy"); },
                          [](const GeneralizedWendland&) { return std::string("wendland"); },
                      },
                      family);
}

double support_radius(const KernelFamily& family) {
    return std::holds_alternative<GeneralizedWendland>(family)
               ? 1.0
               : std::numeric_limits<double>::infinity();
}

ScaledKernel make_scaled(const KernelFamily& family, double beta) {
    validate(family);
    require(finite(beta) && beta > 0.0, "scaled kernel: requires beta > 0");
    return {family, beta};
}

ZastavnyiSpec::ZastavnyiSpec(const KernelFamily& family, double eps, double beta1, double beta2)
    : family_(family), eps_(eps), beta1_(beta1), beta2_(beta2) {
    validate(family_);
    require(finite(eps) && eps != 0.0, "zastavnyi: requires finite eps != 0");
    require(finite(beta1) && finite(beta2) && beta1 > 0.0 && beta2 > beta1,
            "zastavnyi: requires 0 < beta1 < beta2");
    // (beta2/beta1)^eps - 1, without cancellation for small eps.
    const double em = std::expm1(eps * std::log(beta2 / beta1));
    if (std::fabs(em) < 1e-14 * std::max(1.0, 1.0 + em)) {
        throw DegenerateSpecError("zastavnyi: beta2^eps - beta1^eps is numerically zero");
    }
    w2_ = 1.0 + 1.0 / em;
    w1_ = -1.0 / em;
}

double matern(double t, double nu) {
    check_t(t, "matern");
    require(finite(nu) && nu > 0.0, "matern: requires nu > 0");
    if (t == 0.0) {
        return 1.0;
    }
    const double logv = (1.0 - nu) * std::numbers::ln2 - std::lgamma(nu) + nu * std::log(t) +
                        specfun::log_bessel_k(nu, t);
    return std::exp(logv);
}

double gen_cauchy(double t, double delta, double lambda) {
    check_t(t, "gen_cauchy");
    validate(GeneralizedCauchy{delta, lambda});
    if (t == 0.0) {
        return 1.0;
    }
    return std::exp(-(lambda / delta) * std::log1p(std::pow(t, delta)));
}

double gen_wendland(double t, double kappa, double mu) {
    check_t(t, "gen_wendland");
    validate(GeneralizedWendland{kappa, mu});
    if (t >= 1.0) {
        return 0.0;
    }
    if (t == 0.0) {
        return 1.0;
    }
    if (kappa == 0.0) {
        return std::pow(1.0 - t, mu);
    }
    const double norm = specfun::beta(2.0 * kappa, mu + 1.0);
    if (kappa == std::floor(kappa) && kappa <= 63.0) {
        // The rule is exact for the polynomial remainder.
        return wendland_integral(t, kappa, mu, 32) / norm;
    }
    double prev = wendland_integral(t, kappa, mu, 64);
    for (int n = 128; n <= 512; n *= 2) {
        const double cur = wendland_integral(t, kappa, mu, n);
        if (std::fabs(cur - prev) <= 1e-11 * std::fabs(cur)) {
            return cur / norm;
        }
        prev = cur;
    }
    throw ConvergenceError("gen_wendland: quadrature did not reach tolerance", prev / norm);
}

double eval(const KernelFamily& family, double t) {
    return std::visit(overloaded{
                          [t](const Matern& m) { return matern(t, m.nu); },
                          [t](const GeneralizedCauchy& c) {
                              return gen_cauchy(t, c.delta, c.lambda);
                          },
                          [t](const GeneralizedWendland& w) {
                              return gen_wendland(t, w.kappa, w.mu);
                          },
                      },
                      family);
}

double eval_scaled(const ScaledKernel& k, double t) {
    require(finite(k.beta) && k.beta > 0.0, "eval_scaled: requires beta > 0");
    check_t(t, "eval_scaled");
    return eval(k.family, t / k.beta);
}

double zastavnyi_eval(const ZastavnyiSpec& spec, double t) {
    check_t(t, "zastavnyi_eval");
    if (t == 0.0) {
        return 1.0;
    }
    const double phi2 = eval(spec.family(), t / spec.beta2());
    const double phi1 = eval(spec.family(), t / spec.beta1());
    return spec.weight2() * phi2 + spec.weight1() * phi1;
}

Eigen::ArrayXd eval(const KernelFamily& family, const Eigen::ArrayXd& t) {
    return t.unaryExpr([&](double x) { return eval(family, x); });
}

Eigen::ArrayXd eval_scaled(const ScaledKernel& k, const Eigen::ArrayXd& t) {
    return t.unaryExpr([&](double x) { return eval_scaled(k, x); });
}

Eigen::ArrayXd zastavnyi_eval(const ZastavnyiSpec& spec, const Eigen::ArrayXd& t) {
    return t.unaryExpr([&](double x) { return zastavnyi_eval(spec, x); });
}

}  // namespace radpd
