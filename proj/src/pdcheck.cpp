#include "radpd/pdcheck.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>
#include <random>

#include "radpd/errors.hpp"
#include "radpd/specfun.hpp"

namespace radpd {

namespace {

std::string fmt(const char* pattern, double a, double b, int n) {
    char buf[128];
    std::snprintf(buf, sizeof buf, pattern, a, b, n);
    return buf;
}

struct GridScan {
    double min_value = std::numeric_limits<double>::infinity();
    double min_location = 0.0;
    double max_abs = 0.0;
};

void scan(const SpectralDensity& density, const Eigen::ArrayXd& z, GridScan& acc) {
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        const double v = density(z(i));
        acc.max_abs = std::max(acc.max_abs, std::fabs(v));
        if (v < acc.min_value) {
            acc.min_value = v;
            acc.min_location = z(i);
        }
    }
}

bool closed_form(DensityMethod m) {
    return m == DensityMethod::ClosedFormMatern || m == DensityMethod::CauchyDelta2;
}

}  // namespace

Eigen::ArrayXd GeometricGrid::points() const {
    if (!(lo > 0.0) || !(hi >= lo) || n < 1) {
        throw DomainError("geometric grid: requires 0 < lo <= hi and n >= 1");
    }
    Eigen::ArrayXd p(n);
    if (n == 1) {
        p(0) = lo;
        return p;
    }
    // Interpolating decimal exponents keeps decade points such as 1 and 10 exact.
    const double a = std::log10(lo);
    const double b = std::log10(hi);
    for (int i = 0; i < n; ++i) {
        p(i) = std::pow(10.0, a + (b - a) * i / (n - 1));
    }
    p(0) = lo;
    p(n - 1) = hi;
    return p;
}

std::string GeometricGrid::describe() const { return fmt("geometric[%g,%g] n=%d", lo, hi, n); }

std::string to_string(PDMethod m) {
    switch (m) {
        case PDMethod::SpectralGrid: return "spectral_grid";
        case PDMethod::GramEigen: return "gram_eigen";
        case PDMethod::CompleteMonotonicity: return "complete_monotonicity";
    }
    return "unknown";
}

std::string to_string(Verdict v) { return v == Verdict::consistent ? "consistent" : "refuted"; }

std::string to_string(TheoremId id) {
    switch (id) {
        case TheoremId::T2_matern: return "T2_matern";
        case TheoremId::T3_wendland: return "T3_wendland";
        case TheoremId::T4_cauchy: return "T4_cauchy";
        case TheoremId::T5_cauchy2: return "T5_cauchy2";
        case TheoremId::GW_base: return "GW_base";
        case TheoremId::GW_positive_eps: return "GW_positive_eps";
    }
    return "unknown";
}

std::string to_string(Expectation e) {
    switch (e) {
        case Expectation::member: return "member";
        case Expectation::non_member: return "non_member";
        case Expectation::outside_theorem_scope: return "outside_theorem_scope";
    }
    return "unknown";
}

PDVerdict spectral_nonnegativity(const SpectralDensity& density, const SpectralCheckOptions& opts) {
    GridScan acc;
    scan(density, opts.grid.points(), acc);
    double tol = opts.rel_tol * acc.max_abs;
    double top = opts.grid.hi;
    if (opts.extend && closed_form(density.method()) && acc.min_value >= -tol) {
        const double decades = std::max(1.0, std::log10(opts.grid.hi / opts.grid.lo));
        const int per_decade = std::max(10, static_cast<int>(std::ceil(opts.grid.n / decades)));
        while (top < opts.extend_max && acc.min_value >= -tol) {
            const double next = std::min(top * 10.0, opts.extend_max);
            const Eigen::ArrayXd pts = GeometricGrid{top, next, per_decade + 1}.points();
            scan(density, pts.tail(per_decade), acc);
            top = next;
            tol = opts.rel_tol * acc.max_abs;
        }
    }
    PDVerdict v;
    v.method = PDMethod::SpectralGrid;
    v.tolerance = tol;
    v.witness_value = acc.min_value;
    v.witness_location = acc.min_location;
    v.verdict = acc.min_value < -tol ? Verdict::refuted : Verdict::consistent;
    v.grid_spec = GeometricGrid{opts.grid.lo, opts.grid.hi, opts.grid.n}.describe();
    if (top > opts.grid.hi) {
        v.grid_spec += fmt(" extended to %g", top, 0.0, 0);
    }
    v.grid_spec += " d=" + std::to_string(density.dimension());
    return v;
}

PDVerdict spectral_nonnegativity(const ZastavnyiSpec& spec, int d,
                                 const SpectralCheckOptions& opts) {
    return spectral_nonnegativity(SpectralDensity(spec, d), opts);
}

PDVerdict spectral_nonnegativity(const ScaledKernel& kernel, int d,
                                 const SpectralCheckOptions& opts) {
    return spectral_nonnegativity(SpectralDensity(kernel, d), opts);
}

Eigen::MatrixXd gram_points(int d, int n_points, std::uint64_t seed) {
    if (d < 1 || n_points < 1) {
        throw DomainError("gram_points: requires d >= 1 and n_points >= 1");
    }
    std::mt19937_64 rng(seed);
    Eigen::MatrixXd x(n_points, d);
    for (int i = 0; i < n_points; ++i) {
        for (int j = 0; j < d; ++j) {
            // 53 random bits mapped to [0, 1); independent of the library's distributions.
            x(i, j) = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        }
    }
    return x;
}

PDVerdict gram_min_eigenvalue(const RadialFunction& f, int d, int n_points, std::uint64_t seed) {
    if (n_points < 1 || n_points > 500) {
        throw DomainError("gram_min_eigenvalue: requires 1 <= n_points <= 500");
    }
    const Eigen::MatrixXd x = gram_points(d, n_points, seed);
    Eigen::MatrixXd g(n_points, n_points);
    for (int i = 0; i < n_points; ++i) {
        g(i, i) = f(0.0);
        for (int j = i + 1; j < n_points; ++j) {
            const double r = (x.row(i) - x.row(j)).norm();
            g(i, j) = g(j, i) = f(r);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("gram_min_eigenvalue: eigenvalue solver did not converge", 0.0);
    }
    const double lmin = solver.eigenvalues()(0);
    Eigen::Index where = 0;
    solver.eigenvectors().col(0).cwiseAbs().maxCoeff(&where);

    PDVerdict v;
    v.method = PDMethod::GramEigen;
    v.tolerance = 1e-8 * n_points;
    v.witness_value = lmin;
    v.witness_location = static_cast<double>(where);
    v.verdict = lmin < -v.tolerance ? Verdict::refuted : Verdict::consistent;
    v.grid_spec = "uniform[0,1]^" + std::to_string(d) + " n=" + std::to_string(n_points) +
                  " seed=" + std::to_string(seed);
    return v;
}

PDVerdict complete_monotonicity_check(const RadialFunction& f, const MonotonicityOptions& opts) {
    if (opts.k_max < 0 || opts.k_max > 10) {
        throw DomainError("complete_monotonicity_check: requires 0 <= k_max <= 10");
    }
    const Eigen::ArrayXd t = opts.t_grid.points();
    PDVerdict v;
    v.method = PDMethod::CompleteMonotonicity;
    v.tolerance = opts.tol;
    v.witness_value = std::numeric_limits<double>::infinity();
    std::vector<double> psi(opts.k_max + 1);
    for (Eigen::Index i = 0; i < t.size(); ++i) {
        const double s = t(i) * t(i);
        const double h = s / 20.0;
        for (int j = 0; j <= opts.k_max; ++j) {
            psi[j] = f(std::sqrt(s + j * h));
        }
        for (int k = 0; k <= opts.k_max; ++k) {
            // (-1)^k Delta_h^k psi(s) = sum_j (-1)^j C(k, j) psi(s + j h)
            double acc = 0.0;
            double binom = 1.0;
            for (int j = 0; j <= k; ++j) {
                acc += (j % 2 == 0 ? binom : -binom) * psi[j];
                binom = binom * (k - j) / (j + 1);
            }
            if (acc < v.witness_value) {
                v.witness_value = acc;
                v.witness_location = s;
                v.witness_order = k;
            }
        }
    }
    v.verdict = v.witness_value < -opts.tol ? Verdict::refuted : Verdict::consistent;
    v.grid_spec = "s=t^2, t " + opts.t_grid.describe() + " h=s/20 k_max=" +
                  std::to_string(opts.k_max);
    return v;
}

TheoremClaim theorem_predicate(const KernelFamily& family, std::optional<double> eps,
                               std::optional<int> d) {
    validate(family);
    TheoremClaim c;
    c.family = family;
    c.eps = eps;
    c.d = d;
    const bool dim_inf = !d.has_value();
    const double dd = dim_inf ? std::numeric_limits<double>::infinity() : *d;

    if (const auto* m = std::get_if<Matern>(&family)) {
        c.theorem_id = TheoremId::T2_matern;
        if (!eps) {
            c.expected = Expectation::member;
            c.condition = "base Matern family is in Phi_inf";
        } else if (*eps > 0.0) {
            c.iff = true;
            c.expected = *eps >= 2.0 * m->nu ? Expectation::member : Expectation::non_member;
            c.condition = "eps >= 2 nu (Phi_inf)";
        } else {
            c.iff = true;
            c.target_dim = d;
            c.expected = *eps <= -dd ? Expectation::member : Expectation::non_member;
            c.condition = "eps <= -d (Phi_d)";
        }
        return c;
    }

    if (const auto* g = std::get_if<GeneralizedCauchy>(&family)) {
        if (g->delta == 2.0 && eps) {
            c.theorem_id = TheoremId::T5_cauchy2;
            c.target_dim = d;
            c.condition = "lambda < 2d - 4 and 2 eps < -lambda (Phi_d)";
            c.expected = (g->lambda < 2.0 * dd - 4.0 && 2.0 * *eps < -g->lambda)
                             ? Expectation::member
                             : Expectation::outside_theorem_scope;
            return c;
        }
        c.theorem_id = TheoremId::T4_cauchy;
        if (!eps) {
            c.expected = Expectation::member;
            c.condition = "base Generalized Cauchy family is in Phi_inf";
        } else if (*eps > 0.0) {
            c.condition = "delta < 1 and eps >= delta (Phi_inf)";
            c.expected = (g->delta < 1.0 && *eps >= g->delta)
                             ? Expectation::member
                             : Expectation::outside_theorem_scope;
        } else {
            c.iff = true;
            c.condition = "eps <= -lambda (Phi_inf)";
            c.expected = *eps <= -g->lambda ? Expectation::member : Expectation::non_member;
        }
        return c;
    }

    const auto& w = std::get<GeneralizedWendland>(family);
    c.target_dim = d;
    const double base_mu = 0.5 * (dd + 1.0) + w.kappa;
    const double strong_mu = 0.5 * (dd + 7.0) + w.kappa;
    if (!eps) {
        c.theorem_id = TheoremId::GW_base;
        c.iff = true;
        c.condition = "mu >= (d + 1)/2 + kappa (Phi_d)";
        c.expected = w.mu >= base_mu ? Expectation::member : Expectation::non_member;
        return c;
    }
    if (*eps > 0.0) {
        c.theorem_id = TheoremId::GW_positive_eps;
        c.condition = "eps >= 2 kappa + 1 and mu >= (d + 7)/2 + kappa (Phi_d)";
        c.expected = (*eps >= 2.0 * w.kappa + 1.0 && w.mu >= strong_mu)
                         ? Expectation::member
                         : Expectation::outside_theorem_scope;
        return c;
    }
    c.theorem_id = TheoremId::T3_wendland;
    if (*eps == -dd) {
        c.iff = true;
        c.condition = "eps = -d: mu >= (d + 1)/2 + kappa (Phi_d)";
        c.expected = w.mu >= base_mu ? Expectation::member : Expectation::non_member;
    } else if (*eps <= -dd && w.mu >= strong_mu) {
        c.condition = "eps <= -d and mu >= (d + 7)/2 + kappa (Phi_d)";
        c.expected = Expectation::member;
    } else {
        c.condition = "no applicable condition";
        c.expected = Expectation::outside_theorem_scope;
    }
    return c;
}

bool Lemma1Report::passed() const {
    return upper_holds && (!lower_checked || lower_holds) && small_z_ok && large_z_ok;
}

Lemma1Report lemma1_bounds_check(double nu, const GeometricGrid& z_grid) {
    if (!std::isfinite(nu)) {
        throw DomainError("lemma1_bounds_check: requires finite nu");
    }
    Lemma1Report rep;
    rep.nu = nu;
    const double n = std::fabs(nu);
    // All comparisons are made on (ratio + |nu|), which carries no cancellation.
    const auto offset = [&](double z) { return -z * specfun::bessel_k_order_ratio(nu, z); };
    const Eigen::ArrayXd z = z_grid.points();
    rep.points = static_cast<int>(z.size());
    rep.lower_checked = nu > 1.0;
    rep.upper_worst_margin = std::numeric_limits<double>::infinity();
    rep.lower_worst_margin = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        const double zi = z(i);
        const double off = offset(zi);
        const double upper = -zi * zi / (n + std::hypot(zi, nu));
        rep.upper_worst_margin = std::min(rep.upper_worst_margin, upper - off);
        if (rep.lower_checked) {
            const double q = nu / (nu - 1.0) * zi * zi;
            const double lower = -q / (n + std::sqrt(q + nu * nu));
            rep.lower_worst_margin = std::min(rep.lower_worst_margin, off - lower);
        }
    }
    rep.upper_holds = rep.upper_worst_margin > 0.0;
    rep.lower_holds = !rep.lower_checked || rep.lower_worst_margin > 0.0;
    if (!rep.lower_checked) {
        rep.lower_worst_margin = 0.0;
    }
    if (nu > 1.0) {
        rep.small_z_checked = true;
        rep.small_z_ratio = specfun::bessel_k_log_derivative(nu, 1e-4);
        rep.small_z_ok = std::fabs(rep.small_z_ratio + nu) <= 1e-3;
    }
    rep.large_z_slope = specfun::bessel_k_log_derivative(nu, 1e3) / 1e3;
    rep.large_z_ok = std::fabs(rep.large_z_slope + 1.0) <= 1e-3;
    return rep;
}

bool Lemma2Report::passed() const { return decreasing && sign_condition && derivative_ok; }

Lemma2Report lemma2_monotonicity_check(double eps, double lambda, int d,
                                       const GeometricGrid& beta_grid) {
    if (!(d > 0.5 * lambda + 2.0) || !(2.0 * eps < -lambda)) {
        throw HypothesisError("lemma2_monotonicity_check: requires d > lambda/2 + 2 and "
                              "2 eps < -lambda");
    }
    Lemma2Report rep;
    rep.eps = eps;
    rep.lambda = lambda;
    rep.d = d;
    const double a = eps + (2.0 * d + lambda) / 4.0;
    const double order = (2.0 * d - lambda) / 4.0;
    const auto log_g = [&](double b) { return a * std::log(b) + specfun::log_bessel_k(order, b); };
    const Eigen::ArrayXd b = beta_grid.points();
    rep.points = static_cast<int>(b.size());
    rep.max_log_step = -std::numeric_limits<double>::infinity();
    rep.max_sign_value = -std::numeric_limits<double>::infinity();
    double prev = log_g(b(0));
    for (Eigen::Index i = 0; i < b.size(); ++i) {
        const double bi = b(i);
        const double lg = log_g(bi);
        if (i > 0) {
            rep.max_log_step = std::max(rep.max_log_step, lg - prev);
        }
        prev = lg;
        const double sign = a + specfun::bessel_k_log_derivative(order, bi);
        rep.max_sign_value = std::max(rep.max_sign_value, sign);

        const double analytic = std::exp(lg) * sign / bi;
        const double h = 1e-6 * bi;
        const double fd = (std::exp(log_g(bi + h)) - std::exp(log_g(bi - h))) / (2.0 * h);
        rep.max_derivative_mismatch =
            std::max(rep.max_derivative_mismatch, std::fabs(fd - analytic) / std::fabs(analytic));
    }
    rep.decreasing = b.size() < 2 || rep.max_log_step < 0.0;
    rep.sign_condition = rep.max_sign_value < 0.0;
    rep.derivative_ok = rep.max_derivative_mismatch <= 1e-6;
    return rep;
}

}  // namespace radpd
