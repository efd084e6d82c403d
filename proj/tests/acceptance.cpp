// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "radpd/kernels.hpp"
#include "radpd/pdcheck.hpp"
#include "radpd/spectral.hpp"

using namespace radpd;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

struct CliRun {
    int code;
    std::string out;
};

CliRun cli(const std::string& args) {
    const std::string cmd = std::string(RADPD_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        return {-1, ""};
    }
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) {
        out.append(buf, n);
    }
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void criterion1() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (double nu : {0.5, 1.5, 2.5}) {
        for (int d : {1, 2, 3}) {
            for (double beta : {0.5, 1.0, 2.0}) {
                const auto phi = [=](double t) { return matern(t / beta, nu); };
                for (double z : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
                    worst = std::max(worst, rel(matern_spectral(z, nu, beta, d),
                                                hankel_numeric(phi, d, z)));
                }
            }
        }
    }
    const double s = seconds_since(t0);
    report(1, worst <= 1e-6 && s < 60.0,
           fmt("Matern closed form vs Hankel, 162 points, worst rel %.2e (<= 1e-6), %.1f s", worst,
               s));
}

void criterion2() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    int points = 0;
    int delegated = 0;
    int collisions = 0;
    for (double delta : {0.5, 1.0, 1.5}) {
        for (int d : {1, 2, 3}) {
            for (double lambda : {d + 0.5, d + 2.0}) {
                for (double beta : {0.5, 1.0}) {
                    const auto phi = [=](double t) { return gen_cauchy(t / beta, delta, lambda); };
                    for (double z : {0.1, 1.0, 5.0}) {
                        const DensityValue v = cauchy_spectral_series(z, delta, lambda, beta, d);
                        delegated += v.method == DensityMethod::NumericHankel ? 1 : 0;
                        collisions += v.diagnostics.pole_collision_detected ? 1 : 0;
                        worst = std::max(worst, rel(v.value, hankel_numeric(phi, d, z)));
                        ++points;
                    }
                }
            }
        }
    }
    const double s = seconds_since(t0);
    report(2, worst <= 1e-4 && s < 300.0,
           fmt("Cauchy series vs Hankel, %d points, worst rel %.2e (<= 1e-4), %d with pole "
               "collisions, %d delegated to quadrature by the cancellation guard, %.1f s",
               points, worst, collisions, delegated, s));
}

void criterion3() {
    double worst = 0.0;
    for (double lambda : {3.0, 5.0}) {
        for (int d : {1, 2}) {
            const auto phi = [=](double t) { return gen_cauchy(t, 2.0, lambda); };
            for (double z : {0.2, 1.0, 4.0}) {
                worst = std::max(worst, rel(cauchy_delta2_spectral(z, lambda, 1.0, d),
                                            hankel_numeric(phi, d, z)));
            }
        }
    }
    report(3, worst <= 1e-6,
           fmt("delta = 2 Cauchy density vs Hankel, 12 points, worst rel %.2e (<= 1e-6)", worst));
}

void criterion4() {
    double e_matern = 0.0;
    for (int i = 0; i <= 10000; ++i) {
        const double t = 10.0 * i / 10000.0;
        e_matern = std::max(e_matern, std::fabs(matern(t, 0.5) - std::exp(-t)));
    }
    double e_gw0 = 0.0;
    for (double mu : {1.0, 2.5, 4.5, 7.0}) {
        for (int i = 0; i < 1000; ++i) {
            const double t = i / 1000.0;
            e_gw0 = std::max(e_gw0, std::fabs(gen_wendland(t, 0.0, mu) - std::pow(1.0 - t, mu)));
        }
    }
    // int_t^1 u (1-u)^4 du / B(2, 5), expanded term by term
    const auto antider = [](double u) {
        return u * u / 2.0 - 4.0 * std::pow(u, 3) / 3.0 + 1.5 * std::pow(u, 4) -
               0.8 * std::pow(u, 5) + std::pow(u, 6) / 6.0;
    };
    double e_gw1 = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double t = i / 1000.0;
        e_gw1 = std::max(e_gw1, std::fabs(gen_wendland(t, 1.0, 4.0) -
                                          30.0 * (antider(1.0) - antider(t))));
    }
    report(4, e_matern <= 1e-12 && e_gw0 <= 1e-14 && e_gw1 <= 1e-10,
           fmt("Matern 1/2 vs exp: %.1e (<= 1e-12); GW(0, mu) vs (1-t)^mu: %.1e (<= 1e-14); "
               "GW(1, 4) vs polynomial integral: %.1e (<= 1e-10)",
               e_matern, e_gw0, e_gw1));
}

void criterion5() {
    const KernelFamily families[] = {make_matern(1.5), make_gen_cauchy(1.0, 4.0),
                                     make_gen_wendland(1.0, 4.0)};
    double worst = 0.0;
    for (const auto& f : families) {
        for (int d : {1, 2, 3}) {
            for (double beta : {0.5, 2.0}) {
                const auto phi = [&](double t) { return eval(f, t / beta); };
                const double support = support_radius(f) * beta;
                for (double z : {0.5, 1.0, 3.0}) {
                    const double lhs = hankel_numeric(phi, d, z, support);
                    const double rhs = std::pow(beta, d) * family_spectral(f, 1.0, d, beta * z).value;
                    worst = std::max(worst, rel(lhs, rhs));
                }
            }
        }
    }
    report(5, worst <= 1e-6,
           fmt("scaling identity, 3 families x 54 points, worst rel %.2e (<= 1e-6)", worst));
}

void criterion6() {
    const CliRun r = cli("figure1");
    std::istringstream in(r.out);
    std::string line;
    double min_a = 1.0;
    double min_c = 1.0;
    double worst_origin = 0.0;
    int curves_at_zero = 0;
    while (std::getline(in, line)) {
        char panel = 0;
        char fam[32];
        double eps = 0, b1 = 0, b2 = 0, t = 0, k = 0;
        if (std::sscanf(line.c_str(), "%c,%31[^,],%lf,%lf,%lf,%lf,%lf", &panel, fam, &eps, &b1,
                        &b2, &t, &k) != 7) {
            continue;
        }
        if (t == 0.0) {
            ++curves_at_zero;
            worst_origin = std::max(worst_origin, std::fabs(k - 1.0));
        }
        if (eps == -2.0 && panel == 'A') {
            min_a = std::min(min_a, k);
        }
        if (eps == -2.0 && panel == 'C') {
            min_c = std::min(min_c, k);
        }
    }
    const bool ok = r.code == 0 && curves_at_zero == 6 && worst_origin <= 1e-14 && min_a < 0.0 &&
                    min_c < 0.0;
    report(6, ok,
           fmt("figure1: panel A eps=-2 min %.4g (< 0), panel C eps=-2 min %.4g (< 0), %d curves "
               "with |K(0) - 1| <= %.1e",
               min_a, min_c, curves_at_zero, worst_origin));
}

void criterion7() {
    const auto t0 = Clock::now();
    std::vector<std::string> parts;
    bool all = true;
    const auto part = [&](const char* tag, bool ok, const std::string& d) {
        all = all && ok;
        parts.push_back(fmt("(%s) %s %s", tag, ok ? "ok" : "FAILED", d.c_str()));
    };
    const auto fn = [](const ZastavnyiSpec& s) {
        return [s](double t) { return zastavnyi_eval(s, t); };
    };
    const auto v = [](const PDVerdict& p) { return p.verdict == Verdict::consistent; };

    {
        const ZastavnyiSpec a(make_matern(0.5), 1.0, 0.075, 0.15);
        const PDVerdict cm = complete_monotonicity_check(fn(a));
        const PDVerdict g = gram_min_eigenvalue(fn(a), 10, 200, 42);
        part("a", v(cm) && g.verdict == Verdict::consistent,
             fmt("CM k<=8 %s, Gram d=10 min eig %.3g", to_string(cm.verdict).c_str(),
                 g.witness_value));
    }
    {
        const ZastavnyiSpec b(make_matern(0.5), -2.0, 0.075, 0.15);
        const PDVerdict g2 = gram_min_eigenvalue(fn(b), 2, 200, 42);
        const PDVerdict s2 = spectral_nonnegativity(b, 2);
        const PDVerdict s3 = spectral_nonnegativity(b, 3);
        part("b", v(g2) && v(s2) && s3.verdict == Verdict::refuted,
             fmt("d=2 Gram %s, spectral %s; d=3 spectral %s, witness %.4g at z=%.4g",
                 to_string(g2.verdict).c_str(), to_string(s2.verdict).c_str(),
                 to_string(s3.verdict).c_str(), s3.witness_value, s3.witness_location));
    }
    {
        const ZastavnyiSpec c(make_matern(0.5), 0.5, 0.075, 0.15);
        const PDVerdict s = spectral_nonnegativity(c, 3);
        // large z: beyond the kernel scale 1/beta1, with the tail negative from there on
        const SpectralDensity dens(c, 3);
        bool tail_negative = true;
        for (double z = s.witness_location; z <= 1e6; z *= 2.0) {
            tail_negative = tail_negative && dens(z) < 0.0;
        }
        part("c",
             s.verdict == Verdict::refuted && s.witness_location * c.beta1() > 1.0 &&
                 tail_negative,
             fmt("d=3 spectral %s, witness %.3g at z=%.4g (1/beta1 = %.4g), negative up to 1e6",
                 to_string(s.verdict).c_str(), s.witness_value, s.witness_location,
                 1.0 / c.beta1()));
    }
    {
        const ZastavnyiSpec d(make_gen_cauchy(0.6, 2.5), 0.7, 0.2, 0.3);
        const PDVerdict cm = complete_monotonicity_check(fn(d));
        part("d", v(cm), fmt("CM %s", to_string(cm.verdict).c_str()));
    }
    {
        const ZastavnyiSpec e(make_gen_cauchy(2.0, 2.0), -1.5, 0.2, 0.3);
        const PDVerdict s = spectral_nonnegativity(e, 4);
        const PDVerdict g = gram_min_eigenvalue(fn(e), 4, 200, 42);
        part("e", v(s) && v(g),
             fmt("d=4 spectral %s (min %.4g at z=%.3g), Gram %s (min eig %.4g)",
                 to_string(s.verdict).c_str(), s.witness_value, s.witness_location,
                 to_string(g.verdict).c_str(), g.witness_value));
    }
    {
        const ZastavnyiSpec f(make_gen_wendland(0.0, 4.5), -2.0, 0.4, 0.6);
        const PDVerdict g = gram_min_eigenvalue(fn(f), 2, 200, 42);
        part("f", v(g), fmt("d=2 Gram %s (min eig %.3g)", to_string(g.verdict).c_str(),
                            g.witness_value));
    }
    const double s = seconds_since(t0);
    std::string detail = "theorem coherence:";
    for (const auto& p : parts) {
        detail += " " + p + ";";
    }
    detail += fmt(" %.1f s", s);
    report(7, all && s < 600.0, detail);
}

void criterion8() {
    const Lemma1Report a = lemma1_bounds_check(1.5);
    const Lemma1Report b = lemma1_bounds_check(3.0);
    const Lemma1Report c = lemma1_bounds_check(0.5);
    const bool ok = a.upper_holds && a.lower_checked && a.lower_holds && b.upper_holds &&
                    b.lower_checked && b.lower_holds && c.upper_holds &&
                    std::fabs(a.small_z_ratio + 1.5) < 1e-3 &&
                    std::fabs(b.small_z_ratio + 3.0) < 1e-3;
    report(8, ok,
           fmt("Bessel ratio bounds: nu=1.5 margins %.2e/%.2e, nu=3 margins %.2e/%.2e, nu=0.5 "
               "upper margin %.2e; z=1e-4 ratios %.6f, %.6f",
               a.upper_worst_margin, a.lower_worst_margin, b.upper_worst_margin,
               b.lower_worst_margin, c.upper_worst_margin, a.small_z_ratio, b.small_z_ratio));
}

void criterion9() {
    const Lemma2Report r = lemma2_monotonicity_check(-1.5, 2.0, 4);
    report(9, r.decreasing && r.sign_condition && r.derivative_ok,
           fmt("g decreasing on [0.01, 20]: max log step %.3e; sign condition max %.4f (< 0); "
               "derivative check %.1e",
               r.max_log_step, r.max_sign_value, r.max_derivative_mismatch));
}

void criterion10() {
    const std::vector<std::string> commands = {
        "eval --family wendland --kappa 0.5 --mu 3 --grid-n 257",
        "spectral --family cauchy --delta 0.6 --lambda 2.5 --dim 3 --grid-n 60",
        "operator --family cauchy --delta 0.6 --lambda 2.5 --eps 0.7 --beta1 0.2 --beta2 0.3",
        "pd-check --family matern --nu 0.5 --eps -2 --beta1 0.075 --beta2 0.15 --dim 2",
        "theorem-sweep --family matern --nu 0.5,1.5 --eps 1,-3 --beta1 0.1 --beta2 0.3 "
        "--dim 2,inf --gram-n 100",
        "figure1",
        "bounds",
    };
    int identical = 0;
    for (const auto& c : commands) {
        const CliRun a = cli(c);
        const CliRun b = cli(c);
        identical += (a.out == b.out && a.code == b.code && !a.out.empty()) ? 1 : 0;
    }
    report(10, identical == static_cast<int>(commands.size()),
           fmt("determinism: %d of %zu commands byte-identical across two runs", identical,
               commands.size()));
}

}  // namespace

int main() {
    const std::function<void()> criteria[] = {criterion1, criterion2, criterion3, criterion4,
                                              criterion5, criterion6, criterion7, criterion8,
                                              criterion9, criterion10};
    for (const auto& c : criteria) {
        c();
    }
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
