#include "radpd/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "radpd/errors.hpp"
#include "radpd/kernels.hpp"
#include "radpd/pdcheck.hpp"
#include "radpd/spectral.hpp"

namespace radpd::cli {

namespace {

using json = nlohmann::ordered_json;
constexpr int kSchemaVersion = 1;

double one(const std::vector<double>& v, const char* name) {
    if (v.size() != 1) {
        throw DomainError(std::string("--") + name + " requires exactly one value");
    }
    return v.front();
}

std::optional<int> parse_dim(const std::string& s) {
    if (s == "inf") {
        return std::nullopt;
    }
    std::size_t used = 0;
    int d = 0;
    try {
        d = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || d < 1) {
        throw DomainError("--dim expects a positive integer or 'inf', got '" + s + "'");
    }
    return d;
}

std::optional<int> single_dim(const RunConfig& c, bool required) {
    if (c.dim.empty()) {
        if (required) {
            throw DomainError("--dim is required for this command");
        }
        return std::nullopt;
    }
    if (c.dim.size() != 1) {
        throw DomainError("--dim requires exactly one value for this command");
    }
    return parse_dim(c.dim.front());
}

int finite_dim(const RunConfig& c) {
    const auto d = single_dim(c, true);
    if (!d) {
        throw DomainError("--dim must be finite for this command");
    }
    return *d;
}

KernelFamily family_at(const RunConfig& c, std::size_t i, std::size_t j) {
    if (c.family == "matern") {
        return make_matern(c.nu.at(i));
    }
    if (c.family == "cauchy") {
        return make_gen_cauchy(c.delta.at(i), c.lambda.at(j));
    }
    if (c.family == "wendland") {
        return make_gen_wendland(c.kappa.at(i), c.mu.at(j));
    }
    throw DomainError("--family must be one of matern, cauchy, wendland");
}

KernelFamily single_family(const RunConfig& c) {
    if (c.family == "matern") {
        return make_matern(one(c.nu, "nu"));
    }
    if (c.family == "cauchy") {
        return make_gen_cauchy(one(c.delta, "delta"), one(c.lambda, "lambda"));
    }
    if (c.family == "wendland") {
        return make_gen_wendland(one(c.kappa, "kappa"), one(c.mu, "mu"));
    }
    throw DomainError("--family must be one of matern, cauchy, wendland");
}

std::vector<KernelFamily> family_sweep(const RunConfig& c) {
    std::vector<KernelFamily> out;
    if (c.family == "matern") {
        if (c.nu.empty()) {
            throw DomainError("--nu is required");
        }
        for (std::size_t i = 0; i < c.nu.size(); ++i) {
            out.push_back(family_at(c, i, 0));
        }
        return out;
    }
    const auto& first = c.family == "cauchy" ? c.delta : c.kappa;
    const auto& second = c.family == "cauchy" ? c.lambda : c.mu;
    if (c.family != "cauchy" && c.family != "wendland") {
        throw DomainError("--family must be one of matern, cauchy, wendland");
    }
    if (first.empty() || second.empty()) {
        throw DomainError("both family parameters are required");
    }
    for (std::size_t i = 0; i < first.size(); ++i) {
        for (std::size_t j = 0; j < second.size(); ++j) {
            out.push_back(family_at(c, i, j));
        }
    }
    return out;
}

ZastavnyiSpec make_spec(const KernelFamily& f, double eps, const RunConfig& c) {
    if (!c.beta1 || !c.beta2) {
        throw DomainError("--beta1 and --beta2 are required with --eps");
    }
    return ZastavnyiSpec(f, eps, *c.beta1, *c.beta2);
}

std::vector<double> grid(const RunConfig& c, GridScale def_scale, double def_min, double def_max,
                         int def_n) {
    const GridScale scale = c.grid_scale.value_or(def_scale);
    const double lo = c.grid_min.value_or(def_min);
    const double hi = c.grid_max.value_or(def_max);
    const int n = c.grid_n.value_or(def_n);
    if (n < 1 || !std::isfinite(lo) || !std::isfinite(hi) || hi < lo) {
        throw DomainError("grid requires finite grid-min <= grid-max and grid-n >= 1");
    }
    std::vector<double> t(n);
    if (scale == GridScale::geometric) {
        const Eigen::ArrayXd p = GeometricGrid{lo, hi, n}.points();
        for (int i = 0; i < n; ++i) {
            t[i] = p(i);
        }
        return t;
    }
    for (int i = 0; i < n; ++i) {
        t[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    }
    t[n - 1] = hi;
    return t;
}

std::string num(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json family_json(const KernelFamily& f) {
    json j;
    j["family"] = family_name(f);
    if (const auto* m = std::get_if<Matern>(&f)) {
        j["nu"] = m->nu;
    } else if (const auto* g = std::get_if<GeneralizedCauchy>(&f)) {
        j["delta"] = g->delta;
        j["lambda"] = g->lambda;
    } else {
        const auto& w = std::get<GeneralizedWendland>(f);
        j["kappa"] = w.kappa;
        j["mu"] = w.mu;
    }
    return j;
}

json dim_json(std::optional<int> d) { return d ? json(*d) : json("inf"); }

json verdict_json(const PDVerdict& v, std::optional<int> d) {
    json j;
    j["method"] = to_string(v.method);
    j["verdict"] = to_string(v.verdict);
    j["dimension"] = d ? json(*d) : json(nullptr);
    j["witness_location"] = v.witness_location;
    j["witness_order"] = v.witness_order;
    j["witness_value"] = v.witness_value;
    j["tolerance"] = v.tolerance;
    j["grid"] = v.grid_spec;
    return j;
}

json claim_json(const TheoremClaim& c) {
    json j;
    j["theorem_id"] = to_string(c.theorem_id);
    j["expected"] = to_string(c.expected);
    j["kernel"] = family_json(c.family);
    j["eps"] = c.eps ? json(*c.eps) : json(nullptr);
    j["d"] = dim_json(c.d);
    j["target_class"] = c.target_dim ? "Phi_" + std::to_string(*c.target_dim) : "Phi_inf";
    j["iff"] = c.iff;
    j["condition"] = c.condition;
    return j;
}

// Output destination: a file opened in binary mode (LF endings) or stdout.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
            if (!*file_) {
                throw DomainError("cannot open output file '" + path + "'");
            }
        }
    }
    std::ostream& os() { return file_ ? *file_ : std::cout; }
    void line(const std::string& s) { os() << s << '\n'; }
    void record(json j) {
        json r;
        r["schema_version"] = kSchemaVersion;
        for (auto& [k, v] : j.items()) {
            r[k] = v;
        }
        line(r.dump());
    }

private:
    std::unique_ptr<std::ofstream> file_;
};

Format pick_format(const RunConfig& c, Format def, bool csv_ok) {
    const Format f = c.format.value_or(def);
    if (f == Format::csv && !csv_ok) {
        throw DomainError("--format csv is not available for this command");
    }
    return f;
}

int cmd_eval(const RunConfig& c) {
    const ScaledKernel k = make_scaled(single_family(c), c.beta);
    const Format fmt = pick_format(c, Format::csv, true);
    const auto t = grid(c, GridScale::linear, 0.0, 1.0, 101);
    Sink sink(c.out);
    if (fmt == Format::csv) {
        sink.line("t,phi");
    }
    for (double ti : t) {
        const double v = eval_scaled(k, ti);
        if (fmt == Format::csv) {
            sink.line(num(ti) + "," + num(v));
        } else {
            sink.record({{"record", "eval"}, {"t", ti}, {"phi", v}});
        }
    }
    return kExitOk;
}

int cmd_spectral(const RunConfig& c) {
    const KernelFamily f = single_family(c);
    const int d = finite_dim(c);
    const Format fmt = pick_format(c, Format::csv, true);
    std::optional<SpectralDensity> density;
    if (c.eps.empty()) {
        density.emplace(make_scaled(f, c.beta), d);
    } else {
        density.emplace(make_spec(f, one(c.eps, "eps"), c), d);
    }
    const auto z = grid(c, GridScale::geometric, 1e-3, 1e3, 400);
    Sink sink(c.out);
    if (fmt == Format::csv) {
        sink.line(
            "z,density,method,terms_used,max_term_magnitude,cancellation_ratio,"
            "pole_collision_detected");
    }
    for (double zi : z) {
        const DensityValue v = density->evaluate(zi);
        const auto& dg = v.diagnostics;
        if (fmt == Format::csv) {
            sink.line(num(zi) + "," + num(v.value) + "," + to_string(v.method) + "," +
                      std::to_string(dg.terms_used) + "," + num(dg.max_term_magnitude) + "," +
                      num(dg.cancellation_ratio) + "," +
                      (dg.pole_collision_detected ? "1" : "0"));
        } else {
            sink.record({{"record", "spectral"},
                         {"z", zi},
                         {"density", v.value},
                         {"method", to_string(v.method)},
                         {"terms_used", dg.terms_used},
                         {"max_term_magnitude", dg.max_term_magnitude},
                         {"cancellation_ratio", dg.cancellation_ratio},
                         {"pole_collision_detected", dg.pole_collision_detected}});
        }
    }
    return kExitOk;
}

int cmd_operator(const RunConfig& c) {
    const ZastavnyiSpec spec = make_spec(single_family(c), one(c.eps, "eps"), c);
    const Format fmt = pick_format(c, Format::csv, true);
    const auto t = grid(c, GridScale::linear, 0.0, 1.0, 101);
    Sink sink(c.out);
    if (fmt == Format::csv) {
        sink.line("t,K,phi_beta1,phi_beta2");
    }
    for (double ti : t) {
        const double k = zastavnyi_eval(spec, ti);
        const double p1 = eval(spec.family(), ti / spec.beta1());
        const double p2 = eval(spec.family(), ti / spec.beta2());
        if (fmt == Format::csv) {
            sink.line(num(ti) + "," + num(k) + "," + num(p1) + "," + num(p2));
        } else {
            sink.record(
                {{"record", "operator"}, {"t", ti}, {"K", k}, {"phi_beta1", p1}, {"phi_beta2", p2}});
        }
    }
    return kExitOk;
}

struct CheckOutcome {
    json checks = json::array();
    bool any_refuted = false;
};

CheckOutcome run_checks(const RunConfig& c, const KernelFamily& f, std::optional<double> eps,
                        std::optional<int> d, const TheoremClaim& claim) {
    std::optional<ZastavnyiSpec> spec;
    if (eps) {
        spec.emplace(make_spec(f, *eps, c));
    }
    const ScaledKernel base = make_scaled(f, c.beta);
    const RadialFunction fn = [&](double t) {
        return spec ? zastavnyi_eval(*spec, t) : eval_scaled(base, t);
    };
    const bool all = c.method == "all";
    if (!all && c.method != "spectral" && c.method != "gram" && c.method != "cm") {
        throw DomainError("--method must be one of spectral, gram, cm, all");
    }
    const std::vector<int> dims = d ? std::vector<int>{*d} : std::vector<int>{5, 10};
    const bool phi_inf = !claim.target_dim.has_value() || !d;

    CheckOutcome out;
    const auto add = [&](const PDVerdict& v, std::optional<int> dim) {
        out.any_refuted = out.any_refuted || v.verdict == Verdict::refuted;
        out.checks.push_back(verdict_json(v, dim));
    };
    for (int dim : dims) {
        if (all || c.method == "spectral") {
            SpectralCheckOptions o;
            o.grid = GeometricGrid{c.grid_min.value_or(1e-3), c.grid_max.value_or(1e3),
                                   c.grid_n.value_or(400)};
            add(spec ? spectral_nonnegativity(*spec, dim, o)
                     : spectral_nonnegativity(base, dim, o),
                dim);
        }
        if (all || c.method == "gram") {
            add(gram_min_eigenvalue(fn, dim, c.gram_n, c.seed), dim);
        }
    }
    if ((all && phi_inf) || c.method == "cm") {
        MonotonicityOptions o;
        o.k_max = c.k_max;
        add(complete_monotonicity_check(fn, o), std::nullopt);
    }
    return out;
}

std::string coherence(const TheoremClaim& claim, const CheckOutcome& o) {
    if (claim.expected == Expectation::member) {
        return o.any_refuted ? "refuted_when_member" : "ok";
    }
    if (claim.expected == Expectation::non_member && claim.iff) {
        return o.any_refuted ? "ok" : "non_member_not_refuted";
    }
    return "no_claim";
}

int cmd_pd_check(const RunConfig& c) {
    pick_format(c, Format::json, false);
    const KernelFamily f = single_family(c);
    const std::optional<double> eps =
        c.eps.empty() ? std::nullopt : std::optional<double>(one(c.eps, "eps"));
    const std::optional<int> d = single_dim(c, true);
    const TheoremClaim claim = theorem_predicate(f, eps, d);
    const CheckOutcome o = run_checks(c, f, eps, d, claim);
    Sink sink(c.out);
    json cl = {{"record", "claim"}};
    cl.update(claim_json(claim));
    sink.record(cl);
    for (const auto& v : o.checks) {
        json r = {{"record", "verdict"}};
        r.update(v);
        sink.record(r);
    }
    const std::string coh = coherence(claim, o);
    sink.record({{"record", "summary"}, {"coherence", coh}});
    return coh == "refuted_when_member" ? kExitIncoherent : kExitOk;
}

int cmd_sweep(const RunConfig& c) {
    pick_format(c, Format::json, false);
    if (c.dim.empty()) {
        throw DomainError("--dim is required for theorem-sweep");
    }
    std::vector<std::optional<int>> dims;
    for (const auto& s : c.dim) {
        dims.push_back(parse_dim(s));
    }
    std::vector<std::optional<double>> eps_list;
    if (c.eps.empty()) {
        eps_list.push_back(std::nullopt);
    }
    for (double e : c.eps) {
        eps_list.emplace_back(e);
    }
    const auto families = family_sweep(c);
    Sink sink(c.out);
    bool incoherent = false;
    for (const auto& f : families) {
        for (const auto& e : eps_list) {
            for (const auto& d : dims) {
                const TheoremClaim claim = theorem_predicate(f, e, d);
                const CheckOutcome o = run_checks(c, f, e, d, claim);
                const std::string coh = coherence(claim, o);
                incoherent = incoherent || coh == "refuted_when_member";
                json r = {{"record", "sweep"}};
                r["claim"] = claim_json(claim);
                r["checks"] = o.checks;
                r["coherence"] = coh;
                sink.record(r);
            }
        }
    }
    return incoherent ? kExitIncoherent : kExitOk;
}

struct Panel {
    const char* name;
    KernelFamily family;
    double beta1, beta2;
    double eps[2];
};

int cmd_figure1(const RunConfig& c) {
    const Format fmt = pick_format(c, Format::csv, true);
    const std::vector<Panel> panels = {
        {"A", make_matern(0.5), 0.075, 0.15, {1.0, -2.0}},
        {"B", make_gen_cauchy(0.6, 2.5), 0.2, 0.3, {0.7, -1.25}},
        {"C", make_gen_wendland(0.0, 4.5), 0.4, 0.6, {1.0, -2.0}},
    };
    constexpr int kPoints = 512;
    Sink sink(c.out);
    if (fmt == Format::csv) {
        sink.line("panel,family,eps,beta1,beta2,t,K");
    }
    json meta;
    meta["schema_version"] = kSchemaVersion;
    meta["record"] = "figure1_meta";
    meta["t_grid"] = "uniform on [0, 1], 512 points; range chosen to cover the plotted supports";
    meta["panel_B_eps_note"] =
        "panel B uses eps = 0.7 and -1.25; a conflicting reading of the source gives -0.7 "
        "and 1.25";
    meta["panels"] = json::array();
    for (const auto& p : panels) {
        json pj = family_json(p.family);
        pj["panel"] = p.name;
        pj["beta1"] = p.beta1;
        pj["beta2"] = p.beta2;
        pj["eps"] = {p.eps[0], p.eps[1]};
        meta["panels"].push_back(pj);
        for (double e : p.eps) {
            const ZastavnyiSpec spec(p.family, e, p.beta1, p.beta2);
            for (int i = 0; i < kPoints; ++i) {
                const double t = i == kPoints - 1 ? 1.0 : static_cast<double>(i) / (kPoints - 1);
                const double k = zastavnyi_eval(spec, t);
                if (fmt == Format::csv) {
                    sink.line(std::string(p.name) + "," + family_name(p.family) + "," + num(e) +
                              "," + num(p.beta1) + "," + num(p.beta2) + "," + num(t) + "," +
                              num(k));
                } else {
                    sink.record({{"record", "figure1"},
                                 {"panel", p.name},
                                 {"family", family_name(p.family)},
                                 {"eps", e},
                                 {"beta1", p.beta1},
                                 {"beta2", p.beta2},
                                 {"t", t},
                                 {"K", k}});
                }
            }
        }
    }
    if (c.out.empty()) {
        std::cerr << meta.dump() << '\n';
    } else {
        Sink side(c.out + ".meta.json");
        side.line(meta.dump());
    }
    return kExitOk;
}

int cmd_bounds(const RunConfig& c) {
    pick_format(c, Format::json, false);
    if (c.lemma != 0 && c.lemma != 1 && c.lemma != 2) {
        throw DomainError("--lemma must be 1 or 2");
    }
    Sink sink(c.out);
    bool ok = true;
    if (c.lemma == 0 || c.lemma == 1) {
        const std::vector<double> nus = c.nu.empty() ? std::vector<double>{1.5, 3.0, 0.5} : c.nu;
        const GeometricGrid g{c.grid_min.value_or(1e-3), c.grid_max.value_or(50.0),
                              c.grid_n.value_or(100)};
        for (double nu : nus) {
            const Lemma1Report r = lemma1_bounds_check(nu, g);
            ok = ok && r.passed();
            sink.record({{"record", "lemma1"},
                         {"nu", r.nu},
                         {"grid", g.describe()},
                         {"upper_holds", r.upper_holds},
                         {"upper_worst_margin", r.upper_worst_margin},
                         {"lower_checked", r.lower_checked},
                         {"lower_holds", r.lower_holds},
                         {"lower_worst_margin", r.lower_worst_margin},
                         {"small_z_checked", r.small_z_checked},
                         {"small_z_ratio", r.small_z_ratio},
                         {"small_z_ok", r.small_z_ok},
                         {"large_z_slope", r.large_z_slope},
                         {"large_z_ok", r.large_z_ok},
                         {"passed", r.passed()}});
        }
    }
    if (c.lemma == 0 || c.lemma == 2) {
        const double eps = c.eps.empty() ? -1.5 : one(c.eps, "eps");
        const double lambda = c.lambda.empty() ? 2.0 : one(c.lambda, "lambda");
        const int d = c.dim.empty() ? 4 : finite_dim(c);
        const bool own_grid = c.lemma == 2;
        const GeometricGrid g{own_grid ? c.grid_min.value_or(0.01) : 0.01,
                              own_grid ? c.grid_max.value_or(20.0) : 20.0,
                              own_grid ? c.grid_n.value_or(200) : 200};
        const Lemma2Report r = lemma2_monotonicity_check(eps, lambda, d, g);
        ok = ok && r.passed();
        sink.record({{"record", "lemma2"},
                     {"eps", r.eps},
                     {"lambda", r.lambda},
                     {"d", r.d},
                     {"grid", g.describe()},
                     {"decreasing", r.decreasing},
                     {"max_log_step", r.max_log_step},
                     {"sign_condition", r.sign_condition},
                     {"max_sign_value", r.max_sign_value},
                     {"max_derivative_mismatch", r.max_derivative_mismatch},
                     {"derivative_ok", r.derivative_ok},
                     {"passed", r.passed()}});
    }
    return ok ? kExitOk : kExitIncoherent;
}

}  // namespace

int run(const RunConfig& config, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::eval: return cmd_eval(config);
            case Command::spectral: return cmd_spectral(config);
            case Command::op: return cmd_operator(config);
            case Command::pd_check: return cmd_pd_check(config);
            case Command::theorem_sweep: return cmd_sweep(config);
            case Command::figure1: return cmd_figure1(config);
            case Command::bounds: return cmd_bounds(config);
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::out_of_range&) {
        err << "error: missing family parameter\n";
        return kExitValidation;
    }
    return kExitValidation;
}

int main_entry(int argc, char** argv) {
    CLI::App app{"Radial positive-definite kernels: evaluation, spectra and checks"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig c;
    std::string scale;
    std::string format;
    app.add_option("--family", c.family, "matern | cauchy | wendland");
    app.add_option("--nu", c.nu, "Matern smoothness (comma list for sweeps)")->delimiter(',');
    app.add_option("--delta", c.delta, "Generalized Cauchy shape in (0, 2]")->delimiter(',');
    app.add_option("--lambda", c.lambda, "Generalized Cauchy decay")->delimiter(',');
    app.add_option("--kappa", c.kappa, "Generalized Wendland smoothness")->delimiter(',');
    app.add_option("--mu", c.mu, "Generalized Wendland exponent")->delimiter(',');
    app.add_option("--eps", c.eps, "operator exponent (omit for the base family)")
        ->delimiter(',');
    app.add_option("--beta1", c.beta1, "smaller operator scale");
    app.add_option("--beta2", c.beta2, "larger operator scale");
    app.add_option("--beta", c.beta, "kernel scale for base families (default 1)");
    app.add_option("--dim", c.dim, "dimension d, or inf (comma list for sweeps)")
        ->delimiter(',');
    app.add_option("--grid-min", c.grid_min, "grid start");
    app.add_option("--grid-max", c.grid_max, "grid end");
    app.add_option("--grid-n", c.grid_n, "grid size");
    app.add_option("--grid-scale", scale, "linear | geometric");
    app.add_option("--seed", c.seed, "Gram point seed (default 42)");
    app.add_option("--gram-n", c.gram_n, "Gram matrix size (default 200, at most 500)");
    app.add_option("--k-max", c.k_max, "highest difference order (default 8)");
    app.add_option("--method", c.method, "pd-check method: spectral | gram | cm | all");
    app.add_option("--lemma", c.lemma, "bounds: 1 or 2 (default both)");
    app.add_option("--out", c.out, "output file (default stdout)");
    app.add_option("--format", format, "csv | json");

    const std::map<std::string, Command> names = {
        {"eval", Command::eval},         {"spectral", Command::spectral},
        {"operator", Command::op},       {"pd-check", Command::pd_check},
        {"theorem-sweep", Command::theorem_sweep},
        {"figure1", Command::figure1},   {"bounds", Command::bounds},
    };
    const std::map<std::string, std::string> help = {
        {"eval", "write (t, phi(t/beta)) rows"},
        {"spectral", "write spectral density rows on a z grid"},
        {"operator", "write (t, K, phi(t/beta1), phi(t/beta2)) rows"},
        {"pd-check", "run positive-definiteness checks against the theorem claim"},
        {"theorem-sweep", "pd-check over parameter lists"},
        {"figure1", "curve data of the three operator panels"},
        {"bounds", "Bessel ratio bounds and the monotonicity lemma"},
    };
    for (const auto& [name, cmd] : names) {
        app.add_subcommand(name, help.at(name));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }
    for (const auto& [name, cmd] : names) {
        if (app.got_subcommand(name)) {
            c.command = cmd;
        }
    }
    if (!scale.empty()) {
        if (scale != "linear" && scale != "geometric") {
            std::cerr << "error: --grid-scale must be linear or geometric\n";
            return kExitValidation;
        }
        c.grid_scale = scale == "linear" ? GridScale::linear : GridScale::geometric;
    }
    if (!format.empty()) {
        if (format != "csv" && format != "json") {
            std::cerr << "error: --format must be csv or json\n";
            return kExitValidation;
        }
        c.format = format == "csv" ? Format::csv : Format::json;
    }
    return run(c, std::cerr);
}

}  // namespace radpd::cli
