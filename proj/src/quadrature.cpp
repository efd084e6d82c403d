#include "radpd/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <queue>
#include <tuple>

#include "radpd/errors.hpp"
#include "radpd/specfun.hpp"

namespace radpd::quad {

void NeumaierSum::add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
        comp_ += (sum_ - t) + x;
    } else {
        comp_ += (x - t) + sum_;
    }
    sum_ = t;
    abs_ += std::fabs(x);
}

namespace {

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error, abs_value;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = fc * kWgk[7];
    double gauss = fc * kWg[3];
    double absk = std::fabs(fc) * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        kron += kWgk[j] * (f1 + f2);
        absk += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * (f1 + f2);
        }
    }
    return {a, b, kron * h, std::fabs((kron - gauss) * h), absk * std::fabs(h)};
}

}  // namespace

AdaptiveResult integrate(const std::function<double(double)>& f, double a, double b,
                         const AdaptiveOptions& opts) {
    AdaptiveResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::priority_queue<Segment> heap;
    const Segment first = gk15(f, a, b);
    heap.push(first);
    double total = first.value;
    double total_err = first.error;
    double total_abs = first.abs_value;
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    int splits = 0;
    while (true) {
        const double tol = std::max(opts.abs_tol, opts.rel_tol * std::fabs(total));
        const double floor = 50.0 * kEps * total_abs;
        if (total_err <= std::max(tol, floor)) {
            out.converged = true;
            break;
        }
        if (splits >= opts.max_subdivisions) {
            break;
        }
        const Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) {
            break;  // interval cannot be split further
        }
        heap.pop();
        const Segment left = gk15(f, worst.a, mid);
        const Segment right = gk15(f, mid, worst.b);
        heap.push(left);
        heap.push(right);
        ++splits;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        total_abs += left.abs_value + right.abs_value - worst.abs_value;
    }
    NeumaierSum sum;
    double err = 0.0;
    double absv = 0.0;
    while (!heap.empty()) {
        sum.add(heap.top().value);
        err += heap.top().error;
        absv += heap.top().abs_value;
        heap.pop();
    }
    out.value = sum.value();
    out.abs_error = err;
    out.abs_integral = absv;
    out.subdivisions = splits;
    return out;
}

const Rule& gauss_jacobi(int n, double alpha, double beta) {
    if (n < 1) {
        throw DomainError("gauss_jacobi: requires n >= 1");
    }
    if (!(alpha > -1.0) || !(beta > -1.0)) {
        throw DomainError("gauss_jacobi: requires alpha, beta > -1");
    }
    static std::mutex mutex;
    static std::map<std::tuple<int, double, double>, Rule> cache;
    std::lock_guard<std::mutex> lock(mutex);
    const auto key = std::make_tuple(n, alpha, beta);
    if (auto it = cache.find(key); it != cache.end()) {
        return it->second;
    }

    const double ab = alpha + beta;
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 1));
    diag(0) = (beta - alpha) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + ab;
        diag(k) = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + ab;
        double b2;
        if (k == 1) {
            b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        } else {
            b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
        }
        sub(k - 1) = std::sqrt(b2);
    }
    const double log_mu0 = (ab + 1.0) * std::log(2.0) + specfun::log_gamma(alpha + 1.0) +
                           specfun::log_gamma(beta + 1.0) - specfun::log_gamma(ab + 2.0);
    const double mu0 = std::exp(log_mu0);

    Rule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    if (n == 1) {
        rule.nodes[0] = diag(0);
        rule.weights[0] = mu0;
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
        solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
        if (solver.info() != Eigen::Success) {
            throw ConvergenceError("gauss_jacobi: eigenvalue solver failed", 0.0);
        }
        for (int i = 0; i < n; ++i) {
            rule.nodes[i] = solver.eigenvalues()(i);
            const double v = solver.eigenvectors()(0, i);
            rule.weights[i] = mu0 * v * v;
        }
    }
    return cache.emplace(key, std::move(rule)).first->second;
}

}  // namespace radpd::quad
