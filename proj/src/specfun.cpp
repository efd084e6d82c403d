#include "radpd/specfun.hpp"

#include <array>
#include <cfloat>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "radpd/errors.hpp"

namespace radpd::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 100000;

void require_finite(double x, const char* fn) {
    if (!std::isfinite(x)) {
        throw DomainError(std::string(fn) + ": non-finite argument");
    }
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Taylor coefficients of 1/Gamma(1 + x) around x = 0, |x| <= 1/2.
constexpr std::array<double, 26> kRecipGammaSeries = {
    1.0000000000000000,  0.5772156649015329,  -0.6558780715202538, -0.0420026350340952,
    0.1665386113822915,  -0.0421977345555443, -0.0096219715278770, 0.0072189432466630,
    -0.0011651675918591, -0.0002152416741149, 0.0001280502823882,  -0.0000201348547807,
    -0.0000012504934821, 0.0000011330272320,  -0.0000002056338417, 0.0000000061160950,
    0.0000000050020075,  -0.0000000011812746, 0.0000000001043427,  0.0000000000077823,
    -0.0000000000036968, 0.0000000000005100,  -0.0000000000000206, -0.0000000000000054,
    0.0000000000000014,  0.0000000000000001};

double recip_gamma_1p(double x) {
    double sum = 0.0;
    for (auto it = kRecipGammaSeries.rbegin(); it != kRecipGammaSeries.rend(); ++it) {
        sum = sum * x + *it;
    }
    return sum;
}

// Temme's auxiliary functions: gamma1 = (1/G(1-mu) - 1/G(1+mu)) / (2 mu),
// gamma2 = (1/G(1-mu) + 1/G(1+mu)) / 2, both smooth through mu = 0.
void temme_gammas(double mu, double& gamma1, double& gamma2, double& recip_plus,
                  double& recip_minus) {
    const double mu2 = mu * mu;
    double even = 0.0;
    double odd = 0.0;
    for (int k = static_cast<int>(kRecipGammaSeries.size()) - 1; k >= 0; --k) {
        if (k % 2 == 0) {
            even = even * mu2 + kRecipGammaSeries[k];
        } else {
            odd = odd * mu2 + kRecipGammaSeries[k];
        }
    }
    gamma1 = -odd;
    gamma2 = even;
    recip_plus = recip_gamma_1p(mu);
    recip_minus = recip_gamma_1p(-mu);
}

// ---------------------------------------------------------------------------
// Modified Bessel K

// Values are mantissa * exp(log_scale).
struct KPair {
    double k0;  // K_mu
    double k1;  // K_{mu+1}
    double log_scale;
};

// Temme's series, |mu| <= 1/2, 0 < x < 2.
KPair k_pair_temme(double mu, double x) {
    const double half_x = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact = std::fabs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    const double log2x = -std::log(half_x);
    const double sigma = mu * log2x;
    const double sinhc = std::fabs(sigma) < kEps ? 1.0 : std::sinh(sigma) / sigma;
    double g1, g2, rplus, rminus;
    temme_gammas(mu, g1, g2, rplus, rminus);

    double f = fact * (g1 * std::cosh(sigma) + g2 * sinhc * log2x);
    const double e = std::exp(sigma);
    double p = 0.5 * e / rplus;
    double q = 0.5 / (e * rminus);
    double c = 1.0;
    const double quarter_x2 = half_x * half_x;
    double sum = f;
    double sum1 = p;
    const double mu2 = mu * mu;
    for (int i = 1; i < kMaxIter; ++i) {
        f = (i * f + p + q) / (i * i - mu2);
        c *= quarter_x2 / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * f;
        sum += del;
        sum1 += c * (p - i * f);
        if (std::fabs(del) < std::fabs(sum) * kEps) {
            break;
        }
    }
    return {sum, sum1 * (2.0 / x), 0.0};
}

// Steed's continued fraction (Thompson-Barnett form), |mu| <= 1/2, x >= 2.
// Returns exp(x)-scaled values.
KPair k_pair_steed(double mu, double x) {
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double delh = d;
    double h = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - mu * mu;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i < kMaxIter; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::fabs(dels / s) < kEps) {
            break;
        }
    }
    h *= a1;
    const double kmu = std::sqrt(kPi / (2.0 * x)) / s;
    const double kmu1 = kmu * (mu + x + 0.5 - h) / x;
    return {kmu, kmu1, -x};
}

KPair k_pair(double mu, double x) { return x < 2.0 ? k_pair_temme(mu, x) : k_pair_steed(mu, x); }

// K_{nu-1}, K_nu, K_{nu+1} on a common scale, nu >= 0.
struct KTriple {
    double km1;
    double k;
    double kp1;
    double log_scale;
};

KTriple k_triple(double nu, double x) {
    const int nl = static_cast<int>(std::floor(nu + 0.5));
    const double mu = nu - nl;
    if (nl == 0) {
        // mu in [0, 1/2): K_{nu-1} = K_{1-nu} comes from the pair at -mu.
        const KPair pr = k_pair(-mu, x);
        const double kp1 = pr.k1 + (2.0 * nu / x) * pr.k0;
        return {pr.k1, pr.k0, kp1, pr.log_scale};
    }
    const KPair pr = k_pair(mu, x);
    double km1 = pr.k0;
    double k = pr.k0;
    double kp1 = pr.k1;
    double log_scale = pr.log_scale;
    constexpr double kRescale = 1e250;
    for (int j = 1; j <= nl; ++j) {
        const double next = (2.0 * (mu + j) / x) * kp1 + k;
        km1 = k;
        k = kp1;
        kp1 = next;
        if (std::fabs(kp1) > kRescale) {
            km1 /= kRescale;
            k /= kRescale;
            kp1 /= kRescale;
            log_scale += std::log(kRescale);
        }
    }
    return {km1, k, kp1, log_scale};
}

void validate_k_args(double nu, double z, const char* fn) {
    require_finite(nu, fn);
    require_finite(z, fn);
    if (z <= 0.0) {
        throw DomainError(std::string(fn) + ": requires z > 0");
    }
}

double scaled_to_double(double mant, double log_scale, const char* fn, bool& underflow) {
    underflow = false;
    const double lv = std::log(mant) + log_scale;
    if (lv > std::log(DBL_MAX)) {
        throw OverflowError(std::string(fn) + ": result overflows");
    }
    if (lv < std::log(DBL_MIN)) {
        underflow = true;
        return 0.0;
    }
    if (log_scale == 0.0) {
        return mant;
    }
    return mant * std::exp(log_scale);
}

// ---------------------------------------------------------------------------
// Bessel J

double j_series(double nu, double x) {
    // (x/2)^nu / Gamma(nu+1) * sum_k (-x^2/4)^k / (k! (nu+1)_k)
    const double y = -0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < kMaxIter; ++k) {
        term *= y / (k * (nu + k));
        sum += term;
        if (std::fabs(term) < kEps * std::fabs(sum)) {
            break;
        }
    }
    const double pref = std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0));
    return pref * sum;
}

// Hankel's asymptotic expansion, x >= max(25, nu^2).
double j_asymptotic(double nu, double x) {
    const double four_nu2 = 4.0 * nu * nu;
    double term = 1.0;
    double p = 1.0;
    double q = 0.0;
    double last = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (four_nu2 - odd * odd) / (8.0 * k * x);
        const double mag = std::fabs(term);
        if (mag > last) {
            break;  // asymptotic series started to diverge
        }
        last = mag;
        switch (k % 4) {
            case 1: q += term; break;
            case 2: p -= term; break;
            case 3: q -= term; break;
            default: p += term; break;
        }
        if (mag < 1e-17) {
            break;
        }
    }
    const double phase = (0.5 * nu + 0.25) * kPi;
    const double cx = std::cos(x);
    const double sx = std::sin(x);
    const double cp = std::cos(phase);
    const double sp = std::sin(phase);
    const double cos_chi = cx * cp + sx * sp;
    const double sin_chi = sx * cp - cx * sp;
    return std::sqrt(2.0 / (kPi * x)) * (p * cos_chi - q * sin_chi);
}

// CF1 for J'/J, downward recurrence, and Steed's CF2 for (J' + iY')/(J + iY).
// Valid for x >= 2, nu >= -1/2.
double j_steed(double nu, double x) {
    const int nl = std::max(0, static_cast<int>(nu - x + 1.5));
    const double mu = nu - nl;
    const double xi = 1.0 / x;
    const double xi2 = 2.0 * xi;

    // CF1 by modified Lentz; isign tracks the sign of J_nu.
    int isign = 1;
    double h = nu * xi;
    if (std::fabs(h) < kTiny) {
        h = kTiny;
    }
    double b = xi2 * nu;
    double d = 0.0;
    double c = h;
    int it = 0;
    for (; it < kMaxIter; ++it) {
        b += xi2;
        d = b - d;
        if (std::fabs(d) < kTiny) {
            d = kTiny;
        }
        c = b - 1.0 / c;
        if (std::fabs(c) < kTiny) {
            c = kTiny;
        }
        d = 1.0 / d;
        const double del = c * d;
        h *= del;
        if (d < 0.0) {
            isign = -isign;
        }
        if (std::fabs(del - 1.0) < kEps) {
            break;
        }
    }
    if (it == kMaxIter) {
        throw ConvergenceError("bessel_j: CF1 did not converge", 0.0);
    }

    // Downward recurrence from nu to mu with an unnormalised start.
    double jl = isign * 1e-30;
    double jpl = h * jl;
    const double j_nu_start = jl;
    double fact = nu * xi;
    for (int l = nl; l >= 1; --l) {
        const double jtemp = fact * jl + jpl;
        fact -= xi;
        jpl = fact * jtemp - jl;
        jl = jtemp;
    }
    if (jl == 0.0) {
        jl = kEps;
    }
    const double f = jpl / jl;

    // CF2: p + iq = -1/(2x) + i + (i/x) * a1/(b1 + a2/(b2 + ...)),
    // a_k = (k - 1/2)^2 - mu^2, b_k = 2(x + i k).
    using cd = std::complex<double>;
    cd fc(kTiny, 0.0);
    cd cc = fc;
    cd dc(0.0, 0.0);
    int k = 1;
    for (; k < kMaxIter; ++k) {
        const double half_odd = k - 0.5;
        const double ak = half_odd * half_odd - mu * mu;
        const cd bk(2.0 * x, 2.0 * k);
        dc = bk + ak * dc;
        if (std::abs(dc) < kTiny) {
            dc = kTiny;
        }
        cc = bk + ak / cc;
        if (std::abs(cc) < kTiny) {
            cc = kTiny;
        }
        dc = 1.0 / dc;
        const cd del = cc * dc;
        fc *= del;
        if (std::abs(del - 1.0) < kEps) {
            break;
        }
    }
    if (k == kMaxIter) {
        throw ConvergenceError("bessel_j: CF2 did not converge", 0.0);
    }
    const cd pq = cd(-0.5 * xi, 1.0) + cd(0.0, xi) * fc;
    const double p = pq.real();
    const double q = pq.imag();

    const double w = xi2 / kPi;
    const double gam = (p - f) / q;
    double jmu = std::sqrt(w / ((p - f) * gam + q));
    jmu = std::copysign(jmu, jl);
    return j_nu_start * (jmu / jl);
}

// J_{n+1/2}(x) for integer n >= -1 via spherical Bessel functions.
double j_half_integer(int n, double x) {
    const double pref = std::sqrt(2.0 * x / kPi);
    if (n == -1) {
        return pref * std::cos(x) / x;
    }
    if (n == 0) {
        return pref * std::sin(x) / x;
    }
    if (x < n + 2.0) {
        return j_series(n + 0.5, x);
    }
    double jm = std::cos(x) / x;
    double j = std::sin(x) / x;
    for (int k = 0; k < n; ++k) {
        const double next = (2.0 * k + 1.0) / x * j - jm;
        jm = j;
        j = next;
    }
    return pref * j;
}

bool half_integer_order(double nu, int& n) {
    const double twice = 2.0 * nu;
    if (twice == std::floor(twice) && static_cast<long long>(twice) % 2 != 0 && nu < 1e6) {
        n = static_cast<int>(std::floor(nu));  // nu = n + 1/2
        return true;
    }
    return false;
}

double bessel_j_unchecked(double nu, double z) {
    if (z == 0.0) {
        if (nu == 0.0) {
            return 1.0;
        }
        if (nu > 0.0) {
            return 0.0;
        }
        throw DomainError("bessel_j: J_nu(0) is unbounded for nu < 0");
    }
    int n = 0;
    if (half_integer_order(nu, n)) {
        return j_half_integer(n, z);
    }
    if (z < 2.0) {
        return j_series(nu, z);
    }
    if (z >= std::max(25.0, nu * nu)) {
        return j_asymptotic(nu, z);
    }
    return j_steed(nu, z);
}

// McMahon's expansion for the k-th zero of J_nu.
double mcmahon_zero(double nu, int k) {
    const double b = (k + 0.5 * nu - 0.25) * kPi;
    const double mu = 4.0 * nu * nu;
    const double e = 8.0 * b;
    const double e3 = e * e * e;
    return b - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e3) -
           32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * e3 * e * e);
}

double j_derivative(double nu, double x) {
    return (nu / x) * bessel_j_unchecked(nu, x) - bessel_j_unchecked(nu + 1.0, x);
}

double refine_zero_bisect(double nu, double lo, double hi) {
    double flo = bessel_j_unchecked(nu, lo);
    for (int i = 0; i < 200 && hi - lo > 4.0 * kEps * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = bessel_j_unchecked(nu, mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double find_zero(double nu, int k, double previous) {
    double x = mcmahon_zero(nu, k);
    if (k == 1 && x <= 0.0) {
        x = 1.0 + nu;
    }
    const double guess = x;
    bool ok = false;
    for (int it = 0; it < 30; ++it) {
        const double fx = bessel_j_unchecked(nu, x);
        const double dfx = j_derivative(nu, x);
        if (dfx == 0.0) {
            break;
        }
        const double step = fx / dfx;
        x -= step;
        if (!(x > 0.0)) {
            break;
        }
        if (std::fabs(step) <= 4.0 * kEps * x) {
            ok = true;
            break;
        }
    }
    if (ok && x > previous + 0.5 && std::fabs(x - guess) < 1.0) {
        return x;
    }
    // Fallback: scan for a sign change after the previous zero.
    double lo = previous + 1e-6;
    const double step = 0.05;
    double flo = bessel_j_unchecked(nu, lo);
    for (int i = 0; i < 10000; ++i) {
        const double hi = lo + step;
        const double fhi = bessel_j_unchecked(nu, hi);
        if ((flo < 0.0) != (fhi < 0.0)) {
            return refine_zero_bisect(nu, lo, hi);
        }
        lo = hi;
        flo = fhi;
    }
    throw ConvergenceError("bessel_j_zero: failed to bracket zero", x);
}

}  // namespace

// ---------------------------------------------------------------------------

double gamma(double x) {
    require_finite(x, "gamma");
    if (is_nonpositive_integer(x)) {
        throw PoleError("gamma: pole at non-positive integer");
    }
    if (x > 171.62) {
        throw OverflowError("gamma: result overflows");
    }
    return std::tgamma(x);
}

double log_gamma(double x) {
    require_finite(x, "log_gamma");
    if (is_nonpositive_integer(x)) {
        throw PoleError("log_gamma: pole at non-positive integer");
    }
    if (x > 0.0) {
        return std::lgamma(x);
    }
    // Reflection keeps accuracy for large negative arguments.
    return std::log(kPi) - std::log(std::fabs(sin_pi(x))) - std::lgamma(1.0 - x);
}

int gamma_sign(double x) {
    require_finite(x, "gamma_sign");
    if (is_nonpositive_integer(x)) {
        throw PoleError("gamma_sign: pole at non-positive integer");
    }
    if (x > 0.0) {
        return 1;
    }
    return std::fmod(std::floor(x), 2.0) == 0.0 ? 1 : -1;
}

double beta(double a, double b) {
    require_finite(a, "beta");
    require_finite(b, "beta");
    if (a <= 0.0 || b <= 0.0) {
        throw DomainError("beta: requires a > 0 and b > 0");
    }
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double digamma(double x) {
    require_finite(x, "digamma");
    if (is_nonpositive_integer(x)) {
        throw PoleError("digamma: pole at non-positive integer");
    }
    if (x < 0.0) {
        return digamma(1.0 - x) - kPi * sin_pi(x + 0.5) / sin_pi(x);
    }
    double acc = 0.0;
    while (x < 6.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double r = 1.0 / (x * x);
    const double tail =
        r * (1.0 / 12 -
             r * (1.0 / 120 -
                  r * (1.0 / 252 -
                       r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760 - r / 12))))));
    return acc + std::log(x) - 0.5 / x - tail;
}

double sin_pi(double x) {
    const double r = std::remainder(x, 2.0);  // exact, in [-1, 1]
    if (r > 0.5) {
        return std::sin(kPi * (1.0 - r));
    }
    if (r < -0.5) {
        return -std::sin(kPi * (1.0 + r));
    }
    return std::sin(kPi * r);
}

BesselKResult bessel_k_ex(double nu, double z) {
    validate_k_args(nu, z, "bessel_k");
    const KTriple t = k_triple(std::fabs(nu), z);
    const double log_value = std::log(t.k) + t.log_scale;
    bool underflow = false;
    const double value = scaled_to_double(t.k, t.log_scale, "bessel_k", underflow);
    return {value, log_value, underflow ? BesselStatus::underflow : BesselStatus::ok};
}

double bessel_k(double nu, double z) { return bessel_k_ex(nu, z).value; }

double log_bessel_k(double nu, double z) {
    validate_k_args(nu, z, "log_bessel_k");
    const KTriple t = k_triple(std::fabs(nu), z);
    return std::log(t.k) + t.log_scale;
}

double bessel_k_prime(double nu, double z) {
    validate_k_args(nu, z, "bessel_k_prime");
    const KTriple t = k_triple(std::fabs(nu), z);
    bool underflow = false;
    return -scaled_to_double(0.5 * (t.km1 + t.kp1), t.log_scale, "bessel_k_prime", underflow);
}

double bessel_k_log_derivative(double nu, double z) {
    validate_k_args(nu, z, "bessel_k_log_derivative");
    return -std::fabs(nu) - z * bessel_k_order_ratio(nu, z);
}

double bessel_k_order_ratio(double nu, double z) {
    validate_k_args(nu, z, "bessel_k_order_ratio");
    const KTriple t = k_triple(std::fabs(nu), z);
    return t.km1 / t.k;
}

double bessel_j(double nu, double z) {
    require_finite(nu, "bessel_j");
    require_finite(z, "bessel_j");
    if (nu < -0.5) {
        throw DomainError("bessel_j: requires nu >= -1/2");
    }
    if (z < 0.0) {
        throw DomainError("bessel_j: requires z >= 0");
    }
    return bessel_j_unchecked(nu, z);
}

double omega(int d, double t) {
    require_finite(t, "omega");
    if (d < 1) {
        throw DomainError("omega: requires d >= 1");
    }
    if (t < 0.0) {
        throw DomainError("omega: requires t >= 0");
    }
    const double nu = 0.5 * (d - 2);
    if (d == 1) {
        return std::sqrt(2.0 / kPi) * std::cos(t);
    }
    if (d == 3) {
        return t == 0.0 ? std::sqrt(2.0 / kPi) : std::sqrt(2.0 / kPi) * std::sin(t) / t;
    }
    if (t < 2.0 || t * t < 4.0 * (nu + 1.0)) {
        // 2^{-nu} sum_k (-t^2/4)^k / (k! Gamma(nu + k + 1))
        const double y = -0.25 * t * t;
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < kMaxIter; ++k) {
            term *= y / (k * (nu + k));
            sum += term;
            if (std::fabs(term) < kEps * std::fabs(sum)) {
                break;
            }
        }
        return sum * std::exp(-nu * std::numbers::ln2 - std::lgamma(nu + 1.0));
    }
    return bessel_j_unchecked(nu, t) * std::pow(t, -nu);
}

double bessel_j_zero(double nu, int k) {
    require_finite(nu, "bessel_j_zero");
    if (nu < -0.5) {
        throw DomainError("bessel_j_zero: requires nu >= -1/2");
    }
    if (k < 1) {
        throw DomainError("bessel_j_zero: requires k >= 1");
    }
    if (nu == -0.5) {
        return (k - 0.5) * kPi;
    }
    if (nu == 0.5) {
        return k * kPi;
    }
    static std::mutex mutex;
    static std::map<double, std::vector<double>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& zeros = cache[nu];
    while (static_cast<int>(zeros.size()) < k) {
        const int next = static_cast<int>(zeros.size()) + 1;
        const double prev = zeros.empty() ? 0.0 : zeros.back();
        zeros.push_back(find_zero(nu, next, prev));
    }
    return zeros[k - 1];
}

}  // namespace radpd::specfun
