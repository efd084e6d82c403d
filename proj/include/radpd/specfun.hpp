#pragma once

// Real-argument special functions used throughout the library.
//
// All functions either return a finite value or throw; NaN is never returned.
// The one intentional non-error edge is underflow of K_nu for large arguments,
// which returns 0 from bessel_k and is reported through bessel_k_ex.

namespace radpd::specfun {

/// Gamma function. Throws PoleError at 0, -1, -2, ... and OverflowError beyond ~171.6.
double gamma(double x);

/// log|Gamma(x)|, valid for every non-pole x (including large and negative x).
double log_gamma(double x);

/// Sign of Gamma(x) (+1 or -1). Throws PoleError at non-positive integers.
int gamma_sign(double x);

/// Beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b), via log-gamma.
double beta(double a, double b);

/// Digamma psi(x) = Gamma'(x)/Gamma(x). Throws PoleError at non-positive integers.
double digamma(double x);

/// sin(pi x) with exact argument reduction; exactly zero at integers.
double sin_pi(double x);

enum class BesselStatus { ok, underflow };

struct BesselKResult {
    double value;      ///< K_nu(z), or 0 when it underflows.
    double log_value;  ///< log K_nu(z); always finite.
    BesselStatus status;
};

/// Modified Bessel function of the second kind K_nu(z) for z > 0 and any real nu.
/// Returns 0 when the result underflows; throws OverflowError when it overflows.
double bessel_k(double nu, double z);

/// Like bessel_k, but reports underflow instead of returning a bare zero.
BesselKResult bessel_k_ex(double nu, double z);

/// log K_nu(z); never under- or overflows for representable arguments.
double log_bessel_k(double nu, double z);

/// Derivative dK_nu/dz = -(K_{nu-1}(z) + K_{nu+1}(z)) / 2.
double bessel_k_prime(double nu, double z);

/// Logarithmic derivative z K'_nu(z) / K_nu(z), evaluated without forming K_nu.
double bessel_k_log_derivative(double nu, double z);

/// K_{n-1}(z) / K_n(z) with n = |nu|. Note z K'_nu/K_nu = -n - z * ratio, so this
/// gives the log-derivative's offset from -n without cancellation.
double bessel_k_order_ratio(double nu, double z);

/// Bessel function of the first kind J_nu(z) for z >= 0 and nu >= -1/2.
double bessel_j(double nu, double z);

/// Schoenberg kernel Omega_d(t) = t^{-(d-2)/2} J_{(d-2)/2}(t), with its limit at t = 0.
double omega(int d, double t);

/// k-th positive zero (k >= 1) of J_nu, nu >= -1/2. Cached per order.
double bessel_j_zero(double nu, int k);

}  // namespace radpd::specfun
