#include "corrcyl/bessel.hpp"

#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>

#include "corrcyl/errors.hpp"

namespace corrcyl::bessel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::atomic<int>& cap_storage() {
    static std::atomic<int> cap{200};
    return cap;
}

// GSL must not abort the process on under/overflow; we handle status codes.
const bool g_handler_off = [] {
    gsl_set_error_handler_off();
    return true;
}();

int checked_abs_order(int order, double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("bessel: argument must be positive and finite, got " +
                                std::to_string(x));
    const int j = order < 0 ? -order : order;
    if (j > cap_storage().load(std::memory_order_relaxed))
        throw ConfigError("bessel: order " + std::to_string(order) +
                          " exceeds the configured cap " +
                          std::to_string(cap_storage().load()));
    return j;
}

// ln I_j(x) by the ascending series, valid (and fast) when x^2/(4(j+1)) is
// small; this is exactly the regime where the scaled GSL value underflows.
double log_i_series(int j, double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int m = 1; m < 64; ++m) {
        term *= q / (static_cast<double>(m) * (j + m));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return j * std::log(0.5 * x) - std::lgamma(j + 1.0) + std::log(sum);
}

double log_add(double la, double lb) {
    if (la < lb) std::swap(la, lb);
    if (lb == -kInf) return la;
    return la + std::log1p(std::exp(lb - la));
}

}  // namespace

LogScaled LogScaled::from_value(double v) {
    if (v == 0.0) return LogScaled{};
    return LogScaled{std::log(std::abs(v)), v > 0 ? 1 : -1};
}

double LogScaled::value() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_mag);
}

int order_cap() { return cap_storage().load(std::memory_order_relaxed); }

void raise_order_cap(int cap) {
    int cur = cap_storage().load(std::memory_order_relaxed);
    while (cap > cur &&
           !cap_storage().compare_exchange_weak(cur, cap, std::memory_order_relaxed)) {
    }
}

double log_bessel_i(int order, double x) {
    const int j = checked_abs_order(order, x);
    if (x * x < (j + 1.0)) return log_i_series(j, x);
    gsl_sf_result r;
    const int status = gsl_sf_bessel_In_scaled_e(j, x, &r);
    if (status == GSL_SUCCESS && r.val > 0.0) return std::log(r.val) + x;
    return log_i_series(j, x);  // underflow corner
}

double log_bessel_k(int order, double x) {
    const int j = checked_abs_order(order, x);
    // Kn_scaled is the cheaper and slightly sharper path; it only fails by
    // overflow in the small-x / large-order corner, where lnKnu takes over.
    gsl_sf_result r;
    int status = gsl_sf_bessel_Kn_scaled_e(j, x, &r);
    if (status == GSL_SUCCESS && std::isfinite(r.val) && r.val > 0.0)
        return std::log(r.val) - x;
    status = gsl_sf_bessel_lnKnu_e(static_cast<double>(j), x, &r);
    if (status != GSL_SUCCESS)
        throw std::domain_error("bessel: lnKnu failed for order " + std::to_string(j) +
                                ", x = " + std::to_string(x));
    return r.val;
}

LogScaled bessel_i_log(int order, double x) {
    return LogScaled{log_bessel_i(order, x), 1};
}

LogScaled bessel_k_log(int order, double x) {
    return LogScaled{log_bessel_k(order, x), 1};
}

double bessel_i(int order, double x) {
    const int j = checked_abs_order(order, x);
    gsl_sf_result r;
    const int status = gsl_sf_bessel_In_e(j, x, &r);
    if (status == GSL_SUCCESS && std::isfinite(r.val) && r.val != 0.0) return r.val;
    return std::exp(log_bessel_i(j, x));  // graceful over/underflow
}

double bessel_k(int order, double x) {
    const int j = checked_abs_order(order, x);
    gsl_sf_result r;
    const int status = gsl_sf_bessel_Kn_e(j, x, &r);
    if (status == GSL_SUCCESS && std::isfinite(r.val) && r.val != 0.0) return r.val;
    return std::exp(log_bessel_k(j, x));
}

double bessel_k_drho(int order, double k, double rho) {
    const double q = std::abs(k);
    if (!(q > 0.0)) throw std::domain_error("bessel_k_drho: |k| must be positive");
    if (!(rho > 0.0)) throw std::domain_error("bessel_k_drho: rho must be positive");
    const int j = order < 0 ? -order : order;
    return -0.5 * q * (bessel_k(j - 1, q * rho) + bessel_k(j + 1, q * rho));
}

double log_abs_bessel_k_drho(int order, double q, double rho) {
    const int j = order < 0 ? -order : order;
    const double lo = log_bessel_k(j - 1, q * rho);
    const double hi = log_bessel_k(j + 1, q * rho);
    return std::log(0.5 * q) + log_add(lo, hi);
}

double k_ratio(int order, double x_num, double x_den) {
    return std::exp(log_bessel_k(order, x_num) - log_bessel_k(order, x_den));
}

}  // namespace corrcyl::bessel
