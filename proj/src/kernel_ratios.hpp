// Internal log-space building blocks shared by the energy kernels.
// Every integrand is a product of cross-radius Bessel ratios; the factors
// are combined additively in log space and exponentiated once so that the
// k -> 0 and large-order corners never overflow.

#pragma once

#include <algorithm>
#include <cmath>

#include "corrcyl/bessel.hpp"

namespace corrcyl::detail {

// Arguments can reach exact zero only at panel endpoints, which the Kronrod
// nodes never touch; the floor guards rounding right at a breakpoint.
inline double floor_q(double q) { return std::max(std::abs(q), 1e-300); }

/// K_j(q rho) / K_j(q a)  for rho > a (always in (0, 1]).
inline double kratio_ra(int j, double q, double rho, double a) {
    const double qq = floor_q(q);
    return std::exp(bessel::log_bessel_k(j, qq * rho) -
                    bessel::log_bessel_k(j, qq * a));
}

/// d/drho0 K_j(q rho0) / K_j(q a); negative, finite down to q -> 0.
inline double dratio(int j, double q, double rho0, double a) {
    const double qq = floor_q(q);
    const double lden = bessel::log_bessel_k(j, qq * a);
    const double lq2 = std::log(0.5 * qq);
    const int ja = j < 0 ? -j : j;
    return -(std::exp(lq2 + bessel::log_bessel_k(ja - 1, qq * rho0) - lden) +
             std::exp(lq2 + bessel::log_bessel_k(ja + 1, qq * rho0) - lden));
}

/// I_j(k a)/K_j(k a) * K_j(k rho)^2, the U^(0)-type integrand core.
inline double ik_weight(int j, double k, double a, double rho) {
    const double kk = floor_q(k);
    return std::exp(bessel::log_bessel_i(j, kk * a) -
                    bessel::log_bessel_k(j, kk * a) +
                    2.0 * bessel::log_bessel_k(j, kk * rho));
}

/// I_j(k a)/K_j(k a) * [d/drho0 K_j(k rho0)]^2, the Xi_rho integrand core.
inline double ik_weight_drho(int j, double k, double a, double rho0) {
    const double kk = floor_q(k);
    return std::exp(bessel::log_bessel_i(j, kk * a) -
                    bessel::log_bessel_k(j, kk * a) +
                    2.0 * bessel::log_abs_bessel_k_drho(j, kk, rho0));
}

}  // namespace corrcyl::detail
