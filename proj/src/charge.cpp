#include "corrcyl/charge.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "corrcyl/bessel.hpp"
#include "corrcyl/generic_kernel.hpp"
#include "kernel_ratios.hpp"

namespace corrcyl::charge {

namespace {

using numerics::integrate_real_line;
using numerics::integrate_semi_infinite;

constexpr double kPi = std::numbers::pi;

ConvergenceReport combine(double prefactor, const ConvergenceReport& sum,
                          const std::vector<ConvergenceReport>& inner) {
    ConvergenceReport rep;
    rep.value = prefactor * sum.value;
    double err = sum.estimated_error;
    bool ok = sum.converged;
    long evals = sum.quad_evaluations;
    for (const auto& r : inner) {
        err += r.estimated_error;
        evals += r.quad_evaluations;
        ok = ok && r.converged;
    }
    rep.estimated_error = std::abs(prefactor) * err;
    rep.quad_evaluations = evals;
    rep.orders_used = sum.orders_used;
    rep.converged = ok;
    return rep;
}

void check_a_d(double a, double d) {
    if (!(a > 0.0)) throw std::domain_error("charge: radius a must be positive");
    if (!(d > 0.0)) throw std::domain_error("charge: standoff d must be positive");
}

}  // namespace

ChargeEnergyResult u0_charge(double a, double rho, const NumericsConfig& cfg) {
    if (!(a > 0.0) || !(rho > a))
        throw std::domain_error("u0_charge: need rho > a > 0");
    bessel::raise_order_cap(cfg.max_order + 4);

    const double lambda = 2.0 * (rho - a);
    std::vector<ConvergenceReport> inner;
    auto term = [&](int j) {
        auto r = integrate_semi_infinite(
            [&, j](double k) { return detail::ik_weight(j, k, a, rho); }, lambda, {},
            cfg);
        inner.push_back(r);
        return r.value;
    };
    const auto sum = numerics::sum_orders(term, /*primed=*/true, cfg);

    ChargeEnergyResult res;
    res.report = combine(-4.0 / kPi, sum, inner);
    res.value = res.report.value;
    return res;
}

ChargeEnergyResult u1_charge_z(double a, double d, double k_c, double z, double delta,
                               const NumericsConfig& cfg) {
    check_a_d(a, d);
    if (!(k_c > 0.0)) throw std::domain_error("u1_charge_z: k_c must be positive");
    bessel::raise_order_cap(cfg.max_order + 4);

    const double rho = a + d;
    const double lambda = 2.0 * d;
    const double bps[] = {-k_c};
    std::vector<ConvergenceReport> inner;
    auto term = [&](int j) {
        auto r = integrate_real_line(
            [&, j](double k) {
                return detail::kratio_ra(j, k + k_c, rho, a) *
                       detail::kratio_ra(j, k, rho, a);
            },
            lambda, bps, cfg);
        inner.push_back(r);
        return r.value;
    };
    // sum over all integer orders = twice the primed fold (even summand)
    const auto sum = numerics::sum_orders(term, /*primed=*/true, cfg);

    ChargeEnergyResult res;
    res.report = combine(-2.0 * delta / (a * kPi) * std::cos(k_c * z), sum, inner);
    res.value = res.report.value;
    res.normalized = -2.0 * std::cos(k_c * z) * sum.value;
    return res;
}

ChargeEnergyResult u1_charge_phi(double a, double d, int N, double phi, double delta,
                                 const NumericsConfig& cfg) {
    check_a_d(a, d);
    if (N < 1) throw std::domain_error("u1_charge_phi: N must be a positive integer");
    bessel::raise_order_cap(cfg.max_order + N + 4);

    const double rho = a + d;
    const double lambda = 2.0 * d;
    std::vector<ConvergenceReport> inner;
    auto term = [&](int j) {
        auto r = integrate_semi_infinite(
            [&, j](double k) {
                return detail::kratio_ra(j, k, rho, a) *
                       detail::kratio_ra(j + N, k, rho, a);
            },
            lambda, {}, cfg);
        inner.push_back(r);
        return 2.0 * r.value;  // k-integrand is even: int_R = 2 int_0^inf
    };
    const auto sum = numerics::sum_bilateral(term, cfg);

    ChargeEnergyResult res;
    res.report = combine(-delta / (a * kPi) * std::cos(N * phi), sum, inner);
    res.value = res.report.value;
    res.normalized = -std::cos(N * phi) * sum.value;
    return res;
}

ChargeEnergyResult u1_plane(double d, double k_c, double z, double delta) {
    if (!(d > 0.0)) throw std::domain_error("u1_plane: d must be positive");
    if (!(k_c > 0.0)) throw std::domain_error("u1_plane: k_c must be positive");
    if (delta < 0.0) throw std::domain_error("u1_plane: delta must be >= 0");

    ChargeEnergyResult res;
    res.value = -0.25 * delta * k_c * k_c * std::cos(k_c * z) *
                bessel::bessel_k(2, k_c * d);
    res.report.value = res.value;
    res.report.estimated_error = 1e-13 * std::abs(res.value);
    res.report.converged = true;
    return res;
}

double curvature_ratio(geometry::Direction direction, double a, double d, double k_c,
                       const NumericsConfig& cfg) {
    check_a_d(a, d);
    const double plane = u1_plane(d, k_c, 0.0, 1.0).value;
    if (direction == geometry::Direction::axial)
        return u1_charge_z(a, d, k_c, 0.0, 1.0, cfg).value / plane;
    if (direction == geometry::Direction::azimuthal) {
        const auto geom = geometry::make_sinusoidal_phi_from_kc(a, 1.0, k_c);
        const int N = geom.profile.modes.front().m_phi;
        return u1_charge_phi(a, d, N, 0.0, 1.0, cfg).value / plane;
    }
    throw std::domain_error("curvature_ratio: direction must be axial or azimuthal");
}

ChargeEnergyResult u1_charge_generic(const geometry::CylinderGeometry& geom,
                                     const geometry::FieldPoint& point,
                                     const NumericsConfig& cfg) {
    const auto g = generic::u1_charge(geom, point, cfg);
    ChargeEnergyResult res;
    res.value = g.value;
    res.report = g.report;
    const double delta = geom.profile.max_amplitude();
    if (delta > 0.0)
        res.normalized = g.value / (delta / (geom.radius * kPi));
    return res;
}

}  // namespace corrcyl::charge
