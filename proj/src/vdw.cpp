#include "corrcyl/vdw.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "corrcyl/bessel.hpp"
#include "corrcyl/errors.hpp"
#include "corrcyl/generic_kernel.hpp"
#include "kernel_ratios.hpp"

namespace corrcyl::vdw {

namespace {

constexpr double kPi = std::numbers::pi;

using numerics::integrate_semi_infinite;

void check_geometry(double a, double rho0) {
    if (!(a > 0.0) || !(rho0 > a))
        throw std::domain_error("vdw: need rho0 > a > 0");
}

struct InnerTracker {
    double error = 0.0;
    long evals = 0;
    bool converged = true;

    void add(const ConvergenceReport& r) {
        error += r.estimated_error;
        evals += r.quad_evaluations;
        converged = converged && r.converged;
    }
};

ConvergenceReport finish(double prefactor, const ConvergenceReport& sum,
                         const InnerTracker& inner) {
    ConvergenceReport rep;
    rep.value = prefactor * sum.value;
    rep.estimated_error = std::abs(prefactor) * (sum.estimated_error + inner.error);
    rep.quad_evaluations = inner.evals + sum.quad_evaluations;
    rep.orders_used = sum.orders_used;
    rep.converged = sum.converged && inner.converged;
    return rep;
}

void merge(ConvergenceReport& total, const ConvergenceReport& part) {
    total.estimated_error += part.estimated_error;
    total.quad_evaluations += part.quad_evaluations;
    total.orders_used = std::max(total.orders_used, part.orders_used);
    total.converged = total.converged && part.converged;
}

}  // namespace

XiCoefficients xi_coefficients(double a, double rho0, const NumericsConfig& cfg) {
    check_geometry(a, rho0);
    bessel::raise_order_cap(cfg.max_order + 4);
    const double lambda = 2.0 * (rho0 - a);

    auto xi_sum = [&](auto&& weight, bool with_drho, double prefactor,
                      ConvergenceReport& out) {
        InnerTracker inner;
        auto term = [&](int j) {
            auto rep = integrate_semi_infinite(
                [&, j](double k) {
                    const double w = weight(j, k);
                    if (w == 0.0) return 0.0;
                    return w * (with_drho ? detail::ik_weight_drho(j, k, a, rho0)
                                          : detail::ik_weight(j, k, a, rho0));
                },
                lambda, {}, cfg);
            inner.add(rep);
            return rep.value;
        };
        const auto sum = numerics::sum_orders(term, /*primed=*/true, cfg);
        out = finish(prefactor, sum, inner);
        return out.value;
    };

    XiCoefficients xi;
    ConvergenceReport r1, r2, r3;
    xi.xi_rho = xi_sum([](int, double) { return 1.0; }, true, -4.0 / kPi, r1);
    xi.xi_phi = xi_sum([](int j, double) { return double(j) * j; }, false,
                       -4.0 / (kPi * rho0 * rho0), r2);
    xi.xi_z = xi_sum([](int, double k) { return k * k; }, false, -4.0 / kPi, r3);

    xi.report = r1;
    merge(xi.report, r2);
    merge(xi.report, r3);
    xi.report.value = 0.0;
    return xi;
}

double u0_vdw(const DipoleTensor& dipole, const XiCoefficients& xi) {
    return xi.xi_rho * dipole.drho2 + xi.xi_phi * dipole.dphi2 + xi.xi_z * dipole.dz2;
}

// ------------------------------------------------------------------ R, cc-z

double r_prefactor_z(RComponent comp, double a, double rho0) {
    switch (comp) {
        case RComponent::phi_phi:
            return -4.0 / (kPi * a * rho0 * rho0);
        default:
            return -4.0 / (kPi * a);
    }
}

namespace {

numerics::OrderTerm r_term_z(RComponent comp, double a, double rho0, double k_c,
                             const NumericsConfig& cfg,
                             std::shared_ptr<InnerTracker> tracker) {
    check_geometry(a, rho0);
    if (!(k_c > 0.0)) throw std::domain_error("r_functions_z: k_c must be positive");
    const double lambda = 2.0 * (rho0 - a);

    auto run = [lambda, cfg, tracker](double bp, const numerics::Integrand& f) {
        const double bps[] = {bp};
        auto rep = integrate_semi_infinite(f, lambda, bps, cfg);
        if (tracker) tracker->add(rep);
        return rep.value;
    };

    switch (comp) {
        case RComponent::rho_rho:
            return [=](int j) {
                return run(0.5 * k_c, [=](double k) {
                    return detail::dratio(j, k - 0.5 * k_c, rho0, a) *
                           detail::dratio(j, k + 0.5 * k_c, rho0, a);
                });
            };
        case RComponent::phi_phi:
            return [=](int j) {
                if (j == 0) return 0.0;
                return run(0.5 * k_c, [=](double k) {
                    return double(j) * j *
                           detail::kratio_ra(j, k - 0.5 * k_c, rho0, a) *
                           detail::kratio_ra(j, k + 0.5 * k_c, rho0, a);
                });
            };
        case RComponent::zz:
            return [=](int j) {
                return run(0.5 * k_c, [=](double k) {
                    return (k * k - 0.25 * k_c * k_c) *
                           detail::kratio_ra(j, k - 0.5 * k_c, rho0, a) *
                           detail::kratio_ra(j, k + 0.5 * k_c, rho0, a);
                });
            };
        case RComponent::cross:
            return [=](int j) {
                return run(k_c, [=](double k) {
                    return k * detail::kratio_ra(j, k, rho0, a) *
                           (detail::dratio(j, k + k_c, rho0, a) -
                            detail::dratio(j, k - k_c, rho0, a));
                });
            };
    }
    throw std::logic_error("unreachable");
}

}  // namespace

numerics::OrderTerm r_summand_z(RComponent comp, double a, double rho0, double k_c,
                                const NumericsConfig& cfg) {
    return r_term_z(comp, a, rho0, k_c, cfg, nullptr);
}

// ---------------------------------------------------------------- R, cc-phi

double r_prefactor_phi(RComponent comp, double a, double rho0) {
    switch (comp) {
        case RComponent::phi_phi:
            return -2.0 / (kPi * a * rho0 * rho0);
        case RComponent::cross:
            return -4.0 / (kPi * a * rho0);
        default:
            return -2.0 / (kPi * a);
    }
}

namespace {

numerics::OrderTerm r_term_phi(RComponent comp, double a, double rho0, int N,
                               const NumericsConfig& cfg,
                               std::shared_ptr<InnerTracker> tracker) {
    check_geometry(a, rho0);
    if (N < 1) throw ConfigError("r_functions_phi: N must be a positive integer");
    const double lambda = 2.0 * (rho0 - a);

    auto run = [lambda, cfg, tracker](const numerics::Integrand& f) {
        auto rep = integrate_semi_infinite(f, lambda, {}, cfg);
        if (tracker) tracker->add(rep);
        return rep.value;
    };

    switch (comp) {
        case RComponent::rho_rho:
            return [=](int j) {
                return run([=](double k) {
                    return detail::dratio(j, k, rho0, a) *
                           (detail::dratio(j + N, k, rho0, a) +
                            detail::dratio(j - N, k, rho0, a));
                });
            };
        case RComponent::phi_phi:
            return [=](int j) {
                if (j == 0) return 0.0;
                return run([=](double k) {
                    return double(j) * detail::kratio_ra(j, k, rho0, a) *
                           ((j + N) * detail::kratio_ra(j + N, k, rho0, a) +
                            (j - N) * detail::kratio_ra(j - N, k, rho0, a));
                });
            };
        case RComponent::zz:
            return [=](int j) {
                return run([=](double k) {
                    return k * k * detail::kratio_ra(j, k, rho0, a) *
                           (detail::kratio_ra(j + N, k, rho0, a) +
                            detail::kratio_ra(j - N, k, rho0, a));
                });
            };
        case RComponent::cross:
            return [=](int j) {
                if (j == 0) return 0.0;
                return run([=](double k) {
                    return double(j) * detail::kratio_ra(j, k, rho0, a) *
                           (detail::dratio(j + N, k, rho0, a) -
                            detail::dratio(j - N, k, rho0, a));
                });
            };
    }
    throw std::logic_error("unreachable");
}

}  // namespace

numerics::OrderTerm r_summand_phi(RComponent comp, double a, double rho0, int N,
                                  const NumericsConfig& cfg) {
    return r_term_phi(comp, a, rho0, N, cfg, nullptr);
}

namespace {

// The phi_phi and cross summands carry an explicit j factor and start at
// j = 1 in the printed formulas; their j = 0 term vanishes, so the primed
// fold applies to every component uniformly.
double folded_r(const numerics::OrderTerm& term, double prefactor,
                const NumericsConfig& cfg, const InnerTracker& inner,
                ConvergenceReport& out) {
    const auto sum = numerics::sum_orders(term, /*primed=*/true, cfg);
    out = finish(prefactor, sum, inner);
    return out.value;
}

}  // namespace

RFunctions r_functions_z(double a, double rho0, double k_c, const NumericsConfig& cfg) {
    check_geometry(a, rho0);
    bessel::raise_order_cap(cfg.max_order + 4);

    RFunctions r;
    r.direction = geometry::Direction::axial;
    r.report.converged = true;
    ConvergenceReport part;
    for (auto comp : {RComponent::rho_rho, RComponent::phi_phi, RComponent::zz,
                      RComponent::cross}) {
        auto inner = std::make_shared<InnerTracker>();
        const double v = folded_r(r_term_z(comp, a, rho0, k_c, cfg, inner),
                                  r_prefactor_z(comp, a, rho0), cfg, *inner, part);
        merge(r.report, part);
        switch (comp) {
            case RComponent::rho_rho: r.r_rho_rho = v; break;
            case RComponent::phi_phi: r.r_phi_phi = v; break;
            case RComponent::zz: r.r_zz = v; break;
            case RComponent::cross: r.r_cross = v; break;
        }
    }
    return r;
}

RFunctions r_functions_phi(double a, double rho0, int N, const NumericsConfig& cfg) {
    check_geometry(a, rho0);
    bessel::raise_order_cap(cfg.max_order + N + 4);

    RFunctions r;
    r.direction = geometry::Direction::azimuthal;
    r.report.converged = true;
    ConvergenceReport part;
    for (auto comp : {RComponent::rho_rho, RComponent::phi_phi, RComponent::zz,
                      RComponent::cross}) {
        auto inner = std::make_shared<InnerTracker>();
        const double v = folded_r(r_term_phi(comp, a, rho0, N, cfg, inner),
                                  r_prefactor_phi(comp, a, rho0), cfg, *inner, part);
        merge(r.report, part);
        switch (comp) {
            case RComponent::rho_rho: r.r_rho_rho = v; break;
            case RComponent::phi_phi: r.r_phi_phi = v; break;
            case RComponent::zz: r.r_zz = v; break;
            case RComponent::cross: r.r_cross = v; break;
        }
    }
    return r;
}

// ------------------------------------------------------------ phase / regime

RegimeResult phase_analysis(const DipoleTensor& dipole, const RFunctions& r,
                            const PhaseOptions& opts) {
    RegimeResult res;
    res.report = r.report;
    const double cross_moment = r.direction == geometry::Direction::axial
                                    ? dipole.drho_dz
                                    : dipole.drho_dphi;
    res.B = cross_moment * r.r_cross;
    res.C = dipole.drho2 * r.r_rho_rho + dipole.dphi2 * r.r_phi_phi +
            dipole.dz2 * r.r_zz;
    res.A = std::hypot(res.B, res.C);
    if (res.A == 0.0) {
        res.degenerate = true;
        return res;
    }
    res.Delta = std::atan2(res.B, res.C);  // quadrant-aware angle of (C, B)
    if (std::abs(res.Delta) <= opts.angle_tol)
        res.regime = Regime::valley;
    else if (std::abs(res.Delta - kPi) <= opts.angle_tol ||
             std::abs(res.Delta + kPi) <= opts.angle_tol)
        res.regime = Regime::peak;
    else
        res.regime = Regime::intermediate;
    return res;
}

FirstOrderVdw u1_vdw(const geometry::CylinderGeometry& geom,
                     const geometry::FieldPoint& point, const DipoleTensor& dipole,
                     const NumericsConfig& cfg) {
    geometry::validate_point(geom, point);
    if (geom.profile.modes.size() != 1)
        throw ConfigError("u1_vdw: specialized route needs a single sinusoidal mode");
    const auto& mode = geom.profile.modes.front();

    FirstOrderVdw out;
    double arg = 0.0;
    if (geom.profile.hint == geometry::Direction::axial) {
        const auto r = r_functions_z(geom.radius, point.rho, mode.k_z, cfg);
        out.phase = phase_analysis(dipole, r);
        arg = mode.k_z * point.z + mode.phase;
    } else if (geom.profile.hint == geometry::Direction::azimuthal) {
        const auto r = r_functions_phi(geom.radius, point.rho, mode.m_phi, cfg);
        out.phase = phase_analysis(dipole, r);
        arg = mode.m_phi * point.phi + mode.phase;
    } else {
        throw ConfigError("u1_vdw: profile direction must be axial or azimuthal");
    }
    out.value = mode.amplitude * out.phase.A * std::cos(arg - out.phase.Delta);
    return out;
}

double u1_vdw_generic(const geometry::CylinderGeometry& geom,
                      const geometry::FieldPoint& point, const DipoleTensor& dipole,
                      const NumericsConfig& cfg) {
    return generic::u1_vdw(geom, point, dipole, cfg).value;
}

// ------------------------------------------------------- plane-limit surrogate

PlaneReference plane_reference(PlaneQuantity quantity, geometry::Direction direction,
                               const DipoleTensor& dipole, double d, double k_c,
                               const NumericsConfig& cfg) {
    if (!(d > 0.0)) throw std::domain_error("plane_reference: d must be positive");
    if (!(k_c > 0.0)) throw std::domain_error("plane_reference: k_c must be positive");

    double a_lo = std::max(100.0 * d, 100.0 / k_c);
    double a_hi;
    int n_lo = 0;
    if (direction == geometry::Direction::azimuthal) {
        n_lo = static_cast<int>(std::ceil(k_c * a_lo - 1e-9));
        a_lo = n_lo / k_c;
        a_hi = 2.0 * n_lo / k_c;
    } else {
        a_hi = 2.0 * a_lo;
    }

    auto eval = [&](double a, int n_modes) {
        const RFunctions r = direction == geometry::Direction::axial
                                 ? r_functions_z(a, a + d, k_c, cfg)
                                 : r_functions_phi(a, a + d, n_modes, cfg);
        const auto ph = phase_analysis(dipole, r);
        return quantity == PlaneQuantity::C ? ph.C : ph.Delta;
    };

    double v1 = eval(a_lo, n_lo);
    double v2 = eval(a_hi, 2 * n_lo);
    if (quantity == PlaneQuantity::Delta) {
        // keep the pair on one branch before extrapolating
        v2 += 2.0 * kPi * std::round((v1 - v2) / (2.0 * kPi));
    }

    PlaneReference ref;
    ref.a_lo = a_lo;
    ref.a_hi = a_hi;
    ref.value = 2.0 * v2 - v1;  // removes the O(1/a) term
    if (quantity == PlaneQuantity::Delta) {
        ref.value = std::remainder(ref.value, 2.0 * kPi);
        if (ref.value <= -kPi) ref.value += 2.0 * kPi;
    }
    ref.low_confidence =
        std::abs(v2 - v1) > 0.01 * std::max(std::abs(ref.value), 1e-12);
    return ref;
}

}  // namespace corrcyl::vdw
