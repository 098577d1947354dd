#include "corrcyl/generic_kernel.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "corrcyl/bessel.hpp"
#include "kernel_ratios.hpp"

namespace corrcyl::generic {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Cplx = std::complex<double>;

enum class Kernel { rho_rho, phi_phi, zz, rho_phi, rho_z, phi_z, charge };

struct SpectralSum {
    double value = 0.0;
    double error = 0.0;
    long evals = 0;
    int orders = 0;
    bool converged = true;
};

// (1/2pi) sum_{j in Z} int_R dk  <kernel integrand at (j, k; j-dj, k-dk)>
SpectralSum kernel_sum(Kernel which, double a, double rho0, int dj, double dk,
                       const NumericsConfig& cfg) {
    const double lambda = 2.0 * (rho0 - a);
    const double bps[] = {dk};

    SpectralSum out;
    auto term = [&](int j) {
        const int j2 = j - dj;
        auto f = [&, j, j2](double k) -> double {
            const double k2 = k - dk;
            switch (which) {
                case Kernel::rho_rho:
                    return detail::dratio(j, k, rho0, a) *
                           detail::dratio(j2, k2, rho0, a);
                case Kernel::phi_phi:
                    return double(j) * double(j2) * detail::kratio_ra(j, k, rho0, a) *
                           detail::kratio_ra(j2, k2, rho0, a);
                case Kernel::zz:
                    return k * k2 * detail::kratio_ra(j, k, rho0, a) *
                           detail::kratio_ra(j2, k2, rho0, a);
                case Kernel::rho_phi:
                    return double(j) * detail::kratio_ra(j, k, rho0, a) *
                               detail::dratio(j2, k2, rho0, a) -
                           double(j2) * detail::dratio(j, k, rho0, a) *
                               detail::kratio_ra(j2, k2, rho0, a);
                case Kernel::rho_z:
                    return k * detail::kratio_ra(j, k, rho0, a) *
                               detail::dratio(j2, k2, rho0, a) -
                           k2 * detail::dratio(j, k, rho0, a) *
                               detail::kratio_ra(j2, k2, rho0, a);
                case Kernel::phi_z:
                    return (k2 * double(j) + k * double(j2)) *
                           detail::kratio_ra(j, k, rho0, a) *
                           detail::kratio_ra(j2, k2, rho0, a);
                case Kernel::charge:
                    return detail::kratio_ra(j, k, rho0, a) *
                           detail::kratio_ra(j2, k2, rho0, a);
            }
            return 0.0;
        };
        auto rep = numerics::integrate_real_line(f, lambda, bps, cfg);
        out.error += rep.estimated_error;
        out.evals += rep.quad_evaluations;
        out.converged = out.converged && rep.converged;
        return rep.value;
    };

    const auto sum = numerics::sum_bilateral(term, cfg);
    out.value = sum.value / kTwoPi;
    out.error = (out.error + sum.estimated_error) / kTwoPi;
    out.orders = sum.orders_used;
    out.converged = out.converged && sum.converged;
    return out;
}

struct Accumulated {
    Cplx value{0.0, 0.0};
    double error = 0.0;
    long evals = 0;
    int orders = 0;
    bool converged = true;
};

// sum_c coeff_c e^{i(dk z0 + dj phi0)} S_kernel(c)
Accumulated accumulate(Kernel which, const geometry::CylinderGeometry& geom,
                       const geometry::FieldPoint& point, const NumericsConfig& cfg) {
    Accumulated acc;
    for (const auto& sc : geometry::spectral_components(geom.profile)) {
        const auto s = kernel_sum(which, geom.radius, point.rho, sc.dj, sc.dk, cfg);
        const Cplx phase = std::polar(1.0, sc.dk * point.z + sc.dj * point.phi);
        acc.value += sc.coeff * phase * s.value;
        acc.error += std::abs(sc.coeff) * s.error;
        acc.evals += s.evals;
        acc.orders = std::max(acc.orders, s.orders);
        acc.converged = acc.converged && s.converged;
    }
    return acc;
}

void prepare(const geometry::CylinderGeometry& geom, const geometry::FieldPoint& point,
             const NumericsConfig& cfg) {
    geometry::validate_point(geom, point);
    int max_dj = 0;
    for (const auto& sc : geometry::spectral_components(geom.profile))
        max_dj = std::max(max_dj, std::abs(sc.dj));
    bessel::raise_order_cap(cfg.max_order + max_dj + 4);
}

}  // namespace

GenericResult u1_charge(const geometry::CylinderGeometry& geom,
                        const geometry::FieldPoint& point, const NumericsConfig& cfg) {
    prepare(geom, point, cfg);
    const auto acc = accumulate(Kernel::charge, geom, point, cfg);
    const double pref = 2.0 / geom.radius;

    GenericResult res;
    res.value = -pref * acc.value.real();
    res.report.value = res.value;
    res.report.estimated_error = pref * acc.error;
    res.report.quad_evaluations = acc.evals;
    res.report.orders_used = acc.orders;
    res.report.converged = acc.converged;
    return res;
}

GenericResult u1_vdw(const geometry::CylinderGeometry& geom,
                     const geometry::FieldPoint& point, const vdw::DipoleTensor& dipole,
                     const NumericsConfig& cfg) {
    prepare(geom, point, cfg);
    const double a = geom.radius;
    const double rho0 = point.rho;
    const Cplx iunit(0.0, 1.0);

    struct Piece {
        Kernel kernel;
        double weight;  // tensor entry
        Cplx prefactor;
    };
    const Piece pieces[] = {
        {Kernel::rho_rho, dipole.drho2, Cplx(-2.0 / a, 0.0)},
        {Kernel::phi_phi, dipole.dphi2, Cplx(-2.0 / (a * rho0 * rho0), 0.0)},
        {Kernel::zz, dipole.dz2, Cplx(-2.0 / a, 0.0)},
        {Kernel::rho_phi, dipole.drho_dphi, -2.0 * iunit / (a * rho0)},
        {Kernel::rho_z, dipole.drho_dz, -2.0 * iunit / a},
        {Kernel::phi_z, dipole.dphi_dz, Cplx(-2.0 / (a * rho0), 0.0)},
    };

    GenericResult res;
    res.report.converged = true;
    Cplx total(0.0, 0.0);
    for (const auto& p : pieces) {
        if (p.weight == 0.0) continue;  // exact-symmetry zeros cost nothing
        const auto acc = accumulate(p.kernel, geom, point, cfg);
        total += p.weight * p.prefactor * acc.value;
        res.report.estimated_error += std::abs(p.weight * p.prefactor) * acc.error;
        res.report.quad_evaluations += acc.evals;
        res.report.orders_used = std::max(res.report.orders_used, acc.orders);
        res.report.converged = res.report.converged && acc.converged;
    }
    res.value = total.real();
    res.report.value = res.value;
    return res;
}

}  // namespace corrcyl::generic
