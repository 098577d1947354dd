#include "corrcyl/dipole.hpp"

#include <cmath>
#include <stdexcept>

namespace corrcyl::vdw {

namespace {

// Trig noise (sin(pi) ~ 1e-16) would otherwise leak into entries whose
// analytic value is exactly zero, breaking the B = 0 symmetry statements.
double snap(double v, double scale) {
    return std::abs(v) < 1e-15 * std::abs(scale) ? 0.0 : v;
}

}  // namespace

DipoleTensor dipole_from_orientation(const ParticleOrientation& o, double scale) {
    if (!(o.beta > 0.0) || o.beta > 1.0)
        throw std::domain_error("orientation: anisotropy ratio beta must be in (0, 1]");
    if (!(scale >= 0.0))
        throw std::domain_error("orientation: dipole scale must be >= 0");

    const double st = std::sin(o.theta), ct = std::cos(o.theta);
    const double sp = std::sin(o.varphi), cp = std::cos(o.varphi);
    const double aniso = 1.0 - o.beta;

    DipoleTensor t;
    t.scale = scale;
    t.drho2 = scale * (o.beta + aniso * st * st * cp * cp);
    t.dphi2 = scale * (o.beta + aniso * st * st * sp * sp);
    t.dz2 = scale * (o.beta + aniso * ct * ct);
    t.drho_dphi = snap(scale * aniso * sp * cp * st * st, scale);
    t.drho_dz = snap(scale * aniso * st * ct * cp, scale);
    t.dphi_dz = snap(scale * aniso * st * ct * sp, scale);
    return t;
}

std::vector<std::string> orientation_warnings(const ParticleOrientation& o) {
    std::vector<std::string> w;
    if (o.beta == 1.0)
        w.push_back("beta = 1 is the isotropic case: the first-order phase "
                    "analysis degenerates (A may vanish)");
    return w;
}

}  // namespace corrcyl::vdw
