#include "corrcyl/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "corrcyl/errors.hpp"

namespace corrcyl::geometry {

double CorrugationProfile::eval(double phi, double z) const {
    double h = 0.0;
    for (const auto& m : modes)
        h += m.amplitude * std::cos(m.m_phi * phi + m.k_z * z + m.phase);
    return h;
}

double CorrugationProfile::max_amplitude() const {
    double s = 0.0;
    for (const auto& m : modes) s += std::abs(m.amplitude);
    return s;
}

namespace {

void check_radius_amplitude(double a, double delta) {
    if (!(a > 0.0)) throw std::domain_error("cylinder radius must be positive");
    if (delta < 0.0) throw std::domain_error("corrugation amplitude must be >= 0");
}

}  // namespace

CylinderGeometry make_sinusoidal_z(double a, double delta, double k_c) {
    check_radius_amplitude(a, delta);
    if (!(k_c > 0.0)) throw std::domain_error("corrugation wavenumber must be positive");
    CylinderGeometry g;
    g.radius = a;
    g.profile.modes = {CorrugationMode{0, k_c, delta, 0.0}};
    g.profile.hint = Direction::axial;
    return g;
}

CylinderGeometry make_sinusoidal_phi(double a, double delta, int N) {
    check_radius_amplitude(a, delta);
    if (N < 1) throw ConfigError("azimuthal mode count N must be a positive integer");
    CylinderGeometry g;
    g.radius = a;
    g.profile.modes = {CorrugationMode{N, 0.0, delta, 0.0}};
    g.profile.hint = Direction::azimuthal;
    return g;
}

CylinderGeometry make_sinusoidal_phi_from_kc(double a, double delta, double k_c) {
    check_radius_amplitude(a, delta);
    const double n_real = k_c * a;
    const double n_round = std::round(n_real);
    if (!(n_round >= 1.0) ||
        std::abs(n_real - n_round) > 1e-9 * std::max(1.0, std::abs(n_real)))
        throw ConfigError("azimuthal corrugation requires N = k_c * a to be a "
                          "positive integer; got k_c * a = " + std::to_string(n_real));
    return make_sinusoidal_phi(a, delta, static_cast<int>(n_round));
}

std::vector<SpectralComponent> spectral_components(const CorrugationProfile& profile) {
    std::vector<SpectralComponent> out;
    out.reserve(2 * profile.modes.size());
    for (const auto& m : profile.modes) {
        const std::complex<double> half(0.5 * m.amplitude, 0.0);
        const std::complex<double> ph = std::polar(1.0, m.phase);
        out.push_back({m.m_phi, m.k_z, half * ph});
        out.push_back({-m.m_phi, -m.k_z, half * std::conj(ph)});
    }
    return out;
}

std::complex<double> h_fourier_coefficient(const CorrugationProfile& profile, int dj,
                                           double dk) {
    std::complex<double> c(0.0, 0.0);
    for (const auto& sc : spectral_components(profile)) {
        if (sc.dj == dj &&
            std::abs(sc.dk - dk) <= 1e-12 * std::max(1.0, std::abs(dk)))
            c += sc.coeff;
    }
    return c;
}

void validate_point(const CylinderGeometry& geom, const FieldPoint& point) {
    const double hmax = geom.profile.max_amplitude();
    if (!(point.rho > geom.radius + hmax))
        throw std::domain_error("field point must satisfy rho > a + max|h|");
}

std::vector<std::string> perturbation_warnings(const CylinderGeometry& geom, double d) {
    std::vector<std::string> w;
    for (const auto& m : geom.profile.modes) {
        const double delta = std::abs(m.amplitude);
        if (delta == 0.0) continue;
        if (d > 0.0 && delta / d > 0.1)
            w.push_back("corrugation amplitude exceeds 10% of the standoff "
                        "(delta/d = " + std::to_string(delta / d) + ")");
        const double kc = m.m_phi != 0 ? std::abs(m.m_phi) / geom.radius
                                       : std::abs(m.k_z);
        if (delta * kc > 0.5)
            w.push_back("corrugation slope delta*k_c = " + std::to_string(delta * kc) +
                        " exceeds 0.5");
    }
    return w;
}

}  // namespace corrcyl::geometry
