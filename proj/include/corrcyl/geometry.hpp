// Cylinder geometry and corrugation profiles.
//
// Profiles are finite lists of real cosine modes
//
//     h(phi, z) = sum_m  amp_m * cos(m_phi * phi + k_z * z + phase_m),
//
// which makes the spectral transform h~ a finite set of delta coefficients
// and collapses the first-order double integrals to finite mode sums.
// Azimuthal modes must close around the circumference: for h = cos(k_c a phi)
// the constraint N = k_c a, N a positive integer, is enforced at construction.

#pragma once

#include <complex>
#include <string>
#include <vector>

namespace corrcyl::geometry {

enum class Direction { axial, azimuthal, mixed };

struct CorrugationMode {
    int m_phi = 0;       // azimuthal mode count (integer by constraint)
    double k_z = 0.0;    // axial wavenumber
    double amplitude = 0.0;
    double phase = 0.0;
};

struct CorrugationProfile {
    std::vector<CorrugationMode> modes;
    Direction hint = Direction::mixed;

    double eval(double phi, double z) const;
    /// Upper bound sum_m |amp_m| on |h|.
    double max_amplitude() const;
};

struct CylinderGeometry {
    double radius = 0.0;  // a > 0
    CorrugationProfile profile;
};

struct FieldPoint {
    double rho = 0.0;
    double phi = 0.0;
    double z = 0.0;
};

/// d = rho - a, the standoff from the uncorrugated reference surface.
struct StandoffDistance {
    double d = 0.0;
};

/// h(z) = delta * cos(k_c z) on a cylinder of radius a.
CylinderGeometry make_sinusoidal_z(double a, double delta, double k_c);

/// h(phi) = delta * cos(N phi), N a positive integer (k_c = N / a).
CylinderGeometry make_sinusoidal_phi(double a, double delta, int N);

/// Same, from a real wavenumber; throws ConfigError unless k_c * a is an
/// integer (within 1e-9 relative).
CylinderGeometry make_sinusoidal_phi_from_kc(double a, double delta, double k_c);

/// One delta-supported component of the spectral measure of h:
/// h~(dj, dk) carries coefficient `coeff` at integer offset dj and
/// wavenumber offset dk.
struct SpectralComponent {
    int dj = 0;
    double dk = 0.0;
    std::complex<double> coeff;
};

/// All signed spectral components of the profile (two per cosine mode).
std::vector<SpectralComponent> spectral_components(const CorrugationProfile& profile);

/// Coefficient of the spectral measure at (dj, dk); zero when no mode matches.
std::complex<double> h_fourier_coefficient(const CorrugationProfile& profile, int dj,
                                           double dk);

/// Throws std::domain_error unless the point lies strictly outside the
/// corrugated surface (rho > a + max|h|).
void validate_point(const CylinderGeometry& geom, const FieldPoint& point);

/// Perturbative-sanity warnings (never errors): delta/d > 0.1 or
/// delta * k_c > 0.5 stretch the first-order treatment.
std::vector<std::string> perturbation_warnings(const CylinderGeometry& geom, double d);

}  // namespace corrcyl::geometry
