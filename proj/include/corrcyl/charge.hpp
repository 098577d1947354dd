// Electrostatic interaction of a unit point charge with the (corrugated)
// grounded cylinder, in Gaussian units:
//
//   U^(0)      = -(1/pi) sum_j int_R dk  I_j(|k|a)/K_j(|k|a) K_j(|k|rho)^2
//   U^(1)_cc-z = -(delta/(a pi)) cos(k_c z) sum_j int_R dk
//                  [K_j(|k+k_c|(d+a))/K_j(|k+k_c|a)] [K_j(|k|(d+a))/K_j(|k|a)]
//   U^(1)_cc-phi likewise with the order shifted by N = k_c a,
//   U^(1)_cp   = -(delta/4) k_c^2 cos(k_c z) K_2(k_c d)   (corrugated plane).
//
// The normalized form Utilde = U / (delta / (a pi)) is reported alongside
// the plain value for the first-order cylinder results.

#pragma once

#include <optional>

#include "corrcyl/geometry.hpp"
#include "corrcyl/numerics.hpp"

namespace corrcyl::charge {

struct ChargeEnergyResult {
    double value = 0.0;
    std::optional<double> normalized;  // Utilde = value / (delta/(a pi))
    ConvergenceReport report;
};

/// Zeroth-order charge-cylinder energy; always negative.
ChargeEnergyResult u0_charge(double a, double rho, const NumericsConfig& cfg = {});

/// First-order correction for h(z) = delta cos(k_c z), at standoff d = rho - a.
ChargeEnergyResult u1_charge_z(double a, double d, double k_c, double z, double delta,
                               const NumericsConfig& cfg = {});

/// First-order correction for h(phi) = delta cos(N phi).
ChargeEnergyResult u1_charge_phi(double a, double d, int N, double phi, double delta,
                                 const NumericsConfig& cfg = {});

/// Corrugated-plane reference, closed form (no quadrature).
ChargeEnergyResult u1_plane(double d, double k_c, double z, double delta);

/// U^(1)_cc / U^(1)_cp evaluated over a corrugation peak (z = phi = 0).
/// For the azimuthal direction k_c * a must be a positive integer.
double curvature_ratio(geometry::Direction direction, double a, double d, double k_c,
                       const NumericsConfig& cfg = {});

/// First-order energy assembled from the profile's spectral components and
/// the general kernel, for any finite-mode profile.  Independent route used
/// to cross-check the specialized formulas above.
ChargeEnergyResult u1_charge_generic(const geometry::CylinderGeometry& geom,
                                     const geometry::FieldPoint& point,
                                     const NumericsConfig& cfg = {});

}  // namespace corrcyl::charge
