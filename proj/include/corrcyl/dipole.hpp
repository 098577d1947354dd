// Dipole-fluctuation tensor of a cylindrically symmetric polarizable
// particle.  The principal axis n(theta, varphi) is given in spherical
// angles relative to the local (rho, phi, z) frame, and
//
//     <d_i d_j> = <d_p^2> [ beta delta_ij + (1 - beta) n_i n_j ],
//
// with beta = <d_n^2>/<d_p^2> the anisotropy ratio (0 < beta <= 1).

#pragma once

#include <string>
#include <vector>

namespace corrcyl::vdw {

struct DipoleTensor {
    double drho2 = 0.0, dphi2 = 0.0, dz2 = 0.0;          // diagonal entries
    double drho_dphi = 0.0, drho_dz = 0.0, dphi_dz = 0.0;  // cross entries
    double scale = 0.0;                                   // <d_p^2>

    DipoleTensor scaled(double factor) const {
        return DipoleTensor{drho2 * factor,     dphi2 * factor,   dz2 * factor,
                            drho_dphi * factor, drho_dz * factor, dphi_dz * factor,
                            scale * factor};
    }
};

struct ParticleOrientation {
    double theta = 0.0;    // polar angle of the particle axis
    double varphi = 0.0;   // azimuthal angle of the particle axis
    double beta = 1.0;     // <d_n^2>/<d_p^2>, 0 < beta <= 1
};

/// Tensor entries from the orientation angles.  Entries whose analytic value
/// vanishes by symmetry are snapped to exact zero (|entry| < 1e-15 * scale),
/// so that axis-aligned orientations give B = 0 exactly downstream.
DipoleTensor dipole_from_orientation(const ParticleOrientation& o, double scale);

/// Non-fatal notes (isotropic beta = 1 degenerates the lateral analysis).
std::vector<std::string> orientation_warnings(const ParticleOrientation& o);

}  // namespace corrcyl::vdw
