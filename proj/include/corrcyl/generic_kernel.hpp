// General first-order kernel for a finite-mode corrugation profile.
//
// For h~ reduced to delta-supported components (dj, dk, c) the double
// spectral integrals collapse to finite sums; the six I_ij kernels (and the
// charge analogue) become one bilateral order sum and one real-line
// k-integral per component.  This is the generic route the specialized
// closed forms are tested against.

#pragma once

#include "corrcyl/dipole.hpp"
#include "corrcyl/geometry.hpp"
#include "corrcyl/numerics.hpp"

namespace corrcyl::generic {

struct GenericResult {
    double value = 0.0;
    ConvergenceReport report;
};

/// First-order charge-cylinder energy from the spectral components.
GenericResult u1_charge(const geometry::CylinderGeometry& geom,
                        const geometry::FieldPoint& point, const NumericsConfig& cfg);

/// First-order vdW energy: the six I_ij kernels contracted with the tensor,
/// in units of 1/(8 pi eps0) = 1.
GenericResult u1_vdw(const geometry::CylinderGeometry& geom,
                     const geometry::FieldPoint& point, const vdw::DipoleTensor& dipole,
                     const NumericsConfig& cfg);

}  // namespace corrcyl::generic
