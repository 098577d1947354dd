#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "corrcyl/bessel.hpp"
#include "corrcyl/vdw.hpp"
#include "oracle/reference_values.hpp"

using namespace corrcyl;
using namespace corrcyl::vdw;

namespace {

constexpr double kPi = std::numbers::pi;

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Independent construction: M = scale (beta I + (1-beta) n n^T) with
// n = (sin t cos p, sin t sin p, cos t) in the (rho, phi, z) frame.
std::array<std::array<double, 3>, 3> rotation_oracle(double theta, double varphi,
                                                     double beta, double scale) {
    const double n[3] = {std::sin(theta) * std::cos(varphi),
                         std::sin(theta) * std::sin(varphi), std::cos(theta)};
    std::array<std::array<double, 3>, 3> m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[i][j] = scale * ((i == j ? beta : 0.0) + (1.0 - beta) * n[i] * n[j]);
    return m;
}

// Brute-force R value: plain two-sided order sum plus dense graded-mesh
// Simpson quadrature, built directly on the Bessel API.  Shares nothing
// with the adaptive integrator or the primed-fold summation.
template <typename Integrand>
double brute_integral(const Integrand& f, double L, int n_per_seg,
                      const std::vector<double>& edges) {
    double total = 0.0;
    for (size_t s = 0; s + 1 < edges.size(); ++s) {
        const double lo = edges[s], hi = std::min(edges[s + 1], L);
        if (hi <= lo) continue;
        const int n = 2 * n_per_seg;  // Simpson needs an even count
        const double h = (hi - lo) / n;
        double acc = f(lo + 1e-13 * (hi - lo)) + f(hi);
        for (int i = 1; i < n; ++i) acc += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
        total += acc * h / 3.0;
    }
    return total;
}

double kr(int j, double q, double rho, double a) {
    const double qq = std::max(std::abs(q), 1e-300);
    return std::exp(bessel::log_bessel_k(j, qq * rho) -
                    bessel::log_bessel_k(j, qq * a));
}

double dr(int j, double q, double rho, double a) {
    const double qq = std::max(std::abs(q), 1e-300);
    return -0.5 * qq *
           (std::exp(bessel::log_bessel_k(std::abs(j) - 1, qq * rho) -
                     bessel::log_bessel_k(j, qq * a)) +
            std::exp(bessel::log_bessel_k(std::abs(j) + 1, qq * rho) -
                     bessel::log_bessel_k(j, qq * a)));
}

}  // namespace

TEST_CASE("dipole tensor from the orientation angles") {
    // axis along z: no cross terms, <dz^2> = scale
    const auto t0 = dipole_from_orientation({0.0, 0.0, 0.3}, 2.0);
    CHECK(t0.drho_dz == 0.0);
    CHECK(t0.drho_dphi == 0.0);
    CHECK(t0.dz2 == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(t0.drho2 == doctest::Approx(2.0 * 0.3).epsilon(1e-15));

    // axis along phi
    const auto tp = dipole_from_orientation({kPi / 2.0, kPi / 2.0, 0.3}, 1.0);
    CHECK(tp.drho_dphi == 0.0);
    CHECK(tp.drho_dz == 0.0);
    CHECK(tp.dphi2 == doctest::Approx(1.0).epsilon(1e-15));

    // printed formulas vs the rotation-matrix construction
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> td(0.0, kPi), pd(0.0, 2.0 * kPi),
        bd(0.05, 1.0), sd(0.5, 3.0);
    for (int i = 0; i < 200; ++i) {
        const double theta = td(rng), varphi = pd(rng), beta = bd(rng),
                     scale = sd(rng);
        const auto t = dipole_from_orientation({theta, varphi, beta}, scale);
        const auto m = rotation_oracle(theta, varphi, beta, scale);
        CHECK(std::abs(t.drho2 - m[0][0]) < 1e-14 * scale);
        CHECK(std::abs(t.dphi2 - m[1][1]) < 1e-14 * scale);
        CHECK(std::abs(t.dz2 - m[2][2]) < 1e-14 * scale);
        CHECK(std::abs(t.drho_dphi - m[0][1]) < 1e-14 * scale);
        CHECK(std::abs(t.drho_dz - m[0][2]) < 1e-14 * scale);
        CHECK(std::abs(t.dphi_dz - m[1][2]) < 1e-14 * scale);

        // trace and positive semidefiniteness
        CHECK(std::abs(t.drho2 + t.dphi2 + t.dz2 - scale * (1.0 + 2.0 * beta)) <
              1e-13 * scale);
        std::uniform_real_distribution<double> xd(-1.0, 1.0);
        const double x[3] = {xd(rng), xd(rng), xd(rng)};
        double quad = 0.0;
        const double mm[3][3] = {{t.drho2, t.drho_dphi, t.drho_dz},
                                 {t.drho_dphi, t.dphi2, t.dphi_dz},
                                 {t.drho_dz, t.dphi_dz, t.dz2}};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) quad += x[r] * mm[r][c] * x[c];
        CHECK(quad > -1e-12 * scale);
    }

    // theta = pi/6, varphi = 0, beta = 0.2: <d_rho d_z> = 0.4 scale sin(pi/3)
    const auto t6 = dipole_from_orientation({kPi / 6.0, 0.0, 0.2}, 1.0);
    CHECK(t6.drho_dz == doctest::Approx(0.4 * std::sin(kPi / 3.0)).epsilon(1e-14));

    CHECK_THROWS_AS(dipole_from_orientation({0.1, 0.2, 1.3}, 1.0), std::domain_error);
    CHECK(!orientation_warnings({0.1, 0.2, 1.0}).empty());
}

TEST_CASE("Xi coefficients") {
    const auto xi = xi_coefficients(1.0, 2.0);
    CHECK(xi.report.converged);
    CHECK(xi.xi_rho < 0.0);
    CHECK(xi.xi_phi < 0.0);
    CHECK(xi.xi_z < 0.0);
    CHECK(rel_err(xi.xi_rho, oracle::XI_RHO_A1_RHO2) < 1e-7);
    CHECK(rel_err(xi.xi_phi, oracle::XI_PHI_A1_RHO2) < 1e-7);
    CHECK(rel_err(xi.xi_z, oracle::XI_Z_A1_RHO2) < 1e-7);

    // far away everything dies off
    const auto far = xi_coefficients(1.0, 25.0);
    CHECK(std::abs(far.xi_rho) < std::abs(xi.xi_rho) * 1e-2);

    // U0 contraction
    const auto dip = dipole_from_orientation({0.7, 1.1, 0.4}, 1.5);
    CHECK(u0_vdw(dip, xi) < 0.0);
    CHECK(u0_vdw(DipoleTensor{}, xi) == 0.0);
    const double expected = xi.xi_rho * dip.drho2 + xi.xi_phi * dip.dphi2 +
                            xi.xi_z * dip.dz2;
    CHECK(u0_vdw(dip, xi) == expected);
}

TEST_CASE("R-functions, axial direction, against the brute-force oracle") {
    const double a = 1.0, rho0 = 1.5, kc = 6.0;
    const auto r = r_functions_z(a, rho0, kc);
    CHECK(r.report.converged);
    CHECK(r.r_rho_rho < 0.0);

    // brute force: two-sided sum over a Simpson mesh graded into the
    // |k - kc/2| (and |k - kc|) logarithmic cusps
    const int J = 30;
    const double L = 46.0;
    const std::vector<double> edges = {
        0.0,      1e-6,     1e-3,        0.3,         kc / 2 - 0.1, kc / 2 - 1e-3,
        kc / 2 - 1e-6, kc / 2, kc / 2 + 1e-6, kc / 2 + 1e-3, kc / 2 + 0.1,
        kc - 0.1, kc - 1e-3, kc - 1e-6, kc,  kc + 1e-6,   kc + 1e-3,   kc + 0.1,
        kc + 6.0, 18.0,     L};
    auto brute_component = [&](RComponent comp) {
        double sum = 0.0;
        for (int j = -J; j <= J; ++j) {
            auto integrand = [&](double k) -> double {
                switch (comp) {
                    case RComponent::rho_rho:
                        return dr(j, k - kc / 2, rho0, a) * dr(j, k + kc / 2, rho0, a);
                    case RComponent::phi_phi:
                        return double(j) * j * kr(j, k - kc / 2, rho0, a) *
                               kr(j, k + kc / 2, rho0, a);
                    case RComponent::zz:
                        return (k * k - kc * kc / 4) * kr(j, k - kc / 2, rho0, a) *
                               kr(j, k + kc / 2, rho0, a);
                    case RComponent::cross:
                        return k * kr(j, k, rho0, a) *
                               (dr(j, k + kc, rho0, a) - dr(j, k - kc, rho0, a));
                }
                return 0.0;
            };
            sum += brute_integral(integrand, L, 400, edges);
        }
        return 0.5 * sum;  // two-sided sum folds to the primed sum
    };

    CHECK(rel_err(r.r_rho_rho,
                  r_prefactor_z(RComponent::rho_rho, a, rho0) *
                      brute_component(RComponent::rho_rho)) < 1e-6);
    CHECK(rel_err(r.r_phi_phi,
                  r_prefactor_z(RComponent::phi_phi, a, rho0) *
                      brute_component(RComponent::phi_phi)) < 1e-6);
    CHECK(rel_err(r.r_zz, r_prefactor_z(RComponent::zz, a, rho0) *
                              brute_component(RComponent::zz)) < 1e-6);
    CHECK(rel_err(r.r_cross, r_prefactor_z(RComponent::cross, a, rho0) *
                                 brute_component(RComponent::cross)) < 1e-6);
}

TEST_CASE("R-functions, azimuthal direction, against the brute-force oracle") {
    const double a = 1.0, rho0 = 1.5;
    const int N = 6;
    const auto r = r_functions_phi(a, rho0, N);
    CHECK(r.report.converged);

    const int J = 30;
    const double L = 46.0;
    const std::vector<double> edges = {0.0, 1e-6, 1e-3, 0.3, 3.0, 9.0, 18.0, L};
    auto brute_component = [&](RComponent comp) {
        double sum = 0.0;
        for (int j = -J; j <= J; ++j) {
            auto integrand = [&](double k) -> double {
                switch (comp) {
                    case RComponent::rho_rho:
                        return dr(j, k, rho0, a) *
                               (dr(j + N, k, rho0, a) + dr(j - N, k, rho0, a));
                    case RComponent::phi_phi:
                        return double(j) * kr(j, k, rho0, a) *
                               ((j + N) * kr(j + N, k, rho0, a) +
                                (j - N) * kr(j - N, k, rho0, a));
                    case RComponent::zz:
                        return k * k * kr(j, k, rho0, a) *
                               (kr(j + N, k, rho0, a) + kr(j - N, k, rho0, a));
                    case RComponent::cross:
                        return double(j) * kr(j, k, rho0, a) *
                               (dr(j + N, k, rho0, a) - dr(j - N, k, rho0, a));
                }
                return 0.0;
            };
            sum += brute_integral(integrand, L, 600, edges);
        }
        return 0.5 * sum;
    };

    CHECK(rel_err(r.r_rho_rho,
                  r_prefactor_phi(RComponent::rho_rho, a, rho0) *
                      brute_component(RComponent::rho_rho)) < 1e-6);
    CHECK(rel_err(r.r_phi_phi,
                  r_prefactor_phi(RComponent::phi_phi, a, rho0) *
                      brute_component(RComponent::phi_phi)) < 1e-6);
    CHECK(rel_err(r.r_zz, r_prefactor_phi(RComponent::zz, a, rho0) *
                              brute_component(RComponent::zz)) < 1e-6);
    CHECK(rel_err(r.r_cross, r_prefactor_phi(RComponent::cross, a, rho0) *
                                 brute_component(RComponent::cross)) < 1e-6);

    // order-shift bracket is odd under N -> -N
    for (double k : {0.3, 1.7}) {
        for (int j : {1, 3}) {
            const double fwd = dr(j + N, k, rho0, a) - dr(j - N, k, rho0, a);
            const double rev = dr(j - N, k, rho0, a) - dr(j + N, k, rho0, a);
            CHECK(fwd == -rev);
        }
    }
}

TEST_CASE("R_rho-z vanishes as k_c -> 0") {
    const double a = 1.0, rho0 = 1.5;
    const auto r1 = r_functions_z(a, rho0, 1e-2);
    const auto r2 = r_functions_z(a, rho0, 1e-3);
    CHECK(std::abs(r1.r_cross) < 1e-2 * std::abs(r1.r_rho_rho));
    CHECK(std::abs(r2.r_cross) < 0.2 * std::abs(r1.r_cross));
}

TEST_CASE("phase analysis and regime classification") {
    // synthetic R values: the classification logic itself
    RFunctions r;
    r.direction = geometry::Direction::axial;
    r.r_rho_rho = -1.0;
    r.r_phi_phi = -0.5;
    r.r_zz = 2.0;
    r.r_cross = 3.0;
    r.report.converged = true;

    PhaseOptions exact{1e-6};

    DipoleTensor axis_z = dipole_from_orientation({0.0, 0.0, 0.2}, 1.0);
    auto res = phase_analysis(axis_z, r, exact);
    CHECK(res.B == 0.0);
    CHECK((res.Delta == 0.0 || res.Delta == kPi));
    CHECK(res.C > 0.0);          // 0.2*(-1) + 0.2*(-0.5) + 1*2 = 1.7
    CHECK(res.Delta == 0.0);     // C > 0, B = 0
    CHECK(res.regime == Regime::valley);

    r.r_zz = -2.0;  // now C < 0
    res = phase_analysis(axis_z, r, exact);
    CHECK(res.Delta == kPi);
    CHECK(res.regime == Regime::peak);

    // A^2 = B^2 + C^2 and the reconstruction identity
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> td(0.1, kPi / 2 - 0.1), xd(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const auto dip = dipole_from_orientation({td(rng), 0.3, 0.2}, 1.0);
        const auto ph = phase_analysis(dip, r);
        CHECK(rel_err(ph.A * ph.A, ph.B * ph.B + ph.C * ph.C) < 1e-12);
        const double x = xd(rng);
        CHECK(std::abs(ph.C * std::cos(x) + ph.B * std::sin(x) -
                       ph.A * std::cos(x - ph.Delta)) < 1e-12 * ph.A);

        // scaling the tensor scales A, leaves Delta and the regime alone
        const auto ph2 = phase_analysis(dip.scaled(3.7), r);
        CHECK(rel_err(ph2.A, 3.7 * ph.A) < 1e-12);
        CHECK(ph2.Delta == ph.Delta);
        CHECK(ph2.regime == ph.regime);
    }

    // zero dipole: degenerate, no lateral force at first order
    const auto degenerate = phase_analysis(DipoleTensor{}, r);
    CHECK(degenerate.degenerate);
    CHECK(degenerate.A == 0.0);
}

TEST_CASE("specialized first-order energy vs the generic kernels") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> ad(0.8, 1.4), dd(0.45, 1.0), kd(2.0, 7.0),
        td(0.2, 1.3), pd(0.0, 2.0 * kPi), bd(0.1, 0.9), zd(-0.8, 0.8);

    for (int i = 0; i < 3; ++i) {
        const double a = ad(rng), d = dd(rng), kc = kd(rng);
        const double delta = 0.02 * d;
        const auto dip = dipole_from_orientation({td(rng), pd(rng), bd(rng)}, 1.0);
        const geometry::FieldPoint pt{a + d, 0.4, zd(rng)};
        const auto geom = geometry::make_sinusoidal_z(a, delta, kc);

        const auto spec = u1_vdw(geom, pt, dip);
        const double gen = u1_vdw_generic(geom, pt, dip);
        CHECK(std::abs(gen - spec.value) <
              1e-6 * std::max(std::abs(spec.value), 1e-8));
    }
    for (int i = 0; i < 2; ++i) {
        const double a = ad(rng), d = dd(rng);
        const int N = 3 + i * 2;
        const double delta = 0.02 * d;
        const auto dip = dipole_from_orientation({td(rng), pd(rng), bd(rng)}, 1.0);
        const geometry::FieldPoint pt{a + d, zd(rng), 0.0};
        const auto geom = geometry::make_sinusoidal_phi(a, delta, N);

        const auto spec = u1_vdw(geom, pt, dip);
        const double gen = u1_vdw_generic(geom, pt, dip);
        CHECK(std::abs(gen - spec.value) <
              1e-6 * std::max(std::abs(spec.value), 1e-8));
    }
}

TEST_CASE("stable equilibrium sits at Delta / k_c") {
    const double a = 1.0, d = 0.6, kc = 5.0, delta = 0.01;
    const auto dip = dipole_from_orientation({kPi / 6.0, 0.0, 0.2}, 1.0);
    const auto geom = geometry::make_sinusoidal_z(a, delta, kc);

    const auto ph = phase_analysis(dip, r_functions_z(a, a + d, kc));
    REQUIRE(!ph.degenerate);

    // scan one period for the minimizer of U1(z0)
    const double period = 2.0 * kPi / kc;
    double vmin = 1e300, zmin = 0.0;
    const int n = 400;
    for (int i = 0; i < n; ++i) {
        const double z0 = -period / 2 + period * i / n;
        const auto u = u1_vdw(geom, {a + d, 0.0, z0}, dip);
        if (u.value < vmin) { vmin = u.value; zmin = z0; }
    }
    double target = ph.Delta / kc;
    target -= period * std::round((target - zmin) / period);
    CHECK(std::abs(zmin - target) <= period / n + 1e-12);

    // delta = 0 kills the correction
    const auto flat = geometry::make_sinusoidal_z(a, 0.0, kc);
    CHECK(u1_vdw(flat, {a + d, 0.0, 0.3}, dip).value == 0.0);
}

TEST_CASE("plane-limit surrogate") {
    NumericsConfig cfg;
    cfg.rel_tol = 1e-6;
    cfg.abs_tol = 1e-10;
    cfg.max_order = 4000;

    const double d = 0.5, kc = 6.0;
    const auto dip = dipole_from_orientation({0.0, 0.0, 0.2}, 1.0);

    const auto ref =
        plane_reference(PlaneQuantity::C, geometry::Direction::axial, dip, d, kc, cfg);
    CHECK(!ref.low_confidence);

    // cylinder C approaches the surrogate as a grows
    const double c1 =
        phase_analysis(dip, r_functions_z(1.0, 1.0 + d, kc, cfg)).C;
    const double c9 =
        phase_analysis(dip, r_functions_z(9.0, 9.0 + d, kc, cfg)).C;
    CHECK(std::abs(c9 - ref.value) < std::abs(c1 - ref.value));

    // Delta surrogate rises with d across the sign change (Fig. 9 trend)
    const auto dip6 = dipole_from_orientation({kPi / 6.0, 0.0, 0.2}, 1.0);
    const auto d03 = plane_reference(PlaneQuantity::Delta, geometry::Direction::axial,
                                     dip6, 0.3, kc, cfg);
    const auto d065 = plane_reference(PlaneQuantity::Delta, geometry::Direction::axial,
                                      dip6, 0.65, kc, cfg);
    const auto d10 = plane_reference(PlaneQuantity::Delta, geometry::Direction::axial,
                                     dip6, 1.0, kc, cfg);
    CHECK(d03.value < d065.value);
    CHECK(d065.value < d10.value);
}
