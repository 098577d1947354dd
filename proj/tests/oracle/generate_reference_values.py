#!/usr/bin/env python3
"""Generate frozen multiprecision reference values for the C++ test suite.

Run from the repository root:

    python3 tests/oracle/generate_reference_values.py > tests/oracle/reference_values.hpp

Everything here is computed with mpmath at 30-50 significant digits, far
beyond double precision, using only mpmath's own Bessel functions and
tanh-sinh quadrature. Nothing in this script shares code with the C++
implementation it is used to check.
"""

import sys
import time

from mpmath import mp, mpf, besseli, besselk, exp, log, pi, quad, inf

t_start = time.time()


def bk(j, x):
    return besselk(abs(int(j)), x)


def bi(j, x):
    return besseli(abs(int(j)), x)


def kratio(j, xn, xd):
    return bk(j, xn) / bk(j, xd)


def dk_rho(j, q, rho):
    # d/drho K_j(q*rho) = -(q/2) [K_{j-1}(q rho) + K_{j+1}(q rho)]
    j = abs(int(j))
    return -(q / 2) * (bk(j - 1, q * rho) + bk(j + 1, q * rho))


def sum_terms(term, j_start, tol=None):
    """Sum term(j) for j >= j_start until relative convergence."""
    if tol is None:
        tol = mpf(10) ** (-(mp.dps - 4))
    total = mpf(0)
    below = 0
    j = j_start
    while True:
        t = term(j)
        total += t
        if abs(t) < tol * max(abs(total), mpf(1e-30)):
            below += 1
            if below >= 3:
                return total
        else:
            below = 0
        j += 1
        if j > j_start + 400:
            raise RuntimeError("order sum did not converge")


def emit(name, value, comment=""):
    s = mp.nstr(value, 20, strip_zeros=False)
    if comment:
        print(f"// {comment}")
    print(f"inline constexpr double {name} = {s};")
    print()
    sys.stderr.write(f"{name} = {s}   [{time.time() - t_start:.0f}s]\n")
    sys.stderr.flush()


print("// Frozen multiprecision reference values.")
print("// Generated by tests/oracle/generate_reference_values.py (mpmath, 30-50 digits).")
print("// Do not edit by hand; re-run the script instead.")
print("#pragma once")
print()
print("namespace oracle {")
print()

# ---------------------------------------------------------------- Bessel spots
mp.dps = 50

emit("BESSEL_I0_1", bi(0, 1), "I_0(1)")
emit("BESSEL_I5_03", bi(5, mpf("0.3")), "I_5(0.3)")
emit("BESSEL_I3_80", bi(3, 80), "I_3(80)")
emit("BESSEL_K0_1", bk(0, 1), "K_0(1)")
emit("BESSEL_K1_1", bk(1, 1), "K_1(1)")
emit("BESSEL_K2_10", bk(2, 10), "K_2(10)")
emit("BESSEL_K7_005", bk(7, mpf("0.05")), "K_7(0.05)")
emit("BESSEL_K25_3", bk(25, 3), "K_25(3)")

emit("LN_I150_2", log(bi(150, 2)), "ln I_150(2)")
emit("LN_K150_2", log(bk(150, 2)), "ln K_150(2)")
emit("LN_I40_35", log(bi(40, 35)), "ln I_40(35)")
emit("LN_K40_35", log(bk(40, 35)), "ln K_40(35)")
emit("LN_K800_01", log(bk(800, mpf("0.1"))), "ln K_800(0.1)")

emit("RATIO_K0_2_1", kratio(0, 2, 1), "K_0(2)/K_0(1)")
emit("RATIO_K40_100_50", kratio(40, 100, 50), "K_40(100)/K_40(50)")
emit("RATIO_K3_2M3_1M3", kratio(3, mpf("0.002"), mpf("0.001")), "K_3(2e-3)/K_3(1e-3)")

emit("DK3_K17_RHO22", dk_rho(3, mpf("1.7"), mpf("2.2")),
     "d/drho K_3(1.7*rho) at rho=2.2")

# ------------------------------------------------------- charge-cylinder oracles
mp.dps = 30


def u0_term_integral(j, a, rho):
    def f(k):
        return bi(j, k * a) / bk(j, k * a) * bk(j, k * rho) ** 2
    return quad(f, [0, mpf("0.5"), 2, 8, 30, 120])


emit("Q_U0_J1_A1_RHO2", u0_term_integral(1, 1, 2),
     "int_0^inf I_1(k)/K_1(k) * K_1(2k)^2 dk  (j=1 term of U0 at a=1, rho=2)")

u0 = -(2 / pi) * (u0_term_integral(0, 1, 2)
                  + 2 * sum_terms(lambda j: u0_term_integral(j, 1, 2), 1))
emit("U0_CHARGE_A1_RHO2", u0, "U^(0) for unit charge, a=1, rho=2 (Gaussian units)")


def u1z_term_integral(j, a, d, kc):
    rho = a + d

    def g(k):
        return kratio(j, abs(k + kc) * rho, abs(k + kc) * a) \
            * kratio(j, abs(k) * rho, abs(k) * a)

    def folded(k):
        return g(k) + g(-k)

    return quad(folded, [0, kc / 2, kc, kc + 10, kc + 40])


s_u1z = u1z_term_integral(0, 1, 1, 10) \
    + 2 * sum_terms(lambda j: u1z_term_integral(j, 1, 1, 10), 1)
emit("S_U1Z_A1_D1_KC10", s_u1z,
     "sum_j int_R dk of the cc-z first-order kernel at a=1, d=1, kc=10 "
     "(Utilde(z=0) = -this)")


def u1phi_term_integral(j, a, d, N):
    rho = a + d

    def f(k):
        return kratio(j, k * rho, k * a) * kratio(j + N, k * rho, k * a)

    return 2 * quad(f, [0, 2, 8, 30, 120])


def s_u1phi(a, d, N):
    total = u1phi_term_integral(0, a, d, N)
    j = 1
    tol = mpf(10) ** (-(mp.dps - 4))
    below = 0
    while True:
        t = u1phi_term_integral(j, a, d, N) + u1phi_term_integral(-j, a, d, N)
        total += t
        if abs(t) < tol * abs(total):
            below += 1
            if below >= 3:
                return total
        else:
            below = 0
        j += 1
        if j > 400:
            raise RuntimeError("phi sum did not converge")


emit("S_U1PHI_A1_D1_N10", s_u1phi(1, 1, 10),
     "sum_j int_R dk of the cc-phi first-order kernel at a=1, d=1, N=10 "
     "(Utilde(phi=0) = -this)")

# --------------------------------------------------------------- vdW Xi oracles


def xi_rho_term(j, a, rho0):
    def f(k):
        return bi(j, k * a) / bk(j, k * a) * dk_rho(j, k, rho0) ** 2
    return quad(f, [0, mpf("0.5"), 2, 8, 30, 120])


def xi_phi_term(j, a, rho0):
    def f(k):
        return bi(j, k * a) / bk(j, k * a) * bk(j, k * rho0) ** 2
    return quad(f, [0, mpf("0.5"), 2, 8, 30, 120])


def xi_z_term(j, a, rho0):
    def f(k):
        return k ** 2 * bi(j, k * a) / bk(j, k * a) * bk(j, k * rho0) ** 2
    return quad(f, [0, mpf("0.5"), 2, 8, 30, 120])


a, rho0 = 1, 2
xi_rho = -(2 / pi) * (xi_rho_term(0, a, rho0)
                      + 2 * sum_terms(lambda j: xi_rho_term(j, a, rho0), 1))
xi_phi = -(2 / (pi * rho0 ** 2)) * 2 * sum_terms(
    lambda j: j ** 2 * xi_phi_term(j, a, rho0), 1)
xi_z = -(2 / pi) * (xi_z_term(0, a, rho0)
                    + 2 * sum_terms(lambda j: xi_z_term(j, a, rho0), 1))

emit("XI_RHO_A1_RHO2", xi_rho, "Xi_rho at a=1, rho0=2")
emit("XI_PHI_A1_RHO2", xi_phi, "Xi_phi at a=1, rho0=2")
emit("XI_Z_A1_RHO2", xi_z, "Xi_z at a=1, rho0=2")

print("}  // namespace oracle")
sys.stderr.write(f"total {time.time() - t_start:.0f}s\n")
