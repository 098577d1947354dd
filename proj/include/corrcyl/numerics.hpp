// Shared numerical engine: adaptive Gauss-Kronrod quadrature on [0, inf)
// and convergent summation over Bessel orders.
//
// All integrands in this project are smooth away from isolated |k - k0|
// kinks (supplied by callers as breakpoints) and decay exponentially, so a
// 15-point Kronrod rule with panel bisection plus an analytic tail bound is
// both fast and honest about its error.

#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace corrcyl {

enum class TailCutoffPolicy {
    fixed_multiple_of_decay_scale,  // L = max(breakpoints) + tail_multiple / decay_scale
    adaptive,                       // extend L until the next block is negligible
};

struct NumericsConfig {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_order = 200;       // order-sum cap
    int max_quad_depth = 50;   // bisection depth per initial segment
    TailCutoffPolicy tail_cutoff_policy = TailCutoffPolicy::fixed_multiple_of_decay_scale;
    double tail_multiple = 40.0;
};

struct ConvergenceReport {
    double value = 0.0;
    double estimated_error = 0.0;
    int orders_used = 0;
    long quad_evaluations = 0;
    bool converged = false;
};

/// Thrown when quadrature or an order sum fails to reach tolerance within
/// its budget; carries the partial result.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, ConvergenceReport r)
        : std::runtime_error(what), partial(r) {}
    ConvergenceReport partial;
};

namespace numerics {

using Integrand = std::function<double(double)>;
using OrderTerm = std::function<double(int)>;

/// Integral of f over [0, inf).  `decay_scale` is the asymptotic rate
/// lambda in |f(k)| <~ C exp(-lambda k); it fixes the cutoff L and the tail
/// bound, which is folded into estimated_error.  Interior derivative kinks
/// must be listed in `breakpoints`.
ConvergenceReport integrate_semi_infinite(const Integrand& f, double decay_scale,
                                          std::span<const double> breakpoints,
                                          const NumericsConfig& cfg);

/// Integral of f over (-inf, inf), evaluated as the fold
/// int_0^inf [f(k) + f(-k)] dk.  Signed breakpoints are mapped to |.|.
ConvergenceReport integrate_real_line(const Integrand& f, double decay_scale,
                                      std::span<const double> breakpoints,
                                      const NumericsConfig& cfg);

/// Sum of term(j) for j = 0, 1, 2, ...  With `primed` the j = 0 term gets
/// weight 1/2: the fold of a symmetric two-sided sum into j >= 0 counts
/// j = 0 twice, and every primed sum in the formulas arises from that fold.
/// Stops once a run of 3 consecutive terms falls below the tolerance
/// threshold and the geometric tail estimate fits the error budget.
ConvergenceReport sum_orders(const OrderTerm& term, bool primed,
                             const NumericsConfig& cfg);

/// Sum of term(j) over all integers j, accumulated as t(0) then pairs
/// t(m) + t(-m); same stopping rule as sum_orders applied to the pairs.
ConvergenceReport sum_bilateral(const OrderTerm& term, const NumericsConfig& cfg);

}  // namespace numerics
}  // namespace corrcyl
