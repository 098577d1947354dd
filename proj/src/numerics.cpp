#include "corrcyl/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace corrcyl::numerics {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double lo, hi;
    double value, error;
    int depth;
    long seq;  // creation order; deterministic tie-break
};

// Kronrod value + QUADPACK-style error estimate on [lo, hi].
Panel eval_panel(const Integrand& f, double lo, double hi, int depth, long seq,
                 long& evals) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);

    double fc = f(c);
    ++evals;
    double resg = kWg[3] * fc;
    double resk = kWgk[7] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    double fv1[7], fv2[7];
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        fv1[i] = f(c - dx);
        fv2[i] = f(c + dx);
        evals += 2;
        const double s = fv1[i] + fv2[i];
        resk += kWgk[i] * s;
        resabs += kWgk[i] * (std::abs(fv1[i]) + std::abs(fv2[i]));
        if (i % 2 == 1) resg += kWg[i / 2] * s;
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::abs(fv1[i] - reskh) + std::abs(fv2[i] - reskh));

    const double value = resk * h;
    resabs *= std::abs(h);
    resasc *= std::abs(h);
    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);

    return Panel{lo, hi, value, err, depth, seq};
}

double panel_sum(std::vector<Panel>& panels, double (*pick)(const Panel&)) {
    // Fixed summation order (by left edge) keeps results bit-identical
    // regardless of the refinement history.
    std::sort(panels.begin(), panels.end(),
              [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
    double s = 0.0;
    for (const Panel& p : panels) s += pick(p);
    return s;
}

ConvergenceReport integrate_segments(const Integrand& f, std::vector<double> edges,
                                     double tail_bound, const NumericsConfig& cfg,
                                     long pre_evals) {
    long evals = pre_evals;
    long seq = 0;
    std::vector<Panel> panels;
    panels.reserve(64);
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        panels.push_back(eval_panel(f, edges[i], edges[i + 1], 0, seq++, evals));

    const size_t panel_budget = 20000;
    auto worst = [&]() {
        size_t w = 0;
        for (size_t i = 1; i < panels.size(); ++i) {
            if (panels[i].error > panels[w].error ||
                (panels[i].error == panels[w].error && panels[i].seq < panels[w].seq))
                w = i;
        }
        return w;
    };

    double total = 0.0, err = 0.0;
    while (true) {
        total = 0.0;
        err = 0.0;
        for (const Panel& p : panels) {
            total += p.value;
            err += p.error;
        }
        const double budget =
            std::max(cfg.rel_tol * std::abs(total), cfg.abs_tol);
        if (err + tail_bound <= budget) break;

        const size_t w = worst();
        if (panels[w].depth >= cfg.max_quad_depth || panels.size() >= panel_budget) {
            ConvergenceReport partial;
            partial.value = panel_sum(panels, [](const Panel& p) { return p.value; });
            partial.estimated_error = err + tail_bound;
            partial.quad_evaluations = evals;
            partial.converged = false;
            throw ConvergenceError("integrate_semi_infinite: panel budget exhausted",
                                   partial);
        }
        const Panel p = panels[w];
        const double mid = 0.5 * (p.lo + p.hi);
        panels[w] = eval_panel(f, p.lo, mid, p.depth + 1, seq++, evals);
        panels.push_back(eval_panel(f, mid, p.hi, p.depth + 1, seq++, evals));
    }

    ConvergenceReport rep;
    rep.value = panel_sum(panels, [](const Panel& p) { return p.value; });
    rep.estimated_error = err + tail_bound;
    rep.quad_evaluations = evals;
    rep.converged = true;
    return rep;
}

}  // namespace

ConvergenceReport integrate_semi_infinite(const Integrand& f, double decay_scale,
                                          std::span<const double> breakpoints,
                                          const NumericsConfig& cfg) {
    if (!(decay_scale > 0.0))
        throw std::invalid_argument("integrate_semi_infinite: decay_scale must be > 0");

    double bp_max = 0.0;
    std::vector<double> edges{0.0};
    for (double b : breakpoints) {
        if (b > 0.0) {
            edges.push_back(b);
            bp_max = std::max(bp_max, b);
        }
    }

    long pre_evals = 0;
    double L = bp_max + cfg.tail_multiple / decay_scale;
    if (cfg.tail_cutoff_policy == TailCutoffPolicy::adaptive) {
        // Extend until one more block of width tail_multiple/decay_scale
        // contributes nothing at working precision.
        const double block = cfg.tail_multiple / decay_scale;
        for (int ext = 0; ext < 8; ++ext) {
            const double fL = f(L);
            ++pre_evals;
            if (std::abs(fL) * 2.0 / decay_scale <= 0.25 * cfg.abs_tol) break;
            edges.push_back(L);
            L += block;
        }
    }
    edges.push_back(L);

    // Split the leading segment a few times: the integrand scale is set by
    // 1/decay_scale and the first segment may span many decay lengths.
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](double a, double b) {
                                return std::abs(a - b) <=
                                       1e-12 * std::max(1.0, std::abs(a));
                            }),
                edges.end());
    std::vector<double> refined;
    const double scale_len = 1.0 / decay_scale;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        refined.push_back(edges[i]);
        const double width = edges[i + 1] - edges[i];
        if (width > 8.0 * scale_len) {
            double x = edges[i] + 2.0 * scale_len;
            while (x < edges[i + 1] - scale_len) {
                refined.push_back(x);
                x = edges[i] + (x - edges[i]) * 3.0;
            }
        }
    }
    refined.push_back(edges.back());

    const double fL = f(L);
    const double tail_bound = 2.0 * std::abs(fL) / decay_scale;
    return integrate_segments(f, refined, tail_bound, cfg, pre_evals + 1);
}

ConvergenceReport integrate_real_line(const Integrand& f, double decay_scale,
                                      std::span<const double> breakpoints,
                                      const NumericsConfig& cfg) {
    std::vector<double> folded;
    for (double b : breakpoints)
        if (b != 0.0) folded.push_back(std::abs(b));
    long extra = 0;
    auto g = [&f, &extra](double k) {
        ++extra;  // one extra physical evaluation per folded call
        return f(k) + f(-k);
    };
    ConvergenceReport rep = integrate_semi_infinite(g, decay_scale, folded, cfg);
    rep.quad_evaluations += extra;
    return rep;
}

namespace {

ConvergenceReport sum_with_weights(const OrderTerm& term, bool primed, bool bilateral,
                                   const NumericsConfig& cfg) {
    double sum = 0.0;
    double t_prev = 0.0, t_prev2 = 0.0;
    int below = 0;
    ConvergenceReport rep;

    for (int m = 0; m <= cfg.max_order; ++m) {
        double t;
        if (m == 0) {
            t = term(0) * (primed ? 0.5 : 1.0);
        } else if (bilateral) {
            t = term(m) + term(-m);
        } else {
            t = term(m);
        }
        sum += t;
        rep.orders_used = m + 1;

        const double at = std::abs(t);
        const double thr = std::max(cfg.rel_tol * std::abs(sum), cfg.abs_tol);
        below = (at <= thr) ? below + 1 : 0;

        // Geometric tail bound from the observed decay ratio; the clamp at
        // 0.995 keeps plateaus (ratio ~ 1) from stopping the sum early.
        double ratio = 0.0;
        if (std::abs(t_prev) > 0.0) ratio = at / std::abs(t_prev);
        if (std::abs(t_prev2) > 0.0)
            ratio = std::max(ratio, std::sqrt(at / std::abs(t_prev2)));
        const bool ratio_ok = ratio < 0.995;
        const double tail = ratio_ok ? at * ratio / (1.0 - ratio)
                                     : std::numeric_limits<double>::infinity();

        if (m >= 4 && below >= 3 && (tail <= thr || at == 0.0)) {
            rep.value = sum;
            rep.estimated_error = at == 0.0 ? 0.0 : tail;
            rep.converged = true;
            return rep;
        }
        t_prev2 = t_prev;
        t_prev = t;
    }

    rep.value = sum;
    rep.estimated_error = std::abs(t_prev) + std::abs(t_prev2);
    rep.converged = false;
    throw ConvergenceError("sum_orders: max_order reached before convergence", rep);
}

}  // namespace

ConvergenceReport sum_orders(const OrderTerm& term, bool primed,
                             const NumericsConfig& cfg) {
    return sum_with_weights(term, primed, /*bilateral=*/false, cfg);
}

ConvergenceReport sum_bilateral(const OrderTerm& term, const NumericsConfig& cfg) {
    return sum_with_weights(term, /*primed=*/false, /*bilateral=*/true, cfg);
}

}  // namespace corrcyl::numerics
