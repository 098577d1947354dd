// Figure reproduction: parameter sets hard-coded from the corresponding
// captions, emitted as long-format CSV plus a gnuplot script.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <thread>

#include "corrcyl/charge.hpp"
#include "corrcyl/sweep.hpp"
#include "corrcyl/vdw.hpp"

namespace corrcyl::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// d/a grid for the curvature-ratio figures; includes the d = 0.02 a plane
// anchor and d = a.
const std::vector<double> kRatioGrid = {0.02, 0.03, 0.05, 0.075, 0.1, 0.15, 0.2,
                                        0.3,  0.45, 0.6,  0.8,   1.0, 1.2};

// standoff grid for the regime figures
std::vector<double> regime_grid() {
    std::vector<double> d;
    for (int i = 0; i <= 14; ++i) d.push_back(0.30 + 0.05 * i);
    return d;
}

struct Job {
    std::function<std::vector<std::string>(bool&)> run;
};

SweepDataset run_jobs(std::vector<std::string> header, std::vector<Job> jobs) {
    SweepDataset ds;
    ds.header = std::move(header);
    ds.rows.resize(jobs.size());
    std::vector<char> ok(jobs.size(), 1);

    const int workers =
        std::min(worker_count(), std::max<int>(1, static_cast<int>(jobs.size())));
    std::atomic<int> next{0};
    auto body = [&] {
        for (int i = next.fetch_add(1); i < static_cast<int>(jobs.size());
             i = next.fetch_add(1)) {
            bool converged = true;
            try {
                ds.rows[i] = jobs[i].run(converged);
            } catch (const ConvergenceError& e) {
                // pad the row to the header width; value and error land in
                // the last data columns
                std::vector<std::string> row(ds.header.size(), "");
                row[ds.header.size() - 3] = fmt(e.partial.value);
                row[ds.header.size() - 2] = fmt(e.partial.estimated_error);
                row[ds.header.size() - 1] = "0";
                ds.rows[i] = std::move(row);
                converged = false;
            }
            ok[i] = converged ? 1 : 0;
        }
    };
    if (workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }
    for (char c : ok) ds.all_converged = ds.all_converged && (c != 0);
    return ds;
}

std::vector<std::string> energy_row(double x, const charge::ChargeEnergyResult& r,
                                    bool& converged) {
    converged = r.report.converged;
    return {fmt(x), fmt(r.normalized.value_or(r.value)),
            fmt(r.report.estimated_error), r.report.converged ? "1" : "0"};
}

// ---- charge figures -----------------------------------------------------

SweepDataset fig_profile(FigureId id, const NumericsConfig& cfg) {
    const auto cap = figure_caption(id);
    const double a = cap.a_values.front(), d = cap.d, kc = cap.k_c;
    const int n = 201;
    const double period = 2.0 * kPi / kc;  // in z, or in phi via N = kc a

    std::vector<Job> jobs;
    for (int i = 0; i < n; ++i) {
        const double x = -period + 2.0 * period * i / (n - 1);
        jobs.push_back({[=, &cfg](bool& okflag) {
            const auto r =
                cap.azimuthal
                    ? charge::u1_charge_phi(a, d, static_cast<int>(std::llround(kc * a)),
                                            x, 1.0, cfg)
                    : charge::u1_charge_z(a, d, kc, x, 1.0, cfg);
            return energy_row(x, r, okflag);
        }});
    }
    return run_jobs({cap.azimuthal ? "phi" : "z", "u_tilde", "est_error", "converged"},
                    std::move(jobs));
}

SweepDataset fig_ratio(FigureId id, const NumericsConfig& cfg) {
    const auto cap = figure_caption(id);
    std::vector<Job> jobs;
    for (double a : cap.a_values) {
        for (double doa : kRatioGrid) {
            const double d = doa * a;
            jobs.push_back({[=, &cfg](bool& okflag) -> std::vector<std::string> {
                const auto dir = cap.azimuthal ? geometry::Direction::azimuthal
                                               : geometry::Direction::axial;
                const double ratio = charge::curvature_ratio(dir, a, d, cap.k_c, cfg);
                okflag = true;
                return {fmt(a), fmt(d), fmt(ratio), fmt(std::abs(ratio) * cfg.rel_tol * 4),
                        "1"};
            }});
        }
    }
    return run_jobs({"a", "d", "ratio", "est_error", "converged"}, std::move(jobs));
}

// ---- vdW regime figures --------------------------------------------------

SweepDataset fig_regime(FigureId id, const NumericsConfig& cfg) {
    const auto cap = figure_caption(id);
    const bool wants_delta = (id == FigureId::fig9 || id == FigureId::fig11);
    const auto dipole = vdw::dipole_from_orientation(
        vdw::ParticleOrientation{cap.theta, cap.varphi, cap.beta}, 1.0);

    std::vector<Job> jobs;
    for (double d : regime_grid()) {
        for (double a : cap.a_values) {
            jobs.push_back({[=, &cfg](bool& okflag) -> std::vector<std::string> {
                vdw::RFunctions r;
                if (cap.azimuthal) {
                    const int N = static_cast<int>(std::llround(cap.k_c * a));
                    r = vdw::r_functions_phi(a, a + d, N, cfg);
                } else {
                    r = vdw::r_functions_z(a, a + d, cap.k_c, cfg);
                }
                const auto ph = vdw::phase_analysis(dipole, r);
                okflag = ph.report.converged;
                return {fmt(a), fmt(d), fmt(wants_delta ? ph.Delta : ph.C),
                        fmt(ph.report.estimated_error),
                        ph.report.converged ? "1" : "0"};
            }});
        }
        // a = 0 row: the corrugated-plane surrogate
        jobs.push_back({[=, &cfg](bool& okflag) -> std::vector<std::string> {
            const auto ref = vdw::plane_reference(
                wants_delta ? vdw::PlaneQuantity::Delta : vdw::PlaneQuantity::C,
                cap.azimuthal ? geometry::Direction::azimuthal
                              : geometry::Direction::axial,
                dipole, d, cap.k_c, cfg);
            okflag = !ref.low_confidence;
            return {fmt(0), fmt(d), fmt(ref.value), fmt(std::abs(ref.value) * 0.01),
                    ref.low_confidence ? "0" : "1"};
        }});
    }
    return run_jobs({"a", "d", wants_delta ? "Delta" : "C", "est_error", "converged"},
                    std::move(jobs));
}

// ---- gnuplot scripts -----------------------------------------------------

std::string curve_filter(const std::string& csv, double a, int xcol, int ycol,
                         const std::string& style, const std::string& title) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "'%s' skip 1 using (column(1)==%g?column(%d):1/0):(column(%d)) "
                  "with lines %s title '%s'",
                  csv.c_str(), a, xcol, ycol, style.c_str(), title.c_str());
    return buf;
}

std::string plot_script(FigureId id, const std::string& csv_name) {
    const auto cap = figure_caption(id);
    std::string s = "# gnuplot script, generated alongside " + csv_name + "\n";
    s += "set datafile separator ','\n";
    s += "set key top right\n";

    auto multi_curve = [&](const std::string& ylabel, const char* xlabel) {
        s += std::string("set xlabel '") + xlabel + "'\n";
        s += "set ylabel '" + ylabel + "'\n";
        s += "plot \\\n";
        const char* styles[] = {"dashtype 4", "dashtype 2", "", "dashtype 3"};
        for (size_t i = 0; i < cap.a_values.size(); ++i) {
            char title[32];
            std::snprintf(title, sizeof(title), "a = %g", cap.a_values[i]);
            s += "  " + curve_filter(csv_name, cap.a_values[i], 2, 3,
                                     styles[i % 4], title);
            s += (i + 1 < cap.a_values.size() || cap.has_plane_reference) ? ", \\\n"
                                                                          : "\n";
        }
        if (cap.has_plane_reference)
            s += "  " +
                 curve_filter(csv_name, 0.0, 2, 3, "linewidth 2", "plane") + "\n";
    };

    switch (id) {
        case FigureId::fig3:
            s += "set xlabel 'z'\nset ylabel 'U^{(1)}_{cc-z} / (delta/(a pi))'\n";
            s += "plot '" + csv_name + "' skip 1 using 1:2 with lines title "
                 "'a=1, d=1, k_c=10'\n";
            break;
        case FigureId::fig6:
            s += "set xlabel 'phi'\nset ylabel 'U^{(1)}_{cc-phi} / (delta/(a pi))'\n";
            s += "plot '" + csv_name + "' skip 1 using 1:2 with lines title "
                 "'a=1, d=1, k_c=10'\n";
            break;
        case FigureId::fig5:
            multi_curve("U^{(1)}_{cc-z} / U^{(1)}_{cp}", "d");
            break;
        case FigureId::fig7:
            multi_curve("U^{(1)}_{cc-phi} / U^{(1)}_{cp}", "d");
            break;
        case FigureId::fig8:
            multi_curve("C_{cc-z}", "d");
            break;
        case FigureId::fig9:
            multi_curve("Delta_{cc-z}", "d");
            break;
        case FigureId::fig10:
            multi_curve("C_{cc-phi}", "d");
            break;
        case FigureId::fig11:
            multi_curve("Delta_{cc-phi}", "d");
            break;
    }
    return s;
}

}  // namespace

std::optional<FigureId> parse_figure_id(const std::string& name) {
    const std::pair<const char*, FigureId> table[] = {
        {"fig3", FigureId::fig3},   {"fig5", FigureId::fig5},
        {"fig6", FigureId::fig6},   {"fig7", FigureId::fig7},
        {"fig8", FigureId::fig8},   {"fig9", FigureId::fig9},
        {"fig10", FigureId::fig10}, {"fig11", FigureId::fig11},
    };
    for (const auto& [n, id] : table)
        if (name == n) return id;
    return std::nullopt;
}

const char* figure_name(FigureId id) {
    switch (id) {
        case FigureId::fig3: return "fig3";
        case FigureId::fig5: return "fig5";
        case FigureId::fig6: return "fig6";
        case FigureId::fig7: return "fig7";
        case FigureId::fig8: return "fig8";
        case FigureId::fig9: return "fig9";
        case FigureId::fig10: return "fig10";
        case FigureId::fig11: return "fig11";
    }
    return "?";
}

FigureCaption figure_caption(FigureId id) {
    FigureCaption c;
    switch (id) {
        case FigureId::fig3:  // a=1, d=1, k_c=10
            c.a_values = {1.0}; c.k_c = 10.0; c.d = 1.0;
            break;
        case FigureId::fig6:  // a=1, d=1, k_c=10, azimuthal
            c.a_values = {1.0}; c.k_c = 10.0; c.d = 1.0; c.azimuthal = true;
            break;
        case FigureId::fig5:  // k_c=10, a = 0.5, 1, 2
            c.a_values = {0.5, 1.0, 2.0}; c.k_c = 10.0;
            break;
        case FigureId::fig7:
            c.a_values = {0.5, 1.0, 2.0}; c.k_c = 10.0; c.azimuthal = true;
            break;
        case FigureId::fig8:  // beta=0.2, k_c=6, theta=0; a = 1, 3, 9 (+ plane)
            c.a_values = {1.0, 3.0, 9.0}; c.k_c = 6.0; c.beta = 0.2;
            c.theta = 0.0; c.varphi = 0.0; c.has_plane_reference = true;
            break;
        case FigureId::fig9:  // theta=pi/6, varphi=0
            c.a_values = {1.0, 3.0, 9.0}; c.k_c = 6.0; c.beta = 0.2;
            c.theta = kPi / 6.0; c.varphi = 0.0; c.has_plane_reference = true;
            break;
        case FigureId::fig10:  // axis along phi: theta=pi/2, varphi=pi/2
            c.a_values = {1.0, 3.0, 9.0}; c.k_c = 6.0; c.beta = 0.2;
            c.theta = kPi / 2.0; c.varphi = kPi / 2.0; c.azimuthal = true;
            c.has_plane_reference = true;
            break;
        case FigureId::fig11:  // theta=pi/2, varphi=pi/3
            c.a_values = {1.0, 3.0, 9.0}; c.k_c = 6.0; c.beta = 0.2;
            c.theta = kPi / 2.0; c.varphi = kPi / 3.0; c.azimuthal = true;
            c.has_plane_reference = true;
            break;
    }
    return c;
}

NumericsConfig figure_numerics() {
    NumericsConfig cfg;
    cfg.rel_tol = 1e-6;
    cfg.abs_tol = 1e-10;
    cfg.max_order = 4000;
    return cfg;
}

FigureOutput reproduce_figure(FigureId id, const std::string& out_dir,
                              const NumericsConfig& cfg) {
    SweepDataset ds;
    switch (id) {
        case FigureId::fig3:
        case FigureId::fig6:
            ds = fig_profile(id, cfg);
            break;
        case FigureId::fig5:
        case FigureId::fig7:
            ds = fig_ratio(id, cfg);
            break;
        default:
            ds = fig_regime(id, cfg);
            break;
    }

    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    FigureOutput out;
    const std::string base = std::string(figure_name(id));
    out.csv_path = (fs::path(out_dir) / (base + ".csv")).string();
    out.plot_path = (fs::path(out_dir) / (base + ".gp")).string();
    out.all_converged = ds.all_converged;

    std::ofstream csv(out.csv_path, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write " + out.csv_path);
    csv << ds.to_csv();

    std::ofstream gp(out.plot_path, std::ios::binary);
    if (!gp) throw std::runtime_error("cannot write " + out.plot_path);
    gp << plot_script(id, base + ".csv");
    return out;
}

}  // namespace corrcyl::cli
