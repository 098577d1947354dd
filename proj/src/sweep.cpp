#include "corrcyl/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <thread>

#include "corrcyl/charge.hpp"
#include "corrcyl/vdw.hpp"

namespace corrcyl::cli {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

const char* regime_name(vdw::Regime r) {
    switch (r) {
        case vdw::Regime::peak: return "peak";
        case vdw::Regime::valley: return "valley";
        case vdw::Regime::intermediate: return "intermediate";
    }
    return "?";
}

struct PointResult {
    std::vector<std::string> cells;
    bool converged = true;
};

// Run `n` jobs over the worker pool; results land at their own index.
void parallel_for(int n, const std::function<void(int)>& job) {
    const int workers = std::min(worker_count(), std::max(1, n));
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) job(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) job(i);
        });
    }
    for (auto& t : pool) t.join();
}

class ParamSet {
  public:
    ParamSet(const SweepSpec& spec, double v1, std::optional<double> v2)
        : spec_(spec), v1_(v1), v2_(v2) {}

    double get(const std::string& name) const {
        if (spec_.swept.param == name) return v1_;
        if (v2_ && spec_.swept2 && spec_.swept2->param == name) return *v2_;
        auto it = spec_.fixed.find(name);
        if (it == spec_.fixed.end())
            throw std::runtime_error("missing parameter '" + name + "'");
        return it->second;
    }
    double get_or(const std::string& name, double fallback) const {
        if (spec_.swept.param == name) return v1_;
        if (v2_ && spec_.swept2 && spec_.swept2->param == name) return *v2_;
        return spec_.fixed_or(name, fallback);
    }

  private:
    const SweepSpec& spec_;
    double v1_;
    std::optional<double> v2_;
};

vdw::DipoleTensor dipole_of(const ParamSet& p) {
    vdw::ParticleOrientation o;
    o.theta = p.get("theta");
    o.varphi = p.get("varphi");
    o.beta = p.get("beta");
    return vdw::dipole_from_orientation(o, p.get_or("scale", 1.0));
}

vdw::RegimeResult regime_of(const SweepSpec& spec, const ParamSet& p) {
    const double a = p.get("a");
    const double d = p.get("d");
    const double kc = p.get("kc");
    const auto dip = dipole_of(p);
    if (spec.direction == geometry::Direction::azimuthal) {
        const int N = static_cast<int>(std::llround(kc * a));
        return vdw::phase_analysis(dip,
                                   vdw::r_functions_phi(a, a + d, N, spec.numerics));
    }
    return vdw::phase_analysis(dip, vdw::r_functions_z(a, a + d, kc, spec.numerics));
}

PointResult compute_point(const SweepSpec& spec, double v1, std::optional<double> v2) {
    const ParamSet p(spec, v1, v2);
    PointResult out;
    out.cells.push_back(fmt(v1));
    if (v2) out.cells.push_back(fmt(*v2));

    auto finish_energy = [&](const charge::ChargeEnergyResult& r) {
        out.cells.push_back(fmt(r.value));
        out.cells.push_back(r.normalized ? fmt(*r.normalized) : "");
        out.cells.push_back(fmt(r.report.estimated_error));
        out.cells.push_back(r.report.converged ? "1" : "0");
        out.converged = r.report.converged;
    };

    try {
        switch (spec.target) {
            case Target::charge_z:
                finish_energy(charge::u1_charge_z(p.get("a"), p.get("d"), p.get("kc"),
                                                  p.get("z"), p.get("delta"),
                                                  spec.numerics));
                break;
            case Target::charge_phi:
                finish_energy(charge::u1_charge_phi(
                    p.get("a"), p.get("d"), static_cast<int>(std::llround(p.get("N"))),
                    p.get("phi"), p.get("delta"), spec.numerics));
                break;
            case Target::energy_profile:
                if (spec.direction == geometry::Direction::azimuthal)
                    finish_energy(charge::u1_charge_phi(
                        p.get("a"), p.get("d"),
                        static_cast<int>(std::llround(p.get("N"))), p.get("phi"),
                        p.get("delta"), spec.numerics));
                else
                    finish_energy(charge::u1_charge_z(p.get("a"), p.get("d"),
                                                      p.get("kc"), p.get("z"),
                                                      p.get("delta"), spec.numerics));
                break;
            case Target::charge_ratio: {
                const double ratio = charge::curvature_ratio(
                    spec.direction, p.get("a"), p.get("d"), p.get("kc"),
                    spec.numerics);
                out.cells.push_back(fmt(ratio));
                out.cells.push_back(fmt(std::abs(ratio) * spec.numerics.rel_tol * 4));
                out.cells.push_back("1");
                break;
            }
            case Target::vdw_C:
            case Target::vdw_Delta: {
                const auto reg = regime_of(spec, p);
                out.cells.push_back(
                    fmt(spec.target == Target::vdw_C ? reg.C : reg.Delta));
                out.cells.push_back(fmt(reg.report.estimated_error));
                out.cells.push_back(reg.report.converged ? "1" : "0");
                out.converged = reg.report.converged;
                break;
            }
            case Target::regime_map: {
                const auto reg = regime_of(spec, p);
                out.cells.push_back(fmt(reg.B));
                out.cells.push_back(fmt(reg.C));
                out.cells.push_back(fmt(reg.A));
                out.cells.push_back(fmt(reg.Delta));
                out.cells.push_back(reg.degenerate ? "degenerate"
                                                   : regime_name(reg.regime));
                out.cells.push_back(fmt(reg.report.estimated_error));
                out.cells.push_back(reg.report.converged ? "1" : "0");
                out.converged = reg.report.converged;
                break;
            }
        }
    } catch (const ConvergenceError& e) {
        // keep the partial value, mark the row
        while (out.cells.size() > (v2 ? 2u : 1u)) out.cells.pop_back();
        out.cells.push_back(fmt(e.partial.value));
        if (spec.target == Target::charge_z || spec.target == Target::charge_phi ||
            spec.target == Target::energy_profile)
            out.cells.push_back("");
        if (spec.target == Target::regime_map)
            for (int i = 0; i < 4; ++i) out.cells.push_back("");
        out.cells.push_back(fmt(e.partial.estimated_error));
        out.cells.push_back("0");
        out.converged = false;
    }
    return out;
}

std::vector<std::string> header_for(const SweepSpec& spec) {
    std::vector<std::string> h{spec.swept.param};
    if (spec.swept2) h.push_back(spec.swept2->param);
    switch (spec.target) {
        case Target::charge_z:
        case Target::charge_phi:
        case Target::energy_profile:
            h.insert(h.end(), {"value", "normalized", "est_error", "converged"});
            break;
        case Target::charge_ratio:
            h.insert(h.end(), {"ratio", "est_error", "converged"});
            break;
        case Target::vdw_C:
            h.insert(h.end(), {"C", "est_error", "converged"});
            break;
        case Target::vdw_Delta:
            h.insert(h.end(), {"Delta", "est_error", "converged"});
            break;
        case Target::regime_map:
            h.insert(h.end(), {"B", "C", "A", "Delta", "regime", "est_error",
                               "converged"});
            break;
    }
    return h;
}

}  // namespace

int worker_count() {
    if (const char* env = std::getenv("CORRCYL_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return std::min(n, 64);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

std::string SweepDataset::to_csv() const {
    std::string out;
    for (size_t i = 0; i < header.size(); ++i) {
        out += header[i];
        out += (i + 1 < header.size()) ? ',' : '\n';
    }
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            out += (i + 1 < row.size()) ? ',' : '\n';
        }
    }
    return out;
}

SweepDataset run_sweep(const SweepSpec& spec) {
    const int n1 = spec.swept.points();
    const int n2 = spec.swept2 ? spec.swept2->points() : 1;
    if (n1 <= 0 || n2 <= 0) throw std::invalid_argument("run_sweep: empty range");
    const int n = n1 * n2;

    std::vector<PointResult> results(n);
    parallel_for(n, [&](int i) {
        const int i1 = i / n2, i2 = i % n2;
        const double v1 = spec.swept.value(i1);
        std::optional<double> v2;
        if (spec.swept2) v2 = spec.swept2->value(i2);
        results[i] = compute_point(spec, v1, v2);
    });

    SweepDataset ds;
    ds.header = header_for(spec);
    ds.rows.reserve(n);
    for (auto& r : results) {
        ds.all_converged = ds.all_converged && r.converged;
        ds.rows.push_back(std::move(r.cells));
    }
    return ds;
}

SweepDataset run_sweep_to_file(const SweepSpec& spec) {
    SweepDataset ds = run_sweep(spec);
    std::ofstream out(spec.output_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write output file: " + spec.output_path);
    out << ds.to_csv();
    return ds;
}

}  // namespace corrcyl::cli
