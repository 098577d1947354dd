#include "corrcyl/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace corrcyl::cli {

namespace {

struct Entry {
    std::string value;
    int line = 0;
};

using EntryMap = std::map<std::string, Entry>;  // "section.key" -> entry

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

EntryMap tokenize(const std::string& text, std::vector<Diagnostic>& diags) {
    EntryMap entries;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                diags.push_back({lineno, "malformed section header: " + line});
                continue;
            }
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            diags.push_back({lineno, "expected 'key = value': " + line});
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            diags.push_back({lineno, "empty key or value"});
            continue;
        }
        const std::string full = section.empty() ? key : section + "." + key;
        if (entries.count(full))
            diags.push_back({lineno, "duplicate key '" + full + "'"});
        entries[full] = Entry{value, lineno};
    }
    return entries;
}

const std::pair<const char*, Target> kTargets[] = {
    {"charge_z", Target::charge_z},       {"charge_phi", Target::charge_phi},
    {"charge_ratio", Target::charge_ratio}, {"vdw_C", Target::vdw_C},
    {"vdw_Delta", Target::vdw_Delta},     {"regime_map", Target::regime_map},
    {"energy_profile", Target::energy_profile},
};

class Reader {
  public:
    Reader(const EntryMap& entries, std::vector<Diagnostic>& diags)
        : entries_(entries), diags_(diags) {}

    const Entry* find(const std::string& key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }

    std::optional<double> number(const std::string& key) {
        const Entry* e = find(key);
        if (!e) return std::nullopt;
        try {
            size_t used = 0;
            const double v = std::stod(e->value, &used);
            if (used != e->value.size()) throw std::invalid_argument("trailing");
            return v;
        } catch (const std::exception&) {
            diags_.push_back({e->line, "'" + key + "': not a number: " + e->value});
            return std::nullopt;
        }
    }

    void fail(const std::string& key, const std::string& msg) {
        const Entry* e = find(key);
        diags_.push_back({e ? e->line : 0, "'" + key + "': " + msg});
    }

    const EntryMap& entries() const { return entries_; }

  private:
    const EntryMap& entries_;
    std::vector<Diagnostic>& diags_;
};

std::optional<SweepAxis> read_axis(Reader& r, const std::string& section,
                                   bool required, std::vector<Diagnostic>& diags) {
    const bool any = r.find(section + ".param") || r.find(section + ".from") ||
                     r.find(section + ".to") || r.find(section + ".step");
    if (!any) {
        if (required)
            diags.push_back({0, "missing [" + section + "] section"});
        return std::nullopt;
    }
    SweepAxis axis;
    const Entry* p = r.find(section + ".param");
    if (!p) {
        diags.push_back({0, "[" + section + "] needs 'param'"});
        return std::nullopt;
    }
    axis.param = p->value;
    auto from = r.number(section + ".from");
    auto to = r.number(section + ".to");
    auto step = r.number(section + ".step");
    if (!from || !to || !step) {
        diags.push_back({p->line, "[" + section + "] needs numeric from/to/step"});
        return std::nullopt;
    }
    axis.from = *from;
    axis.to = *to;
    axis.step = *step;
    if (!(axis.step > 0.0)) r.fail(section + ".step", "step must be > 0");
    if (axis.to < axis.from) r.fail(section + ".to", "empty range (to < from)");
    return axis;
}

}  // namespace

int SweepAxis::points() const {
    if (!(step > 0.0) || to < from) return 0;
    return static_cast<int>(std::floor((to - from) / step + 1e-9)) + 1;
}

double SweepAxis::value(int i) const { return from + i * step; }

double SweepSpec::fixed_or(const std::string& key, double fallback) const {
    auto it = fixed.find(key);
    return it == fixed.end() ? fallback : it->second;
}

const char* target_name(Target t) {
    for (const auto& [name, tt] : kTargets)
        if (tt == t) return name;
    return "?";
}

ParsedConfig parse_config_text(const std::string& text) {
    ParsedConfig out;
    auto& diags = out.diagnostics;
    const EntryMap entries = tokenize(text, diags);
    Reader r(entries, diags);

    SweepSpec spec;

    // [sweep] target / direction
    const Entry* target = r.find("sweep.target");
    if (!target) {
        diags.push_back({0, "missing 'target' in [sweep]"});
    } else {
        bool known = false;
        for (const auto& [name, t] : kTargets) {
            if (target->value == name) {
                spec.target = t;
                known = true;
            }
        }
        if (!known)
            diags.push_back({target->line, "unknown target '" + target->value + "'"});
    }
    if (const Entry* dir = r.find("sweep.direction")) {
        if (dir->value == "z")
            spec.direction = geometry::Direction::axial;
        else if (dir->value == "phi")
            spec.direction = geometry::Direction::azimuthal;
        else
            diags.push_back({dir->line, "direction must be 'z' or 'phi'"});
    }

    // [fixed]
    for (const auto& [key, entry] : entries) {
        if (key.rfind("fixed.", 0) != 0) continue;
        const std::string name = key.substr(6);
        if (auto v = r.number(key)) spec.fixed[name] = *v;
    }

    // [swept], [swept2]
    if (auto axis = read_axis(r, "swept", /*required=*/true, diags))
        spec.swept = *axis;
    spec.swept2 = read_axis(r, "swept2", /*required=*/false, diags);

    // [numerics]
    if (auto v = r.number("numerics.rel_tol")) spec.numerics.rel_tol = *v;
    if (auto v = r.number("numerics.abs_tol")) spec.numerics.abs_tol = *v;
    if (auto v = r.number("numerics.max_order"))
        spec.numerics.max_order = static_cast<int>(*v);
    if (auto v = r.number("numerics.max_quad_depth"))
        spec.numerics.max_quad_depth = static_cast<int>(*v);
    if (auto v = r.number("numerics.tail_multiple")) spec.numerics.tail_multiple = *v;
    if (const Entry* e = r.find("numerics.tail_policy")) {
        if (e->value == "fixed")
            spec.numerics.tail_cutoff_policy =
                TailCutoffPolicy::fixed_multiple_of_decay_scale;
        else if (e->value == "adaptive")
            spec.numerics.tail_cutoff_policy = TailCutoffPolicy::adaptive;
        else
            diags.push_back({e->line, "tail_policy must be 'fixed' or 'adaptive'"});
    }
    if (!(spec.numerics.rel_tol > 0.0)) r.fail("numerics.rel_tol", "must be > 0");
    if (!(spec.numerics.abs_tol > 0.0)) r.fail("numerics.abs_tol", "must be > 0");
    if (spec.numerics.max_order < 1) r.fail("numerics.max_order", "must be >= 1");

    // [output]
    if (const Entry* e = r.find("output.path")) spec.output_path = e->value;

    // ---- semantic checks ----------------------------------------------
    auto has = [&](const std::string& name) {
        return spec.fixed.count(name) > 0 || spec.swept.param == name ||
               (spec.swept2 && spec.swept2->param == name);
    };
    auto require = [&](std::initializer_list<const char*> names) {
        for (const char* n : names)
            if (!has(n))
                diags.push_back({0, std::string("missing parameter '") + n +
                                        "' (fixed or swept)"});
    };
    if (spec.fixed.count(spec.swept.param))
        r.fail("fixed." + spec.swept.param, "parameter is both fixed and swept");
    if (spec.swept2 && spec.fixed.count(spec.swept2->param))
        r.fail("fixed." + spec.swept2->param, "parameter is both fixed and swept");
    if (spec.swept2 && spec.swept2->param == spec.swept.param)
        diags.push_back({0, "swept and swept2 use the same parameter"});

    const bool azim = spec.direction == geometry::Direction::azimuthal;
    switch (spec.target) {
        case Target::charge_z:
            require({"a", "d", "kc", "delta", "z"});
            break;
        case Target::charge_phi:
            require({"a", "d", "N", "delta", "phi"});
            break;
        case Target::charge_ratio:
            require({"a", "d", "kc"});
            break;
        case Target::vdw_C:
        case Target::vdw_Delta:
            require({"a", "d", "kc", "beta", "theta", "varphi"});
            break;
        case Target::regime_map:
            require({"a", "d", "kc", "beta", "theta", "varphi"});
            if (!spec.swept2)
                diags.push_back({0, "regime_map needs a [swept2] section"});
            break;
        case Target::energy_profile:
            require({"a", "d", "delta"});
            require({azim ? "N" : "kc"});
            if (spec.swept.param != (azim ? "phi" : "z"))
                diags.push_back({0, "energy_profile sweeps 'z' (axial) or 'phi' "
                                    "(azimuthal)"});
            break;
    }

    auto check_positive = [&](const char* name, bool strict) {
        auto it = spec.fixed.find(name);
        if (it == spec.fixed.end()) return;
        if ((strict && !(it->second > 0.0)) || (!strict && it->second < 0.0))
            r.fail(std::string("fixed.") + name,
                   strict ? "must be > 0" : "must be >= 0");
    };
    check_positive("a", true);
    check_positive("d", true);
    check_positive("kc", true);
    check_positive("delta", false);
    check_positive("scale", true);
    if (auto it = spec.fixed.find("beta"); it != spec.fixed.end()) {
        if (!(it->second > 0.0) || it->second > 1.0)
            r.fail("fixed.beta", "must be in (0, 1]");
    }
    for (const char* len : {"a", "d"}) {
        const SweepAxis* ax = spec.swept.param == len ? &spec.swept
                              : (spec.swept2 && spec.swept2->param == len)
                                  ? &*spec.swept2
                                  : nullptr;
        if (ax && !(ax->from > 0.0))
            diags.push_back({0, std::string("swept '") + len + "' must start > 0"});
    }

    // azimuthal constraint N = k_c a (integer)
    if (auto it = spec.fixed.find("N"); it != spec.fixed.end()) {
        if (!(it->second >= 1.0) ||
            std::abs(it->second - std::round(it->second)) > 1e-9)
            r.fail("fixed.N", "N must be a positive integer");
    }
    if (azim && spec.fixed.count("kc") && spec.fixed.count("a")) {
        const double n = spec.fixed.at("kc") * spec.fixed.at("a");
        if (std::abs(n - std::round(n)) > 1e-9 * std::max(1.0, std::abs(n)) ||
            n < 0.5)
            r.fail("fixed.kc", "azimuthal corrugation requires N = kc*a to be a "
                               "positive integer (got " + std::to_string(n) + ")");
    }

    if (diags.empty()) out.spec = spec;
    return out;
}

ParsedConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

}  // namespace corrcyl::cli
