// Run-configuration files: a small INI dialect (sections, key = value,
// '#' comments) parsed with per-entry line numbers so validation can point
// at the offending line.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "corrcyl/geometry.hpp"
#include "corrcyl/numerics.hpp"

namespace corrcyl::cli {

enum class Target {
    charge_z,      // U1 for axial corrugation vs the swept parameter
    charge_phi,    // U1 for azimuthal corrugation
    charge_ratio,  // U1_cc / U1_cp at the corrugation peak
    vdw_C,         // C coefficient of the vdW phase analysis
    vdw_Delta,     // phase angle Delta
    regime_map,    // (swept, swept2) grid of regime labels
    energy_profile  // charge Utilde vs position (z or phi)
};

struct SweepAxis {
    std::string param;
    double from = 0.0, to = 0.0, step = 0.0;

    int points() const;
    double value(int i) const;
};

struct SweepSpec {
    Target target = Target::charge_z;
    geometry::Direction direction = geometry::Direction::axial;
    std::map<std::string, double> fixed;
    SweepAxis swept;
    std::optional<SweepAxis> swept2;  // regime_map only
    NumericsConfig numerics;
    std::string output_path = "sweep.csv";

    double fixed_or(const std::string& key, double fallback) const;
};

struct Diagnostic {
    int line = 0;  // 0: no specific line (e.g. missing key)
    std::string message;
};

struct ParsedConfig {
    std::optional<SweepSpec> spec;  // set when there are no diagnostics
    std::vector<Diagnostic> diagnostics;
};

/// Parse and validate; never throws on content errors (they become
/// diagnostics).  Unreadable files throw std::runtime_error.
ParsedConfig load_config(const std::string& path);
ParsedConfig parse_config_text(const std::string& text);

const char* target_name(Target t);

}  // namespace corrcyl::cli
