#pragma once

#include <stdexcept>
#include <string>

namespace corrcyl {

/// Bad or out-of-range configuration (order caps, invalid geometry constraints).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace corrcyl
