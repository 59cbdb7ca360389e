#pragma once

#include <stdexcept>
#include <string>

namespace spinres {

/// Raised when Ω = 0 (ω = ω₀ and ω₁ = 0), where the tilt angle Θ is undefined.
class DegenerateDetuningError : public std::domain_error {
public:
    explicit DegenerateDetuningError(const std::string& what) : std::domain_error(what) {}
};

/// Integrator configuration that violates the step-resolution guard.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace spinres
