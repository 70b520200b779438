#pragma once
/**
 * @brief Dimensionless parameter set shared by every accdet module.
 *
 * Units: c = hbar = k_B = 1 and the cavity proper length L = 1. Every
 * exported quantity is therefore dimensionless. Restoration factors:
 *   - lengths (sigma, xi, box length)  multiply by L
 *   - times (tau, T)                    multiply by L / c
 *   - wavenumbers (k, Lambda)           multiply by 1 / L
 *   - frequencies / gaps                multiply by c / L
 *   - energies, temperatures kT         multiply by hbar c / L
 *   - accel_group is a L / c^2 itself; the proper acceleration is accel_group * c^2 / L
 */

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace accdet {

/// Raised for out-of-domain inputs. The message names the offending field.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct PhysicalConfig {
    double accel_group = 0.0;  ///< a L / c^2
    int mode_index = 0;        ///< cavity eigenmode number N
    double cutoff_scaled = 1.0;  ///< Lambda L
    double efficiency = 1.0;     ///< eta in (0, 1]
    std::optional<double> box_length_scaled;  ///< h / L; empty selects the continuum

    bool operator==(const PhysicalConfig&) const = default;
};

/// Returns the config unchanged when every invariant holds, throws otherwise.
inline PhysicalConfig validate(const PhysicalConfig& config) {
    if (!(config.accel_group > 0.0) || !std::isfinite(config.accel_group))
        throw domain_error("accel_group must be positive");
    if (config.mode_index < 1)
        throw domain_error("mode_index must be a positive integer");
    if (!(config.cutoff_scaled > 0.0) || !std::isfinite(config.cutoff_scaled))
        throw domain_error("cutoff_scaled must be positive");
    if (!(config.efficiency > 0.0 && config.efficiency <= 1.0))
        throw domain_error("efficiency must lie in (0,1]");
    if (config.box_length_scaled && !(*config.box_length_scaled >= 1.0))
        throw domain_error("box_length_scaled must be at least 1");
    return config;
}

struct RegimeFlags {
    bool asymptotic_valid = false;
};

inline constexpr double default_regime_r1 = 2.0;
inline constexpr double default_regime_r2 = 5.0;

/// Large-N / small-acceleration window  N/(2 pi) >= r1 c^2/(aL)  and  c^2/(aL) >= r2.
inline RegimeFlags regime(const PhysicalConfig& config, double r1 = default_regime_r1,
                          double r2 = default_regime_r2) {
    if (!(r1 >= 1.0) || !(r2 >= 1.0))
        throw domain_error("regime ratios must be at least 1");
    const double inv_accel = 1.0 / config.accel_group;
    const double modes = config.mode_index / (2.0 * std::numbers::pi);
    return {modes >= r1 * inv_accel && inv_accel >= r2};
}

/// Unruh temperature kT = hbar a / (2 pi c) in units of hbar c / L.
inline double unruh_temperature(double accel_group) {
    return accel_group / (2.0 * std::numbers::pi);
}

}  // namespace accdet
