#pragma once
// Observables of one accelerated detector for the Minkowski vacuum input.
// Everything is carried as log<d^dagger d>: at realistic parameters the mean
// photon number is exp(-1e5) and any linear-domain path is identically zero.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "accdet/core_params.hpp"
#include "accdet/detector_mode.hpp"
#include "accdet/numerics.hpp"
#include "accdet/rindler_field.hpp"

namespace accdet {

namespace detail {

inline void require_shared_grid(const OverlapSpectrum& overlap, const ThermalSpectrum& thermal) {
    if (overlap.wavenumbers != thermal.wavenumbers)
        throw domain_error("overlap and thermal spectra do not share a wavenumber grid");
}

}  // namespace detail

/**
 * Leading large-N saddle of the mean number,
 *   log<d^dagger d> ~ -(2 pi c^2/(a l)) (N - pi c^2/(a l)),
 * with l the effective mode length. l = L is the textbook form; l = sigma is
 * the saddle of the Gaussian actually used, and is what mean_number reports.
 */
inline double asymptotic_log_mean(double accel_group, int mode_index, double length = 1.0) {
    const double beta = 2.0 * std::numbers::pi / (accel_group * length);
    return -beta * (mode_index - 0.5 * beta);
}

struct NumberResult {
    double log_mean = numerics::neg_inf;
    double mean = 0.0;
    double log_mean_asymptotic = numerics::neg_inf;
    bool asymptotic_valid = false;
};

inline NumberResult number_from_log(double log_mean) {
    NumberResult r;
    r.log_mean = log_mean;
    r.mean = std::exp(log_mean);
    return r;
}

/// <d^dagger d> = sum_k weight <n_k> |f_k|^2 as a log-sum-exp over the grid.
inline NumberResult mean_number(const OverlapSpectrum& overlap, const ThermalSpectrum& thermal,
                                double r1 = default_regime_r1, double r2 = default_regime_r2) {
    detail::require_shared_grid(overlap, thermal);
    std::vector<double> terms(overlap.size());
    for (std::size_t i = 0; i < overlap.size(); ++i)
        terms[i] = std::log(overlap.weights[i]) + thermal.log_occupation[i] + overlap.log_abs2[i];
    NumberResult r = number_from_log(numerics::log_sum_exp(terms));
    const PhysicalConfig cfg{thermal.accel_group, overlap.mode.mode_index, overlap.cutoff, 1.0, std::nullopt};
    r.asymptotic_valid = regime(cfg, r1, r2).asymptotic_valid;
    r.log_mean_asymptotic = asymptotic_log_mean(thermal.accel_group, overlap.mode.mode_index, overlap.mode.sigma);
    return r;
}

struct PhotoCountDistribution {
    std::vector<double> probs;
    std::vector<double> log_probs;
    double tail_mass = 0.0;
    double log_effective_mean = numerics::neg_inf;
    double effective_mean = 0.0;

    /// Distribution mean; the tail beyond n_max is summed analytically
    /// (E[n | n > n_max] = n_max + 1 + m for the geometric law).
    double mean_including_tail() const {
        double acc = 0.0;
        for (std::size_t n = 0; n < probs.size(); ++n) acc += static_cast<double>(n) * probs[n];
        return acc + (static_cast<double>(probs.size()) + effective_mean) * tail_mass;
    }
};

/// P(n) = m^n / (1 + m)^(1 + n) with m = eta <d^dagger d>, n = 0..n_max.
inline PhotoCountDistribution photocount(const NumberResult& number, double efficiency, int n_max) {
    if (!(efficiency > 0.0 && efficiency <= 1.0)) throw domain_error("efficiency must lie in (0,1]");
    if (n_max < 1) throw domain_error("n_max must be at least 1");
    PhotoCountDistribution out;
    out.log_effective_mean = std::log(efficiency) + number.log_mean;
    out.effective_mean = std::exp(out.log_effective_mean);
    const double log1p_m = std::log1p(out.effective_mean);
    // log of the geometric ratio m / (1 + m)
    const double log_ratio = out.log_effective_mean - log1p_m;
    const auto count = static_cast<std::size_t>(n_max) + 1;
    out.log_probs.resize(count);
    out.probs.resize(count);
    for (std::size_t n = 0; n < count; ++n) {
        out.log_probs[n] = n == 0 ? -log1p_m : static_cast<double>(n) * log_ratio - log1p_m;
        out.probs[n] = std::exp(out.log_probs[n]);
    }
    out.tail_mass = log_ratio == numerics::neg_inf ? 0.0 : std::exp(static_cast<double>(count) * log_ratio);
    return out;
}

/// Z(lambda) = 1 / (1 - (e^{i lambda} - 1) <d^dagger d>).
inline std::complex<double> characteristic_fn(const NumberResult& number, double lambda) {
    const std::complex<double> u = std::polar(1.0, lambda) - 1.0;
    return 1.0 / (1.0 - u * number.mean);
}

/// P(n) by trapezoid inversion of Z over [0, 2 pi). Self-test only.
inline double invert_characteristic(const NumberResult& number, int n, std::size_t nodes = 4096) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < nodes; ++j) {
        const double lambda = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(nodes);
        acc += std::polar(1.0, -lambda * n) * characteristic_fn(number, lambda);
    }
    return acc.real() / static_cast<double>(nodes);
}

struct TemperatureResult {
    double mean_energy = 0.0;  ///< sum_k weight omega_k |f_k|^2, omega_k = |k| c
    double kT_est = 0.0;
    double kT_unruh = 0.0;
    double kT_approx = 0.0;
};

/// kT_est = E / log(1 + 1/<d^dagger d>), with the log evaluated as log1p(m) - log m.
inline TemperatureResult temperature(const OverlapSpectrum& overlap, const NumberResult& number,
                                     const PhysicalConfig& config) {
    std::vector<double> terms(overlap.size());
    for (std::size_t i = 0; i < overlap.size(); ++i)
        terms[i] = std::log(overlap.weights[i]) + std::log(std::abs(overlap.wavenumbers[i])) + overlap.log_abs2[i];
    TemperatureResult t;
    t.mean_energy = std::exp(numerics::log_sum_exp(terms));
    const double denom = std::log1p(number.mean) - number.log_mean;
    t.kT_est = t.mean_energy / denom;
    t.kT_unruh = unruh_temperature(config.accel_group);
    t.kT_approx = t.kT_unruh / (1.0 - std::numbers::pi / (config.accel_group * config.mode_index));
    return t;
}

struct ClickDensity {
    double log_density = numerics::neg_inf;
    double density = 0.0;
};

/// Glauber click density |psi_D(xi, 0)|^2 <d^dagger d> at the tau = 0 slice.
/// `mode` is any callable xi -> psi_D(xi, 0).
template <typename ModeFn>
ClickDensity glauber_click_density(ModeFn&& mode, const NumberResult& number, double xi) {
    const double amp = std::abs(std::complex<double>(mode(xi)));
    ClickDensity out;
    out.log_density = 2.0 * std::log(amp) + number.log_mean;
    out.density = std::exp(out.log_density);
    return out;
}

}  // namespace accdet
