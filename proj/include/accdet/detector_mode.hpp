#pragma once
/**
 * @brief Gaussian detector mode and its Klein-Gordon overlap spectrum with
 * region-I (or mirrored region-II) Rindler modes.
 *
 * The overlap (psi_D, w_k) of the Gaussian Cauchy data
 *   psi_D(xi, 0) = A exp(-xi^2/sigma^2 + i N xi/sigma),  d_tau psi_D = -i (N/sigma) psi_D
 * with a continuum Rindler mode is, with c = N/sigma and A = (N sqrt(2 pi))^{-1/2},
 *   f_k = (|k| + c) / sqrt(4 pi |k|) * A sigma sqrt(pi) * exp(-sigma^2 (k - c)^2 / 4),
 * real and positive for a mode centred at xi = 0.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

#include "accdet/core_params.hpp"
#include "accdet/numerics.hpp"
#include "accdet/rindler_field.hpp"

namespace accdet {

struct DetectorMode {
    double sigma = 1.0;
    double central_wavenumber = 1.0;  ///< N / sigma, also the central Rindler frequency
    int mode_index = 1;
    Region region = Region::I;
    double center_xi = 0.0;
    double norm_const = 1.0;  ///< (N sqrt(2 pi))^{-1/2}
};

/// sigma = (2 c^2/a) asinh(a L / (2 c^2)), in units of L.
inline double detector_width(double accel_group) {
    const double x = 0.5 * accel_group;
    return x == 0.0 ? 1.0 : std::asinh(x) / x;
}

inline DetectorMode build_mode(const PhysicalConfig& config) {
    validate(config);
    DetectorMode mode;
    mode.sigma = detector_width(config.accel_group);
    mode.mode_index = config.mode_index;
    mode.central_wavenumber = config.mode_index / mode.sigma;
    mode.norm_const = 1.0 / std::sqrt(config.mode_index * std::sqrt(2.0 * std::numbers::pi));
    return mode;
}

/// psi_D(xi, 0). Region II uses the mirrored profile xi' = -xi.
inline std::complex<double> envelope(const DetectorMode& mode, double xi) {
    const double u = xi - mode.center_xi;
    const double phase = mode.central_wavenumber * u * (mode.region == Region::I ? 1.0 : -1.0);
    return std::polar(mode.norm_const * std::exp(-u * u / (mode.sigma * mode.sigma)), phase);
}

/// d_tau psi_D(xi, 0) = -i (N c / sigma) psi_D(xi, 0).
inline std::complex<double> envelope_dtau(const DetectorMode& mode, double xi) {
    return std::complex<double>{0.0, -mode.central_wavenumber} * envelope(mode, xi);
}

/// log |f_k|^2 of the closed-form, pre-projection overlap.
inline double log_raw_overlap_abs2(const DetectorMode& mode, double k) {
    const double ak = std::abs(k);
    const double s = mode.sigma;
    const double d = k - mode.central_wavenumber;
    return 2.0 * std::log(ak + mode.central_wavenumber) - std::log(4.0 * ak)
           + 2.0 * std::log(mode.norm_const * s) - 0.5 * s * s * d * d;
}

/// Closed-form pre-projection overlap (psi_D, w_k), continuum normalisation.
inline std::complex<double> raw_overlap(const DetectorMode& mode, double k) {
    if (k == 0.0) throw domain_error("overlap wavenumber must be nonzero");
    return {std::exp(0.5 * log_raw_overlap_abs2(mode, k)), 0.0};
}

enum class Measure { continuum, box };

struct GridSpec {
    Measure measure = Measure::continuum;
    double box_length = 0.0;       ///< h / L, box measure only
    double panel_width = 0.5;      ///< continuum panel width in units of 1/sigma
    double upper_margin = 14.0;    ///< k_max = N/sigma + upper_margin/sigma
    double norm_floor = 1e-2;      ///< minimum retained norm above the cutoff

    static GridSpec from_config(const PhysicalConfig& config) {
        GridSpec spec;
        if (config.box_length_scaled) {
            spec.measure = Measure::box;
            spec.box_length = *config.box_length_scaled;
        }
        return spec;
    }
};

/// Projected, renormalised overlap coefficients on a wavenumber grid k > Lambda.
struct OverlapSpectrum {
    std::vector<double> wavenumbers;
    std::vector<double> weights;
    std::vector<std::complex<double>> coefficients;
    std::vector<double> log_abs2;
    double raw_log_norm = 0.0;  ///< log of sum weight |f_k|^2 before renormalisation
    double cutoff = 1.0;
    DetectorMode mode;
    Region region = Region::I;

    std::size_t size() const { return wavenumbers.size(); }
};

namespace detail {

// Panels resolve Gaussians of width 1/sigma everywhere on [Lambda, k_max] (the
// thermal weight moves the peak of the integrands anywhere in that range) and
// are graded geometrically at Lambda where exp(-2 pi k / a) can be very steep.
inline void continuum_grid(const DetectorMode& mode, double accel_group, double cutoff,
                           const GridSpec& spec, std::vector<double>& nodes, std::vector<double>& weights) {
    const double s = mode.sigma;
    const double hi = mode.central_wavenumber + spec.upper_margin / s;
    const double width = spec.panel_width / s;
    const double slope = s * s * std::max(mode.central_wavenumber - cutoff, 0.0)
                         + 2.0 * std::numbers::pi / accel_group + 1.0 / cutoff;
    double step = std::max(std::min(width, 8.0 / slope), 1e-9 * std::max(cutoff, 1.0));
    double lo = cutoff;
    while (step < width && lo + step < hi) {
        numerics::append_panel(lo, lo + step, nodes, weights);
        lo += step;
        step *= 2.0;
    }
    const auto panels = static_cast<std::size_t>(std::ceil((hi - lo) / width));
    for (std::size_t i = 0; i < panels; ++i) {
        const double a = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(panels);
        const double b = i + 1 == panels ? hi : lo + (hi - lo) * static_cast<double>(i + 1) / static_cast<double>(panels);
        numerics::append_panel(a, b, nodes, weights);
    }
}

inline void box_grid(const DetectorMode& mode, double cutoff, const GridSpec& spec,
                     std::vector<double>& nodes, std::vector<double>& weights) {
    const double spacing = 2.0 * std::numbers::pi / spec.box_length;
    const double hi = mode.central_wavenumber + spec.upper_margin / mode.sigma;
    for (auto n = static_cast<long long>(std::floor(cutoff / spacing)) + 1;; ++n) {
        const double k = spacing * static_cast<double>(n);
        if (k > hi) break;
        if (k <= cutoff) continue;
        nodes.push_back(k);
        weights.push_back(spacing);
    }
}

}  // namespace detail

inline OverlapSpectrum overlap_spectrum(const DetectorMode& mode, const PhysicalConfig& config,
                                        const GridSpec& spec) {
    validate(config);
    if (spec.measure == Measure::box && !(spec.box_length >= 1.0))
        throw domain_error("box_length_scaled must be at least 1");
    OverlapSpectrum out;
    out.mode = mode;
    out.region = mode.region;
    out.cutoff = config.cutoff_scaled;
    if (mode.central_wavenumber + spec.upper_margin / mode.sigma <= out.cutoff)
        throw domain_error("mode not representable above cutoff");
    if (spec.measure == Measure::continuum)
        detail::continuum_grid(mode, config.accel_group, out.cutoff, spec, out.wavenumbers, out.weights);
    else
        detail::box_grid(mode, out.cutoff, spec, out.wavenumbers, out.weights);

    const std::size_t n = out.wavenumbers.size();
    std::vector<double> terms(n);
    out.log_abs2.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.log_abs2[i] = log_raw_overlap_abs2(mode, out.wavenumbers[i]);
        terms[i] = std::log(out.weights[i]) + out.log_abs2[i];
    }
    out.raw_log_norm = numerics::log_sum_exp(terms);
    if (!(out.raw_log_norm >= std::log(spec.norm_floor)))
        throw domain_error("mode not representable above cutoff");
    out.coefficients.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.log_abs2[i] -= out.raw_log_norm;
        out.coefficients[i] = {std::exp(0.5 * out.log_abs2[i]), 0.0};
    }
    return out;
}

inline OverlapSpectrum overlap_spectrum(const DetectorMode& mode, const PhysicalConfig& config) {
    return overlap_spectrum(mode, config, GridSpec::from_config(config));
}

/// log sum weight |f_k|^2 of a spectrum (0 after projection).
inline double log_norm(const OverlapSpectrum& spectrum) {
    std::vector<double> terms(spectrum.size());
    for (std::size_t i = 0; i < spectrum.size(); ++i)
        terms[i] = std::log(spectrum.weights[i]) + spectrum.log_abs2[i];
    return numerics::log_sum_exp(terms);
}

/// Projected mode  sum_k weight f_k w_k(xi, tau)  in the spectrum's own wedge.
inline std::complex<double> mode_value(const OverlapSpectrum& spectrum, double xi, double tau) {
    const RindlerPoint p{spectrum.region, xi, tau};
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < spectrum.size(); ++i)
        acc += spectrum.weights[i] * spectrum.coefficients[i]
               * rindler_mode_value(spectrum.wavenumbers[i], spectrum.region, p);
    return acc;
}

/// Mode of the counter-accelerating twin (xi' = -xi): same coefficients, other wedge.
inline OverlapSpectrum mirror_mode(const OverlapSpectrum& spectrum) {
    OverlapSpectrum out = spectrum;
    out.region = opposite(spectrum.region);
    out.mode.region = out.region;
    return out;
}

}  // namespace accdet
