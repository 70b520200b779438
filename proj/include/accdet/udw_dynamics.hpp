#pragma once
/**
 * @brief Second-order monopole (Unruh-DeWitt) detector response along the
 * accelerated worldline xi = xi0, and the factorisation
 *   P(click) = alpha(xi0, tau0, T) <d^dagger d>
 * that links it to the projective single-mode description.
 *
 * Ordered double integrals  int_0^T d eta1 int_0^eta1 d eta2 a(eta1) b(eta2)
 * are evaluated on a uniform time grid as one cumulative sum, O(samples).
 * The inner sum uses trapezoid weights with a half diagonal term, which keeps
 * the resonant term exactly equal to |sum_j t_j a_j|^2 >= 0.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

#include "accdet/core_params.hpp"
#include "accdet/detector_mode.hpp"
#include "accdet/numerics.hpp"

namespace accdet {

/// Energy gaps (E - E0)/hbar in units c/L, |<E|m(0)|E0>|^2, and the coupling mu.
struct MonopoleSpec {
    std::vector<double> gaps;
    std::vector<double> matrix_elems;
    double coupling = 1e-3;

    static MonopoleSpec two_level(double gap, double matrix_elem = 1.0, double coupling = 1e-3) {
        return {{gap}, {matrix_elem}, coupling};
    }

    /// Photo-electric style spectrum: binding gap, then `count - 1` equally spaced levels above it.
    static MonopoleSpec photoelectric(double binding_gap, double spacing, std::size_t count,
                                      double matrix_elem = 1.0, double coupling = 1e-3) {
        MonopoleSpec spec;
        spec.coupling = coupling;
        for (std::size_t i = 0; i < count; ++i) {
            spec.gaps.push_back(binding_gap + spacing * static_cast<double>(i));
            spec.matrix_elems.push_back(matrix_elem);
        }
        return spec;
    }

    void validate() const {
        if (gaps.empty()) throw domain_error("monopole needs at least one level");
        if (gaps.size() != matrix_elems.size()) throw domain_error("monopole gaps and matrix elements differ in length");
        for (std::size_t i = 0; i < gaps.size(); ++i) {
            if (!(gaps[i] > 0.0)) throw domain_error("monopole gaps must be positive");
            if (i > 0 && !(gaps[i] > gaps[i - 1])) throw domain_error("monopole gaps must be ascending");
            if (!(matrix_elems[i] >= 0.0)) throw domain_error("monopole matrix elements must be non-negative");
        }
    }

    double max_gap() const { return gaps.empty() ? 0.0 : gaps.back(); }
};

struct WindowSpec {
    double tau0 = 0.0;
    double T = 1.0;
    double xi0 = 0.0;

    /// Window of length T centred on the arrival of the packet peak at xi0.
    static WindowSpec centered(double T, double xi0 = 0.0) { return {xi0 - 0.5 * T, T, xi0}; }
};

struct TimeGrid {
    double start = 0.0;
    double step = 1.0;
    std::size_t count = 2;

    double at(std::size_t i) const { return start + step * static_cast<double>(i); }
    double duration() const { return step * static_cast<double>(count - 1); }
};

/// Uniform grid over the window with at least `samples_per_period` samples per period of max_frequency.
inline TimeGrid window_grid(const WindowSpec& window, double max_frequency, double samples_per_period = 32.0) {
    if (!(window.T > 0.0)) throw domain_error("window duration T must be positive");
    const double target = 2.0 * std::numbers::pi / (max_frequency * samples_per_period);
    const auto intervals = static_cast<std::size_t>(std::ceil(window.T / target));
    const std::size_t n = std::max<std::size_t>(intervals, 1) + 1;
    return {window.tau0, window.T / static_cast<double>(n - 1), n};
}

struct TimeSeries {
    TimeGrid grid;
    std::vector<std::complex<double>> values;
};

inline constexpr double min_samples_per_period = 16.0;

/**
 * psi_D(xi0, tau) on a uniform time grid via the spectral sum
 * sum_k weight f_k w_{k,I}(xi0, tau). Nodes more than e^-80 below the
 * spectral peak in |f_k|^2 are skipped (below double resolution).
 */
inline TimeSeries mode_time_series(const OverlapSpectrum& spectrum, double xi0, const TimeGrid& grid) {
    const double period = 2.0 * std::numbers::pi / spectrum.mode.central_wavenumber;
    if (grid.step > period / min_samples_per_period)
        throw domain_error("time grid undersamples the optical period");

    double peak = numerics::neg_inf;
    for (double v : spectrum.log_abs2) peak = std::max(peak, v);
    std::vector<double> k;
    std::vector<double> amp;
    std::vector<double> spatial_phase;
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        if (spectrum.log_abs2[i] < peak - 80.0) continue;
        const double kk = spectrum.wavenumbers[i];
        k.push_back(kk);
        amp.push_back(spectrum.weights[i] * std::abs(spectrum.coefficients[i]) / std::sqrt(4.0 * std::numbers::pi * kk));
        const double sign = spectrum.region == Region::I ? 1.0 : -1.0;
        spatial_phase.push_back(sign * kk * xi0 + std::arg(spectrum.coefficients[i]));
    }

    TimeSeries out{grid, std::vector<std::complex<double>>(grid.count)};
    std::vector<std::complex<double>> phasor(k.size()), rotate(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) rotate[i] = std::polar(1.0, -k[i] * grid.step);
    constexpr std::size_t resync = 256;
    for (std::size_t j = 0; j < grid.count; ++j) {
        if (j % resync == 0) {
            const double t = grid.at(j);
            for (std::size_t i = 0; i < k.size(); ++i) phasor[i] = std::polar(amp[i], spatial_phase[i] - k[i] * t);
        }
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t i = 0; i < k.size(); ++i) {
            acc += phasor[i];
            phasor[i] *= rotate[i];
        }
        out.values[j] = acc;
    }
    return out;
}

/// The four ordered double integrals of e^{i gap (eta1 - eta2)} times
///   resonant:     psi*(eta2) psi(eta1)
///   anti:         psi(eta2)  psi*(eta1)
///   counter:      psi(eta2)  psi(eta1)
///   counter_conj: psi*(eta2) psi*(eta1)
/// with eta measured from the start of the series' window.
struct OrderedIntegrals {
    std::complex<double> resonant;
    std::complex<double> anti;
    std::complex<double> counter;
    std::complex<double> counter_conj;
};

inline OrderedIntegrals ordered_integrals(const TimeSeries& series, double gap) {
    const std::size_t n = series.grid.count;
    const double h = series.grid.step;
    OrderedIntegrals out{};
    std::complex<double> inner_conj{0.0, 0.0};  // running sum of t_i e^{-i gap eta_i} psi*_i
    std::complex<double> inner_plain{0.0, 0.0};  // running sum of t_i e^{-i gap eta_i} psi_i
    for (std::size_t j = 0; j < n; ++j) {
        const double t = (j == 0 || j + 1 == n) ? 0.5 * h : h;
        const auto p = std::polar(1.0, gap * h * static_cast<double>(j));
        const auto psi = series.values[j];
        const auto b_conj = std::conj(p) * std::conj(psi);
        const auto b_plain = std::conj(p) * psi;
        const auto G_conj = inner_conj + 0.5 * t * b_conj;
        const auto G_plain = inner_plain + 0.5 * t * b_plain;
        out.resonant += t * p * psi * G_conj;
        out.counter_conj += t * p * std::conj(psi) * G_conj;
        out.anti += t * p * std::conj(psi) * G_plain;
        out.counter += t * p * psi * G_plain;
        inner_conj += t * b_conj;
        inner_plain += t * b_plain;
    }
    return out;
}

/// Rotating-wave response  int int e^{i gap (eta1-eta2)} psi*(eta2) psi(eta1) + c.c.
inline double rwa_response(const TimeSeries& series, double gap) {
    if (!(gap > 0.0)) throw domain_error("gap must be positive");
    return 2.0 * ordered_integrals(series, gap).resonant.real();
}

/// |int int e^{i gap (eta1-eta2)} psi(eta2) psi(eta1)|, the double-frequency term.
inline double counter_rotating(const TimeSeries& series, double gap) {
    if (!(gap > 0.0)) throw domain_error("gap must be positive");
    return std::abs(ordered_integrals(series, gap).counter);
}

/// Fejer kernel integrand of the vacuum term at |k|, including 1/(4 pi |k|).
inline double vacuum_integrand(double gap, double T, double k) {
    const double omega = gap + std::abs(k);
    const double s = std::sin(0.5 * omega * T);
    return 4.0 * s * s / (omega * omega) / (4.0 * std::numbers::pi * std::abs(k));
}

/**
 * F_vac = int dk/(4 pi |k|) int_{-T}^{T} d eta (T - |eta|) e^{i (gap + |k|) eta}
 * over k_min <= |k| <= k_max, both propagation directions. The eta integral is
 * the Fejer kernel 2 (1 - cos(Omega T)) / Omega^2; k is done by GL16 panels
 * narrower than a quarter oscillation period and graded geometrically at k_min.
 */
inline double vacuum_term(double gap, double T, double k_min, double k_max) {
    if (!(k_min > 0.0)) throw domain_error("vacuum cutoff k_min must be positive");
    if (!(k_max > k_min)) throw domain_error("vacuum cutoff k_max must exceed k_min");
    if (!(T > 0.0)) throw domain_error("window duration T must be positive");
    std::vector<double> nodes, weights;
    double lo = k_min;
    const double cap = 0.5 * std::numbers::pi / T;
    while (lo < k_max) {
        const double hi = std::min(k_max, lo + std::min(0.5 * lo, cap));
        numerics::append_panel(lo, hi, nodes, weights);
        lo = hi;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * vacuum_integrand(gap, T, nodes[i]);
    return 2.0 * acc;
}

/// <d^dagger d> (log) and optionally <d^2> of the field state in the detector mode.
struct StateMoments {
    double log_mean = numerics::neg_inf;
    std::optional<std::complex<double>> pair_moment;

    static StateMoments fock(int n) {
        return {n == 0 ? numerics::neg_inf : std::log(static_cast<double>(n)), std::complex<double>{0.0, 0.0}};
    }
    static StateMoments coherent(std::complex<double> amplitude) {
        return {2.0 * std::log(std::abs(amplitude)), amplitude * amplitude};
    }
};

struct UdwOptions {
    double samples_per_period = 32.0;
    std::optional<double> vacuum_k_min;  ///< default: the spectrum's cutoff Lambda
    std::optional<double> vacuum_k_max;  ///< default: 4 N / sigma
    double warn_threshold = 1e-2;
    double hard_ceiling = 0.1;
};

struct ResponseBreakdown {
    double rwa_term = 0.0;      ///< sum_E |m_E|^2 rwa_response(gap_E)
    double counter_term = 0.0;  ///< sum_E |m_E|^2 (|anti| + 2|counter| + 2|counter_conj|)
    double vacuum_term = 0.0;   ///< sum_E |m_E|^2 F_vac(gap_E)
    double alpha = 0.0;         ///< mu^2 rwa_term
    double log_click_prob = numerics::neg_inf;  ///< log(alpha <d^dagger d>)
    double click_prob = 0.0;
    std::optional<double> click_prob_full;       ///< full second-order F incl. <d^2> and vacuum terms
    std::optional<double> factorisation_bound;   ///< mu^2 (max(n, |<d^2>|) counter_term + |vacuum_term|)
    double perturbativity = 0.0;
    bool perturbative_warning = false;
};

/**
 * Click probability of a monopole detector at xi0 over [tau0, tau0 + T].
 * alpha never reads the state; the state only multiplies it (and, when
 * <d^2> is given, the non-RWA pieces of the full response).
 */
inline ResponseBreakdown click_probability(const MonopoleSpec& spec, const WindowSpec& window,
                                           const OverlapSpectrum& spectrum, const StateMoments& state,
                                           const UdwOptions& options = {}) {
    spec.validate();
    const double omega_c = spectrum.mode.central_wavenumber;
    const auto grid = window_grid(window, spec.max_gap() + omega_c, options.samples_per_period);
    const auto series = mode_time_series(spectrum, window.xi0, grid);
    const double k_min = options.vacuum_k_min.value_or(spectrum.cutoff);
    const double k_max = options.vacuum_k_max.value_or(4.0 * omega_c);

    ResponseBreakdown out;
    const double n = std::exp(state.log_mean);
    const auto d2 = state.pair_moment.value_or(std::complex<double>{0.0, 0.0});
    double full = 0.0;
    for (std::size_t e = 0; e < spec.gaps.size(); ++e) {
        const double m2 = spec.matrix_elems[e];
        if (m2 == 0.0) continue;
        const auto I = ordered_integrals(series, spec.gaps[e]);
        const double rwa = 2.0 * I.resonant.real();
        const double anti = 2.0 * I.anti.real();
        const double vac = vacuum_term(spec.gaps[e], window.T, k_min, k_max);
        out.rwa_term += m2 * rwa;
        out.counter_term += m2 * (std::abs(anti) + 2.0 * std::abs(I.counter) + 2.0 * std::abs(I.counter_conj));
        out.vacuum_term += m2 * vac;
        full += m2 * (n * (rwa + anti) + 2.0 * (d2 * I.counter + std::conj(d2) * I.counter_conj).real() + vac);
    }
    const double mu2 = spec.coupling * spec.coupling;
    out.alpha = mu2 * out.rwa_term;
    out.log_click_prob = std::log(out.alpha) + state.log_mean;
    out.click_prob = std::exp(out.log_click_prob);
    out.perturbativity = std::max(out.alpha, out.click_prob);
    if (state.pair_moment) {
        out.click_prob_full = mu2 * full;
        out.factorisation_bound = mu2 * (std::max(n, std::abs(d2)) * out.counter_term + std::abs(out.vacuum_term));
        out.perturbativity = std::max(out.perturbativity, std::abs(*out.click_prob_full));
    }
    if (out.perturbativity > options.hard_ceiling)
        throw domain_error("second-order perturbation theory invalid: click probability exceeds 0.1");
    out.perturbative_warning = out.perturbativity > options.warn_threshold;
    return out;
}

}  // namespace accdet
