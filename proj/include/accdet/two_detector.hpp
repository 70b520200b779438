#pragma once
/**
 * @brief Correlations between two counter-accelerating detectors (region I at
 * +a, region II at -a) measuring the Minkowski vacuum.
 *
 * The Duan witness and the entanglement estimator both hinge on the
 * difference  Re<d_I d_II> - <d_I^dagger d_I>,  a difference of two numbers
 * of order exp(-1e5). For mirrored modes it is evaluated node by node as
 *   sqrt(n (1 + n)) - n = sqrt(n) / (sqrt(1 + n) + sqrt(n)),
 * which has no cancellation, and then reduced by log-sum-exp.
 */

#include <cmath>
#include <limits>
#include <vector>

#include "accdet/core_params.hpp"
#include "accdet/detector_mode.hpp"
#include "accdet/numerics.hpp"
#include "accdet/rindler_field.hpp"
#include "accdet/single_detector.hpp"

namespace accdet {

struct LogSigned {
    double log_abs = numerics::neg_inf;
    int sign = 0;
};

struct TwoDetectorMoments {
    double log_n_I = numerics::neg_inf;
    double log_n_II = numerics::neg_inf;
    LogSigned cross;                        ///< Re<d_I d_II>
    LogSigned deviation;                    ///< Re<d_I d_II> - (n_I + n_II)/2
    double log_estimator_arg = numerics::neg_inf;  ///< log|n_I - Re<d_I d_II>|
    double duan_lhs = 1.0;
    double log_duan_deviation = numerics::neg_inf;  ///< log(1 - duan_lhs)
    bool entangled = false;
};

/// a - b for signed log-magnitudes.
inline LogSigned signed_sub(const LogSigned& a, const LogSigned& b) {
    const int sa = a.log_abs == numerics::neg_inf ? 0 : a.sign;
    const int sb = b.log_abs == numerics::neg_inf ? 0 : b.sign;
    if (sb == 0) return {a.log_abs, sa};
    if (sa == 0) return {b.log_abs, -sb};
    if (sa != sb) return {numerics::log_add(a.log_abs, b.log_abs), sa};
    if (a.log_abs == b.log_abs) return {numerics::neg_inf, 0};
    if (a.log_abs > b.log_abs) return {numerics::log_sub(a.log_abs, b.log_abs), sa};
    return {numerics::log_sub(b.log_abs, a.log_abs), -sa};
}

namespace detail {

inline bool same_coefficients(const OverlapSpectrum& a, const OverlapSpectrum& b) {
    return a.wavenumbers == b.wavenumbers && a.weights == b.weights && a.coefficients == b.coefficients
           && a.log_abs2 == b.log_abs2;
}

inline void require_pair(const OverlapSpectrum& overlap_I, const OverlapSpectrum& overlap_II,
                         const ThermalSpectrum& thermal) {
    if (overlap_I.region != Region::I || overlap_II.region != Region::II)
        throw domain_error("cross moment pairs a region-I mode with a region-II mode");
    if (overlap_I.wavenumbers != overlap_II.wavenumbers || overlap_I.weights != overlap_II.weights)
        throw domain_error("overlap spectra do not share a wavenumber grid");
    require_shared_grid(overlap_I, thermal);
}

}  // namespace detail

/// Re<d_I d_II> = Re sum_k weight sqrt(<n_k>(1 + <n_k>)) (psi_I, w_{k,I}) (psi_II, w_{k,II}).
inline LogSigned cross_moment(const OverlapSpectrum& overlap_I, const OverlapSpectrum& overlap_II,
                              const ThermalSpectrum& thermal) {
    detail::require_pair(overlap_I, overlap_II, thermal);
    const std::size_t n = overlap_I.size();
    std::vector<double> log_mag(n), phase(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double ln = thermal.log_occupation[i];
        log_mag[i] = std::log(overlap_I.weights[i]) + 0.5 * (ln + std::log1p(std::exp(ln)))
                     + 0.5 * (overlap_I.log_abs2[i] + overlap_II.log_abs2[i]);
        phase[i] = std::arg(overlap_I.coefficients[i]) + std::arg(overlap_II.coefficients[i]);
    }
    const auto sum = numerics::log_sum_complex(log_mag, phase);
    return {sum.log_abs_real, sum.real_sign};
}

/// (1 + n_I + n_II - 2 Re<d_I d_II>)^2 written as (1 - 2 deviation)^2.
inline double duan_lhs_from_deviation(double deviation) {
    const double d = 1.0 - 2.0 * deviation;
    return d * d;
}

inline double duan_lhs(double n_I, double n_II, double re_cross) {
    const double d = 1.0 + n_I + n_II - 2.0 * re_cross;
    return d * d;
}

namespace detail {

inline void finish_duan(TwoDetectorMoments& m) {
    if (m.deviation.sign > 0) {
        const double dev = std::exp(m.deviation.log_abs);
        m.duan_lhs = duan_lhs_from_deviation(dev);
        // 1 - (1 - 2d)^2 = 4 d (1 - d)
        m.log_duan_deviation = dev < 1.0 ? std::log(4.0) + m.deviation.log_abs + std::log1p(-dev)
                                         : std::numeric_limits<double>::quiet_NaN();
        m.entangled = dev < 1.0;
    } else {
        const double dev = m.deviation.sign == 0 ? 0.0 : -std::exp(m.deviation.log_abs);
        m.duan_lhs = duan_lhs_from_deviation(dev);
        m.log_duan_deviation = m.deviation.sign == 0 ? numerics::neg_inf : std::numeric_limits<double>::quiet_NaN();
        m.entangled = false;
    }
}

}  // namespace detail

inline TwoDetectorMoments two_detector_moments(const OverlapSpectrum& overlap_I, const OverlapSpectrum& overlap_II,
                                               const ThermalSpectrum& thermal) {
    detail::require_pair(overlap_I, overlap_II, thermal);
    TwoDetectorMoments m;
    m.log_n_I = mean_number(overlap_I, thermal).log_mean;
    m.log_n_II = mean_number(overlap_II, thermal).log_mean;
    m.cross = cross_moment(overlap_I, overlap_II, thermal);

    if (detail::same_coefficients(overlap_I, overlap_II)) {
        // Mirrored pair: compensated node-wise form, deviation > 0 always.
        std::vector<double> terms(overlap_I.size());
        for (std::size_t i = 0; i < overlap_I.size(); ++i) {
            const double ln = thermal.log_occupation[i];
            const double node = 0.5 * ln - std::log(std::sqrt(1.0 + std::exp(ln)) + std::exp(0.5 * ln));
            terms[i] = std::log(overlap_I.weights[i]) + overlap_I.log_abs2[i] + node;
        }
        const double log_dev = numerics::log_sum_exp(terms);
        m.deviation = {log_dev, log_dev == numerics::neg_inf ? 0 : 1};
        m.log_estimator_arg = log_dev;
    } else {
        // General pair: signed log-domain subtraction, subject to cancellation.
        const LogSigned half_sum{numerics::log_add(m.log_n_I, m.log_n_II) - std::log(2.0), 1};
        m.deviation = signed_sub(m.cross, half_sum);
        m.log_estimator_arg = signed_sub({m.log_n_I, 1}, m.cross).log_abs;
    }
    detail::finish_duan(m);
    return m;
}

/// <n_I n_II> = <n_I><n_II> + |<d_I d_II>|^2 as its two log addends and their log-sum.
struct NumberProduct {
    double log_uncorrelated = numerics::neg_inf;
    double log_correlated = numerics::neg_inf;
    double log_total = numerics::neg_inf;
};

inline NumberProduct number_product(const TwoDetectorMoments& m) {
    NumberProduct p;
    p.log_uncorrelated = m.log_n_I + m.log_n_II;
    p.log_correlated = 2.0 * m.cross.log_abs;
    p.log_total = numerics::log_add(p.log_uncorrelated, p.log_correlated);
    return p;
}

/// Expanded left-hand side of the Duan inequality; the state is entangled iff < 1.
inline double duan_witness(const TwoDetectorMoments& m) { return m.duan_lhs; }

/// E = log|<d_I^dagger d_I> - Re<d_I d_II>| + C.
inline double entanglement_estimator(const TwoDetectorMoments& m, double offset = 0.0) {
    return m.log_estimator_arg + offset;
}

/// Large-N approximation  -(pi c^2/(a l)) (N - pi c^2/(2 a l)) + C.
inline double asymptotic_estimator(double accel_group, int mode_index, double length = 1.0, double offset = 0.0) {
    const double half_beta = std::numbers::pi / (accel_group * length);
    return -half_beta * (mode_index - 0.5 * half_beta) + offset;
}

}  // namespace accdet
