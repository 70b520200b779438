#pragma once
// Log-domain reductions and Gauss-Legendre panel rules used across accdet.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

namespace accdet::numerics {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

/// log(exp(a) + exp(b)); -inf is the additive identity.
inline double log_add(double a, double b) {
    if (a == neg_inf) return b;
    if (b == neg_inf) return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

/// log(exp(a) - exp(b)) for a >= b. Returns -inf when a == b.
inline double log_sub(double a, double b) {
    if (b == neg_inf) return a;
    if (b >= a) return neg_inf;
    return a + std::log(-std::expm1(b - a));
}

/// Two-pass log-sum-exp in index order, so the result is reproducible.
inline double log_sum_exp(std::span<const double> terms) {
    double hi = neg_inf;
    for (double t : terms) hi = std::max(hi, t);
    if (hi == neg_inf) return neg_inf;
    if (hi == std::numeric_limits<double>::infinity()) return hi;
    double acc = 0.0;
    for (double t : terms) acc += std::exp(t - hi);
    return hi + std::log(acc);
}

/// Sum of log|z_i| + i arg z_i terms, returned as (log|Re S|, sign Re S, log|S|).
struct LogComplexSum {
    double log_abs_real = neg_inf;
    int real_sign = 0;
    double log_abs = neg_inf;
};

inline LogComplexSum log_sum_complex(std::span<const double> log_mag, std::span<const double> phase) {
    double hi = neg_inf;
    for (double t : log_mag) hi = std::max(hi, t);
    LogComplexSum out;
    if (hi == neg_inf) return out;
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < log_mag.size(); ++i)
        acc += std::polar(std::exp(log_mag[i] - hi), phase[i]);
    out.log_abs = hi + std::log(std::abs(acc));
    if (acc.real() != 0.0) {
        out.log_abs_real = hi + std::log(std::abs(acc.real()));
        out.real_sign = acc.real() > 0.0 ? 1 : -1;
    }
    return out;
}

/// 16-point Gauss-Legendre rule on [-1, 1], nodes ascending.
struct GaussLegendre16 {
    std::array<double, 16> nodes{};
    std::array<double, 16> weights{};

    GaussLegendre16() {
        using rule = boost::math::quadrature::gauss<double, 16>;
        const auto& x = rule::abscissa();
        const auto& w = rule::weights();
        // boost stores the 8 non-negative abscissae (no zero node for even order)
        for (std::size_t i = 0; i < 8; ++i) {
            nodes[7 - i] = -x[i];
            weights[7 - i] = w[i];
            nodes[8 + i] = x[i];
            weights[8 + i] = w[i];
        }
    }

    static const GaussLegendre16& get() {
        static const GaussLegendre16 rule;
        return rule;
    }
};

/// Appends the GL16 nodes/weights of [lo, hi] to the output vectors.
inline void append_panel(double lo, double hi, std::vector<double>& nodes, std::vector<double>& weights) {
    const auto& rule = GaussLegendre16::get();
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    for (std::size_t i = 0; i < 16; ++i) {
        nodes.push_back(mid + half * rule.nodes[i]);
        weights.push_back(half * rule.weights[i]);
    }
}

/// n points spaced linearly or logarithmically between lo and hi inclusive.
inline std::vector<double> spaced(double lo, double hi, std::size_t n, bool logarithmic) {
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        out[i] = logarithmic ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)))
                             : lo + t * (hi - lo);
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

}  // namespace accdet::numerics
