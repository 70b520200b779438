#pragma once
// Klein-Gordon inner product on the tau = 0 slice by direct trapezoid
// quadrature of sampled Cauchy data. Deliberately shares no code with the
// closed-form overlap in detector_mode.hpp so it can serve as its oracle.

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "accdet/core_params.hpp"
#include "accdet/detector_mode.hpp"
#include "accdet/rindler_field.hpp"

namespace accdet {

/// Uniform spatial grid. Periodic grids omit the duplicated right endpoint.
struct SpatialGrid {
    double lo = -1.0;
    double hi = 1.0;
    std::size_t count = 2;
    bool periodic = false;

    double step() const {
        return (hi - lo) / static_cast<double>(periodic ? count : count - 1);
    }
    double at(std::size_t i) const { return lo + step() * static_cast<double>(i); }
};

/// Cauchy data (phi, d_tau phi) of a solution, sampled on a SpatialGrid.
struct SampledSolution {
    std::vector<std::complex<double>> value;
    std::vector<std::complex<double>> d_tau;
};

/// (f, g) = i integral dxi ( f* d_tau g - (d_tau f)* g ).
///
/// Non-periodic grids must be wide enough for the integrand to fall below
/// 1e-14 of its peak at both edges; otherwise the truncation is reported.
inline std::complex<double> kg_inner(const SampledSolution& f, const SampledSolution& g, const SpatialGrid& grid) {
    const std::size_t n = grid.count;
    if (f.value.size() != n || g.value.size() != n || f.d_tau.size() != n || g.d_tau.size() != n)
        throw domain_error("sampled solutions do not match the grid");
    if (n < 2) throw domain_error("kg_inner needs at least two grid points");
    const std::complex<double> I{0.0, 1.0};
    std::vector<std::complex<double>> integrand(n);
    double peak = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        integrand[i] = I * (std::conj(f.value[i]) * g.d_tau[i] - std::conj(f.d_tau[i]) * g.value[i]);
        peak = std::max(peak, std::abs(integrand[i]));
    }
    const double h = grid.step();
    std::complex<double> sum{0.0, 0.0};
    if (grid.periodic) {
        for (const auto& v : integrand) sum += v;
        return sum * h;
    }
    const double edge = std::max(std::abs(integrand.front()), std::abs(integrand.back()));
    if (edge > 1e-14 * peak) throw domain_error("grid does not cover the support of the solutions");
    sum = 0.5 * (integrand.front() + integrand.back());
    for (std::size_t i = 1; i + 1 < n; ++i) sum += integrand[i];
    return sum * h;
}

inline SampledSolution sample_detector_mode(const DetectorMode& mode, const SpatialGrid& grid) {
    SampledSolution out;
    out.value.resize(grid.count);
    out.d_tau.resize(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i) {
        const double xi = grid.at(i);
        out.value[i] = envelope(mode, xi);
        out.d_tau[i] = envelope_dtau(mode, xi);
    }
    return out;
}

/// Rindler mode Cauchy data; box_length selects box normalisation sqrt(2 pi / h).
inline SampledSolution sample_rindler_mode(double k, Region region, const SpatialGrid& grid,
                                           std::optional<double> box_length = std::nullopt) {
    const double scale = box_length ? std::sqrt(2.0 * std::numbers::pi / *box_length) : 1.0;
    SampledSolution out;
    out.value.resize(grid.count);
    out.d_tau.resize(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i) {
        const auto w = scale * rindler_mode_value(k, region, {region, grid.at(i), 0.0});
        out.value[i] = w;
        out.d_tau[i] = std::complex<double>{0.0, -std::abs(k)} * w;
    }
    return out;
}

}  // namespace accdet
