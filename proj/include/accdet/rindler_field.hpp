#pragma once
// Rindler wedges, Rindler plane-wave modes and the thermal squeezing spectrum
// that the Minkowski vacuum presents to a uniformly accelerated observer.

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "accdet/core_params.hpp"

namespace accdet {

enum class Region { I, II };

inline Region opposite(Region r) { return r == Region::I ? Region::II : Region::I; }

/// Conformal Rindler coordinates. In region II these are the primed (xi', tau').
struct RindlerPoint {
    Region region = Region::I;
    double xi = 0.0;
    double tau = 0.0;
};

struct MinkowskiPoint {
    double ct = 0.0;
    double x = 0.0;
};

inline MinkowskiPoint rindler_to_minkowski(const RindlerPoint& p, double accel) {
    if (!(accel > 0.0)) throw domain_error("accel must be positive");
    const double radius = std::exp(accel * p.xi) / accel;
    const double ct = radius * std::sinh(accel * p.tau);
    const double x = radius * std::cosh(accel * p.tau);
    return {ct, p.region == Region::I ? x : -x};
}

inline RindlerPoint minkowski_to_rindler(double ct, double x, double accel) {
    if (!(accel > 0.0)) throw domain_error("accel must be positive");
    if (!(std::abs(x) > std::abs(ct))) throw domain_error("point lies outside Rindler wedges");
    const Region region = x > 0.0 ? Region::I : Region::II;
    const double ax = std::abs(x);
    const double radius = std::sqrt((ax - ct) * (ax + ct));
    return {region, std::log(accel * radius) / accel, std::atanh(ct / ax) / accel};
}

/// Continuum-normalised Rindler mode w_{k,region}; zero outside its own wedge.
inline std::complex<double> rindler_mode_value(double k, Region region, const RindlerPoint& p) {
    if (k == 0.0) throw domain_error("Rindler mode wavenumber must be nonzero");
    if (p.region != region) return {0.0, 0.0};
    const double ak = std::abs(k);
    const double spatial = region == Region::I ? k * p.xi : -k * p.xi;
    return std::polar(1.0 / std::sqrt(4.0 * std::numbers::pi * ak), spatial - ak * p.tau);
}

/// Per-node squeezing r_k and log<n_k> for the Minkowski vacuum.
struct ThermalSpectrum {
    std::vector<double> wavenumbers;
    std::vector<double> squeeze;
    std::vector<double> log_occupation;
    double accel_group = 0.0;
};

/// log<n_k> = log(1 / (exp(2 pi k / a) - 1)), finite long after <n_k> underflows.
inline double log_thermal_occupation(double k, double accel_group) {
    const double x = 2.0 * std::numbers::pi * k / accel_group;
    return -x - std::log(-std::expm1(-x));
}

inline ThermalSpectrum thermal_spectrum(std::span<const double> grid, double accel_group) {
    if (!(accel_group > 0.0)) throw domain_error("accel_group must be positive");
    ThermalSpectrum out;
    out.accel_group = accel_group;
    out.wavenumbers.assign(grid.begin(), grid.end());
    out.squeeze.reserve(grid.size());
    out.log_occupation.reserve(grid.size());
    for (double k : grid) {
        if (!(k > 0.0)) throw domain_error("thermal grid nodes must be positive");
        out.squeeze.push_back(std::atanh(std::exp(-std::numbers::pi * k / accel_group)));
        out.log_occupation.push_back(log_thermal_occupation(k, accel_group));
    }
    return out;
}

}  // namespace accdet
