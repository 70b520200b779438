#include <gtest/gtest.h>

#include <cmath>

#include "accdet/detector_mode.hpp"
#include "accdet/kg_inner.hpp"
#include "accdet/single_detector.hpp"
#include "oracle_values.hpp"

using namespace accdet;

namespace {

OverlapSpectrum spectrum_for(double a, int N, std::optional<double> box = std::nullopt) {
    const PhysicalConfig c{a, N, 1.0, 1.0, box};
    return overlap_spectrum(build_mode(c), c);
}

SpatialGrid packet_grid(const DetectorMode& m, std::size_t count) {
    return {-8.0 * m.sigma, 8.0 * m.sigma, count, false};
}

}  // namespace

TEST(BuildMode, WidthFormula) {
    EXPECT_NEAR(detector_width(2.0), oracle::sigma_at_2, 1e-15);
    EXPECT_NEAR(detector_width(2.0), std::log(1.0 + std::sqrt(2.0)), 1e-15);
    EXPECT_NEAR(detector_width(1e-8), 1.0, 1e-15);
    EXPECT_EQ(detector_width(1e-320), 1.0);
    for (double a : {1e-3, 0.02, 0.5, 5.0}) EXPECT_LE(detector_width(a), 1.0);
}

TEST(BuildMode, CentralWavenumberAndNorm) {
    for (int N : {1, 100, 800, 1600}) {
        const auto m = build_mode({0.02, N});
        EXPECT_NEAR(m.central_wavenumber * m.sigma, N, 1e-12 * N);
        EXPECT_EQ(m.region, Region::I);
        EXPECT_EQ(m.center_xi, 0.0);
    }
    const auto m = build_mode({0.02, 800});
    EXPECT_NEAR(envelope(m, 0.0).real(), oracle::psi_origin_800, 1e-15);
    EXPECT_NEAR(envelope(m, 0.0).real(), 0.02233, 1e-5);
    EXPECT_THROW(build_mode({0.0, 800}), domain_error);
}

TEST(BuildMode, EnvelopeMatchesModeFunction) {
    const auto m = build_mode({0.05, 300});
    for (double xi = -2.0; xi <= 2.0; xi += 0.37) {
        const auto expect = m.norm_const * std::exp(std::complex<double>(-xi * xi / (m.sigma * m.sigma), 300 * xi / m.sigma));
        EXPECT_NEAR(std::abs(envelope(m, xi) - expect), 0.0, 1e-15);
        const auto dt = std::complex<double>(0.0, -m.central_wavenumber) * envelope(m, xi);
        EXPECT_NEAR(std::abs(envelope_dtau(m, xi) - dt), 0.0, 1e-12);
    }
}

TEST(KgInner, DetectorModeNormalised) {
    for (int N : {10, 100, 800}) {
        const auto m = build_mode({0.02, N});
        const auto g = packet_grid(m, 1u << 14);
        const auto s = sample_detector_mode(m, g);
        const auto v = kg_inner(s, s, g);
        EXPECT_NEAR(v.real(), 1.0, 1e-6) << "N=" << N;
        EXPECT_NEAR(v.imag(), 0.0, 1e-12);
    }
}

TEST(KgInner, BoxModesOrthonormal) {
    const double h = 10.0;
    const SpatialGrid g{-0.5 * h, 0.5 * h, 512, true};
    const double dk = 2 * std::numbers::pi / h;
    for (int n : {1, 3, 17}) {
        const auto wn = sample_rindler_mode(n * dk, Region::I, g, h);
        EXPECT_NEAR(std::abs(kg_inner(wn, wn, g) - 1.0), 0.0, 1e-12);
        for (int m : {2, 5, 40}) {
            const auto wm = sample_rindler_mode(m * dk, Region::I, g, h);
            EXPECT_LT(std::abs(kg_inner(wn, wm, g)), 1e-10);
        }
    }
}

TEST(KgInner, ConjugateSymmetry) {
    const auto m = build_mode({0.02, 50});
    const auto g = packet_grid(m, 4096);
    const auto psi = sample_detector_mode(m, g);
    const auto w = sample_rindler_mode(51.0, Region::I, g);
    const auto a = kg_inner(psi, w, g);
    const auto b = kg_inner(w, psi, g);
    EXPECT_NEAR(std::abs(a - std::conj(b)), 0.0, 1e-14);
}

TEST(KgInner, RejectsTruncatedSupport) {
    const auto m = build_mode({0.02, 50});
    const SpatialGrid g{-2.0 * m.sigma, 2.0 * m.sigma, 1024, false};
    const auto psi = sample_detector_mode(m, g);
    try {
        kg_inner(psi, psi, g);
        FAIL();
    } catch (const domain_error& e) {
        EXPECT_STREQ(e.what(), "grid does not cover the support of the solutions");
    }
    SampledSolution short_one{std::vector<std::complex<double>>(3), std::vector<std::complex<double>>(3)};
    EXPECT_THROW(kg_inner(short_one, psi, g), domain_error);
}

TEST(OverlapSpectrum, NormalisedOnConfigGrid) {
    for (int N : {100, 800, 1600})
        for (double a : {0.005, 0.02, 0.05, 0.2}) {
            const auto s = spectrum_for(a, N);
            EXPECT_NEAR(std::exp(log_norm(s)), 1.0, 1e-9) << N << ' ' << a;
            for (double k : s.wavenumbers) ASSERT_GT(k, s.cutoff);
            EXPECT_TRUE(std::is_sorted(s.wavenumbers.begin(), s.wavenumbers.end()));
        }
}

TEST(OverlapSpectrum, RawNormMatchesOracle) {
    EXPECT_NEAR(spectrum_for(0.02, 800).raw_log_norm, oracle::log_norm_raw_800_002, 1e-12);
}

TEST(OverlapSpectrum, ClosedFormMatchesKgOracle) {
    for (double a : {0.02, 0.2})
        for (int N : {100, 800}) {
            const auto m = build_mode({a, N});
            const auto g = packet_grid(m, 4096);
            const auto psi = sample_detector_mode(m, g);
            for (int j = 0; j < 20; ++j) {
                const double k = m.central_wavenumber + (-5.0 + 10.0 * j / 19.0) / m.sigma;
                const auto w = sample_rindler_mode(k, Region::I, g);
                const auto oracle_value = kg_inner(psi, w, g);
                const auto closed = raw_overlap(m, k);
                EXPECT_LE(std::abs(oracle_value - closed), 1e-6 * std::abs(closed)) << "a=" << a << " N=" << N << " k=" << k;
            }
        }
}

TEST(OverlapSpectrum, CoefficientsRealPositive) {
    const auto s = spectrum_for(0.05, 400);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto f = s.coefficients[i];
        EXPECT_TRUE(std::isfinite(s.log_abs2[i]));
        if (s.log_abs2[i] > -1400.0) { EXPECT_GT(f.real(), 0.0); }
        EXPECT_GE(f.real(), 0.0);
        EXPECT_LE(std::abs(f.imag()), 1e-12);
    }
}

TEST(OverlapSpectrum, PeakNearCentralWavenumber) {
    const auto s = spectrum_for(0.02, 800);
    const auto it = std::max_element(s.log_abs2.begin(), s.log_abs2.end());
    const double k_peak = s.wavenumbers[static_cast<std::size_t>(it - s.log_abs2.begin())];
    EXPECT_LE(std::abs(k_peak - s.mode.central_wavenumber), 2.0 / s.mode.sigma);
}

// |f_k|^2 <n_k> peaks below the mode, at N/sigma - 2 pi/(a sigma^2), not above it.
TEST(OverlapSpectrum, ThermalWeightedPeakBelowMode) {
    const double a = 0.05;
    const auto s = spectrum_for(a, 800);
    std::size_t best = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.log_abs2[i] + log_thermal_occupation(s.wavenumbers[i], a) > s.log_abs2[best] + log_thermal_occupation(s.wavenumbers[best], a))
            best = i;
    const double sg = s.mode.sigma;
    EXPECT_NEAR(s.wavenumbers[best], s.mode.central_wavenumber - 2.0 * std::numbers::pi / (a * sg * sg), 0.5 / sg);
}

TEST(OverlapSpectrum, NegativeFrequencyNormNegligible) {
    // |f_k|^2 ~ 1/|k| at k -> 0-, so the k < 0 norm is measured beyond the cutoff, k <= -Lambda.
    for (int N : {4, 10, 100}) {
        const auto m = build_mode({0.02, N});
        std::vector<double> nodes, weights;
        for (int i = 0; i < 400; ++i) numerics::append_panel(-1.0 - 0.1 * (i + 1), -1.0 - 0.1 * i, nodes, weights);
        double neg = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) neg += weights[i] * std::exp(log_raw_overlap_abs2(m, nodes[i]));
        const double pos = std::exp(spectrum_for(0.02, N).raw_log_norm);
        EXPECT_LT(neg / pos, 1e-3) << "N=" << N;
    }
}

TEST(OverlapSpectrum, CutoffErrors) {
    const PhysicalConfig c{0.02, 1, 100.0};
    EXPECT_THROW(overlap_spectrum(build_mode(c), c), domain_error);
    const PhysicalConfig d{0.02, 2, 8.0};
    try {
        overlap_spectrum(build_mode(d), d);
        FAIL();
    } catch (const domain_error& e) {
        EXPECT_STREQ(e.what(), "mode not representable above cutoff");
    }
}

TEST(OverlapSpectrum, BoxMeasureWeights) {
    const auto s = spectrum_for(0.02, 800, 50.0);
    const double dk = 2 * std::numbers::pi / 50.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_DOUBLE_EQ(s.weights[i], dk);
        EXPECT_NEAR(s.wavenumbers[i] / dk, std::round(s.wavenumbers[i] / dk), 1e-9);
    }
    EXPECT_NEAR(std::exp(log_norm(s)), 1.0, 1e-12);
}

TEST(OverlapSpectrum, BoxConvergesToContinuum) {
    const auto cont = spectrum_for(0.02, 800);
    const double cont_mean = mean_number(cont, thermal_spectrum(cont.wavenumbers, 0.02)).log_mean;
    for (double h : {oracle::box_threshold, 2 * oracle::box_threshold, 200.0, 1000.0}) {
        const auto box = spectrum_for(0.02, 800, h);
        const double box_mean = mean_number(box, thermal_spectrum(box.wavenumbers, 0.02)).log_mean;
        EXPECT_LE(std::abs(std::expm1(box_mean - cont_mean)), 1e-3) << "h=" << h;
        if (h >= 200.0) {
            EXPECT_LE(std::abs(std::expm1(box.raw_log_norm - cont.raw_log_norm)), 1e-3);
        }
    }
}

TEST(ModeValue, ReconstructsEnvelope) {
    const auto s = spectrum_for(0.02, 800);
    const auto& m = s.mode;
    double worst = 0.0;
    for (int i = -60; i <= 60; ++i) {
        const double xi = 3.0 * m.sigma * i / 60.0;
        worst = std::max(worst, std::abs(mode_value(s, xi, 0.0) - envelope(m, xi)));
    }
    EXPECT_LE(worst, 1e-3 * m.norm_const);
    EXPECT_NEAR(std::abs(mode_value(s, 0.0, 0.0)), m.norm_const, 1e-2 * m.norm_const);
}

TEST(ModeValue, PacketMovesRight) {
    const auto s = spectrum_for(0.02, 200);
    for (double tau : {0.5, 1.5}) {
        for (double xi : {-0.6, 0.0, 0.4}) {
            EXPECT_NEAR(std::abs(mode_value(s, xi + tau, tau)), std::abs(mode_value(s, xi, 0.0)), 1e-9);
        }
    }
}

TEST(ModeValue, ReconstructionHasUnitKgNorm) {
    const auto s = spectrum_for(0.05, 100);
    const auto g = packet_grid(s.mode, 2048);
    SampledSolution r{std::vector<std::complex<double>>(g.count), std::vector<std::complex<double>>(g.count)};
    for (std::size_t j = 0; j < g.count; ++j) {
        const RindlerPoint p{Region::I, g.at(j), 0.0};
        for (std::size_t i = 0; i < s.size(); ++i) {
            const auto w = s.weights[i] * s.coefficients[i] * rindler_mode_value(s.wavenumbers[i], Region::I, p);
            r.value[j] += w;
            r.d_tau[j] += std::complex<double>(0.0, -s.wavenumbers[i]) * w;
        }
    }
    EXPECT_NEAR(kg_inner(r, r, g).real(), 1.0, 1e-6);
}

TEST(MirrorMode, CoefficientsAndRegion) {
    const auto s = spectrum_for(0.02, 800);
    const auto m = mirror_mode(s);
    EXPECT_EQ(m.region, Region::II);
    EXPECT_EQ(m.mode.region, Region::II);
    EXPECT_EQ(m.coefficients, s.coefficients);
    EXPECT_EQ(m.wavenumbers, s.wavenumbers);
    const auto mm = mirror_mode(m);
    EXPECT_EQ(mm.region, Region::I);
    EXPECT_EQ(mm.coefficients, s.coefficients);
    EXPECT_EQ(mm.log_abs2, s.log_abs2);
}

TEST(MirrorMode, RegionTwoEnvelopeIsMirrorImage) {
    auto m = build_mode({0.02, 40});
    auto m2 = m;
    m2.region = Region::II;
    for (double xi : {-0.3, 0.1, 0.7}) EXPECT_NEAR(std::abs(envelope(m2, -xi) - envelope(m, xi)), 0.0, 1e-15);
}
