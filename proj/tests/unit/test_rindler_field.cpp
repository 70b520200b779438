#include <gtest/gtest.h>

#include <cmath>

#include "accdet/rindler_field.hpp"

using namespace accdet;

namespace {
const double inv_sqrt_4pi = 1.0 / std::sqrt(4.0 * std::numbers::pi);
}

TEST(RindlerToMinkowski, Examples) {
    auto p = rindler_to_minkowski({Region::I, 0.0, 0.0}, 1.0);
    EXPECT_DOUBLE_EQ(p.ct, 0.0);
    EXPECT_DOUBLE_EQ(p.x, 1.0);
    p = rindler_to_minkowski({Region::II, 0.0, 0.0}, 1.0);
    EXPECT_DOUBLE_EQ(p.ct, 0.0);
    EXPECT_DOUBLE_EQ(p.x, -1.0);
    p = rindler_to_minkowski({Region::I, 0.0, 1.0}, 1.0);
    EXPECT_NEAR(p.ct, std::sinh(1.0), 1e-15);
    EXPECT_NEAR(p.x, std::cosh(1.0), 1e-15);
    EXPECT_NEAR(p.ct, 1.1752, 1e-4);
    EXPECT_NEAR(p.x, 1.5431, 1e-4);
}

TEST(RindlerToMinkowski, ImageLiesInWedge) {
    for (double xi = -3; xi <= 3; xi += 0.5)
        for (double tau = -3; tau <= 3; tau += 0.5) {
            EXPECT_GT(rindler_to_minkowski({Region::I, xi, tau}, 0.7).x,
                      std::abs(rindler_to_minkowski({Region::I, xi, tau}, 0.7).ct));
            const auto q = rindler_to_minkowski({Region::II, xi, tau}, 0.7);
            EXPECT_LT(q.x, -std::abs(q.ct));
        }
}

TEST(MinkowskiToRindler, Examples) {
    auto r = minkowski_to_rindler(0.0, 1.0, 1.0);
    EXPECT_EQ(r.region, Region::I);
    EXPECT_DOUBLE_EQ(r.xi, 0.0);
    EXPECT_DOUBLE_EQ(r.tau, 0.0);
    r = minkowski_to_rindler(0.0, -1.0, 1.0);
    EXPECT_EQ(r.region, Region::II);
    EXPECT_DOUBLE_EQ(r.xi, 0.0);
    EXPECT_DOUBLE_EQ(r.tau, 0.0);
    try {
        minkowski_to_rindler(1.0, 0.5, 1.0);
        FAIL() << "expected an error";
    } catch (const domain_error& e) {
        EXPECT_NE(std::string(e.what()).find("outside Rindler wedges"), std::string::npos);
    }
    EXPECT_THROW(minkowski_to_rindler(1.0, 1.0, 1.0), domain_error);
    EXPECT_THROW(minkowski_to_rindler(0.0, 1.0, 0.0), domain_error);
}

TEST(MinkowskiToRindler, RoundTrip) {
    for (Region region : {Region::I, Region::II})
        for (double accel : {0.02, 0.5, 1.0})
            for (double xi = -3; xi <= 3.0001; xi += 0.25)
                for (double tau = -3; tau <= 3.0001; tau += 0.25) {
                    const auto m = rindler_to_minkowski({region, xi, tau}, accel);
                    const auto back = minkowski_to_rindler(m.ct, m.x, accel);
                    ASSERT_EQ(back.region, region);
                    EXPECT_NEAR(back.xi, xi, 1e-12 * std::max(1.0, std::abs(xi)));
                    EXPECT_NEAR(back.tau, tau, 1e-12 * std::max(1.0, std::abs(tau)));
                }
}

TEST(RindlerMode, Examples) {
    auto w = rindler_mode_value(1.0, Region::I, {Region::I, 0.0, 0.0});
    EXPECT_NEAR(w.real(), inv_sqrt_4pi, 1e-15);
    EXPECT_NEAR(w.real(), 0.28209, 1e-5);
    EXPECT_NEAR(w.imag(), 0.0, 1e-15);
    w = rindler_mode_value(-1.0, Region::I, {Region::I, 0.0, 0.0});
    EXPECT_NEAR(w.real(), inv_sqrt_4pi, 1e-15);
    w = rindler_mode_value(1.0, Region::I, {Region::I, std::numbers::pi, 0.0});
    EXPECT_NEAR(w.real(), -inv_sqrt_4pi, 1e-15);
    EXPECT_NEAR(w.imag(), 0.0, 1e-15);
    EXPECT_THROW(rindler_mode_value(0.0, Region::I, {}), domain_error);
}

TEST(RindlerMode, ModulusAndWedgeSupport) {
    for (double k : {-3.0, -0.5, 0.25, 7.0})
        for (Region r : {Region::I, Region::II}) {
            EXPECT_NEAR(std::abs(rindler_mode_value(k, r, {r, 0.3, -1.2})), 1.0 / std::sqrt(4 * std::numbers::pi * std::abs(k)), 1e-15);
            EXPECT_EQ(rindler_mode_value(k, r, {opposite(r), 0.3, -1.2}), std::complex<double>(0.0, 0.0));
        }
    // region II: e^{i(-k xi' - |k| tau')}
    const auto w = rindler_mode_value(2.0, Region::II, {Region::II, 0.25, 0.0});
    EXPECT_NEAR(std::arg(w), -0.5, 1e-15);
}

TEST(RindlerMode, RightMovingForPositiveK) {
    for (double k : {0.5, 3.0, 40.0})
        for (double d : {0.01, 0.3, 1.1}) {
            const auto a = rindler_mode_value(k, Region::I, {Region::I, 0.2, 0.1});
            const auto b = rindler_mode_value(k, Region::I, {Region::I, 0.2 + d, 0.1 + d});
            EXPECT_NEAR(std::abs(std::arg(b / a)), 0.0, 1e-12);
        }
}

TEST(ThermalSpectrum, IdentitiesAtEveryNode) {
    std::vector<double> grid;
    for (double k = 0.001; k < 0.2; k *= 1.3) grid.push_back(k);
    const double a = 0.05;
    const auto t = thermal_spectrum(grid, a);
    ASSERT_EQ(t.wavenumbers, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = std::exp(-std::numbers::pi * grid[i] / a);
        const double n = std::exp(t.log_occupation[i]);
        EXPECT_NEAR(n, x * x / (1 - x * x), 1e-12 * n);
        EXPECT_NEAR(n, 1.0 / std::expm1(2 * std::numbers::pi * grid[i] / a), 1e-12 * n);
        EXPECT_NEAR(std::pow(std::sinh(t.squeeze[i]), 2), n, 1e-10 * n);
    }
}

TEST(ThermalSpectrum, OccupationOneAtLn2) {
    const double a = 0.37;
    const double k = a * std::log(2.0) / (2 * std::numbers::pi);
    const std::vector<double> grid{k};
    EXPECT_NEAR(std::exp(thermal_spectrum(grid, a).log_occupation[0]), 1.0, 1e-14);
}

TEST(ThermalSpectrum, VanishingAcceleration) {
    const std::vector<double> grid{1.0};
    double prev_n = 0.0, prev_r = 1.0;
    for (double a : {1.0, 0.1, 0.01, 1e-3}) {
        const auto t = thermal_spectrum(grid, a);
        EXPECT_LT(t.squeeze[0], prev_r);
        prev_r = t.squeeze[0];
        if (a < 1.0) {
            EXPECT_LT(t.log_occupation[0], prev_n);
        }
        prev_n = t.log_occupation[0];
    }
    const auto t = thermal_spectrum(grid, 1e-320);
    EXPECT_EQ(t.squeeze[0], 0.0);
    EXPECT_EQ(t.log_occupation[0], -std::numeric_limits<double>::infinity());
}

TEST(ThermalSpectrum, StaysFiniteDeepInTail) {
    const std::vector<double> grid{1e4};
    const auto t = thermal_spectrum(grid, 1.0);
    EXPECT_TRUE(std::isfinite(t.log_occupation[0]));
    EXPECT_NEAR(t.log_occupation[0], -2 * std::numbers::pi * 1e4, 1e-9);
}

TEST(ThermalSpectrum, StrictlyDecreasing) {
    std::vector<double> grid;
    for (int i = 1; i <= 400; ++i) grid.push_back(0.01 * i);
    const auto t = thermal_spectrum(grid, 0.3);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        EXPECT_LT(t.log_occupation[i], t.log_occupation[i - 1]);
        EXPECT_LT(t.squeeze[i], t.squeeze[i - 1]);
    }
}

TEST(ThermalSpectrum, AsymptoticTail) {
    const double a = 0.5;
    for (double x = 20; x < 200; x += 7) {
        const double k = x * a / (2 * std::numbers::pi);
        const std::vector<double> grid{k};
        const double ln = thermal_spectrum(grid, a).log_occupation[0];
        EXPECT_LE(std::abs(ln + x), std::exp(-x) * x + 1e-15 * x);
    }
}

TEST(ThermalSpectrum, RejectsBadInput) {
    const std::vector<double> bad{1.0, 0.0};
    EXPECT_THROW(thermal_spectrum(bad, 1.0), domain_error);
    const std::vector<double> ok{1.0};
    EXPECT_THROW(thermal_spectrum(ok, 0.0), domain_error);
}
