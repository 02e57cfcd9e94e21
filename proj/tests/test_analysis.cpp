#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "critnls/analysis.hpp"
#include "critnls/presets.hpp"

using namespace critnls;

TEST_CASE("fit_decay on synthetic series") {
    SUBCASE("exact power law") {
        std::vector<std::pair<double, double>> s;
        for (int i = 0; i < 40; ++i) {
            double t = 2.0 * std::pow(1.1, i);
            s.emplace_back(t, std::pow(t, -0.7));
        }
        FitResult f = fit_decay(s, 0.0);
        CHECK(f.exponent == doctest::Approx(0.7).epsilon(1e-10));
        CHECK(f.r_squared == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("constant series") {
        std::vector<std::pair<double, double>> s;
        for (int i = 0; i < 10; ++i) s.emplace_back(1.0 + i, 3.14);
        FitResult f = fit_decay(s, 0.0);
        CHECK(std::abs(f.exponent) < 1e-12);
    }
    SUBCASE("one decade of t^-1/2 with 1% multiplicative noise") {
        for (unsigned seed = 1; seed <= 100; ++seed) {
            std::mt19937_64 rng(seed);
            std::normal_distribution<double> noise(0.0, 0.01);
            std::vector<std::pair<double, double>> s;
            for (int i = 0; i < 32; ++i) {
                double t = 10.0 * std::pow(10.0, i / 31.0);
                s.emplace_back(t, std::pow(t, -0.5) * (1.0 + noise(rng)));
            }
            FitResult f = fit_decay(s, 0.0);
            CHECK(f.exponent == doctest::Approx(0.5).epsilon(0.1));
            CHECK(std::abs(f.exponent - 0.5) < 0.05);
        }
    }
    SUBCASE("rejections") {
        std::vector<std::pair<double, double>> s = {{1.0, 1.0}, {2.0, 0.5}, {3.0, 0.3}};
        CHECK_THROWS_AS(fit_decay(s, 0.0), std::invalid_argument);
        std::vector<std::pair<double, double>> neg = {
            {1.0, 1.0}, {2.0, -0.5}, {3.0, 0.3}, {4.0, 0.2}, {5.0, 0.1}};
        // the nonpositive point is excluded; 4 usable points remain
        CHECK_NOTHROW(fit_decay(neg, 0.0));
        std::vector<std::pair<double, double>> few = {
            {1.0, 1.0}, {2.0, 0.0}, {3.0, 0.0}, {4.0, 0.2}, {5.0, 0.1}};
        CHECK_THROWS_AS(fit_decay(few, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(fit_decay(s, 10.0), std::invalid_argument);
    }
}

TEST_CASE("error_series") {
    Grid g(1, 512, 192.0);
    FinalData fd = gaussian_final_data(g, 0.05, 1.0, 0.75);
    const double g1 = 1.0;

    SUBCASE("u identical to the profile gives zeros") {
        Trajectory traj;
        for (double t : {5.0, 8.0, 13.0}) traj.push(t, build_profile(fd, t, g1));
        for (const ErrorPoint& p : error_series(traj, fd, g1)) {
            CHECK(p.l2_error == 0.0);
            CHECK(p.xd_norm == 0.0);
        }
    }
    SUBCASE("zero data gives zeros") {
        FinalData zero(g, std::vector<cplx>(g.size(), cplx(0.0)), 0.75);
        Trajectory traj;
        for (double t : {5.0, 8.0}) traj.push(t, Field(g, Side::Space));
        for (const ErrorPoint& p : error_series(traj, zero, g1)) {
            CHECK(p.l2_error == 0.0);
            CHECK(p.xd_norm == 0.0);
        }
    }
    SUBCASE("invariance under a simultaneous global phase") {
        // rotating the final data and the trajectory by the same unit constant
        // leaves the series unchanged
        Trajectory traj;
        for (double t : {5.0, 9.0}) {
            Field f = build_profile(fd, t, g1);
            f *= cplx(0.8, 0.1);  // some trajectory that is not the profile
            traj.push(t, f);
        }
        auto base = error_series(traj, fd, g1);

        cplx phase = std::polar(1.0, 1.234);
        std::vector<cplx> rotated = fd.u_plus_hat().values;
        for (cplx& v : rotated) v *= phase;
        FinalData fd_rot(g, rotated, 0.75);
        Trajectory traj_rot = traj;
        for (Field& f : traj_rot.fields) f *= phase;
        auto rot = error_series(traj_rot, fd_rot, g1);

        for (std::size_t i = 0; i < base.size(); ++i) {
            CHECK(rot[i].l2_error == doctest::Approx(base[i].l2_error).epsilon(1e-9));
            CHECK(rot[i].xd_norm == doctest::Approx(base[i].xd_norm).epsilon(1e-9));
        }
    }
}

TEST_CASE("nonresonant duhamel term") {
    SUBCASE("gauge preset: identically zero") {
        Grid g(1, 512, 192.0);
        FinalData fd = gaussian_final_data(g, 0.1, 1.0, 0.75);
        TheoremParameters p = TheoremParameters::make(1, 0.75, 0.3, 0.5, 5.0, 20.0, 0.1);
        AngularFunction nl = angular_preset("gauge1", 1);
        auto series = nonresonant_duhamel(fd, nl, p, 16, 32);
        double scale = fd.u_plus_hat().norm_l2();
        for (const auto& [t, v] : series) CHECK(v <= 1e-13 * scale);
    }
    SUBCASE("modes >= 32 required") {
        Grid g(1, 512, 192.0);
        FinalData fd = gaussian_final_data(g, 0.1, 1.0, 0.75);
        TheoremParameters p = TheoremParameters::make(1, 0.75, 0.3, 0.5, 5.0, 20.0, 0.1);
        AngularFunction nl = angular_preset("gauge1", 1);
        CHECK_THROWS_AS(nonresonant_duhamel(fd, nl, p, 16, 16), std::invalid_argument);
    }
    SUBCASE("re-abs-re: doubling the truncation changes the series by <= 1%") {
        Grid g(2, 64, 96.0);
        FinalData fd = gaussian_final_data(g, 0.1, 0.5, 1.25);
        TheoremParameters p = TheoremParameters::make(2, 1.25, 0.52, 0.5, 2.0, 10.0, 0.1);
        AngularFunction nl = angular_preset("re-abs-re", 2);
        auto s32 = nonresonant_duhamel(fd, nl, p, 12, 32);
        auto s64 = nonresonant_duhamel(fd, nl, p, 12, 64);
        double sup = 0.0, dev = 0.0;
        for (std::size_t i = 0; i < s32.size(); ++i) {
            sup = std::max(sup, s64[i].second);
            dev = std::max(dev, std::abs(s64[i].second - s32[i].second));
        }
        CHECK(sup > 0.0);
        CHECK(dev <= 0.01 * sup);
    }
}
