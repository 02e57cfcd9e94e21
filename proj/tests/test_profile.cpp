#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "critnls/fft.hpp"
#include "critnls/presets.hpp"
#include "critnls/profile.hpp"

using namespace critnls;

namespace {

// Exact free evolution from the frequency side: for
// u_plus_hat(xi) = eps e^{-xi^2/(2 sigma^2)} per axis,
// (U(t) u_plus)(x) = eps prod_i e^{-x_i^2/(2a)} / sqrt(a sigma^2),
// a = 1/sigma^2 + 2it.
cplx free_gaussian(double eps, double sigma, double t, const double* x, int d) {
    cplx a(1.0 / (sigma * sigma), 2.0 * t);
    cplx val(eps, 0.0);
    for (int i = 0; i < d; ++i)
        val *= std::exp(-x[i] * x[i] / (2.0 * a)) / std::sqrt(a * sigma * sigma);
    return val;
}

Field random_field(const Grid& g, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Field f(g, Side::Space);
    for (cplx& v : f.values) v = cplx(gauss(rng), gauss(rng));
    return f;
}

}  // namespace

TEST_CASE("final data validation and norms") {
    Grid g(1, 256, 64.0);
    CHECK_THROWS_AS(gaussian_final_data(g, 0.1, 1.0, 0.4), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_final_data(g, 0.1, 1.0, 1.1), std::invalid_argument);
    FinalData fd = gaussian_final_data(g, 0.1, 1.0, 0.75);
    CHECK(fd.sup_norm() == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(fd.h0d_norm() > 0.0);
    CHECK(fd.hneg_delta_norm() > 0.0);
    CHECK(fd.support_radius() > 3.0);
    CHECK(fd.support_radius() < 8.0);
}

TEST_CASE("hat_w basics") {
    Grid g(1, 256, 64.0);
    FinalData fd = gaussian_final_data(g, 0.1, 1.0, 0.75);

    SUBCASE("g1 = 0 and t = 1 are the identity") {
        Field w0 = hat_w(fd, 5.0, 0.0);
        Field w1 = hat_w(fd, 1.0, 1.0);
        for (std::size_t i = 0; i < w0.values.size(); ++i) {
            CHECK(w0.values[i] == fd.u_plus_hat().values[i]);
            CHECK(w1.values[i] == fd.u_plus_hat().values[i]);
        }
    }
    SUBCASE("unit-modulus multiplier preserves the norm") {
        for (double t : {2.0, 17.0, 150.0}) {
            Field w = hat_w(fd, t, 1.0);
            CHECK(w.norm_l2() == doctest::Approx(fd.u_plus_hat().norm_l2()).epsilon(1e-14));
        }
    }
    SUBCASE("t < 1 rejected") {
        CHECK_THROWS_AS(hat_w(fd, 0.5, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(build_profile(fd, 0.99, 1.0), std::invalid_argument);
    }
}

TEST_CASE("free_propagate basics") {
    Grid g(1, 256, 80.0);
    Field f = random_field(g, 3);

    SUBCASE("t = 0 is the identity") {
        Field f0 = free_propagate(f, 0.0);
        CHECK(distance_l2(f0, f) / f.norm_l2() < 1e-14);
    }
    SUBCASE("unitary") {
        Field ft = free_propagate(f, 2.7);
        CHECK(ft.norm_l2() == doctest::Approx(f.norm_l2()).epsilon(1e-13));
    }
    SUBCASE("U(t) U(-t) = identity to 1e-13") {
        Field back = free_propagate(free_propagate(f, 1.3), -1.3);
        CHECK(distance_l2(back, f) / f.norm_l2() < 1e-13);
    }
    SUBCASE("group property U(s) U(t) = U(s+t)") {
        Field a = free_propagate(free_propagate(f, 0.7), -2.2);
        Field b = free_propagate(f, -1.5);
        CHECK(distance_l2(a, b) / f.norm_l2() < 1e-12);
    }
}

TEST_CASE("free_propagate matches the closed-form gaussian evolution") {
    // box large enough that boundary mass < 1e-10 for t <= 5, grid fine
    // enough that the datum's spectrum fits well inside the band
    for (int d : {1, 2}) {
        Grid g(d, d == 1 ? 1024 : 512, d == 1 ? 192.0 : 160.0);
        Field f(g, Side::Space);
        const int n = g.points_per_dim;
        if (d == 1) {
            for (int j = 0; j < n; ++j) f.values[j] = std::exp(-0.5 * g.coord(j) * g.coord(j));
        } else {
            for (int j1 = 0; j1 < n; ++j1)
                for (int j2 = 0; j2 < n; ++j2)
                    f.values[static_cast<std::size_t>(j1) * n + j2] = std::exp(
                        -0.5 * (g.coord(j1) * g.coord(j1) + g.coord(j2) * g.coord(j2)));
        }
        for (double t : {0.5, 2.0, 5.0}) {
            Field ut = free_propagate(f, t);
            Field exact(g, Side::Space);
            if (d == 1) {
                for (int j = 0; j < n; ++j) {
                    double x = g.coord(j);
                    exact.values[j] = free_gaussian(1.0, 1.0, t, &x, 1);
                }
            } else {
                for (int j1 = 0; j1 < n; ++j1)
                    for (int j2 = 0; j2 < n; ++j2) {
                        double x[2] = {g.coord(j1), g.coord(j2)};
                        exact.values[static_cast<std::size_t>(j1) * n + j2] =
                            free_gaussian(1.0, 1.0, t, x, 2);
                    }
            }
            CHECK(distance_l2(ut, exact) / exact.norm_l2() < 1e-8);
        }
    }
}

TEST_CASE("profile is an isometry of the final data") {
    Grid g(1, 2048, 512.0);
    FinalData fd = gaussian_final_data(g, 0.1, 1.0, 0.75);
    double ref = fd.u_plus_hat().norm_l2();
    // the validity cap for this box is about 28
    for (double t : {2.0, 10.0, 20.0}) {
        Field up = build_profile(fd, t, 1.0);
        CHECK(up.norm_l2() == doctest::Approx(ref).epsilon(1e-10));
    }
    // trivial phase at the t = 1 normalization
    Field up1 = build_profile(fd, 1.0, 0.0);
    CHECK(up1.norm_l2() == doctest::Approx(ref).epsilon(1e-10));
}

TEST_CASE("profile value at x = 0") {
    Grid g(1, 1024, 256.0);
    FinalData fd = gaussian_final_data(g, 0.2, 1.0, 0.75);
    double t = 7.0, g1 = 0.8;
    Field up = build_profile(fd, t, g1);
    double zero = 0.0;
    cplx what0 = fd.eval_hat(&zero) * log_phase_factor(fd.eval_hat(&zero), g1, t, 1);
    cplx want = std::polar(std::pow(2.0 * t, -0.5), -0.25 * M_PI) * what0;
    CHECK(std::abs(up.values[512] - want) < 1e-14);
}

TEST_CASE("|u_p| is independent of g1 pointwise") {
    Grid g(1, 512, 128.0);
    FinalData fd = gaussian_final_data(g, 0.1, 1.0, 0.75);
    Field a = build_profile(fd, 9.0, 0.0);
    Field b = build_profile(fd, 9.0, 2.5);
    for (std::size_t i = 0; i < a.values.size(); ++i)
        CHECK(std::abs(a.values[i]) == doctest::Approx(std::abs(b.values[i])).epsilon(1e-14));
}

TEST_CASE("free asymptotics: u_p(g1=0) approaches e^{it Lap} u_plus") {
    Grid g(1, 8192, 2048.0);
    FinalData fd = gaussian_final_data(g, 0.1, 1.0, 0.75);
    Field uplus = to_space(fd.u_plus_hat());
    double prev = 1e300;
    for (double t : {25.0, 50.0, 100.0}) {
        Field up = build_profile(fd, t, 0.0);
        Field freev = free_propagate(uplus, t);
        double err = distance_l2(up, freev);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev / fd.u_plus_hat().norm_l2() < 5e-3);
}

TEST_CASE("sampled final data profile agrees with the closed form") {
    Grid g(1, 1024, 320.0);
    FinalData closed = gaussian_final_data(g, 0.1, 1.0, 0.75);
    FinalData sampled(g, closed.u_plus_hat().values, 0.75);
    CHECK_FALSE(sampled.has_closed_form());
    for (double t : {4.0, 20.0}) {
        Field a = build_profile(closed, t, 1.0);
        Field b = build_profile(sampled, t, 1.0);
        CHECK(distance_l2(a, b) / a.norm_l2() < 1e-9);
    }
}

TEST_CASE("validity cap scales with the box") {
    Grid ga(1, 512, 128.0);
    Grid gb(1, 1024, 256.0);
    FinalData a = gaussian_final_data(ga, 0.1, 1.0, 0.75);
    FinalData b = gaussian_final_data(gb, 0.1, 1.0, 0.75);
    CHECK(profile_time_cap(b) == doctest::Approx(2.0 * profile_time_cap(a)).epsilon(0.05));
    FinalData zero(ga, std::vector<cplx>(ga.size(), cplx(0.0)), 0.75);
    CHECK(std::isinf(profile_time_cap(zero)));
}

TEST_CASE("bump final data is flat inside and supported compactly") {
    Grid g(2, 64, 24.0);
    FinalData fd = bump_final_data(g, 0.1, 0.6, 0.4, 1.25);
    double inside[2] = {0.3, 0.2};
    double outside[2] = {0.9, 0.7};
    CHECK(fd.eval_hat(inside) == cplx(0.1, 0.0));
    CHECK(fd.eval_hat(outside) == cplx(0.0, 0.0));
    CHECK(fd.support_radius() <= 1.0 + 1e-9);
}
