#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "critnls/fft.hpp"
#include "critnls/grid.hpp"
#include "critnls/interp.hpp"

using namespace critnls;

namespace {

Field random_field(const Grid& g, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Field f(g, Side::Space);
    for (cplx& v : f.values) v = cplx(gauss(rng), gauss(rng));
    return f;
}

}  // namespace

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(Grid(3, 64, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid(1, 48, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid(1, 8, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid(1, 64, -1.0), std::invalid_argument);
    Grid g(2, 64, 10.0);
    CHECK(g.size() == 64u * 64u);
    CHECK(g.coord(32) == doctest::Approx(0.0));
    CHECK(g.mode(63) == -1);
    CHECK(g.freq(1) == doctest::Approx(2.0 * M_PI / 10.0));
}

TEST_CASE("transform round trip at 1e-13") {
    for (int d : {1, 2}) {
        Grid g(d, 64, 17.0);
        Field f = random_field(g, 42u + d);
        Field back = to_space(to_frequency(f));
        double rel = distance_l2(back, f) / f.norm_l2();
        CHECK(rel < 1e-13);
    }
}

TEST_CASE("transform is an isometry (Plancherel)") {
    Grid g(1, 256, 40.0);
    Field f = random_field(g, 7);
    Field hat = to_frequency(f);
    CHECK(hat.norm_l2() == doctest::Approx(f.norm_l2()).epsilon(1e-13));
}

TEST_CASE("single mode lands on its frequency bin") {
    Grid g(1, 64, 8.0);
    Field f(g, Side::Space);
    const int m = 5;
    for (int j = 0; j < 64; ++j)
        f.values[j] = std::polar(1.0, g.freq_spacing() * m * g.coord(j));
    Field hat = to_frequency(f);
    for (int k = 0; k < 64; ++k) {
        if (g.mode(k) == m)
            CHECK(std::abs(hat.values[k]) ==
                  doctest::Approx(8.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-12));
        else
            CHECK(std::abs(hat.values[k]) < 1e-12);
    }
}

TEST_CASE("gaussian transform matches the closed form") {
    // F[e^{-x^2/2}] = e^{-xi^2/2} under the unitary convention
    Grid g(1, 512, 80.0);
    Field f(g, Side::Space);
    for (int j = 0; j < 512; ++j) f.values[j] = std::exp(-0.5 * g.coord(j) * g.coord(j));
    Field hat = to_frequency(f);
    for (int k = 0; k < 512; ++k) {
        double xi = g.freq(k);
        CHECK(std::abs(hat.values[k] - std::exp(-0.5 * xi * xi)) < 1e-12);
    }
}

TEST_CASE("trig interpolation reproduces band-limited values off-grid") {
    Grid g(1, 128, 20.0);
    std::vector<cplx> samples(128);
    auto fn = [&](double x) {
        return std::polar(1.0, 3.0 * g.freq_spacing() * x) +
               0.5 * std::polar(1.0, -7.0 * g.freq_spacing() * x + 0.3);
    };
    for (int j = 0; j < 128; ++j) samples[j] = fn(g.coord(j));
    TrigInterpolator interp(g, samples);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(-9.9, 9.9);
    for (int i = 0; i < 50; ++i) {
        double x = unif(rng);
        CHECK(std::abs(interp.eval(&x) - fn(x)) < 1e-11);
    }
    double outside = 10.5;
    CHECK(interp.eval(&outside) == cplx(0.0));
}

TEST_CASE("trig interpolation on a scaled lattice, 1d and 2d") {
    SUBCASE("1d gaussian") {
        Grid g(1, 256, 60.0);
        std::vector<cplx> samples(256);
        for (int j = 0; j < 256; ++j)
            samples[j] = std::exp(-0.5 * g.coord(j) * g.coord(j)) * cplx(1.0, 0.5);
        TrigInterpolator interp(g, samples);
        double scale = 3.7;
        std::vector<cplx> vals = interp.eval_scaled_lattice(g, scale);
        for (int j = 0; j < 256; ++j) {
            double y = g.coord(j) / scale;
            CHECK(std::abs(vals[j] - std::exp(-0.5 * y * y) * cplx(1.0, 0.5)) < 1e-10);
        }
    }
    SUBCASE("2d gaussian") {
        Grid g(2, 64, 24.0);
        std::vector<cplx> samples(g.size());
        for (int j1 = 0; j1 < 64; ++j1)
            for (int j2 = 0; j2 < 64; ++j2) {
                double r2 = g.coord(j1) * g.coord(j1) + g.coord(j2) * g.coord(j2);
                samples[static_cast<std::size_t>(j1) * 64 + j2] = std::exp(-0.5 * r2);
            }
        TrigInterpolator interp(g, samples);
        double scale = 2.2;
        std::vector<cplx> vals = interp.eval_scaled_lattice(g, scale);
        double worst = 0.0;
        for (int j1 = 0; j1 < 64; ++j1)
            for (int j2 = 0; j2 < 64; ++j2) {
                double y1 = g.coord(j1) / scale, y2 = g.coord(j2) / scale;
                worst = std::max(worst,
                                 std::abs(vals[static_cast<std::size_t>(j1) * 64 + j2] -
                                          std::exp(-0.5 * (y1 * y1 + y2 * y2))));
            }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("field norms use the side measure") {
    Grid g(1, 64, 32.0);  // h = 0.5
    Field f(g, Side::Space);
    for (cplx& v : f.values) v = cplx(2.0, 0.0);
    CHECK(f.norm_l2() == doctest::Approx(2.0 * std::sqrt(32.0)));
    CHECK(f.norm_sup() == doctest::Approx(2.0));
    CHECK(f.norm_l4() == doctest::Approx(2.0 * std::pow(32.0, 0.25)));
}
