#include "critnls/presets.hpp"

#include <cmath>
#include <stdexcept>

namespace critnls {

namespace {

void require_dim(const std::string& name, int d, int want) {
    if (d != want)
        throw std::invalid_argument("preset '" + name + "' requires d = " + std::to_string(want));
}

}  // namespace

AngularFunction angular_preset(const std::string& name, int d) {
    if (name.rfind("gauge", 0) == 0) {
        double mu = 1.0;
        std::string suffix = name.substr(5);
        if (!suffix.empty()) {
            std::size_t pos = 0;
            mu = std::stod(suffix, &pos);
            if (pos != suffix.size())
                throw std::invalid_argument("cannot parse gauge coefficient in '" + name + "'");
        }
        auto f = AngularFunction::closed_form(
            d, [mu](double th) { return mu * std::polar(1.0, th); }, name);
        f.set_gauge_mu(mu);
        const double q = 2.0 / d;
        f.set_direct_form([mu, q](cplx u) { return mu * std::pow(std::abs(u), q) * u; });
        return f;
    }
    if (name == "re-abs-re") {
        require_dim(name, d, 2);
        auto f = AngularFunction::closed_form(
            d, [](double th) { return cplx(std::abs(std::cos(th)) * std::cos(th), 0.0); }, name);
        f.set_direct_form([](cplx u) {
            double a = u.real();
            return cplx(std::abs(a) * a, 0.0);
        });
        return f;
    }
    if (name == "cos3") {
        require_dim(name, d, 1);
        auto f = AngularFunction::closed_form(
            d, [](double th) { return cplx(std::pow(std::cos(th), 3), 0.0); }, name);
        f.set_direct_form([](cplx u) {
            double a = u.real();
            return cplx(a * a * a, 0.0);
        });
        return f;
    }
    if (name == "u-squared") {
        require_dim(name, d, 2);
        auto f = AngularFunction::closed_form(
            d, [](double th) { return std::polar(1.0, 2.0 * th); }, name);
        f.set_direct_form([](cplx u) { return u * u; });
        return f;
    }
    if (name == "re-im-mixed") {
        require_dim(name, d, 2);
        auto f = AngularFunction::closed_form(
            d,
            [](double th) {
                double c = std::cos(th), s = std::sin(th);
                return cplx(std::abs(c) * c, -std::abs(s) * s);
            },
            name);
        f.set_direct_form([](cplx u) {
            double a = u.real(), b = u.imag();
            return cplx(std::abs(a) * a, -std::abs(b) * b);
        });
        return f;
    }
    throw std::invalid_argument("unknown angular preset '" + name + "'");
}

FinalData gaussian_final_data(const Grid& g, double eps, double sigma, double delta) {
    if (!(eps >= 0.0)) throw std::invalid_argument("eps must be nonnegative");
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
    const int d = g.dim;
    const double s2 = 2.0 * sigma * sigma;
    return FinalData(
        g,
        [eps, s2, d](const double* xi) {
            double r2 = xi[0] * xi[0] + (d == 2 ? xi[1] * xi[1] : 0.0);
            return cplx(eps * std::exp(-r2 / s2), 0.0);
        },
        delta);
}

FinalData bump_final_data(const Grid& g, double eps, double radius, double width,
                          double delta) {
    if (!(eps >= 0.0)) throw std::invalid_argument("eps must be nonnegative");
    if (!(radius >= 0.0) || !(width > 0.0))
        throw std::invalid_argument("bump needs radius >= 0 and width > 0");
    const int d = g.dim;
    return FinalData(
        g,
        [eps, radius, width, d](const double* xi) {
            double r = d == 2 ? std::hypot(xi[0], xi[1]) : std::abs(xi[0]);
            if (r <= radius) return cplx(eps, 0.0);
            double q = (r - radius) / width;
            if (q >= 1.0) return cplx(0.0, 0.0);
            return cplx(eps * std::exp(1.0 - 1.0 / (1.0 - q * q)), 0.0);
        },
        delta);
}

FinalData final_data_preset(const Grid& g, const std::string& name, double eps,
                            double sigma, double radius, double width, double delta) {
    if (name == "gaussian") return gaussian_final_data(g, eps, sigma, delta);
    if (name == "bump") return bump_final_data(g, eps, radius, width, delta);
    throw std::invalid_argument("unknown final-data preset '" + name + "'");
}

}  // namespace critnls
