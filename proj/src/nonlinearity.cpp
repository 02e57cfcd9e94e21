#include "critnls/nonlinearity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "critnls/fft.hpp"

namespace critnls {

namespace {

bool is_pow2(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

void check_dim(int d) {
    if (d != 1 && d != 2) throw std::invalid_argument("dimension must be 1 or 2");
}

// coefficients c_m, |m| <= M/2, of the samples; index m + M/2
std::vector<cplx> dft_coefficients(const std::vector<cplx>& samples) {
    const int M = static_cast<int>(samples.size());
    std::vector<cplx> work = samples;
    fft_inplace(1, M, work.data(), -1);
    std::vector<cplx> c(M + 1, cplx(0.0));
    for (int m = -M / 2; m <= M / 2; ++m) {
        int k = (m % M + M) % M;
        c[m + M / 2] = work[k] / static_cast<double>(M);
    }
    // the Nyquist coefficient shows up at both ends; split it
    c[0] *= 0.5;
    c[M] *= 0.5;
    return c;
}

}  // namespace

AngularFunction AngularFunction::closed_form(int d, Evaluator g, std::string name) {
    check_dim(d);
    if (!g) throw std::invalid_argument("closed-form evaluator must be callable");
    AngularFunction f;
    f.dim_ = d;
    f.eval_ = std::move(g);
    f.name_ = std::move(name);
    return f;
}

AngularFunction AngularFunction::sampled(int d, std::vector<cplx> samples) {
    check_dim(d);
    if (samples.size() < 4 || !is_pow2(samples.size()))
        throw std::invalid_argument("sample count must be a power of two, at least 4");
    AngularFunction f;
    f.dim_ = d;
    f.samples_ = std::move(samples);
    f.interp_coeffs_ = dft_coefficients(f.samples_);
    return f;
}

cplx AngularFunction::angular(double theta) const {
    if (eval_) return eval_(theta);
    const int M = static_cast<int>(samples_.size());
    cplx sum(0.0);
    for (int m = -M / 2; m <= M / 2; ++m)
        sum += interp_coeffs_[m + M / 2] * std::polar(1.0, m * theta);
    return sum;
}

cplx eval_F(const AngularFunction& nl, cplx u) {
    if (u == cplx(0.0)) return cplx(0.0);
    if (nl.direct_form()) return nl.direct_form()(u);
    return std::pow(std::abs(u), nl.degree()) * nl.angular(std::arg(u));
}

cplx FourierSpectrum::coeff(int n) const {
    if (std::abs(n) > truncation_order) return cplx(0.0);
    return coefficients[n + truncation_order];
}

std::string to_string(RangeType r) {
    switch (r) {
        case RangeType::LongRange: return "LongRange";
        case RangeType::ShortRange: return "ShortRange";
        default: return "Unsupported";
    }
}

FourierSpectrum fourier_coefficients(const AngularFunction& nl, int N) {
    if (N < 1) throw std::invalid_argument("truncation order N must be >= 1");

    std::vector<cplx> samples;
    if (nl.is_sampled()) {
        const int M = static_cast<int>(nl.sample_count());
        if (4 * N > M)
            throw std::invalid_argument("truncation order exceeds M/4 for sampled input");
        samples = nl.samples();
    } else {
        const int M = std::max(4096, 8 * N);
        samples.resize(M);
        for (int k = 0; k < M; ++k) samples[k] = nl.angular(2.0 * M_PI * k / M);
    }

    const int M = static_cast<int>(samples.size());
    fft_inplace(1, M, samples.data(), -1);

    FourierSpectrum spec;
    spec.truncation_order = N;
    spec.coefficients.resize(2 * N + 1);
    for (int n = -N; n <= N; ++n) {
        int k = (n % M + M) % M;
        spec.coefficients[n + N] = samples[k] / static_cast<double>(M);
    }

    // Power-law fit over the largest decade of stored |n|.
    double gmax = 0.0;
    for (const cplx& c : spec.coefficients) gmax = std::max(gmax, std::abs(c));
    const double floor = 1e-12 * gmax;
    const int lo = std::max(2, (N + 9) / 10);
    std::vector<double> xs, ys;
    for (int n = lo; n <= N; ++n) {
        for (int s : {-1, 1}) {
            double a = std::abs(spec.coeff(s * n));
            if (a > floor) {
                xs.push_back(std::log(static_cast<double>(n)));
                ys.push_back(std::log(a));
            }
        }
    }
    spec.tail_fit_points = static_cast<int>(xs.size());
    if (xs.empty()) {
        // nothing above the noise floor in the window: tail is (numerically) zero
        spec.tail_exponent = std::numeric_limits<double>::infinity();
        spec.tail_amplitude = 0.0;
    } else if (xs.size() < 8) {
        spec.tail_exponent = std::numeric_limits<double>::quiet_NaN();
        spec.tail_amplitude = std::numeric_limits<double>::quiet_NaN();
    } else {
        double n = static_cast<double>(xs.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        double icept = (sy - slope * sx) / n;
        spec.tail_exponent = -slope;
        spec.tail_amplitude = std::exp(icept);
    }
    return spec;
}

ClassificationReport check_assumption(const FourierSpectrum& spec, double eta, double tol) {
    if (!(eta > 0.0)) throw std::invalid_argument("eta must be positive");

    ClassificationReport rep;
    rep.g0 = spec.coeff(0);
    rep.g1 = spec.coeff(1);
    rep.g0_is_zero = std::abs(rep.g0) <= tol;
    rep.g1_is_real = std::abs(rep.g1.imag()) <= tol;
    rep.eta_tested = eta;
    rep.tail_exponent = spec.tail_exponent;

    const int N = spec.truncation_order;
    double partial = 0.0;
    for (int n = 1; n <= N; ++n)
        partial += std::pow(static_cast<double>(n), 1.0 + eta) *
                   (std::abs(spec.coeff(n)) + std::abs(spec.coeff(-n)));
    rep.partial_sum = partial;
    rep.weighted_sum = partial;

    if (std::isinf(spec.tail_exponent)) {
        rep.converges = true;
    } else if (std::isnan(spec.tail_exponent)) {
        rep.converges = false;
        rep.diagnostic = "tail fit inconclusive: fewer than 8 coefficients above noise floor "
                         "in the fit window";
        rep.range_type = RangeType::Unsupported;
        return rep;
    } else {
        const double p = spec.tail_exponent;
        rep.converges = (1.0 + eta - p < -1.0);
        if (rep.converges) {
            // sum_{|n|>N} |n|^{1+eta} C|n|^{-p} ~ 2C N^{2+eta-p} / (p-2-eta)
            double tail = 2.0 * spec.tail_amplitude *
                          std::pow(static_cast<double>(N), 2.0 + eta - p) / (p - 2.0 - eta);
            rep.weighted_sum = partial + tail;
        } else {
            rep.diagnostic = "weighted sum divergent for this eta (tail exponent " +
                             std::to_string(p) + ")";
        }
    }

    if (rep.g0_is_zero && rep.converges) {
        if (std::abs(rep.g1) <= tol)
            rep.range_type = RangeType::ShortRange;
        else if (rep.g1_is_real)
            rep.range_type = RangeType::LongRange;
        else
            rep.range_type = RangeType::Unsupported;
    } else {
        rep.range_type = RangeType::Unsupported;
    }
    return rep;
}

SplitValue eval_split(const AngularFunction& nl, const FourierSpectrum& spec, cplx u) {
    SplitValue out{cplx(0.0), cplx(0.0)};
    if (u == cplx(0.0)) return out;

    const double r = std::abs(u);
    const double amp = std::pow(r, nl.degree());
    const double theta = std::arg(u);
    out.resonant = spec.coeff(1) * std::pow(r, 2.0 / nl.dimension()) * u;

    const int N = spec.truncation_order;
    const cplx phase = std::polar(1.0, theta);
    cplx sum(0.0);
    // walk n = -N..N with a running phasor e^{i n theta}
    cplx e = std::polar(1.0, -N * theta);
    for (int n = -N; n <= N; ++n) {
        if (n != 0 && n != 1) sum += spec.coeff(n) * e;
        e *= phase;
    }
    out.nonresonant = amp * sum;
    return out;
}

double lipschitz_check(const AngularFunction& nl, int sample_count, unsigned seed) {
    if (sample_count < 1) throw std::invalid_argument("sample_count must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> logmod(std::log(1e-3), std::log(1e3));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    const double q = 2.0 / nl.dimension();

    double best = 0.0;
    for (int i = 0; i < sample_count; ++i) {
        cplx u = std::polar(std::exp(logmod(rng)), angle(rng));
        cplx v = std::polar(std::exp(logmod(rng)), angle(rng));
        if (u == v) continue;
        double denom = (std::pow(std::abs(u), q) + std::pow(std::abs(v), q)) * std::abs(u - v);
        double ratio = std::abs(eval_F(nl, u) - eval_F(nl, v)) / denom;
        best = std::max(best, ratio);
    }
    return best;
}

}  // namespace critnls
