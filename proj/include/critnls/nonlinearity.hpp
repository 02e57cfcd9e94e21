#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace critnls {

using cplx = std::complex<double>;

/// 2*pi-periodic angular function g identifying a homogeneous nonlinearity
/// of critical degree 1 + 2/d via F(u) = |u|^{1+2/d} g(arg u).
/// Holds either a closed-form evaluator or uniform samples at 2*pi*k/M.
class AngularFunction {
public:
    using Evaluator = std::function<cplx(double)>;
    using DirectForm = std::function<cplx(cplx)>;

    static AngularFunction closed_form(int d, Evaluator g, std::string name = {});
    static AngularFunction sampled(int d, std::vector<cplx> samples);

    int dimension() const { return dim_; }
    double degree() const { return 1.0 + 2.0 / dim_; }
    const std::string& name() const { return name_; }

    bool is_sampled() const { return !samples_.empty(); }
    std::size_t sample_count() const { return samples_.size(); }
    const std::vector<cplx>& samples() const { return samples_; }

    // g(theta); sampled input is evaluated by trigonometric interpolation
    cplx angular(double theta) const;

    // pure gauge-invariant preset mu*e^{i theta}: exact phase-rotation substep
    std::optional<double> gauge_mu() const { return gauge_mu_; }
    void set_gauge_mu(double mu) { gauge_mu_ = mu; }

    // algebraically equivalent fast evaluator F(u), set by presets
    void set_direct_form(DirectForm f) { direct_ = std::move(f); }
    const DirectForm& direct_form() const { return direct_; }

private:
    int dim_ = 1;
    Evaluator eval_;
    DirectForm direct_;
    std::vector<cplx> samples_;
    std::vector<cplx> interp_coeffs_;  // Fourier coefficients of the samples
    std::optional<double> gauge_mu_;
    std::string name_;
};

/// Truncated coefficient table of the angular function, |n| <= N, with a
/// power-law fit of the tail decay |g_n| ~ C n^{-p}.
struct FourierSpectrum {
    int truncation_order = 0;
    std::vector<cplx> coefficients;  // index n + N
    // +inf: all fit-window coefficients at noise floor (tail is zero);
    // NaN: too few points to fit (inconclusive)
    double tail_exponent = 0.0;
    double tail_amplitude = 0.0;  // C of the fit
    int tail_fit_points = 0;

    cplx coeff(int n) const;
};

enum class RangeType { LongRange, ShortRange, Unsupported };

std::string to_string(RangeType r);

struct ClassificationReport {
    cplx g0;
    cplx g1;
    bool g0_is_zero = false;
    bool g1_is_real = false;
    double eta_tested = 0.0;
    double weighted_sum = 0.0;   // truncated sum (+ extrapolated tail if convergent)
    double partial_sum = 0.0;    // truncated sum alone, always reported
    bool converges = false;
    double tail_exponent = 0.0;
    RangeType range_type = RangeType::Unsupported;
    std::string diagnostic;
};

// F(u) = |u|^{1+2/d} g(arg u), F(0) = 0
cplx eval_F(const AngularFunction& nl, cplx u);

// DFT-based coefficients g_n for |n| <= N; closed forms are sampled with
// M = max(4096, 8N) points, sampled input requires M >= 4N
FourierSpectrum fourier_coefficients(const AngularFunction& nl, int N);

// sum_{0<|n|<=N} |n|^{1+eta} |g_n| plus extrapolated tail, and the
// long/short-range verdict per the coefficient conditions
ClassificationReport check_assumption(const FourierSpectrum& spec, double eta,
                                      double tol = 1e-9);

struct SplitValue {
    cplx resonant;
    cplx nonresonant;
};

// resonant g_1 |u|^{2/d} u and truncated non-resonant sum over n != 0,1
SplitValue eval_split(const AngularFunction& nl, const FourierSpectrum& spec, cplx u);

// max over sampled pairs of |F(u)-F(v)| / ((|u|^{2/d}+|v|^{2/d})|u-v|);
// moduli log-uniform in [1e-3, 1e3], angles uniform, deterministic per seed
double lipschitz_check(const AngularFunction& nl, int sample_count, unsigned seed);

}  // namespace critnls
