#include "critnls/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace critnls {

namespace {

std::mutex plan_mutex;
std::map<std::tuple<int, int, int>, fftw_plan> plan_cache;

fftw_plan get_plan(int dim, int n, int sign, cplx* data) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_tuple(dim, n, sign);
    auto it = plan_cache.find(key);
    if (it != plan_cache.end()) return it->second;
    // FFTW_ESTIMATE leaves the buffer untouched; FFTW_UNALIGNED lets the plan
    // run on any array passed to fftw_execute_dft later.
    fftw_complex* p = reinterpret_cast<fftw_complex*>(data);
    fftw_plan plan = dim == 1
        ? fftw_plan_dft_1d(n, p, p, sign, FFTW_ESTIMATE | FFTW_UNALIGNED)
        : fftw_plan_dft_2d(n, n, p, p, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    plan_cache.emplace(key, plan);
    return plan;
}

// Multiply by (-1)^(k1+...+kd); accounts for the spatial offset -L/2 in both
// transform directions.
void checkerboard(int dim, int n, cplx* data) {
    if (dim == 1) {
        for (int k = 1; k < n; k += 2) data[k] = -data[k];
    } else {
        for (int k1 = 0; k1 < n; ++k1)
            for (int k2 = (k1 % 2 == 0) ? 1 : 0; k2 < n; k2 += 2)
                data[k1 * static_cast<std::size_t>(n) + k2] =
                    -data[k1 * static_cast<std::size_t>(n) + k2];
    }
}

void scale(std::vector<cplx>& v, double s) {
    for (cplx& x : v) x *= s;
}

}  // namespace

void fft_inplace(int dim, int n, cplx* data, int sign) {
    fftw_plan plan = get_plan(dim, n, sign, data);
    fftw_complex* p = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, p, p);
}

Field to_frequency(const Field& f) {
    if (f.side != Side::Space) throw std::invalid_argument("to_frequency expects a space-side field");
    const Grid& g = f.grid;
    Field out(g, Side::Frequency, f.values);
    fft_inplace(g.dim, g.points_per_dim, out.values.data(), FFTW_FORWARD);
    checkerboard(g.dim, g.points_per_dim, out.values.data());
    double h = g.spacing();
    scale(out.values, std::pow(h / std::sqrt(2.0 * M_PI), g.dim));
    return out;
}

Field to_space(const Field& f) {
    if (f.side != Side::Frequency) throw std::invalid_argument("to_space expects a frequency-side field");
    const Grid& g = f.grid;
    Field out(g, Side::Space, f.values);
    checkerboard(g.dim, g.points_per_dim, out.values.data());
    fft_inplace(g.dim, g.points_per_dim, out.values.data(), FFTW_BACKWARD);
    double dxi = g.freq_spacing();
    scale(out.values, std::pow(dxi / std::sqrt(2.0 * M_PI), g.dim));
    return out;
}

}  // namespace critnls
