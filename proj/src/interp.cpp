#include "critnls/interp.hpp"

#include <cmath>

#include "critnls/fft.hpp"

namespace critnls {

std::vector<cplx> storage_to_natural(const Grid& g, const std::vector<cplx>& v) {
    const int n = g.points_per_dim;
    std::vector<cplx> out(v.size());
    if (g.dim == 1) {
        for (int j = 0; j < n; ++j) out[j] = v[(j + n / 2) % n];
    } else {
        for (int j1 = 0; j1 < n; ++j1)
            for (int j2 = 0; j2 < n; ++j2)
                out[static_cast<std::size_t>(j1) * n + j2] =
                    v[static_cast<std::size_t>((j1 + n / 2) % n) * n + (j2 + n / 2) % n];
    }
    return out;
}

TrigInterpolator::TrigInterpolator(const Grid& g, const std::vector<cplx>& samples)
    : grid_(g) {
    Field f(g, Side::Space, samples);
    Field hat = to_frequency(f);
    coeff_ = std::move(hat.values);
    const double s = std::pow(g.freq_spacing() / std::sqrt(2.0 * M_PI), g.dim);
    for (cplx& c : coeff_) c *= s;
}

void TrigInterpolator::axis_weights(double point, std::vector<cplx>& w) const {
    const int n = grid_.points_per_dim;
    const double phi = grid_.freq_spacing() * point;
    w.assign(n, cplx(0.0));
    cplx step = std::polar(1.0, phi);
    cplx z = std::polar(1.0, -0.5 * n * phi);
    for (int m = -n / 2; m < n / 2; ++m) {
        int k = (m + n) % n;
        // fold the unpaired Nyquist mode symmetrically
        w[k] = (m == -n / 2) ? cplx(std::cos(0.5 * n * phi), 0.0) : z;
        z *= step;
    }
}

cplx TrigInterpolator::eval(const double* point) const {
    const int n = grid_.points_per_dim;
    const double half = 0.5 * grid_.box_length;
    for (int a = 0; a < grid_.dim; ++a)
        if (std::abs(point[a]) > half) return cplx(0.0);

    std::vector<cplx> w1;
    axis_weights(point[0], w1);
    if (grid_.dim == 1) {
        cplx s(0.0);
        for (int k = 0; k < n; ++k) s += coeff_[k] * w1[k];
        return s;
    }
    std::vector<cplx> w2;
    axis_weights(point[1], w2);
    cplx s(0.0);
    for (int k1 = 0; k1 < n; ++k1) {
        cplx row(0.0);
        const cplx* c = coeff_.data() + static_cast<std::size_t>(k1) * n;
        for (int k2 = 0; k2 < n; ++k2) row += c[k2] * w2[k2];
        s += row * w1[k1];
    }
    return s;
}

std::vector<cplx> TrigInterpolator::eval_scaled_lattice(const Grid& target,
                                                        double scale) const {
    const int n = grid_.points_per_dim;
    const int nt = target.points_per_dim;
    const double half = 0.5 * grid_.box_length;

    std::vector<double> pts(nt);
    std::vector<char> inside(nt);
    for (int j = 0; j < nt; ++j) {
        pts[j] = target.coord(j) / scale;
        inside[j] = std::abs(pts[j]) <= half;
    }

    if (grid_.dim == 1) {
        std::vector<cplx> out(nt, cplx(0.0));
        const double dk = grid_.freq_spacing();
        for (int j = 0; j < nt; ++j) {
            if (!inside[j]) continue;
            const double phi = dk * pts[j];
            cplx step = std::polar(1.0, phi);
            cplx z = std::polar(1.0, -0.5 * n * phi);
            cplx s(0.0);
            for (int m = -n / 2; m < n / 2; ++m) {
                int k = (m + n) % n;
                cplx w = (m == -n / 2) ? cplx(std::cos(0.5 * n * phi), 0.0) : z;
                s += coeff_[k] * w;
                z *= step;
            }
            out[j] = s;
        }
        return out;
    }

    // 2D: weight matrices per axis, two tensor contractions
    std::vector<cplx> W(static_cast<std::size_t>(nt) * n, cplx(0.0));
    std::vector<cplx> row;
    for (int j = 0; j < nt; ++j) {
        if (!inside[j]) continue;
        axis_weights(pts[j], row);
        std::copy(row.begin(), row.end(), W.begin() + static_cast<std::size_t>(j) * n);
    }

    // T[k1][j2] = sum_k2 C[k1][k2] W[j2][k2]
    std::vector<cplx> T(static_cast<std::size_t>(n) * nt, cplx(0.0));
    for (int k1 = 0; k1 < n; ++k1) {
        const cplx* c = coeff_.data() + static_cast<std::size_t>(k1) * n;
        for (int j2 = 0; j2 < nt; ++j2) {
            if (!inside[j2]) continue;
            const cplx* w = W.data() + static_cast<std::size_t>(j2) * n;
            cplx s(0.0);
            for (int k2 = 0; k2 < n; ++k2) s += c[k2] * w[k2];
            T[static_cast<std::size_t>(k1) * nt + j2] = s;
        }
    }

    // out[j1][j2] = sum_k1 W[j1][k1] T[k1][j2]
    std::vector<cplx> out(static_cast<std::size_t>(nt) * nt, cplx(0.0));
    for (int j1 = 0; j1 < nt; ++j1) {
        if (!inside[j1]) continue;
        const cplx* w = W.data() + static_cast<std::size_t>(j1) * n;
        for (int k1 = 0; k1 < n; ++k1) {
            const cplx wk = w[k1];
            if (wk == cplx(0.0)) continue;
            const cplx* t = T.data() + static_cast<std::size_t>(k1) * nt;
            cplx* o = out.data() + static_cast<std::size_t>(j1) * nt;
            for (int j2 = 0; j2 < nt; ++j2) o[j2] += wk * t[j2];
        }
    }
    return out;
}

}  // namespace critnls
