#include "critnls/grid.hpp"

#include <cmath>

namespace critnls {

namespace {
bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

Grid::Grid(int d, int n, double length) : dim(d), points_per_dim(n), box_length(length) {
    if (d != 1 && d != 2) throw std::invalid_argument("grid dimension must be 1 or 2");
    if (!is_pow2(n) || n < 16)
        throw std::invalid_argument("points_per_dim must be a power of two, at least 16");
    if (!(length > 0.0)) throw std::invalid_argument("box_length must be positive");
}

std::size_t Grid::size() const {
    std::size_t n = static_cast<std::size_t>(points_per_dim);
    return dim == 1 ? n : n * n;
}

Grid Grid::frequency_domain() const {
    return Grid(dim, points_per_dim, points_per_dim * freq_spacing());
}

Field::Field(const Grid& g, Side s) : grid(g), side(s), values(g.size(), cplx(0.0, 0.0)) {}

Field::Field(const Grid& g, Side s, std::vector<cplx> v)
    : grid(g), side(s), values(std::move(v)) {
    if (values.size() != g.size()) throw std::invalid_argument("field size does not match grid");
}

double Field::cell_measure() const {
    double w = side == Side::Space ? grid.spacing() : grid.freq_spacing();
    return grid.dim == 1 ? w : w * w;
}

double Field::norm_l2() const {
    double s = 0.0;
    for (const cplx& v : values) s += std::norm(v);
    return std::sqrt(s * cell_measure());
}

double Field::norm_sup() const {
    double m = 0.0;
    for (const cplx& v : values) m = std::max(m, std::abs(v));
    return m;
}

double Field::norm_l4() const {
    double s = 0.0;
    for (const cplx& v : values) {
        double a = std::norm(v);
        s += a * a;
    }
    return std::pow(s * cell_measure(), 0.25);
}

Field& Field::operator+=(const Field& o) {
    if (!(grid == o.grid) || side != o.side) throw std::invalid_argument("field mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
}

Field& Field::operator-=(const Field& o) {
    if (!(grid == o.grid) || side != o.side) throw std::invalid_argument("field mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
    return *this;
}

Field& Field::operator*=(cplx c) {
    for (cplx& v : values) v *= c;
    return *this;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(cplx c, Field a) { return a *= c; }

double distance_l2(const Field& a, const Field& b) {
    Field d = a;
    d -= b;
    return d.norm_l2();
}

bool all_finite(const Field& f) {
    for (const cplx& v : f.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

}  // namespace critnls
