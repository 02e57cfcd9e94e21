#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace critnls {

using cplx = std::complex<double>;

/// Periodic box [-L/2, L/2)^d discretized with n points per dimension.
/// Frequencies follow FFT storage order: index k maps to the integer mode
/// k for k < n/2 and k - n otherwise, with lattice spacing 2*pi/L.
struct Grid {
    int dim = 1;
    int points_per_dim = 16;
    double box_length = 1.0;

    Grid() = default;
    Grid(int d, int n, double length);

    double spacing() const { return box_length / points_per_dim; }
    double freq_spacing() const { return 2.0 * M_PI / box_length; }
    double nyquist() const { return M_PI * points_per_dim / box_length; }
    std::size_t size() const;

    // coordinate of index j along one axis: x_j = -L/2 + j*h
    double coord(int j) const { return -0.5 * box_length + j * spacing(); }
    // signed integer mode of FFT storage index k
    int mode(int k) const { return k < points_per_dim / 2 ? k : k - points_per_dim; }
    double freq(int k) const { return freq_spacing() * mode(k); }

    // grid covering the frequency lattice itself (extent n * 2*pi/L),
    // used when an operator acts on the frequency variable
    Grid frequency_domain() const;

    bool operator==(const Grid& o) const {
        return dim == o.dim && points_per_dim == o.points_per_dim &&
               box_length == o.box_length;
    }
};

enum class Side { Space, Frequency };

/// Complex grid function, tagged with which side of the transform it lives on.
/// 2D storage is row-major: index = j1 * n + j2.
struct Field {
    Grid grid;
    Side side = Side::Space;
    std::vector<cplx> values;

    Field() = default;
    Field(const Grid& g, Side s);
    Field(const Grid& g, Side s, std::vector<cplx> v);

    // measure weight per grid cell: h^d in space, (2*pi/L)^d in frequency
    double cell_measure() const;

    double norm_l2() const;
    double norm_sup() const;
    double norm_l4() const;

    Field& operator+=(const Field& o);
    Field& operator-=(const Field& o);
    Field& operator*=(cplx c);
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(cplx c, Field a);

double distance_l2(const Field& a, const Field& b);
bool all_finite(const Field& f);

}  // namespace critnls
