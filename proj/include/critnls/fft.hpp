#pragma once

#include "critnls/grid.hpp"

namespace critnls {

// Unnormalized in-place DFT (FFTW backend, plans cached per shape).
// sign -1 = forward, +1 = backward.
void fft_inplace(int dim, int n, cplx* data, int sign);

// Unitary transforms with the continuum convention
//   u_hat(xi_k) = (2*pi)^{-d/2} h^d  sum_j u(x_j) exp(-i xi_k x_j),
// so that discrete L2 norms agree across sides (Plancherel).
Field to_frequency(const Field& f);
Field to_space(const Field& f);

}  // namespace critnls
