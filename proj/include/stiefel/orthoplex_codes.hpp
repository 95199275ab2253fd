#pragma once

#include "stiefel/numkernel.hpp"

namespace stiefel {

/// The orbit of X0 = [I_r; 0] under (a, b, c) . X = i^a T^b X M^{-c}, with
/// T the cyclic row shift and M = diag(e^{2 pi i k / r}), enumerated with a
/// outermost, then b, then c. Returns the first `count` orbit points,
/// 1 <= count <= 4dr, without regime checks.
std::vector<Matrix> complex_orbit_points(int d, int r, int count);

/// Complex (d, r, n) orthoplex code for 2dr+1 < n <= 4dr.
StiefelCode soc_complex_orbit(int d, int r, int n);

/// Real (d, 1, n) orthoplex code for d+1 < n <= 2d: the first n of
/// e1, -e1, e2, -e2, ...
StiefelCode soc_sphere_real(int d, int n);

/// Number of points soc_real_hadamard(d, r) returns: d * plotkin_cap(r).
int real_hadamard_size(int d, int r);

/// Real (d, r, d|C|) orthoplex code {T^a D_c}, C a Plotkin-optimal binary
/// code of length r and D_c = diag((-1)^{c_i}) padded to d x r. Points are
/// ordered with a outermost.
StiefelCode soc_real_hadamard(int d, int r);

}  // namespace stiefel
