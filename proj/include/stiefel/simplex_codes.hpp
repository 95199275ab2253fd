#pragma once

#include <vector>

#include "stiefel/designs.hpp"
#include "stiefel/numkernel.hpp"

namespace stiefel {

/// n unit vectors in R^dim with pairwise inner product -1/(n-1) summing to
/// zero, stored as the columns of `vectors`.
struct SimplexVertices {
  int dim = 0;
  int n = 0;
  Eigen::MatrixXd vectors;
};

/// Canonical centred regular simplex: orthonormalize the column space of
/// I - J/n, rescale the rows to unit length, zero-pad to R^dim.
SimplexVertices simplex_vertices(int dim, int n);

/// (d, 1, n) simplex code for 2 <= n <= m*d + 1. For C, consecutive pairs of
/// real coordinates become real and imaginary parts.
StiefelCode ssc_sphere(Field field, int d, int n);

/// Appends a zero row to every point: (d, r, n) -> (d+1, r, n).
StiefelCode ssc_pad_row(const StiefelCode& code);

/// Y_i = I_k (x) X_i: (d, r, n) -> (kd, kr, n).
StiefelCode ssc_kronecker(const StiefelCode& code, int k);

/// Complex (d, r, n) -> real (2d, 2r, n), a+bi -> [[a, -b], [b, a]].
StiefelCode ssc_realify(const StiefelCode& code);

/// Real code retagged as complex.
StiefelCode ssc_complexify(const StiefelCode& code);

/// Entrywise realification without the simplex check.
Eigen::MatrixXd realify_matrix(const Matrix& m);
StiefelCode realify_code(const StiefelCode& code);

/// rho_F(d) real-linearly independent d x d matrices A_0 = I, A_1, ... with
/// A_k^* A_k = I and A_j^* A_k + A_k^* A_j = 0 for j != k, so every unit
/// real combination is orthogonal (unitary). Built for 2-adic valuation of
/// d at most 3; larger valuations raise UnsupportedDimension.
std::vector<Matrix> hurwitz_radon_family(Field field, int d);

/// Throws InvalidParameter unless `family` is a nonempty list of equal-size
/// square matrices satisfying the orthogonality and anticommutation
/// identities above (and real when field is R).
void validate_hr_family(const std::vector<Matrix>& family, Field field, double tol = 1e-9);

/// (d, d, n) simplex code X_i = sum_k u_ik A_k for the built-in family.
StiefelCode ssc_radon_hurwitz(Field field, int d, int n);
/// Same, with a caller-supplied (validated) family.
StiefelCode ssc_radon_hurwitz(Field field, int n, const std::vector<Matrix>& family);

/// Real (d, d, d+1) simplex code from the regular representation of
/// Z_{d+1} with the trivial summand split off.
StiefelCode ssc_regular_representation(int d);

/// (d, 2, n) simplex code X_i = [x_i, conj(A x_i)], A = [[0, -I], [I, 0]],
/// for even d and n <= m*d + 1.
StiefelCode ssc_symplectic_lift(Field field, int d, int n);

/// (b*d, rep*s, v) simplex code from a (d, s, k) seed and a resolvable
/// design with lambda = 1. Block (B, C) of Y_p is the seed member assigned
/// to p within B (ascending point order) when p is in B and B is in C.
StiefelCode ssc_from_bibd(const StiefelCode& seed, const BIBD& design, const Resolution& res);

}  // namespace stiefel
