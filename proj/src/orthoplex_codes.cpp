#include "stiefel/orthoplex_codes.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "stiefel/binary_codes.hpp"
#include "stiefel/bounds.hpp"

namespace stiefel {

namespace {

void require_shape(int d, int r) {
  if (r < 1 || d < r) throw InvalidParameter("need d >= r >= 1");
}

// T^b X: row k of X moves to row k+b mod d.
Matrix shift_rows(const Matrix& x, int b) {
  const auto d = static_cast<int>(x.rows());
  Matrix out(x.rows(), x.cols());
  for (int k = 0; k < d; ++k) out.row((k + b) % d) = x.row(k);
  return out;
}

}  // namespace

std::vector<Matrix> complex_orbit_points(int d, int r, int count) {
  require_shape(d, r);
  if (count < 1 || count > 4 * d * r) throw InvalidParameter("orbit prefix length out of range");
  Matrix x0 = Matrix::Zero(d, r);
  x0.topRows(r).setIdentity();
  const Complex phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<Matrix> pts;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < d; ++b) {
      const Matrix shifted = shift_rows(x0, b);
      for (int c = 0; c < r; ++c) {
        if (static_cast<int>(pts.size()) == count) return pts;
        Matrix y = phases[a] * shifted;
        // Right multiplication by M^{-c} scales column k by e^{-2 pi i c k / r}.
        for (int k = 0; k < r; ++k) {
          const double angle = -2.0 * std::numbers::pi * c * k / r;
          y.col(k) *= std::polar(1.0, angle);
        }
        pts.push_back(std::move(y));
      }
    }
  }
  return pts;
}

StiefelCode soc_complex_orbit(int d, int r, int n) {
  require_shape(d, r);
  if (n <= 2 * d * r + 1 || n > 4 * d * r) {
    throw InfeasibleParameters("complex orthoplex codes exist iff n in (2dr+1, 4dr] = (" +
                               std::to_string(2 * d * r + 1) + ", " +
                               std::to_string(4 * d * r) + "]");
  }
  return StiefelCode(Field::C, complex_orbit_points(d, r, n));
}

StiefelCode soc_sphere_real(int d, int n) {
  if (d < 1) throw InvalidParameter("d must be >= 1");
  if (n <= d + 1 || n > 2 * d) {
    throw InfeasibleParameters("real (d,1,n) orthoplex codes need n in (d+1, 2d]");
  }
  std::vector<Matrix> pts;
  for (int i = 0; i < n; ++i) {
    Matrix x = Matrix::Zero(d, 1);
    x(i / 2, 0) = i % 2 == 0 ? 1.0 : -1.0;
    pts.push_back(std::move(x));
  }
  return StiefelCode(Field::R, std::move(pts));
}

int real_hadamard_size(int d, int r) {
  require_shape(d, r);
  return d * static_cast<int>(plotkin_cap(r));
}

StiefelCode soc_real_hadamard(int d, int r) {
  require_shape(d, r);
  if (r < 2) throw InvalidParameter("real Hadamard orthoplex codes need r >= 2");
  const BinaryCode code = plotkin_optimal_code(r);
  std::vector<Matrix> diag;
  for (const auto& word : code.words()) {
    Matrix dc = Matrix::Zero(d, r);
    for (int i = 0; i < r; ++i) dc(i, i) = word[static_cast<std::size_t>(i)] ? -1.0 : 1.0;
    diag.push_back(std::move(dc));
  }
  std::vector<Matrix> pts;
  for (int a = 0; a < d; ++a) {
    for (const auto& dc : diag) pts.push_back(shift_rows(dc, a));
  }
  return StiefelCode(Field::R, std::move(pts));
}

}  // namespace stiefel
