#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "stiefel/errors.hpp"

namespace stiefel {

using Index = Eigen::Index;
using Complex = std::complex<double>;

/// Dense complex matrix. Real-field objects keep every imaginary part at zero.
using Matrix = Eigen::MatrixXcd;

enum class Field { R, C };

/// Degree of the field over the reals: 1 for R, 2 for C.
constexpr int extension_degree(Field f) noexcept { return f == Field::R ? 1 : 2; }

std::string_view to_string(Field f) noexcept;

/// Parses "R" or "C"; anything else is an InvalidParameter.
Field parse_field(std::string_view s);

/// Membership tolerance for codes produced by the constructions.
inline constexpr double kStiefelTol = 1e-10;
/// Membership tolerance for codes read from external files.
inline constexpr double kIngestTol = 1e-8;

template <typename A, typename B>
void require_same_shape(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimensionMismatch("shape mismatch: " + std::to_string(x.rows()) + "x" +
                            std::to_string(x.cols()) + " vs " + std::to_string(y.rows()) +
                            "x" + std::to_string(y.cols()));
  }
}

/// Re Tr(X^* Y).
template <typename A, typename B>
double real_trace_inner(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
  require_same_shape(x, y);
  return std::real(x.conjugate().cwiseProduct(y).sum());
}

/// Chordal distance ||X - Y||_Fro.
template <typename A, typename B>
double frobenius_distance(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
  require_same_shape(x, y);
  return (x - y).norm();
}

template <typename A, typename B>
double squared_distance(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
  require_same_shape(x, y);
  return (x - y).squaredNorm();
}

/// max |(M^* M - I)_{ij}|.
template <typename A>
double orthonormality_defect(const Eigen::MatrixBase<A>& m) {
  using Plain = typename A::PlainObject;
  const Plain gram = m.adjoint() * m;
  return (gram - Plain::Identity(m.cols(), m.cols())).cwiseAbs().maxCoeff();
}

/// True iff M has orthonormal columns to within `tol` (max-norm) and, for
/// the real field, carries no imaginary part.
bool is_stiefel(const Matrix& m, Field field, double tol);

inline bool is_real(const Matrix& m) noexcept {
  return m.size() == 0 || m.imag().cwiseAbs().maxCoeff() == 0.0;
}

inline Matrix complexify(const Eigen::MatrixXd& m) { return m.cast<Complex>(); }

/// A single matrix on St_F(d, r).
struct StiefelPoint {
  Field field = Field::R;
  Matrix mat;

  Index d() const noexcept { return mat.rows(); }
  Index r() const noexcept { return mat.cols(); }

  /// Validates membership at `tol`; throws InvalidParameter otherwise.
  static StiefelPoint checked(Matrix m, Field field, double tol = kStiefelTol);
};

/// Overloads that also check that both points live on the same manifold.
double frobenius_distance(const StiefelPoint& x, const StiefelPoint& y);
double real_trace_inner(const StiefelPoint& x, const StiefelPoint& y);

/// An ordered list of n >= 2 matrices sharing (field, d, r).
///
/// Construction enforces shapes and the real-field zero-imaginary rule.
/// Stiefel membership is not enforced here: ingested files may hold
/// non-member matrices, which the certifier reports as Invalid. Use
/// `members_within(tol)` to test it.
class StiefelCode {
 public:
  StiefelCode(Field field, std::vector<Matrix> points);

  Field field() const noexcept { return field_; }
  Index d() const noexcept { return d_; }
  Index r() const noexcept { return r_; }
  Index n() const noexcept { return static_cast<Index>(points_.size()); }

  const Matrix& operator[](Index i) const { return points_[static_cast<std::size_t>(i)]; }
  const std::vector<Matrix>& points() const noexcept { return points_; }

  StiefelPoint point(Index i) const { return {field_, (*this)[i]}; }

  bool members_within(double tol) const;

  /// Same matrices, different field tag (R -> C always valid).
  StiefelCode with_field(Field f) const { return StiefelCode(f, points_); }

  /// The first `count` points.
  StiefelCode prefix(Index count) const;

 private:
  Field field_;
  Index d_ = 0;
  Index r_ = 0;
  std::vector<Matrix> points_;
};

/// Sum of all points.
Matrix code_sum(const StiefelCode& code);

}  // namespace stiefel
