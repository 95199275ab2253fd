#include "stiefel/numkernel.hpp"

#include <utility>

namespace stiefel {

std::string_view to_string(Field f) noexcept { return f == Field::R ? "R" : "C"; }

Field parse_field(std::string_view s) {
  if (s == "R") return Field::R;
  if (s == "C") return Field::C;
  throw InvalidParameter("field must be \"R\" or \"C\", got \"" + std::string(s) + "\"");
}

bool is_stiefel(const Matrix& m, Field field, double tol) {
  if (m.rows() < m.cols() || m.cols() < 1) return false;
  if (field == Field::R && !is_real(m)) return false;
  return orthonormality_defect(m) <= tol;
}

StiefelPoint StiefelPoint::checked(Matrix m, Field field, double tol) {
  if (!is_stiefel(m, field, tol)) {
    throw InvalidParameter("matrix is not on St_" + std::string(to_string(field)) + "(" +
                           std::to_string(m.rows()) + "," + std::to_string(m.cols()) + ")");
  }
  return {field, std::move(m)};
}

namespace {

void require_same_manifold(const StiefelPoint& x, const StiefelPoint& y) {
  if (x.field != y.field) throw DimensionMismatch("field mismatch between points");
}

}  // namespace

double frobenius_distance(const StiefelPoint& x, const StiefelPoint& y) {
  require_same_manifold(x, y);
  return frobenius_distance(x.mat, y.mat);
}

double real_trace_inner(const StiefelPoint& x, const StiefelPoint& y) {
  require_same_manifold(x, y);
  return real_trace_inner(x.mat, y.mat);
}

StiefelCode::StiefelCode(Field field, std::vector<Matrix> points)
    : field_(field), points_(std::move(points)) {
  if (points_.size() < 2) throw InvalidParameter("a code needs at least 2 points");
  d_ = points_.front().rows();
  r_ = points_.front().cols();
  if (r_ < 1 || d_ < r_) {
    throw InvalidParameter("need d >= r >= 1, got d=" + std::to_string(d_) +
                           " r=" + std::to_string(r_));
  }
  for (const auto& p : points_) {
    if (p.rows() != d_ || p.cols() != r_) throw DimensionMismatch("code points differ in shape");
    if (field_ == Field::R && !is_real(p)) {
      throw WrongField("real code carries a nonzero imaginary part");
    }
  }
}

bool StiefelCode::members_within(double tol) const {
  for (const auto& p : points_) {
    if (!is_stiefel(p, field_, tol)) return false;
  }
  return true;
}

StiefelCode StiefelCode::prefix(Index count) const {
  if (count < 2 || count > n()) {
    throw InvalidParameter("prefix length " + std::to_string(count) + " out of range");
  }
  return StiefelCode(field_, {points_.begin(), points_.begin() + count});
}

Matrix code_sum(const StiefelCode& code) {
  Matrix s = Matrix::Zero(code.d(), code.r());
  for (const auto& p : code.points()) s += p;
  return s;
}

}  // namespace stiefel
