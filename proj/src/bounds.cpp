#include "stiefel/bounds.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace stiefel {

namespace {

void require_positive(std::int64_t value, const char* name) {
  if (value < 1) throw InvalidParameter(std::string(name) + " must be >= 1");
}

void require_shape(std::int64_t d, std::int64_t r) {
  require_positive(r, "r");
  if (d < r) throw InvalidParameter("need d >= r");
}

}  // namespace

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidParameter("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Rational simplex_bound_sq(std::int64_t r, std::int64_t n) {
  require_positive(r, "r");
  if (n < 2) throw InvalidParameter("simplex bound needs n >= 2");
  return make_rational(2 * r * n, n - 1);
}

double simplex_bound(std::int64_t r, std::int64_t n) {
  return std::sqrt(simplex_bound_sq(r, n).value());
}

std::int64_t simplex_cap(Field field, std::int64_t d, std::int64_t r) {
  require_shape(d, r);
  return extension_degree(field) * d * r + 1;
}

Rational orthoplex_bound_sq(std::int64_t r) {
  require_positive(r, "r");
  return {2 * r, 1};
}

double orthoplex_bound(std::int64_t r) { return std::sqrt(orthoplex_bound_sq(r).value()); }

std::int64_t orthoplex_cap(Field field, std::int64_t d, std::int64_t r) {
  require_shape(d, r);
  return 2 * extension_degree(field) * d * r;
}

BoundResult simplex(Field field, std::int64_t d, std::int64_t r, std::int64_t n) {
  return {simplex_bound(r, n), simplex_bound_sq(r, n), simplex_cap(field, d, r),
          BoundKind::Simplex};
}

BoundResult orthoplex(Field field, std::int64_t d, std::int64_t r) {
  return {orthoplex_bound(r), orthoplex_bound_sq(r), orthoplex_cap(field, d, r),
          BoundKind::Orthoplex};
}

BoundResult applicable_bound(Field field, std::int64_t d, std::int64_t r, std::int64_t n) {
  if (n <= simplex_cap(field, d, r)) return simplex(field, d, r, n);
  return orthoplex(field, d, r);
}

std::int64_t radon_hurwitz(Field field, std::int64_t d) {
  require_positive(d, "d");
  const int v = std::countr_zero(static_cast<std::uint64_t>(d));
  const std::int64_t b = v / 4;
  const std::int64_t c = v % 4;
  if (field == Field::R) return 8 * b + (std::int64_t{1} << c);
  return 8 * b + 2 * c + 2;
}

std::int64_t plotkin_cap(std::int64_t r) {
  if (r < 2) throw InvalidParameter("plotkin_cap needs r >= 2");
  switch (r % 4) {
    case 0:
      return 2 * r;
    case 2:
      return r + 2;
    case 3:
      return r + 1;
    default:
      throw UnsupportedResidue("r = 1 mod 4 has no Plotkin-optimal construction (r=" +
                               std::to_string(r) + ")");
  }
}

}  // namespace stiefel
