#pragma once

#include <cstdint>
#include <optional>

#include "stiefel/numkernel.hpp"

namespace stiefel {

/// Nonnegative rational in lowest terms, used for exact squared bounds.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);

enum class BoundKind { Simplex, Orthoplex };

struct BoundResult {
  double value = 0.0;
  Rational squared;
  /// Largest n for which equality can hold.
  std::int64_t max_n = 0;
  BoundKind kind = BoundKind::Simplex;
};

/// sqrt(2rn/(n-1)): no n points on St_F(d,r) are farther apart than this.
double simplex_bound(std::int64_t r, std::int64_t n);
/// 2rn/(n-1) exactly.
Rational simplex_bound_sq(std::int64_t r, std::int64_t n);
/// m*d*r + 1.
std::int64_t simplex_cap(Field field, std::int64_t d, std::int64_t r);

/// sqrt(2r), valid once n exceeds the simplex cap.
double orthoplex_bound(std::int64_t r);
Rational orthoplex_bound_sq(std::int64_t r);
/// 2*m*d*r.
std::int64_t orthoplex_cap(Field field, std::int64_t d, std::int64_t r);

BoundResult simplex(Field field, std::int64_t d, std::int64_t r, std::int64_t n);
BoundResult orthoplex(Field field, std::int64_t d, std::int64_t r);

/// The bound that applies to n points: simplex when n <= mdr+1, else
/// orthoplex.
BoundResult applicable_bound(Field field, std::int64_t d, std::int64_t r, std::int64_t n);

/// Radon-Hurwitz number rho_F(d) from d = (2a+1) 2^(4b+c), 0 <= c <= 3.
std::int64_t radon_hurwitz(Field field, std::int64_t d);

/// Largest binary code of length r with minimum distance >= r/2:
/// 2r, r+2, r+1 for r = 0, 2, 3 mod 4. r = 1 mod 4 raises UnsupportedResidue.
std::int64_t plotkin_cap(std::int64_t r);

}  // namespace stiefel
