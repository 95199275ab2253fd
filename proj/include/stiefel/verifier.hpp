#pragma once

#include <string_view>
#include <utility>

#include "stiefel/numkernel.hpp"

namespace stiefel {

enum class Classification { SSC, SOC, OrthoplexDistanceBelowRegime, Suboptimal, Invalid };

std::string_view to_string(Classification c) noexcept;

/// Default certification tolerance, applied to squared distances.
inline constexpr double kCertifyTol = 1e-8;

struct MinDistance {
  double distance = 0.0;
  double squared = 0.0;
  /// Lexicographically first pair attaining the minimum.
  std::pair<Index, Index> pair{0, 1};
};

MinDistance min_distance(const StiefelCode& code);

struct CodeReport {
  Field field = Field::R;
  Index d = 0;
  Index r = 0;
  Index n = 0;

  double min_distance = 0.0;
  double min_distance_sq = 0.0;
  std::pair<Index, Index> argmin_pair{0, 1};
  double max_distance_sq = 0.0;
  double max_real_inner = 0.0;
  /// Largest max-norm deviation of X^*X from I over all points.
  double stiefel_defect = 0.0;
  /// ||sum X_i||_Fro.
  double sum_norm = 0.0;
  bool equiangular = false;
  bool centered = false;

  double simplex_bound = 0.0;
  double orthoplex_bound = 0.0;
  double simplex_gap = 0.0;
  double orthoplex_gap = 0.0;

  Classification classification = Classification::Invalid;
  double tol = kCertifyTol;
};

/// Full certification. Equalities are tested on squared distances against
/// the exact targets 2rn/(n-1) and 2r. Membership is tested at `tol`.
///
/// Precedence: Invalid (a point is off the manifold), SSC (simplex
/// equality, equiangular and centered), SOC (n > mdr+1 at distance
/// sqrt(2r)), OrthoplexDistanceBelowRegime (distance sqrt(2r) with
/// n <= mdr+1), Suboptimal.
CodeReport certify(const StiefelCode& code, double tol = kCertifyTol);

inline bool is_ssc(const StiefelCode& code, double tol = kCertifyTol) {
  return certify(code, tol).classification == Classification::SSC;
}

inline bool is_soc(const StiefelCode& code, double tol = kCertifyTol) {
  return certify(code, tol).classification == Classification::SOC;
}

}  // namespace stiefel
