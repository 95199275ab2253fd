#include "stiefel/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <vector>

#include "stiefel/bounds.hpp"
#include "stiefel/parallel.hpp"

namespace stiefel {

namespace {

struct PairStats {
  double min_sq = std::numeric_limits<double>::infinity();
  Index i = 0;
  Index j = 1;
  double max_sq = -std::numeric_limits<double>::infinity();
  double max_inner = -std::numeric_limits<double>::infinity();

  void take(double sq, double inner, Index a, Index b) {
    if (std::tie(sq, a, b) < std::tie(min_sq, i, j)) {
      min_sq = sq;
      i = a;
      j = b;
    }
    max_sq = std::max(max_sq, sq);
    max_inner = std::max(max_inner, inner);
  }

  void merge(const PairStats& o) {
    if (std::tie(o.min_sq, o.i, o.j) < std::tie(min_sq, i, j)) {
      min_sq = o.min_sq;
      i = o.i;
      j = o.j;
    }
    max_sq = std::max(max_sq, o.max_sq);
    max_inner = std::max(max_inner, o.max_inner);
  }
};

// Rows of the pair triangle are dealt to workers; the reduction is
// order-independent, so the result does not depend on the worker count.
PairStats scan_pairs(const StiefelCode& code) {
  const Index n = code.n();
  const int workers = std::min<int>(worker_count(), static_cast<int>(n - 1));
  std::vector<PairStats> partial(static_cast<std::size_t>(n - 1));
  parallel_for(static_cast<int>(n - 1), workers, [&](int row) {
    PairStats& local = partial[static_cast<std::size_t>(row)];
    const Index a = row;
    for (Index b = a + 1; b < n; ++b) {
      local.take(squared_distance(code[a], code[b]), real_trace_inner(code[a], code[b]), a, b);
    }
  });
  PairStats total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

}  // namespace

std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::SSC:
      return "SSC";
    case Classification::SOC:
      return "SOC";
    case Classification::OrthoplexDistanceBelowRegime:
      return "OrthoplexDistanceBelowRegime";
    case Classification::Suboptimal:
      return "Suboptimal";
    case Classification::Invalid:
      break;
  }
  return "Invalid";
}

MinDistance min_distance(const StiefelCode& code) {
  const PairStats s = scan_pairs(code);
  return {std::sqrt(s.min_sq), s.min_sq, {s.i, s.j}};
}

CodeReport certify(const StiefelCode& code, double tol) {
  if (!(tol > 0)) throw InvalidParameter("certification tolerance must be positive");
  CodeReport rep;
  rep.field = code.field();
  rep.d = code.d();
  rep.r = code.r();
  rep.n = code.n();
  rep.tol = tol;

  for (const auto& p : code.points()) {
    rep.stiefel_defect = std::max(rep.stiefel_defect, orthonormality_defect(p));
  }

  const PairStats s = scan_pairs(code);
  rep.min_distance_sq = s.min_sq;
  rep.min_distance = std::sqrt(s.min_sq);
  rep.argmin_pair = {s.i, s.j};
  rep.max_distance_sq = s.max_sq;
  rep.max_real_inner = s.max_inner;
  rep.sum_norm = code_sum(code).norm();
  rep.equiangular = s.max_sq - s.min_sq <= tol;
  rep.centered = rep.sum_norm <= tol * std::sqrt(static_cast<double>(rep.n * rep.r));

  const double simplex_sq = simplex_bound_sq(rep.r, rep.n).value();
  const double orthoplex_sq = orthoplex_bound_sq(rep.r).value();
  rep.simplex_bound = std::sqrt(simplex_sq);
  rep.orthoplex_bound = std::sqrt(orthoplex_sq);
  rep.simplex_gap = rep.simplex_bound - rep.min_distance;
  rep.orthoplex_gap = rep.orthoplex_bound - rep.min_distance;

  const bool below_regime = rep.n <= simplex_cap(rep.field, rep.d, rep.r);
  const bool at_orthoplex = std::abs(s.min_sq - orthoplex_sq) <= tol;
  if (!code.members_within(tol)) {
    rep.classification = Classification::Invalid;
  } else if (std::abs(s.min_sq - simplex_sq) <= tol && rep.equiangular && rep.centered) {
    rep.classification = Classification::SSC;
  } else if (at_orthoplex && !below_regime) {
    rep.classification = Classification::SOC;
  } else if (at_orthoplex) {
    rep.classification = Classification::OrthoplexDistanceBelowRegime;
  } else {
    rep.classification = Classification::Suboptimal;
  }
  return rep;
}

}  // namespace stiefel
