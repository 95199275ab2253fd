#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stiefel/numkernel.hpp"
#include "stiefel/optimizer.hpp"
#include "stiefel/verifier.hpp"

namespace stiefel {

/// k(a, b) for a points on the rotation circle of O(2) and b on the
/// reflection circle: max{a,b} if min{a,b} = 0, else max{a,b,4}.
int o2_k(int a, int b);

struct O2Solution {
  int n = 0;
  int k_n = 0;
  int a = 0;  // rotations
  int b = 0;  // reflections
  double min_distance = 0.0;
};

/// Minimizes k(a, b) over a + b = n; ties resolved to the smallest a >= b.
O2Solution o2_solution(int n);

/// a rotations and b reflections, each family uniformly spaced with zero
/// phase offset.
StiefelCode o2_code(int n);

/// n uniformly spaced points on the unit circle in R^2.
StiefelCode circle_code(int n);

/// The n-th roots of unity in U(1).
StiefelCode u1_code(int n);

/// Alternating +1, -1 in St_R(1,1).
StiefelCode two_point_code(int n);

/// A code from one exact construction together with what it guarantees.
struct Candidate {
  std::string provenance;
  StiefelCode code;
  double claimed_distance_sq = 0.0;
  std::optional<Classification> claimed_class;
};

/// True when the certified report agrees with the candidate's claim: the
/// claimed classification (if any) and at least the claimed distance.
bool matches_claim(const Candidate& c, const CodeReport& rep);

/// Any implemented simplex-code route for (field, d, r, n), searched
/// through direct constructions, the resolvable-design composition and the
/// four derived-code transforms.
std::optional<Candidate> find_ssc(Field field, int d, int r, int n);

/// Every applicable exact construction, in dispatch order: closed-form
/// small cases, then a simplex route, then orthoplex routes.
std::vector<Candidate> exact_candidates(Field field, int d, int r, int n);

struct BestKnown {
  StiefelCode code;
  CodeReport report;
  std::string provenance;
  bool putative = false;
};

/// Largest certified minimum distance over exact_candidates; earlier
/// candidates win ties. Without any exact construction, runs the optimizer
/// and flags the result putative.
BestKnown best_known(Field field, int d, int r, int n,
                     const OptimizerConfig& fallback = OptimizerConfig{});

}  // namespace stiefel
