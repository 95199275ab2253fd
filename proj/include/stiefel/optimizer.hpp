#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "stiefel/numkernel.hpp"
#include "stiefel/verifier.hpp"

namespace stiefel {

using Rng = std::mt19937_64;

/// Seed of restart `index`, split from the master seed with splitmix64 so
/// restarts are independent of one another and of execution order.
std::uint64_t restart_seed(std::uint64_t master, std::uint64_t index);

/// Gaussian d x r matrix (complex Gaussian for C) orthonormalized by a thin
/// QR with positive real diagonal; Haar-distributed on St_F(d, r).
Matrix random_stiefel(Field field, int d, int r, Rng& rng);

/// Thin QR factor with positive real diagonal in R.
Matrix orthonormalize(const Matrix& m);

/// Softmin surrogate f = -(1/beta) log sum_{i<j} exp(-beta ||X_i - X_j||^2).
double softmin_objective(const std::vector<Matrix>& pts, double beta);

/// Euclidean gradient of the surrogate with respect to each X_i.
std::vector<Matrix> softmin_gradient(const std::vector<Matrix>& pts, double beta);

/// G - X herm(X^* G), the projection onto the tangent space at X.
Matrix project_tangent(const Matrix& x, const Matrix& g);

struct OptimizerConfig {
  int restarts = 16;
  int max_iters = 2000;
  std::uint64_t seed = 0;
  double beta_start = 4.0;
  double beta_end = 4096.0;
  double growth = 2.0;
  /// Largest trial step; each iteration starts from twice the last
  /// accepted step, capped here.
  double step_size = 0.5;
  double backtrack = 0.5;
  /// An epoch ends once the Riemannian gradient norm drops below this.
  double grad_tol = 1e-9;
  /// An epoch also ends once an accepted step gains less than this in the
  /// surrogate (squared-distance units).
  double distance_tol = 1e-13;
  /// 0 picks worker_count().
  int threads = 0;

  /// Throws InvalidParameter when an invariant fails.
  void validate() const;
};

struct IterateInfo {
  int restart = 0;
  int epoch = 0;
  int iteration = 0;
  double beta = 0.0;
  double surrogate = 0.0;
  double min_distance_sq = 0.0;
  const std::vector<Matrix>* points = nullptr;
};

/// Called after every accepted step (serialized across worker threads).
using IterateObserver = std::function<void(const IterateInfo&)>;

struct OptimizeResult {
  StiefelCode code;
  CodeReport report;
  int best_restart = 0;
  std::vector<double> restart_min_distances;
};

/// Projected-gradient ascent of the softmin surrogate over a geometric beta
/// schedule, best of `restarts` random starts. The best restart maximizes
/// the minimum distance, ties going to the lower index.
///
/// St_R(1,1) = {+1, -1} has no tangent directions and is solved directly
/// by alternating signs.
OptimizeResult optimize(Field field, int d, int r, int n, const OptimizerConfig& config,
                        const IterateObserver& observer = {});

/// Random unit tangent direction at `pts` (Frobenius norm 1 overall).
/// Throws InvalidParameter when the tangent space is trivial.
std::vector<Matrix> sample_tangent_direction(Field field, const std::vector<Matrix>& pts,
                                             Rng& rng);

/// Largest relative discrepancy between the Riemannian directional
/// derivative and a central finite difference (step 1e-6) along 20 random
/// tangent directions, at a random code and beta = 2.
double gradient_check(Field field, int d, int r, int n, std::uint64_t seed);

}  // namespace stiefel
