#include "stiefel/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <optional>
#include <string>

#include "stiefel/bounds.hpp"
#include "stiefel/parallel.hpp"

namespace stiefel {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double min_pair_sq(const std::vector<Matrix>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::min(best, (pts[i] - pts[j]).squaredNorm());
    }
  }
  return best;
}

double inner(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += real_trace_inner(a[i], b[i]);
  return s;
}

std::vector<Matrix> riemannian_gradient(const std::vector<Matrix>& pts, double beta) {
  auto g = softmin_gradient(pts, beta);
  for (std::size_t i = 0; i < pts.size(); ++i) g[i] = project_tangent(pts[i], g[i]);
  return g;
}

std::vector<Matrix> retract(const std::vector<Matrix>& pts, const std::vector<Matrix>& dir,
                            double t) {
  std::vector<Matrix> out;
  out.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) out.push_back(orthonormalize(pts[i] + t * dir[i]));
  return out;
}

struct RestartOutcome {
  std::vector<Matrix> points;
  double min_sq = 0.0;
};

RestartOutcome run_restart(Field field, int d, int r, int n, const OptimizerConfig& cfg,
                           int restart, const IterateObserver& observer, std::mutex& obs_mutex) {
  Rng rng(restart_seed(cfg.seed, static_cast<std::uint64_t>(restart)));
  std::vector<Matrix> pts;
  for (int i = 0; i < n; ++i) pts.push_back(random_stiefel(field, d, r, rng));

  const int epochs =
      1 + static_cast<int>(std::ceil(std::log(cfg.beta_end / cfg.beta_start) / std::log(cfg.growth) -
                                     1e-12));
  const int per_epoch = std::max(1, cfg.max_iters / epochs);
  double step = cfg.step_size;

  for (int epoch = 0; epoch < epochs; ++epoch) {
    const double beta = std::min(cfg.beta_end, cfg.beta_start * std::pow(cfg.growth, epoch));
    double f = softmin_objective(pts, beta);
    if (!std::isfinite(f)) throw NumericalFailure("non-finite surrogate", restart);
    for (int it = 0; it < per_epoch; ++it) {
      const auto grad = riemannian_gradient(pts, beta);
      const double gnorm_sq = inner(grad, grad);
      if (!std::isfinite(gnorm_sq)) throw NumericalFailure("non-finite gradient", restart);
      if (std::sqrt(gnorm_sq) <= cfg.grad_tol) break;

      // Armijo backtracking, constant 1e-4, at most 30 reductions.
      double t = std::min(2.0 * step, cfg.step_size);
      std::optional<std::vector<Matrix>> accepted;
      double f_new = f;
      for (int halving = 0; halving <= 30; ++halving, t *= cfg.backtrack) {
        auto trial = retract(pts, grad, t);
        const double ft = softmin_objective(trial, beta);
        if (!std::isfinite(ft)) throw NumericalFailure("non-finite surrogate", restart);
        if (ft >= f + 1e-4 * t * gnorm_sq) {
          accepted = std::move(trial);
          f_new = ft;
          break;
        }
      }
      if (!accepted) break;
      step = t;
      const double gain = f_new - f;
      pts = std::move(*accepted);
      f = f_new;
      if (observer) {
        std::lock_guard lock(obs_mutex);
        observer({restart, epoch, it, beta, f, min_pair_sq(pts), &pts});
      }
      if (gain < cfg.distance_tol) break;
    }
  }
  const double m = min_pair_sq(pts);
  return {std::move(pts), m};
}

}  // namespace

std::uint64_t restart_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ (index + 1) * 0xD1B54A32D192ED03ULL);
}

Matrix orthonormalize(const Matrix& m) {
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ() * Matrix::Identity(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j) {
    const Complex diag = qr.matrixQR()(j, j);
    const double mag = std::abs(diag);
    if (mag > 0) q.col(j) *= diag / mag;
  }
  return q;
}

Matrix random_stiefel(Field field, int d, int r, Rng& rng) {
  if (r < 1 || d < r) throw InvalidParameter("need d >= r >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(d, r);
  for (Index j = 0; j < r; ++j) {
    for (Index i = 0; i < d; ++i) {
      const double re = gauss(rng);
      const double im = field == Field::C ? gauss(rng) : 0.0;
      g(i, j) = Complex(re, im);
    }
  }
  Matrix q = orthonormalize(g);
  if (field == Field::R) q = q.real().cast<Complex>();
  return q;
}

double softmin_objective(const std::vector<Matrix>& pts, double beta) {
  const double m = min_pair_sq(pts);
  double acc = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      acc += std::exp(-beta * ((pts[i] - pts[j]).squaredNorm() - m));
    }
  }
  return m - std::log(acc) / beta;
}

std::vector<Matrix> softmin_gradient(const std::vector<Matrix>& pts, double beta) {
  const double m = min_pair_sq(pts);
  const std::size_t n = pts.size();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(static_cast<Index>(n), static_cast<Index>(n));
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double e = std::exp(-beta * ((pts[i] - pts[j]).squaredNorm() - m));
      w(static_cast<Index>(i), static_cast<Index>(j)) = e;
      w(static_cast<Index>(j), static_cast<Index>(i)) = e;
      total += e;
    }
  }
  w /= total;
  std::vector<Matrix> g;
  g.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix gi = Matrix::Zero(pts[i].rows(), pts[i].cols());
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) gi += 2.0 * w(static_cast<Index>(i), static_cast<Index>(j)) * (pts[i] - pts[j]);
    }
    g.push_back(std::move(gi));
  }
  return g;
}

Matrix project_tangent(const Matrix& x, const Matrix& g) {
  const Matrix xg = x.adjoint() * g;
  return g - x * (0.5 * (xg + xg.adjoint()));
}

void OptimizerConfig::validate() const {
  if (restarts < 1) throw InvalidParameter("restarts must be >= 1");
  if (max_iters < 1) throw InvalidParameter("max_iters must be >= 1");
  if (!(beta_start > 0) || !(beta_start <= beta_end)) {
    throw InvalidParameter("need 0 < beta_start <= beta_end");
  }
  if (!(growth > 1)) throw InvalidParameter("beta growth must exceed 1");
  if (!(step_size > 0)) throw InvalidParameter("step_size must be positive");
  if (!(backtrack > 0 && backtrack < 1)) throw InvalidParameter("backtrack factor must be in (0,1)");
  if (!(grad_tol > 0) || !(distance_tol > 0)) throw InvalidParameter("tolerances must be positive");
  if (threads < 0) throw InvalidParameter("threads must be >= 0");
}

OptimizeResult optimize(Field field, int d, int r, int n, const OptimizerConfig& config,
                        const IterateObserver& observer) {
  if (r < 1 || d < r) throw InvalidParameter("need d >= r >= 1");
  if (n < 2) throw InvalidParameter("need n >= 2");
  config.validate();

  if (field == Field::R && d == 1) {
    std::vector<Matrix> pts;
    for (int i = 0; i < n; ++i) pts.push_back(Matrix::Constant(1, 1, i % 2 == 0 ? 1.0 : -1.0));
    StiefelCode code(field, std::move(pts));
    CodeReport rep = certify(code);
    return {code, rep, 0, std::vector<double>(static_cast<std::size_t>(config.restarts),
                                              rep.min_distance)};
  }

  std::vector<std::optional<RestartOutcome>> outcomes(static_cast<std::size_t>(config.restarts));
  std::mutex obs_mutex;
  const int workers = config.threads > 0 ? config.threads : worker_count();
  parallel_for(config.restarts, workers, [&](int k) {
    outcomes[static_cast<std::size_t>(k)] =
        run_restart(field, d, r, n, config, k, observer, obs_mutex);
  });

  int best = 0;
  std::vector<double> dists;
  for (int k = 0; k < config.restarts; ++k) {
    const double m = outcomes[static_cast<std::size_t>(k)]->min_sq;
    dists.push_back(std::sqrt(m));
    if (m > outcomes[static_cast<std::size_t>(best)]->min_sq) best = k;
  }
  StiefelCode code(field, std::move(outcomes[static_cast<std::size_t>(best)]->points));
  CodeReport rep = certify(code);
  if (rep.min_distance_sq > simplex_bound_sq(r, n).value() + rep.tol) {
    throw NumericalFailure("optimizer result exceeds the simplex bound", best);
  }
  return {std::move(code), rep, best, std::move(dists)};
}

std::vector<Matrix> sample_tangent_direction(Field field, const std::vector<Matrix>& pts,
                                             Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Matrix> dir;
  const bool complex = field == Field::C;
  for (const auto& p : pts) {
    Matrix z(p.rows(), p.cols());
    for (Index j = 0; j < p.cols(); ++j) {
      for (Index i = 0; i < p.rows(); ++i) {
        const double re = gauss(rng);
        z(i, j) = Complex(re, complex ? gauss(rng) : 0.0);
      }
    }
    dir.push_back(project_tangent(p, z));
  }
  const double norm = std::sqrt(inner(dir, dir));
  if (!(norm > 1e-12)) throw InvalidParameter("tangent direction has zero norm");
  for (auto& m : dir) m /= norm;
  return dir;
}

double gradient_check(Field field, int d, int r, int n, std::uint64_t seed) {
  constexpr double beta = 2.0;
  constexpr double h = 1e-6;
  Rng rng(restart_seed(seed, 0));
  std::vector<Matrix> pts;
  for (int i = 0; i < n; ++i) pts.push_back(random_stiefel(field, d, r, rng));
  const auto grad = riemannian_gradient(pts, beta);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const auto dir = sample_tangent_direction(field, pts, rng);
    std::vector<Matrix> plus = pts;
    std::vector<Matrix> minus = pts;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      plus[i] += h * dir[i];
      minus[i] -= h * dir[i];
    }
    const double fd = (softmin_objective(plus, beta) - softmin_objective(minus, beta)) / (2 * h);
    const double analytic = inner(grad, dir);
    const double scale = std::max({std::abs(fd), std::abs(analytic), 1e-12});
    worst = std::max(worst, std::abs(fd - analytic) / scale);
  }
  return worst;
}

}  // namespace stiefel
