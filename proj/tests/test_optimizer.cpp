#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>

#include "oracles.hpp"
#include "stiefel/bounds.hpp"
#include "stiefel/errors.hpp"
#include "stiefel/optimizer.hpp"
#include "stiefel/verifier.hpp"

using namespace stiefel;

namespace {

OptimizerConfig small_config() {
  OptimizerConfig c;
  c.restarts = 4;
  c.max_iters = 600;
  return c;
}

bool identical(const StiefelCode& a, const StiefelCode& b) {
  if (a.n() != b.n()) return false;
  for (Index i = 0; i < a.n(); ++i)
    if (!(a[i].array() == b[i].array()).all()) return false;
  return true;
}

}  // namespace

TEST_CASE("random stiefel points") {
  Rng rng(3);
  for (Field f : {Field::R, Field::C}) {
    for (int d = 1; d <= 6; ++d) {
      for (int r = 1; r <= d; ++r) {
        const Matrix x = random_stiefel(f, d, r, rng);
        CHECK(is_stiefel(x, f, 1e-10));
      }
    }
  }
  Rng a(42), b(42);
  const Matrix xa = random_stiefel(Field::C, 5, 3, a);
  const Matrix xb = random_stiefel(Field::C, 5, 3, b);
  CHECK((xa.array() == xb.array()).all());
}

TEST_CASE("random stiefel inner products match the invariant measure") {
  // Re Tr(X^*Y) for independent uniform points has mean 0 and variance
  // r/(m d).
  const int pairs = 10000;
  for (auto [f, d, r] : {std::tuple{Field::R, 4, 2}, {Field::C, 3, 2}, {Field::R, 1, 1}}) {
    Rng rng(555);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < pairs; ++i) {
      const Matrix x = random_stiefel(f, d, r, rng);
      const Matrix y = random_stiefel(f, d, r, rng);
      const double t = oracle::inner(x, y);
      sum += t;
      sum_sq += t * t;
    }
    const double var = static_cast<double>(r) / (extension_degree(f) * d);
    const double mean = sum / pairs;
    CHECK(std::abs(mean) <= 5.0 * std::sqrt(var / pairs));
    CHECK(sum_sq / pairs == doctest::Approx(var).epsilon(0.1));
  }
}

TEST_CASE("orthonormalize and tangent projection") {
  Rng rng(8);
  const Matrix x = random_stiefel(Field::C, 5, 2, rng);
  Matrix g = Matrix::Random(5, 2);
  const Matrix t = project_tangent(x, g);
  // Tangent vectors satisfy X^*T + T^*X = 0.
  CHECK((x.adjoint() * t + t.adjoint() * x).norm() < 1e-12);
  const Matrix q = orthonormalize(x + 0.3 * t);
  CHECK(is_stiefel(q, Field::C, 1e-12));
  // Positive real diagonal convention: orthonormalize fixes points.
  CHECK((orthonormalize(x) - x).norm() < 1e-12);
}

TEST_CASE("euclidean gradient agrees with finite differences of the surrogate") {
  Rng rng(21);
  for (Field f : {Field::R, Field::C}) {
    std::vector<Matrix> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(random_stiefel(f, 3, 2, rng));
    const double beta = 3.0;
    const auto grad = softmin_gradient(pts, beta);
    const double h = 1e-6;
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Matrix> dir;
      double analytic = 0.0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        Matrix e = Matrix::Random(3, 2);
        if (f == Field::R) e = e.real().cast<Complex>();
        analytic += oracle::inner(grad[i], e);
        dir.push_back(e);
      }
      auto shifted = [&](double s) {
        std::vector<Matrix> p = pts;
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += s * dir[i];
        return softmin_objective(p, beta);
      };
      const double numeric = (shifted(h) - shifted(-h)) / (2 * h);
      CHECK(std::abs(numeric - analytic) <= 1e-6 * std::max(1.0, std::abs(analytic)));
    }
  }
}

TEST_CASE("gradient_check examples") {
  CHECK(gradient_check(Field::R, 3, 2, 4, 7) <= 1e-5);
  CHECK(gradient_check(Field::C, 2, 2, 3, 7) <= 1e-5);
  CHECK(gradient_check(Field::R, 5, 1, 6, 1) <= 1e-5);
}

TEST_CASE("zero tangent directions are rejected") {
  Rng rng(0);
  Matrix p(1, 1), m(1, 1);
  p(0, 0) = 1;
  m(0, 0) = -1;
  CHECK_THROWS_AS(sample_tangent_direction(Field::R, {p, m}, rng), InvalidParameter);
  std::vector<Matrix> pts = {random_stiefel(Field::R, 3, 1, rng), random_stiefel(Field::R, 3, 1, rng)};
  const auto dir = sample_tangent_direction(Field::R, pts, rng);
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    norm_sq += dir[i].squaredNorm();
    CHECK(std::abs(oracle::inner(pts[i], dir[i])) < 1e-12);
  }
  CHECK(norm_sq == doctest::Approx(1.0));
}

TEST_CASE("config validation") {
  OptimizerConfig c;
  CHECK_NOTHROW(c.validate());
  c.growth = 1.0;
  CHECK_THROWS_AS(c.validate(), InvalidParameter);
  c = OptimizerConfig{};
  c.beta_end = 1.0;
  CHECK_THROWS_AS(c.validate(), InvalidParameter);
  c = OptimizerConfig{};
  c.grad_tol = 0.0;
  CHECK_THROWS_AS(c.validate(), InvalidParameter);
  c = OptimizerConfig{};
  c.restarts = 0;
  CHECK_THROWS_AS(c.validate(), InvalidParameter);
}

TEST_CASE("optimize examples") {
  const auto pent = optimize(Field::R, 2, 1, 5, OptimizerConfig{});
  CHECK(std::abs(pent.report.min_distance - 2.0 * std::sin(std::numbers::pi / 5)) <= 1e-3);

  const auto two = optimize(Field::R, 1, 1, 2, OptimizerConfig{});
  CHECK(two.report.min_distance == 2.0);
  CHECK(two.code[0](0, 0) == -two.code[1](0, 0));

  const auto four = optimize(Field::C, 1, 1, 4, OptimizerConfig{});
  CHECK(std::abs(four.report.min_distance - std::sqrt(2.0)) <= 1e-3);

  // Only two points exist in St_R(1,1), so a third must repeat one.
  CHECK(optimize(Field::R, 1, 1, 3, OptimizerConfig{}).report.min_distance == 0.0);
  CHECK_THROWS_AS(optimize(Field::R, 1, 2, 3, OptimizerConfig{}), InvalidParameter);
}

TEST_CASE("optimize is deterministic and independent of threads") {
  OptimizerConfig c = small_config();
  c.seed = 17;
  c.threads = 1;
  const auto a = optimize(Field::C, 3, 2, 7, c);
  const auto b = optimize(Field::C, 3, 2, 7, c);
  c.threads = 3;
  const auto t = optimize(Field::C, 3, 2, 7, c);
  CHECK(identical(a.code, b.code));
  CHECK(identical(a.code, t.code));
  CHECK(a.best_restart == t.best_restart);
  CHECK(a.restart_min_distances == t.restart_min_distances);
  c.seed = 18;
  CHECK_FALSE(identical(a.code, optimize(Field::C, 3, 2, 7, c).code));
}

TEST_CASE("best restart wins, lowest index on ties") {
  const auto res = optimize(Field::R, 3, 2, 6, small_config());
  REQUIRE(res.restart_min_distances.size() == 4);
  const double best = res.restart_min_distances[static_cast<std::size_t>(res.best_restart)];
  for (std::size_t i = 0; i < res.restart_min_distances.size(); ++i) {
    CHECK(res.restart_min_distances[i] <= best);
    if (static_cast<int>(i) < res.best_restart) CHECK(res.restart_min_distances[i] < best);
  }
  CHECK(res.report.min_distance == best);
  CHECK(res.report.min_distance <= simplex_bound(2, 6) + 1e-9);
}

TEST_CASE("iterates stay on the manifold and the surrogate ascends") {
  OptimizerConfig c = small_config();
  c.threads = 2;
  std::map<std::pair<int, int>, double> last;
  int steps = 0;
  double worst_defect = 0.0;
  bool monotone = true;
  optimize(Field::C, 3, 2, 6, c, [&](const IterateInfo& info) {
    ++steps;
    for (const auto& x : *info.points) {
      worst_defect = std::max(worst_defect, orthonormality_defect(x));
    }
    const auto key = std::pair{info.restart, info.epoch};
    if (auto it = last.find(key); it != last.end() && info.surrogate < it->second) monotone = false;
    last[key] = info.surrogate;
  });
  CHECK(steps > 0);
  CHECK(worst_defect <= 1e-8);
  CHECK(monotone);
}
