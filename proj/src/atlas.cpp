#include "stiefel/atlas.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "stiefel/bounds.hpp"
#include "stiefel/designs.hpp"
#include "stiefel/orthoplex_codes.hpp"
#include "stiefel/simplex_codes.hpp"

namespace stiefel {

namespace {

constexpr double kTieTol = 1e-9;

double chord_sq(int k) { return 4.0 - 4.0 * std::cos(2.0 * std::numbers::pi / k); }

Matrix rotation(double t) {
  Matrix m(2, 2);
  m << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  return m;
}

Matrix reflection(double t) {
  Matrix m(2, 2);
  m << std::cos(t), std::sin(t), std::sin(t), -std::cos(t);
  return m;
}

void require_n(int n) {
  if (n < 2) throw InvalidParameter("need n >= 2");
}

using Key = std::tuple<int, int, int, int>;

class SscSearch {
 public:
  std::optional<Candidate> find(Field field, int d, int r, int n) {
    if (r < 1 || d < r || n < 2) return std::nullopt;
    if (n > simplex_cap(field, d, r)) return std::nullopt;
    const Key key{static_cast<int>(field), d, r, n};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    memo_[key] = std::nullopt;  // guards against cycles
    auto found = search(field, d, r, n);
    memo_[key] = found;
    return found;
  }

 private:
  template <typename Build>
  static std::optional<Candidate> attempt(std::string provenance, Build build) {
    try {
      StiefelCode code = build();
      if (!is_ssc(code)) return std::nullopt;
      const double sq = simplex_bound_sq(code.r(), code.n()).value();
      return Candidate{std::move(provenance), std::move(code), sq, Classification::SSC};
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  std::optional<Candidate> search(Field field, int d, int r, int n) {
    const int m = extension_degree(field);
    if (r == 1 && n <= m * d + 1) {
      if (auto c = attempt("ssc_sphere", [&] { return ssc_sphere(field, d, n); })) return c;
    }
    if (r == d && field == Field::R && n == d + 1) {
      if (auto c = attempt("ssc_regular_representation",
                           [&] { return ssc_regular_representation(d); })) {
        return c;
      }
    }
    if (r == d && std::countr_zero(static_cast<unsigned>(d)) <= 3 &&
        n <= radon_hurwitz(field, d) + 1) {
      if (auto c = attempt("ssc_radon_hurwitz", [&] { return ssc_radon_hurwitz(field, d, n); })) {
        return c;
      }
    }
    if (r == 2 && d % 2 == 0 && n <= m * d + 1) {
      if (auto c = attempt("ssc_symplectic_lift",
                           [&] { return ssc_symplectic_lift(field, d, n); })) {
        return c;
      }
    }
    for (const auto& name : builtin_design_names()) {
      const ResolvableDesign rd = builtin_design(name);
      const BIBD& des = rd.design;
      if (des.v != n || d % des.b != 0 || r % des.rep != 0) continue;
      const int d0 = d / des.b;
      const int s = r / des.rep;
      if (auto seed = find(field, d0, s, des.k)) {
        if (auto c = attempt("ssc_from_bibd(" + name + ", " + seed->provenance + ")",
                             [&] { return ssc_from_bibd(seed->code, des, rd.resolution); })) {
          return c;
        }
      }
    }
    if (field == Field::C) {
      if (auto base = find(Field::R, d, r, n)) {
        if (auto c = attempt("ssc_complexify(" + base->provenance + ")",
                             [&] { return ssc_complexify(base->code); })) {
          return c;
        }
      }
    }
    if (field == Field::R && d % 2 == 0 && r % 2 == 0) {
      if (auto base = find(Field::C, d / 2, r / 2, n)) {
        if (auto c = attempt("ssc_realify(" + base->provenance + ")",
                             [&] { return ssc_realify(base->code); })) {
          return c;
        }
      }
    }
    for (int k = 2; k <= r; ++k) {
      if (d % k != 0 || r % k != 0) continue;
      if (auto base = find(field, d / k, r / k, n)) {
        if (auto c = attempt("ssc_kronecker(" + base->provenance + ", " + std::to_string(k) + ")",
                             [&] { return ssc_kronecker(base->code, k); })) {
          return c;
        }
      }
    }
    if (d > r) {
      if (auto base = find(field, d - 1, r, n)) {
        if (auto c = attempt("ssc_pad_row(" + base->provenance + ")",
                             [&] { return ssc_pad_row(base->code); })) {
          return c;
        }
      }
    }
    return std::nullopt;
  }

  std::map<Key, std::optional<Candidate>> memo_;
};

}  // namespace

int o2_k(int a, int b) {
  if (a < 0 || b < 0 || a + b < 2) throw InvalidParameter("o2_k needs a, b >= 0 and a + b >= 2");
  if (std::min(a, b) == 0) return std::max(a, b);
  return std::max({a, b, 4});
}

O2Solution o2_solution(int n) {
  require_n(n);
  O2Solution best{n, 0, 0, 0, 0.0};
  for (int a = (n + 1) / 2; a <= n; ++a) {
    const int k = o2_k(a, n - a);
    if (best.k_n == 0 || k < best.k_n) best = {n, k, a, n - a, 0.0};
  }
  best.min_distance = std::sqrt(chord_sq(best.k_n));
  return best;
}

StiefelCode o2_code(int n) {
  const O2Solution sol = o2_solution(n);
  std::vector<Matrix> pts;
  for (int j = 0; j < sol.a; ++j) pts.push_back(rotation(2.0 * std::numbers::pi * j / sol.a));
  for (int j = 0; j < sol.b; ++j) pts.push_back(reflection(2.0 * std::numbers::pi * j / sol.b));
  return StiefelCode(Field::R, std::move(pts));
}

StiefelCode circle_code(int n) {
  require_n(n);
  std::vector<Matrix> pts;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    Matrix x(2, 1);
    x << std::cos(t), std::sin(t);
    pts.push_back(std::move(x));
  }
  return StiefelCode(Field::R, std::move(pts));
}

StiefelCode u1_code(int n) {
  require_n(n);
  std::vector<Matrix> pts;
  for (int k = 0; k < n; ++k) {
    pts.push_back(Matrix::Constant(1, 1, std::polar(1.0, 2.0 * std::numbers::pi * k / n)));
  }
  return StiefelCode(Field::C, std::move(pts));
}

StiefelCode two_point_code(int n) {
  require_n(n);
  std::vector<Matrix> pts;
  for (int k = 0; k < n; ++k) pts.push_back(Matrix::Constant(1, 1, k % 2 == 0 ? 1.0 : -1.0));
  return StiefelCode(Field::R, std::move(pts));
}

bool matches_claim(const Candidate& c, const CodeReport& rep) {
  if (rep.classification == Classification::Invalid) return false;
  if (c.claimed_class && rep.classification != *c.claimed_class) return false;
  return rep.min_distance_sq >= c.claimed_distance_sq - rep.tol;
}

std::optional<Candidate> find_ssc(Field field, int d, int r, int n) {
  return SscSearch{}.find(field, d, r, n);
}

std::vector<Candidate> exact_candidates(Field field, int d, int r, int n) {
  require_n(n);
  if (r < 1 || d < r) throw InvalidParameter("need d >= r >= 1");
  std::vector<Candidate> out;
  const double pi = std::numbers::pi;
  auto chord_on_circle = [pi](int k) { return 4.0 * std::pow(std::sin(pi / k), 2); };

  if (field == Field::R && d == 1) {
    out.push_back({"two_point_code", two_point_code(n), n == 2 ? 4.0 : 0.0, std::nullopt});
  }
  if (field == Field::R && d == 2 && r == 1) {
    out.push_back({"circle_code", circle_code(n), chord_on_circle(n), std::nullopt});
  }
  // C_4 on U(1) is the orthoplex orbit itself; let that route name it.
  if (field == Field::C && d == 1 && n != 4) {
    out.push_back({"u1_code", u1_code(n), chord_on_circle(n), std::nullopt});
  }
  if (field == Field::R && d == 2 && r == 2) {
    out.push_back({"o2_code", o2_code(n), chord_sq(o2_solution(n).k_n), std::nullopt});
  }

  if (auto ssc = find_ssc(field, d, r, n)) out.push_back(std::move(*ssc));

  const double orth_sq = 2.0 * r;
  const bool in_regime = n > simplex_cap(field, d, r);
  // Below the regime a prefix may do better than sqrt(2r), so only the
  // distance floor is claimed.
  const std::optional<Classification> regime_class =
      in_regime ? std::optional(Classification::SOC) : std::nullopt;
  if (field == Field::C && n <= 4 * d * r) {
    out.push_back({in_regime ? "soc_complex_orbit" : "complex_orbit_prefix",
                   StiefelCode(Field::C, complex_orbit_points(d, r, n)), orth_sq, regime_class});
  }
  if (field == Field::R && r == 1 && n > d + 1 && n <= 2 * d) {
    out.push_back({"soc_sphere_real", soc_sphere_real(d, n), orth_sq, Classification::SOC});
  }
  if (field == Field::R && r >= 2 && r % 4 != 1) {
    try {
      if (n <= real_hadamard_size(d, r)) {
        out.push_back({in_regime ? "soc_real_hadamard" : "real_hadamard_prefix",
                       soc_real_hadamard(d, r).prefix(n), orth_sq, regime_class});
      }
    } catch (const Unsupported&) {
    }
  }
  return out;
}

BestKnown best_known(Field field, int d, int r, int n, const OptimizerConfig& fallback) {
  std::optional<BestKnown> best;
  for (auto& cand : exact_candidates(field, d, r, n)) {
    CodeReport rep = certify(cand.code);
    if (rep.classification == Classification::Invalid) continue;
    if (!best || rep.min_distance_sq > best->report.min_distance_sq + kTieTol) {
      best = BestKnown{std::move(cand.code), rep, std::move(cand.provenance), false};
    }
  }
  if (best) return std::move(*best);
  OptimizeResult res = optimize(field, d, r, n, fallback);
  return {std::move(res.code), res.report, "optimize", true};
}

}  // namespace stiefel
