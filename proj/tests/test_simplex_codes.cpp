#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "ssc_check.hpp"
#include "stiefel/bounds.hpp"
#include "stiefel/designs.hpp"
#include "stiefel/errors.hpp"
#include "stiefel/simplex_codes.hpp"
#include "stiefel/verifier.hpp"

using namespace stiefel;

namespace {

double min_dist(const StiefelCode& c) { return std::sqrt(oracle::min_dist_sq(c)); }

Matrix rotation(double theta) {
  Matrix m(2, 2);
  m << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return m;
}

// The four 6x3 points displayed for the K4 worked example.
StiefelCode displayed_k4_code() {
  // Rows: points; columns: blocks {1,2},{3,4},{1,3},{2,4},{1,4},{2,3}.
  const int w[4][6] = {{+1, 0, -1, 0, +1, 0}, {-1, 0, 0, +1, 0, -1}, {0, +1, +1, 0, 0, +1},
                       {0, -1, 0, -1, -1, 0}};
  std::vector<Matrix> pts;
  for (const auto& row : w) {
    Matrix y = Matrix::Zero(6, 3);
    for (int b = 0; b < 6; ++b) y(b, b / 2) = row[b];
    pts.push_back(y);
  }
  return StiefelCode(Field::R, pts);
}

// Each pair of squared distances in `b` equals `scale` times the one in `a`.
void check_scaled(const StiefelCode& a, const StiefelCode& b, double scale) {
  REQUIRE(a.n() == b.n());
  for (Index i = 0; i < a.n(); ++i)
    for (Index j = i + 1; j < a.n(); ++j)
      CHECK(oracle::dist_sq(b[i], b[j]) == doctest::Approx(scale * oracle::dist_sq(a[i], a[j])).epsilon(1e-13));
}

}  // namespace

TEST_CASE("simplex vertices") {
  const auto s12 = simplex_vertices(1, 2);
  CHECK(s12.vectors.rows() == 1);
  CHECK(s12.vectors.cols() == 2);
  CHECK(std::abs(std::abs(s12.vectors(0, 0)) - 1.0) < 1e-15);
  CHECK(s12.vectors(0, 0) == doctest::Approx(-s12.vectors(0, 1)));

  for (int dim = 1; dim <= 9; ++dim) {
    for (int n = 2; n <= dim + 1; ++n) {
      CAPTURE(dim);
      CAPTURE(n);
      const auto s = simplex_vertices(dim, n);
      CHECK(s.vectors.rows() == dim);
      CHECK(s.vectors.cols() == n);
      const Eigen::MatrixXd g = s.vectors.transpose() * s.vectors;
      const Eigen::MatrixXd want =
          (static_cast<double>(n) / (n - 1)) * Eigen::MatrixXd::Identity(n, n) -
          Eigen::MatrixXd::Constant(n, n, 1.0 / (n - 1));
      CHECK((g - want).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK(s.vectors.rowwise().sum().cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
  CHECK_THROWS_AS(simplex_vertices(2, 4), InfeasibleParameters);
}

TEST_CASE("sphere codes") {
  const auto tri = ssc_sphere(Field::R, 2, 3);
  check_ssc(tri);
  CHECK(min_dist(tri) == doctest::Approx(std::sqrt(3.0)));

  const auto roots = ssc_sphere(Field::C, 1, 3);
  check_ssc(roots);
  CHECK(min_dist(roots) == doctest::Approx(std::sqrt(3.0)));
  // Cube roots of unity up to a common phase.
  const Complex phase = roots[0](0, 0);
  CHECK(std::abs(phase) == doctest::Approx(1.0));
  for (Index i = 1; i < 3; ++i) {
    const Complex q = roots[i](0, 0) / phase;
    CHECK(std::abs(std::pow(q, 3) - 1.0) < 1e-12);
  }

  const auto tet = ssc_sphere(Field::R, 3, 4);
  check_ssc(tet);
  CHECK(min_dist(tet) == doctest::Approx(std::sqrt(8.0 / 3.0)));

  CHECK_THROWS_AS(ssc_sphere(Field::R, 2, 4), InfeasibleParameters);
  CHECK_NOTHROW(ssc_sphere(Field::C, 2, 5));
  CHECK_THROWS_AS(ssc_sphere(Field::C, 2, 6), InfeasibleParameters);
}

TEST_CASE("pad row") {
  const auto pm = ssc_sphere(Field::R, 1, 2);
  const auto padded = ssc_pad_row(pm);
  CHECK(padded.d() == 2);
  check_ssc(padded);
  check_scaled(pm, padded, 1.0);

  const auto tri = ssc_pad_row(ssc_sphere(Field::R, 2, 3));
  CHECK(tri.d() == 3);
  for (const auto& x : tri.points()) CHECK(x(2, 0) == 0.0);
  check_ssc(tri);

  const auto rr = ssc_pad_row(ssc_regular_representation(2));
  CHECK(rr.d() == 3);
  CHECK(rr.r() == 2);
  check_ssc(rr);
  CHECK(oracle::min_dist_sq(rr) == doctest::Approx(6.0));

  const StiefelCode not_ssc(Field::R, {Matrix::Identity(2, 1), rotation(0.5).leftCols(1)});
  CHECK_THROWS_AS(ssc_pad_row(not_ssc), NotAnSSC);
}

TEST_CASE("kronecker") {
  const auto pm = ssc_sphere(Field::R, 1, 2);
  const auto k2 = ssc_kronecker(pm, 2);
  CHECK(k2.d() == 2);
  CHECK(k2.r() == 2);
  check_ssc(k2);
  CHECK(min_dist(k2) == doctest::Approx(std::sqrt(8.0)));
  CHECK((k2[0].cwiseAbs() - Matrix::Identity(2, 2).cwiseAbs()).norm() == 0.0);

  const auto tri = ssc_sphere(Field::R, 2, 3);
  const auto k = ssc_kronecker(tri, 2);
  CHECK(k.d() == 4);
  CHECK(k.r() == 2);
  check_ssc(k);
  CHECK(min_dist(k) == doctest::Approx(std::sqrt(6.0)));
  check_scaled(tri, k, 2.0);

  const auto same = ssc_kronecker(tri, 1);
  for (Index i = 0; i < 3; ++i) CHECK(same[i] == tri[i]);
  CHECK_THROWS_AS(ssc_kronecker(tri, 0), InvalidParameter);
}

TEST_CASE("realify") {
  const auto roots = ssc_sphere(Field::C, 1, 3);
  const auto real = ssc_realify(roots);
  CHECK(real.field() == Field::R);
  CHECK(real.d() == 2);
  CHECK(real.r() == 2);
  check_ssc(real);
  CHECK(min_dist(real) == doctest::Approx(std::sqrt(6.0)));
  check_scaled(roots, real, 2.0);
  // Each realified unit complex number is a rotation.
  for (const auto& x : real.points()) {
    CHECK(std::abs(x(0, 0) - x(1, 1)) < 1e-15);
    CHECK(std::abs(x(0, 1) + x(1, 0)) < 1e-15);
  }

  const auto pm = ssc_realify(ssc_sphere(Field::C, 1, 2));
  check_ssc(pm);
  CHECK(min_dist(pm) == doctest::Approx(std::sqrt(8.0)));

  const auto c215 = ssc_sphere(Field::C, 2, 5);
  const auto r425 = ssc_realify(c215);
  CHECK(r425.d() == 4);
  CHECK(r425.r() == 2);
  check_ssc(r425);
  CHECK(min_dist(r425) == doctest::Approx(std::sqrt(5.0)));

  CHECK_THROWS_AS(ssc_realify(ssc_sphere(Field::R, 2, 3)), WrongField);

  Matrix z(1, 1);
  z(0, 0) = Complex(1.0, 2.0);
  Eigen::MatrixXd want(2, 2);
  want << 1, -2, 2, 1;
  CHECK(realify_matrix(z) == want);
}

TEST_CASE("complexify") {
  const auto pm = ssc_complexify(ssc_sphere(Field::R, 1, 2));
  CHECK(pm.field() == Field::C);
  check_ssc(pm);

  const auto rr = ssc_regular_representation(2);
  const auto crr = ssc_complexify(rr);
  check_ssc(crr);
  check_scaled(rr, crr, 1.0);

  const auto rd = builtin_design("k4-edges");
  const auto k4 = ssc_from_bibd(ssc_sphere(Field::R, 1, 2), rd.design, rd.resolution);
  const auto ck4 = ssc_complexify(k4);
  CHECK(ck4.field() == Field::C);
  check_ssc(ck4);

  CHECK_THROWS_AS(ssc_complexify(ck4), WrongField);
}

TEST_CASE("hurwitz-radon families") {
  const auto r2 = hurwitz_radon_family(Field::R, 2);
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == Matrix::Identity(2, 2));
  CHECK(std::abs(r2[1].trace()) == 0.0);

  for (int d : {1, 2, 3, 4, 6, 8, 12, 24, 40}) {
    for (Field f : {Field::R, Field::C}) {
      CAPTURE(d);
      const auto fam = hurwitz_radon_family(f, d);
      CHECK(static_cast<std::int64_t>(fam.size()) == radon_hurwitz(f, d));
      CHECK_NOTHROW(validate_hr_family(fam, f));
      // Orthonormal under Re Tr / d, and every pair anticommutes in the
      // A_j^* A_k sense.
      for (std::size_t j = 0; j < fam.size(); ++j) {
        CHECK((fam[j].adjoint() * fam[j] - Matrix::Identity(d, d)).norm() < 1e-12);
        if (f == Field::R) CHECK(is_real(fam[j]));
        for (std::size_t k = j + 1; k < fam.size(); ++k) {
          CHECK(std::abs(oracle::inner(fam[j], fam[k])) < 1e-12);
          CHECK((fam[j].adjoint() * fam[k] + fam[k].adjoint() * fam[j]).norm() < 1e-12);
        }
      }
    }
  }
  const auto c1 = hurwitz_radon_family(Field::C, 1);
  REQUIRE(c1.size() == 2);
  CHECK(c1[0](0, 0) == Complex(1, 0));
  CHECK(std::abs(c1[1](0, 0)) == doctest::Approx(1.0));
  CHECK(c1[1](0, 0).real() == doctest::Approx(0.0));

  CHECK_THROWS_AS(hurwitz_radon_family(Field::R, 16), UnsupportedDimension);
  CHECK_THROWS_AS(hurwitz_radon_family(Field::C, 48), UnsupportedDimension);
}

TEST_CASE("validate_hr_family rejects bad generators") {
  std::vector<Matrix> commuting = {Matrix::Identity(2, 2), Matrix::Identity(2, 2)};
  CHECK_THROWS_AS(validate_hr_family(commuting, Field::R), InvalidParameter);
  std::vector<Matrix> scaled = {2.0 * Matrix::Identity(2, 2)};
  CHECK_THROWS_AS(validate_hr_family(scaled, Field::R), InvalidParameter);
  Matrix i2 = Matrix::Identity(2, 2) * Complex(0, 1);
  CHECK_THROWS_AS(validate_hr_family({Matrix::Identity(2, 2), i2}, Field::R), InvalidParameter);
  CHECK_NOTHROW(validate_hr_family({Matrix::Identity(2, 2), i2}, Field::C));
}

TEST_CASE("radon-hurwitz simplex codes") {
  const auto r23 = ssc_radon_hurwitz(Field::R, 2, 3);
  check_ssc(r23);
  CHECK(min_dist(r23) == doctest::Approx(std::sqrt(6.0)));
  // Points are cos t I + sin t J, so rotations.
  for (const auto& x : r23.points()) {
    CHECK(std::abs(x(0, 0) - x(1, 1)) < 1e-14);
    CHECK(std::abs(x(0, 1) + x(1, 0)) < 1e-14);
  }

  const auto c13 = ssc_radon_hurwitz(Field::C, 1, 3);
  check_ssc(c13);
  const Complex phase = c13[0](0, 0);
  for (Index i = 1; i < 3; ++i) CHECK(std::abs(std::pow(c13[i](0, 0) / phase, 3) - 1.0) < 1e-12);

  const auto r89 = ssc_radon_hurwitz(Field::R, 8, 9);
  check_ssc(r89);
  CHECK(oracle::min_dist_sq(r89) == doctest::Approx(18.0));

  CHECK_THROWS_AS(ssc_radon_hurwitz(Field::R, 2, 4), InfeasibleParameters);
  CHECK_THROWS_AS(ssc_radon_hurwitz(Field::R, 16, 3), UnsupportedDimension);

  // A supplied family takes the place of the built-in one.
  const auto fam = hurwitz_radon_family(Field::C, 4);
  const auto from_file = ssc_radon_hurwitz(Field::C, 7, fam);
  check_ssc(from_file);
  CHECK(from_file.d() == 4);
}

TEST_CASE("regular representation") {
  const auto r1 = ssc_regular_representation(1);
  check_ssc(r1);
  CHECK(std::abs(r1[0](0, 0)) == doctest::Approx(1.0));
  CHECK(r1[0](0, 0).real() == doctest::Approx(-r1[1](0, 0).real()));

  const auto r2 = ssc_regular_representation(2);
  check_ssc(r2);
  CHECK(min_dist(r2) == doctest::Approx(std::sqrt(6.0)));
  for (const auto& x : r2.points()) {
    CHECK(x.real().determinant() == doctest::Approx(1.0));
    bool is_rot = false;
    for (int k = 0; k < 3; ++k) is_rot |= (x - rotation(2 * std::numbers::pi * k / 3)).norm() < 1e-12;
    CHECK(is_rot);
  }

  for (int d = 1; d <= 8; ++d) {
    const auto c = ssc_regular_representation(d);
    CHECK(c.n() == d + 1);
    check_ssc(c);
    CHECK(oracle::min_dist_sq(c) == doctest::Approx(2.0 * d + 2.0));
  }
}

TEST_CASE("symplectic lift") {
  const auto r22 = ssc_symplectic_lift(Field::R, 2, 3);
  CHECK(r22.r() == 2);
  check_ssc(r22);
  CHECK(min_dist(r22) == doctest::Approx(std::sqrt(6.0)));

  const auto c25 = ssc_symplectic_lift(Field::C, 2, 5);
  check_ssc(c25);
  CHECK(min_dist(c25) == doctest::Approx(std::sqrt(5.0)));

  const auto r45 = ssc_symplectic_lift(Field::R, 4, 5);
  check_ssc(r45);
  CHECK(min_dist(r45) == doctest::Approx(std::sqrt(5.0)));

  CHECK_THROWS_AS(ssc_symplectic_lift(Field::R, 3, 3), InfeasibleParameters);
  CHECK_THROWS_AS(ssc_symplectic_lift(Field::R, 2, 4), InfeasibleParameters);
}

TEST_CASE("BIBD composition: K4 worked example") {
  const auto rd = builtin_design("k4-edges");
  const auto pm = ssc_sphere(Field::R, 1, 2);
  const auto code = ssc_from_bibd(pm, rd.design, rd.resolution);
  CHECK(code.d() == 6);
  CHECK(code.r() == 3);
  CHECK(code.n() == 4);
  check_ssc(code);
  CHECK(oracle::min_dist_sq(code) == doctest::Approx(8.0).epsilon(1e-12));

  const auto shown = displayed_k4_code();
  check_ssc(shown);
  // Same supports as the displayed matrices, signs agreeing block by block
  // up to one flip per block.
  for (Index b = 0; b < 6; ++b) {
    double agree = 0.0;
    for (Index p = 0; p < 4; ++p) agree += (code[p](b, b / 2) * shown[p](b, b / 2)).real();
    for (Index p = 0; p < 4; ++p) {
      CHECK(std::abs(code[p](b, b / 2)) == doctest::Approx(std::abs(shown[p](b, b / 2))));
    }
    CHECK(std::abs(agree) == doctest::Approx(2.0));
  }

  const auto ccode = ssc_from_bibd(ssc_complexify(pm), rd.design, rd.resolution);
  CHECK(ccode.field() == Field::C);
  check_ssc(ccode);
}

TEST_CASE("BIBD composition over AG(2,3)") {
  const auto rd = builtin_design("ag-2-3");
  const auto code = ssc_from_bibd(ssc_sphere(Field::R, 2, 3), rd.design, rd.resolution);
  CHECK(code.d() == 24);
  CHECK(code.r() == 4);
  CHECK(code.n() == 9);
  check_ssc(code);
  CHECK(oracle::min_dist_sq(code) == doctest::Approx(9.0));
}

TEST_CASE("BIBD composition errors") {
  const auto rd = builtin_design("k4-edges");
  CHECK_THROWS_AS(ssc_from_bibd(ssc_sphere(Field::R, 2, 3), rd.design, rd.resolution),
                  ParameterMismatch);
  const Resolution bad{{{0, 2}, {1, 3}, {4, 5}}};
  CHECK_THROWS_AS(ssc_from_bibd(ssc_sphere(Field::R, 1, 2), rd.design, bad), InvalidParameter);
  // Two copies of K4 give lambda = 2.
  auto blocks = rd.design.blocks;
  blocks.insert(blocks.end(), rd.design.blocks.begin(), rd.design.blocks.end());
  const BIBD twice = make_bibd(4, blocks);
  const Resolution res2{{{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11}}};
  CHECK_THROWS_AS(ssc_from_bibd(ssc_sphere(Field::R, 1, 2), twice, res2), ParameterMismatch);
}
