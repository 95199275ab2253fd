#include "stiefel/simplex_codes.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "stiefel/bounds.hpp"
#include "stiefel/verifier.hpp"

namespace stiefel {

namespace {

void require_ssc(const StiefelCode& code) {
  const CodeReport rep = certify(code);
  if (rep.classification != Classification::SSC) {
    throw NotAnSSC("input is not a simplex code (classified " +
                   std::string(to_string(rep.classification)) + ")");
  }
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Real Clifford generators as Kronecker words over
// I, J = [[0,-1],[1,0]], P = diag(1,-1), Q = [[0,1],[1,0]].
Eigen::MatrixXd kron_word(const char* word) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(1, 1);
  for (const char* c = word; *c; ++c) {
    Eigen::Matrix2d f;
    switch (*c) {
      case 'J':
        f << 0, -1, 1, 0;
        break;
      case 'P':
        f << 1, 0, 0, -1;
        break;
      case 'Q':
        f << 0, 1, 1, 0;
        break;
      default:
        f.setIdentity();
    }
    out = kron(out, Eigen::MatrixXd(f));
  }
  return out;
}

std::vector<Matrix> real_family_pow2(int v) {
  static const std::vector<std::vector<const char*>> words = {
      {},
      {"J"},
      {"IJ", "JP", "JQ"},
      {"IIJ", "IJP", "JIQ", "JPP", "JQP", "PJQ", "QJQ"},
  };
  const Index size = Index{1} << v;
  std::vector<Matrix> fam{Matrix::Identity(size, size)};
  for (const char* w : words[static_cast<std::size_t>(v)]) fam.push_back(complexify(kron_word(w)));
  return fam;
}

// I together with i*gamma_j for 2c+1 anticommuting Hermitian Pauli words
// (Jordan-Wigner) on c qubits.
std::vector<Matrix> complex_family_pow2(int c) {
  const Complex i1(0, 1);
  Matrix id2 = Matrix::Identity(2, 2);
  Matrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, -i1, i1, 0;
  z << 1, 0, 0, -1;
  auto word = [&](int zs, const Matrix& mid, bool has_mid) {
    Matrix out = Matrix::Identity(1, 1);
    for (int q = 0; q < c; ++q) {
      if (q < zs) {
        out = kron(out, z);
      } else if (q == zs && has_mid) {
        out = kron(out, mid);
      } else {
        out = kron(out, id2);
      }
    }
    return out;
  };
  const Index size = Index{1} << c;
  std::vector<Matrix> fam{Matrix::Identity(size, size)};
  for (int j = 0; j < c; ++j) {
    fam.push_back(i1 * word(j, x, true));
    fam.push_back(i1 * word(j, y, true));
  }
  fam.push_back(i1 * word(c, z, false));
  return fam;
}

StiefelCode sphere_code(Field field, int d, int n) {
  const int m = extension_degree(field);
  const SimplexVertices sv = simplex_vertices(m * d, n);
  std::vector<Matrix> pts;
  for (int i = 0; i < n; ++i) {
    Matrix x(d, 1);
    for (int k = 0; k < d; ++k) {
      x(k, 0) = field == Field::R ? Complex(sv.vectors(k, i), 0)
                                  : Complex(sv.vectors(2 * k, i), sv.vectors(2 * k + 1, i));
    }
    pts.push_back(std::move(x));
  }
  return StiefelCode(field, std::move(pts));
}

}  // namespace

SimplexVertices simplex_vertices(int dim, int n) {
  if (n < 2) throw InvalidParameter("a simplex needs n >= 2");
  if (dim < 1) throw InvalidParameter("dim must be >= 1");
  if (n > dim + 1) {
    throw InfeasibleParameters("a regular simplex with " + std::to_string(n) +
                               " vertices does not fit in R^" + std::to_string(dim));
  }
  const Eigen::MatrixXd centring = Eigen::MatrixXd::Identity(n, n) -
                                   Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(centring.leftCols(n - 1));
  const Eigen::MatrixXd basis = qr.householderQ() * Eigen::MatrixXd::Identity(n, n - 1);
  SimplexVertices sv{dim, n, Eigen::MatrixXd::Zero(dim, n)};
  for (int i = 0; i < n; ++i) {
    sv.vectors.col(i).head(n - 1) = basis.row(i).transpose().normalized();
  }
  return sv;
}

StiefelCode ssc_sphere(Field field, int d, int n) {
  if (d < 1) throw InvalidParameter("d must be >= 1");
  if (n < 2) throw InvalidParameter("n must be >= 2");
  const int cap = extension_degree(field) * d + 1;
  if (n > cap) {
    throw InfeasibleParameters("no (" + std::to_string(d) + ",1," + std::to_string(n) +
                               ") simplex code: n exceeds m*d+1 = " + std::to_string(cap));
  }
  return sphere_code(field, d, n);
}

StiefelCode ssc_pad_row(const StiefelCode& code) {
  require_ssc(code);
  std::vector<Matrix> pts;
  for (const auto& p : code.points()) {
    Matrix y = Matrix::Zero(p.rows() + 1, p.cols());
    y.topRows(p.rows()) = p;
    pts.push_back(std::move(y));
  }
  return StiefelCode(code.field(), std::move(pts));
}

StiefelCode ssc_kronecker(const StiefelCode& code, int k) {
  if (k < 1) throw InvalidParameter("Kronecker factor k must be >= 1");
  require_ssc(code);
  const Matrix id = Matrix::Identity(k, k);
  std::vector<Matrix> pts;
  for (const auto& p : code.points()) pts.push_back(kron(id, p));
  return StiefelCode(code.field(), std::move(pts));
}

Eigen::MatrixXd realify_matrix(const Matrix& m) {
  Eigen::MatrixXd out(2 * m.rows(), 2 * m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      const double a = m(i, j).real();
      const double b = m(i, j).imag();
      out.block<2, 2>(2 * i, 2 * j) << a, -b, b, a;
    }
  }
  return out;
}

StiefelCode realify_code(const StiefelCode& code) {
  std::vector<Matrix> pts;
  for (const auto& p : code.points()) pts.push_back(complexify(realify_matrix(p)));
  return StiefelCode(Field::R, std::move(pts));
}

StiefelCode ssc_realify(const StiefelCode& code) {
  if (code.field() != Field::C) throw WrongField("realification needs a complex code");
  require_ssc(code);
  return realify_code(code);
}

StiefelCode ssc_complexify(const StiefelCode& code) {
  if (code.field() != Field::R) throw WrongField("complexification needs a real code");
  require_ssc(code);
  return code.with_field(Field::C);
}

std::vector<Matrix> hurwitz_radon_family(Field field, int d) {
  if (d < 1) throw InvalidParameter("d must be >= 1");
  const int v = std::countr_zero(static_cast<unsigned>(d));
  if (v > 3) {
    throw UnsupportedDimension("Hurwitz-Radon family for d=" + std::to_string(d) +
                               " (2-adic valuation " + std::to_string(v) +
                               ") needs a generator file");
  }
  const int odd = d >> v;
  auto base = field == Field::R ? real_family_pow2(v) : complex_family_pow2(v);
  if (odd == 1) return base;
  const Matrix id = Matrix::Identity(odd, odd);
  for (auto& a : base) a = kron(a, id);
  return base;
}

void validate_hr_family(const std::vector<Matrix>& family, Field field, double tol) {
  if (family.empty()) throw InvalidParameter("Hurwitz-Radon family is empty");
  const Index d = family.front().rows();
  for (std::size_t k = 0; k < family.size(); ++k) {
    const Matrix& a = family[k];
    if (a.rows() != d || a.cols() != d) {
      throw InvalidParameter("family member " + std::to_string(k) + " is not " +
                             std::to_string(d) + "x" + std::to_string(d));
    }
    if (!is_stiefel(a, field, tol)) {
      throw InvalidParameter("family member " + std::to_string(k) + " is not " +
                             (field == Field::R ? "orthogonal" : "unitary"));
    }
    for (std::size_t j = 0; j < k; ++j) {
      const Matrix anti = family[j].adjoint() * a + a.adjoint() * family[j];
      if (anti.cwiseAbs().maxCoeff() > tol) {
        throw InvalidParameter("family members " + std::to_string(j) + " and " +
                               std::to_string(k) + " fail A_j^*A_k + A_k^*A_j = 0");
      }
    }
  }
}

StiefelCode ssc_radon_hurwitz(Field field, int n, const std::vector<Matrix>& family) {
  validate_hr_family(family, field);
  const int rho = static_cast<int>(family.size());
  if (n < 2) throw InvalidParameter("n must be >= 2");
  if (n > rho + 1) {
    throw InfeasibleParameters("Radon-Hurwitz simplex needs n <= rho+1 = " +
                               std::to_string(rho + 1));
  }
  const SimplexVertices sv = simplex_vertices(rho, n);
  const Index d = family.front().rows();
  std::vector<Matrix> pts;
  for (int i = 0; i < n; ++i) {
    Matrix x = Matrix::Zero(d, d);
    for (int k = 0; k < rho; ++k) x += sv.vectors(k, i) * family[static_cast<std::size_t>(k)];
    pts.push_back(std::move(x));
  }
  return StiefelCode(field, std::move(pts));
}

StiefelCode ssc_radon_hurwitz(Field field, int d, int n) {
  return ssc_radon_hurwitz(field, n, hurwitz_radon_family(field, d));
}

StiefelCode ssc_regular_representation(int d) {
  if (d < 1) throw InvalidParameter("d must be >= 1");
  const int g = d + 1;
  // Householder reflection Q with Q e_1 = 1/sqrt(g).
  Eigen::VectorXd w = -Eigen::VectorXd::Constant(g, 1.0 / std::sqrt(static_cast<double>(g)));
  w(0) += 1.0;
  const Eigen::MatrixXd q =
      Eigen::MatrixXd::Identity(g, g) - 2.0 * w * w.transpose() / w.squaredNorm();
  std::vector<Matrix> pts;
  for (int shift = 0; shift < g; ++shift) {
    Eigen::MatrixXd perm = Eigen::MatrixXd::Zero(g, g);
    for (int k = 0; k < g; ++k) perm((k + shift) % g, k) = 1.0;
    const Eigen::MatrixXd conj = q.transpose() * perm * q;
    pts.push_back(complexify(conj.bottomRightCorner(d, d)));
  }
  return StiefelCode(Field::R, std::move(pts));
}

StiefelCode ssc_symplectic_lift(Field field, int d, int n) {
  if (d < 2 || d % 2 != 0) throw InfeasibleParameters("symplectic lift needs even d");
  const StiefelCode base = ssc_sphere(field, d, n);
  const int h = d / 2;
  Matrix a = Matrix::Zero(d, d);
  a.topRightCorner(h, h) = -Matrix::Identity(h, h);
  a.bottomLeftCorner(h, h) = Matrix::Identity(h, h);
  std::vector<Matrix> pts;
  for (const auto& x : base.points()) {
    Matrix y(d, 2);
    y.col(0) = x.col(0);
    y.col(1) = (a * x.col(0)).conjugate();
    pts.push_back(std::move(y));
  }
  return StiefelCode(field, std::move(pts));
}

StiefelCode ssc_from_bibd(const StiefelCode& seed, const BIBD& design, const Resolution& res) {
  if (auto ok = verify_bibd(design); !ok) throw InvalidParameter("not a BIBD: " + ok.diagnostic);
  if (auto ok = verify_resolution(design, res); !ok) {
    throw InvalidParameter("not a resolution: " + ok.diagnostic);
  }
  if (design.lambda != 1) throw ParameterMismatch("composition needs lambda = 1");
  if (design.k != seed.n()) {
    throw ParameterMismatch("block size k=" + std::to_string(design.k) +
                            " differs from seed size n=" + std::to_string(seed.n()));
  }
  require_ssc(seed);

  std::vector<int> class_of(design.blocks.size());
  for (std::size_t c = 0; c < res.classes.size(); ++c) {
    for (int bi : res.classes[c]) class_of[static_cast<std::size_t>(bi)] = static_cast<int>(c);
  }
  const Index d = seed.d();
  const Index s = seed.r();
  const auto classes = static_cast<Index>(res.classes.size());
  std::vector<Matrix> pts(static_cast<std::size_t>(design.v),
                          Matrix::Zero(design.b * d, classes * s));
  for (std::size_t bi = 0; bi < design.blocks.size(); ++bi) {
    const auto& blk = design.blocks[bi];
    for (std::size_t pos = 0; pos < blk.size(); ++pos) {
      Matrix& y = pts[static_cast<std::size_t>(blk[pos] - 1)];
      y.block(static_cast<Index>(bi) * d, class_of[bi] * s, d, s) = seed[static_cast<Index>(pos)];
    }
  }
  return StiefelCode(seed.field(), std::move(pts));
}

}  // namespace stiefel
