#include "clat/polar.hpp"

#include <cmath>
#include <string>

#include "clat/error.hpp"

namespace clat {

namespace {

Matrix hermitian_part(const Matrix& p) { return 0.5 * (p + adjoint(p)); }

void require_invertible(const Matrix& a, const Tolerance& tol, const char* what) {
  if (!a.is_square()) fail(ErrorCode::kDimensionMismatch, std::string(what) + ": matrix is not square");
  if (!classify(a, tol).in_gl) fail(ErrorCode::kSingularMatrix, std::string(what) + ": matrix is singular");
}

}  // namespace

GramForm GramForm::make(const Matrix& p, const Tolerance& tol) {
  if (!p.is_square()) fail(ErrorCode::kDimensionMismatch, "gram form must be square");
  const double scale = frobenius_norm(p);
  if (frobenius_norm(p - adjoint(p)) > tol.rel * scale + tol.abs) {
    fail(ErrorCode::kNotSelfAdjoint, "gram form is not self-adjoint");
  }
  Matrix h = hermitian_part(p);
  if (h.rows() > 0 && !(hermitian_eig(h, tol).values.front() > 0.0)) {
    fail(ErrorCode::kNotPositiveDefinite, "gram form is not positive definite");
  }
  return GramForm(std::move(h));
}

GroupMembership classify(const Matrix& a, const Tolerance& tol) {
  if (!a.is_square()) fail(ErrorCode::kDimensionMismatch, "classify: matrix is not square");
  const std::size_t n = a.rows();
  GroupMembership g;
  g.determinant = det(a);
  g.abs_det = std::abs(g.determinant);
  g.det_defect = std::abs(g.determinant - 1.0);
  g.unitary_defect = frobenius_norm(adjoint(a) * a - Matrix::identity(n));

  const auto s = singular_values(a);
  g.in_gl = n == 0 || (s.front() > 0.0 && s.back() > tol.rel * s.front());
  const double slack = tol.rel * static_cast<double>(n) + tol.abs;
  g.in_u = g.in_gl && g.unitary_defect <= slack;
  g.in_sl = g.in_gl && g.det_defect <= slack;
  g.in_su = g.in_u && g.in_sl;
  return g;
}

GramForm gram(const Matrix& a, const Tolerance& tol) {
  require_invertible(a, tol, "gram");
  return GramForm::make(hermitian_part(adjoint(a) * a), tol);
}

UnitaryEquivalence unitarily_equivalent(const Matrix& a1, const Matrix& a2, const Tolerance& tol) {
  if (a1.rows() != a2.rows() || a1.cols() != a2.cols()) {
    fail(ErrorCode::kDimensionMismatch, "unitarily_equivalent: sizes differ");
  }
  const GramForm g1 = gram(a1, tol);
  const GramForm g2 = gram(a2, tol);
  UnitaryEquivalence out;
  out.gram_distance = frobenius_norm(g1.matrix() - g2.matrix());
  const double n1 = frobenius_norm(a1);
  const double n2 = frobenius_norm(a2);
  out.threshold = tol.rel * (n1 * n1 + n2 * n2);
  if (out.gram_distance > out.threshold) return out;

  Matrix t = a2 * inverse(a1, tol);
  out.equivalent = classify(t, tol).in_u;
  out.witness = std::move(t);
  return out;
}

GramForm spd_sqrt(const GramForm& p, const Tolerance& tol) {
  const std::size_t n = p.dim();
  const HermitianEigen eig = hermitian_eig(p.matrix(), tol);
  Matrix scaled = eig.vectors;
  for (std::size_t k = 0; k < n; ++k) {
    if (!(eig.values[k] > 0.0)) fail(ErrorCode::kNotPositiveDefinite, "spd_sqrt: eigenvalue <= 0");
    const double r = std::sqrt(eig.values[k]);
    for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= r;
  }
  return GramForm::make(hermitian_part(scaled * adjoint(eig.vectors)), tol);
}

PolarDecomposition polar(const Matrix& a, const Tolerance& tol) {
  require_invertible(a, tol, "polar");
  const std::size_t n = a.rows();
  // A = W S V*  =>  U = W V*, P = V S V*.
  const Svd f = svd(a);
  Matrix vs = f.v;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) vs(i, k) *= f.sigma[k];
  Matrix u = f.u * adjoint(f.v);
  GramForm p = GramForm::make(hermitian_part(vs * adjoint(f.v)), tol);

  const double residual = frobenius_norm(a - u * p.matrix());
  if (residual > tol.rel * static_cast<double>(n) * frobenius_norm(a) + tol.abs) {
    fail(ErrorCode::kInternalError, "polar: reconstruction residual " + std::to_string(residual));
  }
  return PolarDecomposition{std::move(u), std::move(p)};
}

SlNormalization sl_normalize(const Matrix& a, const Tolerance& tol) {
  require_invertible(a, tol, "sl_normalize");
  const double n = static_cast<double>(a.rows());
  const Complex d = det(a);
  // std::arg lies in (-pi, pi], so the root's argument lies in (-pi/n, pi/n].
  const Complex delta = std::polar(std::pow(std::abs(d), 1.0 / n), std::arg(d) / n);
  return SlNormalization{(1.0 / delta) * a, delta};
}

GramForm su_sl_canonical(const Matrix& b, const Tolerance& tol) {
  const GroupMembership g = classify(b, tol);
  if (!g.in_sl) {
    fail(ErrorCode::kNotInSL, "su_sl_canonical: |det - 1| = " + std::to_string(g.det_defect));
  }
  GramForm p = gram(b, tol);
  const double d = std::abs(det(p.matrix()) - 1.0);
  if (d > tol.rel * static_cast<double>(b.rows()) * 10.0 + tol.abs) {
    fail(ErrorCode::kInternalError, "su_sl_canonical: det(gram) deviates from 1 by " + std::to_string(d));
  }
  return p;
}

}  // namespace clat
