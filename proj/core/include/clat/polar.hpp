#pragma once

// Canonical representatives for GL(C^n) modulo the unitary group: the Gram
// form A*A, its positive-definite square root, and the polar factorization.

#include <optional>

#include "clat/numeric.hpp"

namespace clat {

// Self-adjoint positive-definite n x n matrix.
class GramForm {
 public:
  // Raises kNotSelfAdjoint or kNotPositiveDefinite. The stored matrix is the
  // Hermitian part of p.
  static GramForm make(const Matrix& p, const Tolerance& tol = kDefaultTolerance);

  const Matrix& matrix() const noexcept { return p_; }
  std::size_t dim() const noexcept { return p_.rows(); }

 private:
  explicit GramForm(Matrix p) : p_(std::move(p)) {}
  Matrix p_;
};

struct GroupMembership {
  bool in_gl = false;
  bool in_sl = false;
  bool in_u = false;
  bool in_su = false;
  Complex determinant;
  double abs_det = 0.0;
  double unitary_defect = 0.0;  // ||A*A - I||_F
  double det_defect = 0.0;      // |det A - 1|
};

// GL: smallest singular value > tol.rel * largest.
// U: ||A*A - I|| <= tol.rel * n.  SL: |det - 1| <= tol.rel * n.
GroupMembership classify(const Matrix& a, const Tolerance& tol = kDefaultTolerance);

GramForm gram(const Matrix& a, const Tolerance& tol = kDefaultTolerance);

struct UnitaryEquivalence {
  bool equivalent = false;
  double gram_distance = 0.0;
  double threshold = 0.0;
  std::optional<Matrix> witness;  // T with A2 = T A1
};

UnitaryEquivalence unitarily_equivalent(const Matrix& a1, const Matrix& a2,
                                        const Tolerance& tol = kDefaultTolerance);

GramForm spd_sqrt(const GramForm& p, const Tolerance& tol = kDefaultTolerance);

struct PolarDecomposition {
  Matrix u;
  GramForm p;
};

// A = U P with U unitary and P = sqrt(A*A).
PolarDecomposition polar(const Matrix& a, const Tolerance& tol = kDefaultTolerance);

struct SlNormalization {
  Matrix a;       // delta^-1 A, determinant 1
  Complex delta;  // principal n-th root of det A
};

SlNormalization sl_normalize(const Matrix& a, const Tolerance& tol = kDefaultTolerance);

// Gram form of an SL matrix; raises kNotInSL otherwise.
GramForm su_sl_canonical(const Matrix& b, const Tolerance& tol = kDefaultTolerance);

}  // namespace clat
