#pragma once

// Lattices in C^n given as the image of Z^{2n} under an invertible
// real-linear map R^{2n} -> C^n, stored as the complex n x 2n matrix whose
// columns are the images of the standard basis vectors.

#include <cstddef>
#include <optional>
#include <vector>

#include "clat/gaussian.hpp"
#include "clat/numeric.hpp"
#include "clat/reallinear.hpp"

namespace clat {

class LatticeBasis {
 public:
  // Raises kDimensionMismatch unless g is n x 2n, kRankDeficient unless the
  // realification has full rank (smallest singular value > tol.rel * largest).
  static LatticeBasis make(Matrix g, const Tolerance& tol = kDefaultTolerance);
  // (Z[i])^n with generators e_1..e_n, i e_1..i e_n.
  static LatticeBasis standard(std::size_t n);

  std::size_t dim() const noexcept { return g_.rows(); }
  const Matrix& generators() const noexcept { return g_; }
  // Real 2n x 2n matrix [Re G; Im G].
  Matrix realified() const { return realify_columns(g_); }

  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;

 private:
  explicit LatticeBasis(Matrix g) : g_(std::move(g)) {}
  Matrix g_;
};

inline LatticeBasis from_generators(Matrix g, const Tolerance& tol = kDefaultTolerance) {
  return LatticeBasis::make(std::move(g), tol);
}

// Smallest singular value of the realification of an n x m generator
// matrix, m <= 2n. Positive exactly when the generators are R-independent.
double rank_margin(const Matrix& g);

double covolume(const LatticeBasis& l);

struct SameLatticeResult {
  bool same = false;
  bool ambiguous = false;  // some entry of R1^-1 R2 was too close to call
  double max_rounding_error = 0.0;
  std::optional<GaussianMatrix> witness;  // integer X with R2 = R1 X, |det X| = 1
};

SameLatticeResult same_lattice(const LatticeBasis& l1, const LatticeBasis& l2,
                               const Tolerance& tol = kDefaultTolerance);

// Element of Sigma: Gaussian-integer entries and determinant exactly 1.
class GaussianUnimodular {
 public:
  // Raises kDeterminantNotOne.
  static GaussianUnimodular make(GaussianMatrix b);

  const GaussianMatrix& matrix() const noexcept { return b_; }
  const GaussianMatrix& inverse() const noexcept { return inv_; }
  std::size_t dim() const noexcept { return b_.rows(); }

 private:
  GaussianUnimodular(GaussianMatrix b, GaussianMatrix inv) : b_(std::move(b)), inv_(std::move(inv)) {}
  GaussianMatrix b_;
  GaussianMatrix inv_;
};

// Raises kNonIntegralEntry (or kAmbiguousRounding) when an entry is not
// within tol.abs of a Gaussian integer, kDeterminantNotOne otherwise.
GaussianUnimodular sigma_membership(const Matrix& b, const Tolerance& tol = kDefaultTolerance);

// Lattice basis whose columns are those of the input reordered so that the
// first n are C-linearly independent; column k of the result is column
// perm[k] of the input.
struct L1Ordering {
  LatticeBasis basis;
  std::vector<std::size_t> perm;
};

L1Ordering permute_to_L1(const LatticeBasis& l, const Tolerance& tol = kDefaultTolerance);

// n x n complex Z whose imaginary part is invertible.
class PeriodMatrix {
 public:
  static PeriodMatrix make(Matrix z, const Tolerance& tol = kDefaultTolerance);
  const Matrix& z() const noexcept { return z_; }

 private:
  explicit PeriodMatrix(Matrix z) : z_(std::move(z)) {}
  Matrix z_;
};

// A maps the first n generators to e_1..e_n; the transformed basis is [I | Z].
struct LStarStar {
  Matrix a;
  PeriodMatrix z;
};

LStarStar normalize_to_Lstarstar(const LatticeBasis& l, const Tolerance& tol = kDefaultTolerance);

// x + iy -> x + Re(Z) y + i Im(Z) y.
SplitForm to_split_form(const PeriodMatrix& z);

// Lattice generated by the columns of A and i A, i.e. A((Z[i])^n).
LatticeBasis lattice_of(const Matrix& a, const Tolerance& tol = kDefaultTolerance);

}  // namespace clat
