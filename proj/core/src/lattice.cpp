#include "clat/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "clat/error.hpp"

namespace clat {

namespace {

bool full_rank(const Matrix& r, const Tolerance& tol) {
  const auto s = singular_values(r);
  return !s.empty() && s.front() > 0.0 && s.back() > tol.rel * s.front();
}

}  // namespace

LatticeBasis LatticeBasis::make(Matrix g, const Tolerance& tol) {
  if (g.rows() == 0 || g.cols() != 2 * g.rows()) {
    fail(ErrorCode::kDimensionMismatch, "lattice generators must form an n x 2n matrix");
  }
  if (!full_rank(realify_columns(g), tol)) {
    fail(ErrorCode::kRankDeficient, "lattice generators are not R-linearly independent");
  }
  return LatticeBasis(std::move(g));
}

LatticeBasis LatticeBasis::standard(std::size_t n) {
  const Matrix id = Matrix::identity(n);
  return LatticeBasis(hstack(id, Complex{0.0, 1.0} * id));
}

double rank_margin(const Matrix& g) {
  if (g.cols() > 2 * g.rows()) {
    fail(ErrorCode::kDimensionMismatch, "rank_margin: more than 2n generators");
  }
  return smallest_singular_value(realify_columns(g));
}

double covolume(const LatticeBasis& l) { return std::abs(det(l.realified()).real()); }

SameLatticeResult same_lattice(const LatticeBasis& l1, const LatticeBasis& l2, const Tolerance& tol) {
  if (l1.dim() != l2.dim()) fail(ErrorCode::kDimensionMismatch, "same_lattice: dimensions differ");
  const Matrix x = solve(l1.realified(), l2.realified(), tol);
  const std::size_t m = x.rows();

  SameLatticeResult out;
  GaussianMatrix rounded(m, m);
  bool any_ambiguous = false;
  bool any_nonintegral = false;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double v = x(i, j).real();
      const double err = std::abs(v - std::round(v));
      out.max_rounding_error = std::max(out.max_rounding_error, err);
      // X comes out of a linear solve, so its rounding noise scales with |X|.
      const double slack = tol.abs + tol.rel * std::max(1.0, std::abs(v));
      switch (classify_rounding(Complex{v, 0.0}, slack)) {
        case Rounding::kExact: break;
        case Rounding::kAmbiguous: any_ambiguous = true; break;
        case Rounding::kNonIntegral: any_nonintegral = true; break;
      }
      rounded(i, j) = {static_cast<std::int64_t>(std::llround(v)), 0};
    }
  }
  if (any_nonintegral) return out;
  if (any_ambiguous) {
    out.ambiguous = true;
    return out;
  }
  const GaussianInt d = exact_det(rounded);
  if ((d.re == 1 || d.re == -1) && d.im == 0) {
    out.same = true;
    out.witness = std::move(rounded);
  }
  return out;
}

GaussianUnimodular GaussianUnimodular::make(GaussianMatrix b) {
  if (b.rows() != b.cols()) fail(ErrorCode::kDimensionMismatch, "Sigma element must be square");
  const GaussianInt d = exact_det(b);
  if (d != GaussianInt{1, 0}) {
    fail(ErrorCode::kDeterminantNotOne,
         "determinant is " + std::to_string(d.re) + (d.im < 0 ? "" : "+") + std::to_string(d.im) + "i");
  }
  GaussianMatrix inv = adjugate(b);
  if (b * inv != GaussianMatrix::identity(b.rows())) {
    fail(ErrorCode::kInternalError, "adjugate of a determinant-one matrix is not its inverse");
  }
  return GaussianUnimodular(std::move(b), std::move(inv));
}

GaussianUnimodular sigma_membership(const Matrix& b, const Tolerance& tol) {
  if (!b.is_square()) fail(ErrorCode::kDimensionMismatch, "sigma_membership: matrix is not square");
  GaussianMatrix g(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const std::string where = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
      switch (classify_rounding(b(i, j), tol.abs)) {
        case Rounding::kExact: break;
        case Rounding::kAmbiguous:
          fail(ErrorCode::kAmbiguousRounding, where + " is too close to a Gaussian integer to call");
        case Rounding::kNonIntegral:
          fail(ErrorCode::kNonIntegralEntry, where + " is not a Gaussian integer");
      }
      g(i, j) = round_gaussian(b(i, j));
    }
  }
  return GaussianUnimodular::make(std::move(g));
}

L1Ordering permute_to_L1(const LatticeBasis& l, const Tolerance& tol) {
  const std::size_t n = l.dim();
  const std::size_t m = 2 * n;
  Matrix w = l.generators();
  std::vector<bool> used(m, false);
  std::vector<std::size_t> chosen;

  // Column-pivoted Gram-Schmidt over C: the pivot of a column is the norm
  // of its component orthogonal to the columns already chosen. The leftmost
  // column within a factor 2 of the largest pivot wins.
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<double> residual(m, -1.0);
    double largest = -1.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j]) continue;
      residual[j] = norm(w.col(j));
      largest = std::max(largest, residual[j]);
    }
    std::size_t best = m;
    for (std::size_t j = 0; j < m && best == m; ++j) {
      if (!used[j] && residual[j] >= 0.5 * largest) best = j;
    }
    const double best_norm = residual[best];
    used[best] = true;
    chosen.push_back(best);
    if (best_norm <= 0.0) continue;
    Vector q = w.col(best);
    for (Complex& c : q) c /= best_norm;
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j]) continue;
      Complex proj{};
      for (std::size_t i = 0; i < n; ++i) proj += std::conj(q[i]) * w(i, j);
      for (std::size_t i = 0; i < n; ++i) w(i, j) -= proj * q[i];
    }
  }

  std::sort(chosen.begin(), chosen.end());
  std::vector<std::size_t> perm = chosen;
  for (std::size_t j = 0; j < m; ++j)
    if (!used[j]) perm.push_back(j);

  const Matrix& g = l.generators();
  Matrix permuted(n, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i) permuted(i, k) = g(i, perm[k]);

  const auto s_block = singular_values(columns(permuted, 0, n));
  const double s_max = operator_norm(g);
  if (!(s_block.back() > tol.rel * s_max)) {
    fail(ErrorCode::kFirstBlockSingular, "permute_to_L1: no C-independent choice of n generators");
  }
  return L1Ordering{LatticeBasis::make(std::move(permuted), tol), std::move(perm)};
}

PeriodMatrix PeriodMatrix::make(Matrix z, const Tolerance& tol) {
  if (!z.is_square()) fail(ErrorCode::kDimensionMismatch, "period matrix must be square");
  if (!full_rank(imag_part(z), tol)) {
    fail(ErrorCode::kPeriodMatrixSingular, "imaginary part of the period matrix is singular");
  }
  return PeriodMatrix(std::move(z));
}

LStarStar normalize_to_Lstarstar(const LatticeBasis& l, const Tolerance& tol) {
  const std::size_t n = l.dim();
  const Matrix first = columns(l.generators(), 0, n);
  Matrix a;
  try {
    a = inverse(first, tol);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kSingularMatrix) throw;
    fail(ErrorCode::kFirstBlockSingular, "normalize_to_Lstarstar: first n generators are C-dependent");
  }
  Matrix z = a * columns(l.generators(), n, n);
  return LStarStar{std::move(a), PeriodMatrix::make(std::move(z), tol)};
}

SplitForm to_split_form(const PeriodMatrix& z) { return SplitForm{real_part(z.z()), imag_part(z.z())}; }

LatticeBasis lattice_of(const Matrix& a, const Tolerance& tol) {
  if (!a.is_square()) fail(ErrorCode::kDimensionMismatch, "lattice_of: matrix is not square");
  return LatticeBasis::make(hstack(a, Complex{0.0, 1.0} * a), tol);
}

}  // namespace clat
