#pragma once

// Dense complex linear algebra for small matrices (n <= 16 is the working
// regime). Everything here is a value type or a pure function.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace clat {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

// Relative and absolute slack used by every approximate predicate.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;

  // Validates rel > 0 and abs >= 0.
  static Tolerance make(double rel, double abs);
};

inline constexpr Tolerance kDefaultTolerance{};

// Row-major dense complex matrix. Real matrices are stored with zero
// imaginary parts.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  // Throws kDimensionMismatch if entries.size() != rows * cols and
  // kNonFinite on NaN/Inf.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Complex> d);
  static Matrix column(std::span<const Complex> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }
  Vector col(std::size_t j) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex s);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Complex s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);

Matrix matmul(const Matrix& a, const Matrix& b);
Vector matvec(const Matrix& a, std::span<const Complex> v);
Matrix adjoint(const Matrix& a);
Matrix transpose(const Matrix& a);
// Entrywise complex conjugate (not the adjoint).
Matrix conjugate(const Matrix& a);
Matrix real_part(const Matrix& a);
Matrix imag_part(const Matrix& a);
bool is_real(const Matrix& a);

// Columns [first, first + count).
Matrix columns(const Matrix& a, std::size_t first, std::size_t count);
Matrix hstack(const Matrix& left, const Matrix& right);
Matrix vstack(const Matrix& top, const Matrix& bottom);

double frobenius_norm(const Matrix& a);
double max_abs(const Matrix& a);
double norm(std::span<const Complex> v);

// Real 2n x m matrix [Re G; Im G]: the action of G, read as a real-linear map
// R^m -> C^n, in real coordinates of C^n.
Matrix realify_columns(const Matrix& g);
// Real 2n x 2n matrix [[Re A, -Im A], [Im A, Re A]] of a complex-linear A.
Matrix realify_complex_linear(const Matrix& a);

// Gaussian elimination with partial pivoting. A pivot with magnitude at or
// below tol.rel times the largest initial column norm of A raises
// kSingularMatrix.
Matrix solve(const Matrix& a, const Matrix& b, const Tolerance& tol = kDefaultTolerance);
Matrix inverse(const Matrix& a, const Tolerance& tol = kDefaultTolerance);
Complex det(const Matrix& a);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  Matrix vectors;              // columns are eigenvectors
};

// Cyclic Jacobi rotations. Raises kNotSelfAdjoint unless
// ||P - P*|| <= tol.rel * ||P|| + tol.abs.
HermitianEigen hermitian_eig(const Matrix& p, const Tolerance& tol = kDefaultTolerance);

struct Svd {
  Matrix u;                   // rows x cols, orthonormal columns where sigma > 0
  std::vector<double> sigma;  // descending
  Matrix v;                   // cols x cols unitary
};

// Thin SVD by one-sided (Hestenes) Jacobi; requires rows >= cols.
Svd svd(const Matrix& a);

// min(rows, cols) nonnegative values, descending.
std::vector<double> singular_values(const Matrix& a, const Tolerance& tol = kDefaultTolerance);
double operator_norm(const Matrix& a);
double smallest_singular_value(const Matrix& a);

}  // namespace clat
