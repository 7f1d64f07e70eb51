#include "clat/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "clat/error.hpp"

namespace clat {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::kInternalError, "Gaussian integer overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::kInternalError, "Gaussian integer overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::kInternalError, "Gaussian integer overflow");
  return r;
}

}  // namespace

bool GaussianInt::is_unit() const noexcept {
  return (std::abs(re) == 1 && im == 0) || (re == 0 && std::abs(im) == 1);
}

GaussianInt operator+(GaussianInt a, GaussianInt b) {
  return {checked_add(a.re, b.re), checked_add(a.im, b.im)};
}

GaussianInt operator-(GaussianInt a, GaussianInt b) {
  return {checked_sub(a.re, b.re), checked_sub(a.im, b.im)};
}

GaussianInt operator-(GaussianInt a) { return GaussianInt{} - a; }

GaussianInt operator*(GaussianInt a, GaussianInt b) {
  return {checked_sub(checked_mul(a.re, b.re), checked_mul(a.im, b.im)),
          checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
}

GaussianInt conj(GaussianInt a) noexcept { return {a.re, -a.im}; }

std::int64_t norm(GaussianInt a) { return checked_add(checked_mul(a.re, a.re), checked_mul(a.im, a.im)); }

GaussianInt exact_divide(GaussianInt a, GaussianInt b) {
  const std::int64_t d = norm(b);
  if (d == 0) fail(ErrorCode::kInternalError, "Gaussian division by zero");
  const GaussianInt num = a * conj(b);
  if (num.re % d != 0 || num.im % d != 0) fail(ErrorCode::kInternalError, "inexact Gaussian division");
  return {num.re / d, num.im / d};
}

GaussianMatrix GaussianMatrix::identity(std::size_t n) {
  GaussianMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = {1, 0};
  return m;
}

Matrix GaussianMatrix::to_complex() const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).to_complex();
  return m;
}

std::int64_t GaussianMatrix::height() const noexcept {
  std::int64_t h = 0;
  for (const GaussianInt& g : entries_) h = std::max({h, std::abs(g.re), std::abs(g.im)});
  return h;
}

GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::kDimensionMismatch, "Gaussian matmul shape mismatch");
  GaussianMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = c(i, j) + a(i, k) * b(k, j);
  return c;
}

GaussianInt exact_det(const GaussianMatrix& a) {
  if (a.rows() != a.cols()) fail(ErrorCode::kDimensionMismatch, "exact_det: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return {1, 0};
  GaussianMatrix m = a;
  GaussianInt prev{1, 0};
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return {0, 0};
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_divide(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      }
    }
    prev = m(k, k);
  }
  const GaussianInt d = m(n - 1, n - 1);
  return negate ? -d : d;
}

GaussianMatrix adjugate(const GaussianMatrix& a) {
  if (a.rows() != a.cols()) fail(ErrorCode::kDimensionMismatch, "adjugate: matrix is not square");
  const std::size_t n = a.rows();
  GaussianMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = {1, 0};
    return adj;
  }
  GaussianMatrix minor(n - 1, n - 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t i = 0, mi = 0; i < n; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, mj = 0; j < n; ++j) {
          if (j == c) continue;
          minor(mi, mj++) = a(i, j);
        }
        ++mi;
      }
      const GaussianInt cofactor = exact_det(minor);
      adj(c, r) = ((r + c) % 2 == 0) ? cofactor : -cofactor;
    }
  }
  return adj;
}

GaussianInt round_gaussian(Complex z) {
  return {static_cast<std::int64_t>(std::llround(z.real())),
          static_cast<std::int64_t>(std::llround(z.imag()))};
}

Rounding classify_rounding(Complex z, double slack) noexcept {
  const double dr = std::abs(z.real() - std::round(z.real()));
  const double di = std::abs(z.imag() - std::round(z.imag()));
  const double d = std::max(dr, di);
  if (d <= slack) return Rounding::kExact;
  if (d <= 10.0 * slack) return Rounding::kAmbiguous;
  return Rounding::kNonIntegral;
}

}  // namespace clat
