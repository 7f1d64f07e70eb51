#pragma once

// Exact arithmetic over the Gaussian integers Z[i]. Overflow of the 64-bit
// components raises kInternalError instead of wrapping.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "clat/numeric.hpp"

namespace clat {

struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
  bool is_zero() const noexcept { return re == 0 && im == 0; }
  bool is_unit() const noexcept;
  Complex to_complex() const noexcept {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

GaussianInt operator+(GaussianInt a, GaussianInt b);
GaussianInt operator-(GaussianInt a, GaussianInt b);
GaussianInt operator-(GaussianInt a);
GaussianInt operator*(GaussianInt a, GaussianInt b);
GaussianInt conj(GaussianInt a) noexcept;
std::int64_t norm(GaussianInt a);
// Exact quotient; raises kInternalError when b does not divide a.
GaussianInt exact_divide(GaussianInt a, GaussianInt b);

class GaussianMatrix {
 public:
  GaussianMatrix() = default;
  GaussianMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static GaussianMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  GaussianInt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const GaussianInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Matrix to_complex() const;
  // Largest |Re| or |Im| over all entries.
  std::int64_t height() const noexcept;

  friend bool operator==(const GaussianMatrix&, const GaussianMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianInt> entries_;
};

GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b);

// Fraction-free (Bareiss) elimination; every division is exact in Z[i].
GaussianInt exact_det(const GaussianMatrix& a);
// adj(A) with A adj(A) = det(A) I.
GaussianMatrix adjugate(const GaussianMatrix& a);

// Nearest Gaussian integer of a complex number.
GaussianInt round_gaussian(Complex z);

enum class Rounding { kExact, kAmbiguous, kNonIntegral };

// kExact within slack of the nearest Gaussian integer, kAmbiguous within
// 10 * slack, kNonIntegral beyond.
Rounding classify_rounding(Complex z, double slack) noexcept;

}  // namespace clat
