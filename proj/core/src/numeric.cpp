#include "clat/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "clat/error.hpp"

namespace clat {

namespace {

void require_finite(std::span<const Complex> entries) {
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      fail(ErrorCode::kNonFinite, "matrix entry is not finite");
    }
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorCode::kDimensionMismatch,
         std::string(what) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
             " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square()) {
    fail(ErrorCode::kDimensionMismatch, std::string(what) + ": matrix is not square");
  }
}

}  // namespace

Tolerance Tolerance::make(double rel, double abs) {
  if (!(rel > 0.0) || !(abs >= 0.0) || !std::isfinite(rel) || !std::isfinite(abs)) {
    fail(ErrorCode::kNonFinite, "tolerance requires rel > 0 and abs >= 0");
  }
  return Tolerance{rel, abs};
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    fail(ErrorCode::kDimensionMismatch, "entry count does not match shape");
  }
  require_finite(entries_);
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) fail(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(entries));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const Complex> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  require_finite(d);
  return m;
}

Matrix Matrix::column(std::span<const Complex> v) {
  return Matrix(v.size(), 1, std::vector<Complex>(v.begin(), v.end()));
}

Vector Matrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "matrix sum");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "matrix difference");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

Matrix& Matrix::operator*=(Complex s) {
  for (Complex& z : entries_) z *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Complex s, Matrix a) { return a *= s; }
Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    fail(ErrorCode::kDimensionMismatch,
         "matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Vector matvec(const Matrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) {
    fail(ErrorCode::kDimensionMismatch, "matvec: vector length " + std::to_string(v.size()) +
                                            " vs " + std::to_string(a.cols()) + " columns");
  }
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex s{};
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Matrix adjoint(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix conjugate(const Matrix& a) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = std::conj(a(i, j));
  return c;
}

Matrix real_part(const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j).real();
  return c;
}

Matrix imag_part(const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j).imag();
  return c;
}

bool is_real(const Matrix& a) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [](const Complex& z) { return z.imag() == 0.0; });
}

Matrix columns(const Matrix& a, std::size_t first, std::size_t count) {
  if (first + count > a.cols()) fail(ErrorCode::kDimensionMismatch, "column range out of bounds");
  Matrix c(a.rows(), count);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < count; ++j) c(i, j) = a(i, first + j);
  return c;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) fail(ErrorCode::kDimensionMismatch, "hstack: row counts differ");
  Matrix c(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) c(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) c(i, left.cols() + j) = right(i, j);
  }
  return c;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) fail(ErrorCode::kDimensionMismatch, "vstack: column counts differ");
  Matrix c(top.rows() + bottom.rows(), top.cols());
  for (std::size_t j = 0; j < top.cols(); ++j) {
    for (std::size_t i = 0; i < top.rows(); ++i) c(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i) c(top.rows() + i, j) = bottom(i, j);
  }
  return c;
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (const Complex& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (const Complex& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Matrix realify_columns(const Matrix& g) {
  const std::size_t n = g.rows();
  Matrix r(2 * n, g.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      r(i, j) = g(i, j).real();
      r(n + i, j) = g(i, j).imag();
    }
  }
  return r;
}

Matrix realify_complex_linear(const Matrix& a) {
  require_square(a, "realify_complex_linear");
  const std::size_t n = a.rows();
  Matrix r(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r(i, j) = a(i, j).real();
      r(i, n + j) = -a(i, j).imag();
      r(n + i, j) = a(i, j).imag();
      r(n + i, n + j) = a(i, j).real();
    }
  }
  return r;
}

Matrix solve(const Matrix& a, const Matrix& b, const Tolerance& tol) {
  require_square(a, "solve");
  if (b.rows() != a.rows()) fail(ErrorCode::kDimensionMismatch, "solve: right-hand side rows");
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();

  double scale = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::norm(a(i, j));
    scale = std::max(scale, std::sqrt(s));
  }
  const double threshold = tol.rel * scale;

  Matrix lu = a;
  Matrix x = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) piv = i;
    if (std::abs(lu(piv, k)) <= threshold) {
      fail(ErrorCode::kSingularMatrix, "solve: pivot " + std::to_string(std::abs(lu(piv, k))) +
                                           " at column " + std::to_string(k) + " below threshold");
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      for (std::size_t j = 0; j < m; ++j) std::swap(x(k, j), x(piv, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu(i, k) / lu(k, k);
      if (f == Complex{}) continue;
      for (std::size_t j = k; j < n; ++j) lu(i, j) -= f * lu(k, j);
      for (std::size_t j = 0; j < m; ++j) x(i, j) -= f * x(k, j);
    }
  }
  for (std::size_t kk = n; kk-- > 0;) {
    for (std::size_t j = 0; j < m; ++j) {
      Complex s = x(kk, j);
      for (std::size_t c = kk + 1; c < n; ++c) s -= lu(kk, c) * x(c, j);
      x(kk, j) = s / lu(kk, kk);
    }
  }
  return x;
}

Matrix inverse(const Matrix& a, const Tolerance& tol) {
  require_square(a, "inverse");
  return solve(a, Matrix::identity(a.rows()), tol);
}

Complex det(const Matrix& a) {
  require_square(a, "det");
  const std::size_t n = a.rows();
  Matrix lu = a;
  Complex d = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) piv = i;
    if (lu(piv, k) == Complex{}) return 0.0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      d = -d;
    }
    d *= lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu(i, k) / lu(k, k);
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return d;
}

HermitianEigen hermitian_eig(const Matrix& p, const Tolerance& tol) {
  require_square(p, "hermitian_eig");
  const std::size_t n = p.rows();
  const double scale = frobenius_norm(p);
  if (frobenius_norm(p - adjoint(p)) > tol.rel * scale + tol.abs) {
    fail(ErrorCode::kNotSelfAdjoint, "hermitian_eig: matrix is not self-adjoint");
  }

  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (p(i, j) + std::conj(p(j, i)));
  }
  Matrix v = Matrix::identity(n);

  auto off_diagonal = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  constexpr double kEps = 1e-16;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal() <= kEps * scale) break;
    for (std::size_t pi = 0; pi + 1 < n; ++pi) {
      for (std::size_t qi = pi + 1; qi < n; ++qi) {
        const double r = std::abs(a(pi, qi));
        if (r == 0.0) continue;
        // Phase e^{i phi} of a_pq turns the 2x2 block real symmetric; then a
        // real rotation with P_pq = s, P_qp = -s zeroes it.
        const Complex phase = a(pi, qi) / r;
        const double app = a(pi, pi).real();
        const double aqq = a(qi, qi).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // Unitary W on columns (p, q): W_pp = c, W_pq = s,
        // W_qp = -s conj(phase), W_qq = c conj(phase).
        const Complex wpp = c;
        const Complex wpq = s;
        const Complex wqp = -s * std::conj(phase);
        const Complex wqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, pi);
          const Complex akq = a(k, qi);
          a(k, pi) = akp * wpp + akq * wqp;
          a(k, qi) = akp * wpq + akq * wqq;
          const Complex vkp = v(k, pi);
          const Complex vkq = v(k, qi);
          v(k, pi) = vkp * wpp + vkq * wqp;
          v(k, qi) = vkp * wpq + vkq * wqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(pi, k);
          const Complex aqk = a(qi, k);
          a(pi, k) = std::conj(wpp) * apk + std::conj(wqp) * aqk;
          a(qi, k) = std::conj(wpq) * apk + std::conj(wqq) * aqk;
        }
        a(pi, qi) = 0.0;
        a(qi, pi) = 0.0;
        a(pi, pi) = a(pi, pi).real();
        a(qi, qi) = a(qi, qi).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  HermitianEigen out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

Svd svd(const Matrix& a) {
  if (a.rows() < a.cols()) fail(ErrorCode::kDimensionMismatch, "svd: requires rows >= cols");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Matrix w = a;
  Matrix v = Matrix::identity(n);

  constexpr int kMaxSweeps = 80;
  constexpr double kEps = 1e-15;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma{};
        for (std::size_t i = 0; i < m; ++i) {
          alpha += std::norm(w(i, p));
          beta += std::norm(w(i, q));
          gamma += std::conj(w(i, p)) * w(i, q);
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= kEps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Complex phase = std::conj(gamma / g);
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const Complex wp = w(i, p);
          const Complex wq = w(i, q) * phase;
          w(i, p) = c * wp - s * wq;
          w(i, q) = s * wp + c * wq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const Complex vp = v(i, p);
          const Complex vq = v(i, q) * phase;
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = norm(w.col(j));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  Svd out{Matrix(m, n), std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    out.sigma[k] = sigma[j];
    for (std::size_t i = 0; i < m; ++i) out.u(i, k) = sigma[j] > 0.0 ? w(i, j) / sigma[j] : Complex{};
    for (std::size_t i = 0; i < n; ++i) out.v(i, k) = v(i, j);
  }
  return out;
}

std::vector<double> singular_values(const Matrix& a, const Tolerance&) {
  if (a.empty()) return {};
  return a.rows() >= a.cols() ? svd(a).sigma : svd(adjoint(a)).sigma;
}

double operator_norm(const Matrix& a) {
  const auto s = singular_values(a);
  return s.empty() ? 0.0 : s.front();
}

double smallest_singular_value(const Matrix& a) {
  const auto s = singular_values(a);
  return s.empty() ? 0.0 : s.back();
}

}  // namespace clat
