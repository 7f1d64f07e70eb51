#pragma once

// Random instances and brute-force oracles for the test suites. The oracles
// deliberately avoid the library's own algorithms.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "clat/gaussian.hpp"
#include "clat/lattice.hpp"
#include "clat/numeric.hpp"
#include "clat/reallinear.hpp"

namespace clat::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  Complex complex() { return {normal(), normal()}; }

  Vector vector(std::size_t n) {
    Vector v(n);
    for (auto& z : v) z = complex();
    return v;
  }

  Matrix matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = complex();
    return m;
  }

  Matrix real_matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = normal();
    return m;
  }

  Matrix hermitian(std::size_t n) {
    const Matrix a = matrix(n, n);
    Matrix h = a + adjoint(a);
    return 0.5 * h;
  }

  // Random matrix with singular values in [lo, hi].
  Matrix conditioned(std::size_t n, double lo = 0.5, double hi = 2.0) {
    Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = uniform(lo, hi);
    return unitary(n) * d * unitary(n);
  }

  // Haar-ish unitary by modified Gram-Schmidt on a Gaussian matrix.
  Matrix unitary(std::size_t n) {
    Matrix q = matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * q(i, j);
        for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
      }
      double len = 0.0;
      for (std::size_t i = 0; i < n; ++i) len += std::norm(q(i, j));
      len = std::sqrt(len);
      for (std::size_t i = 0; i < n; ++i) q(i, j) /= len;
    }
    return q;
  }

  Matrix special_unitary(std::size_t n) {
    Matrix u = unitary(n);
    const Complex d = det(u);
    const Complex root = std::polar(1.0, -std::arg(d) / static_cast<double>(n));
    return root * u;
  }

  // Product of elementary Gaussian-integer shears, rejected until the height
  // is at most max_height. Determinant is exactly 1.
  GaussianMatrix unimodular(std::size_t n, std::int64_t max_height, int steps = 3) {
    for (;;) {
      GaussianMatrix b = GaussianMatrix::identity(n);
      if (n > 1) {
        for (int s = 0; s < steps; ++s) {
          const auto i = static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1));
          auto j = static_cast<std::size_t>(integer(0, static_cast<int>(n) - 2));
          if (j >= i) ++j;
          GaussianMatrix e = GaussianMatrix::identity(n);
          e(i, j) = GaussianInt{integer(-1, 1), integer(-1, 1)};
          b = b * e;
        }
        // Diagonal unit pair keeps det 1: u on one entry, conj(u) on another.
        if (integer(0, 1) == 1) {
          const GaussianInt units[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
          const GaussianInt u = units[integer(0, 3)];
          GaussianMatrix d = GaussianMatrix::identity(n);
          d(0, 0) = u;
          d(n - 1, n - 1) = conj(u);
          b = b * d;
        }
      }
      if (b.height() <= max_height) return b;
    }
  }

  // Real-linear map in a random encoding, with generic (invertible) content.
  RealLinearMap map(std::size_t n, ReprKind kind) {
    switch (kind) {
      case ReprKind::kBlock:
        return RealLinearMap(BlockForm{real_matrix(n, n), real_matrix(n, n), real_matrix(n, n), real_matrix(n, n)});
      case ReprKind::kSplit:
        return RealLinearMap(SplitForm{real_matrix(n, n), real_matrix(n, n)});
      case ReprKind::kConjugatePair:
        return RealLinearMap(ConjugatePairForm{matrix(n, n), matrix(n, n)});
      case ReprKind::kNormalized:
        return RealLinearMap(NormalizedForm{matrix(n, n)});
    }
    return RealLinearMap::identity(n);
  }

  // Contraction with operator norm in (0, max_norm].
  Matrix contraction(std::size_t n, double max_norm = 0.95) {
    Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = uniform(0.0, max_norm);
    return unitary(n) * d * unitary(n);
  }

  // Contraction whose largest singular value is exactly top.
  Matrix contraction_with_norm(std::size_t n, double top) {
    Matrix d(n, n);
    d(0, 0) = top;
    for (std::size_t i = 1; i < n; ++i) d(i, i) = uniform(0.0, top);
    return unitary(n) * d * unitary(n);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline Matrix oracle_matmul(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

// Leibniz expansion over all permutations.
inline Complex oracle_det(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Complex total = 0.0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Complex term = inversions % 2 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) term *= a(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Direct evaluation of each encoding from its defining formula in real
// coordinates, independent of the library's apply().
inline Vector oracle_apply(const RealLinearMap& t, const Vector& z) {
  const std::size_t n = t.dim();
  Vector out(n);
  switch (t.kind()) {
    case ReprKind::kBlock: {
      const auto& f = t.as<BlockForm>();
      for (std::size_t i = 0; i < n; ++i) {
        double re = 0.0, im = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          re += f.e1(i, j).real() * z[j].real() + f.e2(i, j).real() * z[j].imag();
          im += f.e3(i, j).real() * z[j].real() + f.e4(i, j).real() * z[j].imag();
        }
        out[i] = {re, im};
      }
      break;
    }
    case ReprKind::kSplit: {
      const auto& f = t.as<SplitForm>();
      for (std::size_t i = 0; i < n; ++i) {
        double re = z[i].real(), im = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          re += f.a(i, j).real() * z[j].imag();
          im += f.b(i, j).real() * z[j].imag();
        }
        out[i] = {re, im};
      }
      break;
    }
    case ReprKind::kConjugatePair: {
      const auto& f = t.as<ConjugatePairForm>();
      for (std::size_t i = 0; i < n; ++i) {
        Complex mz = 0.0, nz = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          mz += f.m(i, j) * z[j];
          nz += f.n(i, j) * z[j];
        }
        out[i] = mz + std::conj(nz);
      }
      break;
    }
    case ReprKind::kNormalized: {
      const auto& f = t.as<NormalizedForm>();
      for (std::size_t i = 0; i < n; ++i) {
        Complex ez = 0.0;
        for (std::size_t j = 0; j < n; ++j) ez += f.e(i, j) * z[j];
        out[i] = z[i] + std::conj(ez);
      }
      break;
    }
  }
  return out;
}

inline double distance(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

inline double length(const Vector& a) {
  double s = 0.0;
  for (const auto& z : a) s += std::norm(z);
  return std::sqrt(s);
}

// Squared lengths |A lambda|^2 <= radius for nonzero lambda in a box of
// Gaussian integers with |Re|, |Im| <= box, ascending.
inline std::vector<double> oracle_short_vectors(const Matrix& a, double radius, int box) {
  const std::size_t n = a.cols();
  std::vector<int> digits(2 * n, -box);
  std::vector<double> out;
  for (;;) {
    Vector lambda(n);
    bool zero = true;
    for (std::size_t j = 0; j < n; ++j) {
      lambda[j] = {static_cast<double>(digits[2 * j]), static_cast<double>(digits[2 * j + 1])};
      zero = zero && digits[2 * j] == 0 && digits[2 * j + 1] == 0;
    }
    if (!zero) {
      const double len = std::pow(length(matvec(a, lambda)), 2);
      if (len <= radius) out.push_back(len);
    }
    std::size_t k = 0;
    while (k < digits.size() && digits[k] == box) digits[k++] = -box;
    if (k == digits.size()) break;
    ++digits[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Random basis with generator singular values bounded away from zero.
inline LatticeBasis random_lattice(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix g = rng.matrix(n, 2 * n);
    const auto s = singular_values(realify_columns(g));
    if (s.back() > 0.05 * s.front()) return LatticeBasis::make(std::move(g));
  }
}

}  // namespace clat::testing
