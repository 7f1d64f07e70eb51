#include "clat/reallinear.hpp"

#include <cmath>
#include <string>

#include "clat/error.hpp"

namespace clat {

namespace {

std::size_t check_square_set(std::initializer_list<const Matrix*> ms, bool require_real,
                             const char* what) {
  const std::size_t n = (*ms.begin())->rows();
  for (const Matrix* m : ms) {
    if (m->rows() != n || m->cols() != n) {
      fail(ErrorCode::kDimensionMismatch, std::string(what) + ": all matrices must be n x n");
    }
    if (require_real && !is_real(*m)) {
      fail(ErrorCode::kNotReal, std::string(what) + ": matrices must have zero imaginary parts");
    }
  }
  return n;
}

Matrix zeros(std::size_t n) { return Matrix(n, n); }

ConjugatePairForm block_to_pair(const BlockForm& f) {
  const Complex i{0.0, 1.0};
  ConjugatePairForm out{0.5 * ((f.e1 + f.e4) + i * (f.e3 - f.e2)),
                        0.5 * ((f.e1 - f.e4) - i * (f.e3 + f.e2))};
  return out;
}

BlockForm pair_to_block(const ConjugatePairForm& f) {
  const Matrix mr = real_part(f.m), mi = imag_part(f.m);
  const Matrix nr = real_part(f.n), ni = imag_part(f.n);
  return BlockForm{mr + nr, -1.0 * (mi + ni), mi - ni, mr - nr};
}

BlockForm split_to_block(const SplitForm& f) {
  const std::size_t n = f.a.rows();
  return BlockForm{Matrix::identity(n), f.a, zeros(n), f.b};
}

ConjugatePairForm normalized_to_pair(const NormalizedForm& f) {
  return ConjugatePairForm{Matrix::identity(f.e.rows()), f.e};
}

BlockForm to_block(const RealLinearMap& t) {
  return std::visit(
      [](const auto& f) -> BlockForm {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, BlockForm>) return f;
        if constexpr (std::is_same_v<F, SplitForm>) return split_to_block(f);
        if constexpr (std::is_same_v<F, ConjugatePairForm>) return pair_to_block(f);
        if constexpr (std::is_same_v<F, NormalizedForm>) return pair_to_block(normalized_to_pair(f));
      },
      t.repr());
}

ConjugatePairForm to_pair(const RealLinearMap& t) {
  return std::visit(
      [](const auto& f) -> ConjugatePairForm {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, BlockForm>) return block_to_pair(f);
        if constexpr (std::is_same_v<F, SplitForm>) return block_to_pair(split_to_block(f));
        if constexpr (std::is_same_v<F, ConjugatePairForm>) return f;
        if constexpr (std::is_same_v<F, NormalizedForm>) return normalized_to_pair(f);
      },
      t.repr());
}

// Compares two maps on the 2n real basis vectors e_k and i e_k.
void verify_same_action(const RealLinearMap& expected, const RealLinearMap& got,
                        const Tolerance& tol, const char* what) {
  const Matrix r1 = realify(expected);
  const Matrix r2 = realify(got);
  const double diff = frobenius_norm(r1 - r2);
  if (diff > tol.rel * frobenius_norm(r1) + tol.abs) {
    fail(ErrorCode::kInternalError, std::string(what) + ": converted map disagrees on the basis (" +
                                        std::to_string(diff) + ")");
  }
}

bool invertible_by_singular_values(const Matrix& r, const Tolerance& tol, double* ratio) {
  const auto s = singular_values(r);
  const double hi = s.front();
  const double lo = s.back();
  *ratio = hi > 0.0 ? lo / hi : 0.0;
  return hi > 0.0 && lo > tol.rel * hi;
}

}  // namespace

std::string_view kind_name(ReprKind kind) noexcept {
  switch (kind) {
    case ReprKind::kBlock: return "block";
    case ReprKind::kSplit: return "split";
    case ReprKind::kConjugatePair: return "conjugate_pair";
    case ReprKind::kNormalized: return "normalized";
  }
  return "unknown";
}

ReprKind parse_kind(std::string_view name) {
  if (name == "block") return ReprKind::kBlock;
  if (name == "split") return ReprKind::kSplit;
  if (name == "conjugate_pair") return ReprKind::kConjugatePair;
  if (name == "normalized") return ReprKind::kNormalized;
  fail(ErrorCode::kDimensionMismatch, "unknown representation kind '" + std::string(name) + "'");
}

RealLinearMap::RealLinearMap(BlockForm form)
    : dim_(check_square_set({&form.e1, &form.e2, &form.e3, &form.e4}, true, "block form")),
      repr_(std::move(form)) {}

RealLinearMap::RealLinearMap(SplitForm form)
    : dim_(check_square_set({&form.a, &form.b}, true, "split form")), repr_(std::move(form)) {}

RealLinearMap::RealLinearMap(ConjugatePairForm form)
    : dim_(check_square_set({&form.m, &form.n}, false, "conjugate pair form")),
      repr_(std::move(form)) {}

RealLinearMap::RealLinearMap(NormalizedForm form)
    : dim_(check_square_set({&form.e}, false, "normalized form")), repr_(std::move(form)) {}

RealLinearMap RealLinearMap::identity(std::size_t n) {
  return RealLinearMap(NormalizedForm{Matrix(n, n)});
}

Vector apply(const RealLinearMap& t, std::span<const Complex> z) {
  const std::size_t n = t.dim();
  if (z.size() != n) {
    fail(ErrorCode::kDimensionMismatch, "apply: vector length " + std::to_string(z.size()) +
                                            " vs map dimension " + std::to_string(n));
  }
  Vector x(n), y(n);
  for (std::size_t k = 0; k < n; ++k) {
    x[k] = z[k].real();
    y[k] = z[k].imag();
  }
  const Complex i{0.0, 1.0};
  Vector out(n);
  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, BlockForm>) {
          const Vector e1x = matvec(f.e1, x), e2y = matvec(f.e2, y);
          const Vector e3x = matvec(f.e3, x), e4y = matvec(f.e4, y);
          for (std::size_t k = 0; k < n; ++k) out[k] = e1x[k] + e2y[k] + i * (e3x[k] + e4y[k]);
        } else if constexpr (std::is_same_v<F, SplitForm>) {
          const Vector ay = matvec(f.a, y), by = matvec(f.b, y);
          for (std::size_t k = 0; k < n; ++k) out[k] = x[k] + ay[k] + i * by[k];
        } else if constexpr (std::is_same_v<F, ConjugatePairForm>) {
          const Vector mz = matvec(f.m, z), nz = matvec(f.n, z);
          for (std::size_t k = 0; k < n; ++k) out[k] = mz[k] + std::conj(nz[k]);
        } else {
          const Vector ez = matvec(f.e, z);
          for (std::size_t k = 0; k < n; ++k) out[k] = z[k] + std::conj(ez[k]);
        }
      },
      t.repr());
  return out;
}

Matrix realify(const RealLinearMap& t) {
  const std::size_t n = t.dim();
  Matrix r(2 * n, 2 * n);
  Vector basis(n);
  for (std::size_t k = 0; k < 2 * n; ++k) {
    std::fill(basis.begin(), basis.end(), Complex{});
    basis[k % n] = k < n ? Complex{1.0, 0.0} : Complex{0.0, 1.0};
    const Vector image = apply(t, basis);
    for (std::size_t row = 0; row < n; ++row) {
      r(row, k) = image[row].real();
      r(n + row, k) = image[row].imag();
    }
  }
  return r;
}

RealLinearMap convert(const RealLinearMap& t, ReprKind target, const Tolerance& tol) {
  if (t.kind() == target) return t;
  const std::size_t n = t.dim();
  RealLinearMap out = RealLinearMap::identity(n);
  switch (target) {
    case ReprKind::kBlock:
      out = RealLinearMap(to_block(t));
      break;
    case ReprKind::kConjugatePair:
      out = RealLinearMap(to_pair(t));
      break;
    case ReprKind::kSplit: {
      const BlockForm b = to_block(t);
      const double scale = frobenius_norm(realify(t));
      const double slack = tol.rel * scale + tol.abs;
      if (frobenius_norm(b.e1 - Matrix::identity(n)) > slack || frobenius_norm(b.e3) > slack) {
        fail(ErrorCode::kNotInSplitClass,
             "convert: map does not fix R^n x {0} pointwise (E1 != I or E3 != 0)");
      }
      out = RealLinearMap(SplitForm{b.e2, b.e4});
      break;
    }
    case ReprKind::kNormalized: {
      const ConjugatePairForm p = to_pair(t);
      Matrix e;
      try {
        e = solve(conjugate(p.m), p.n, tol);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::kSingularMatrix) throw;
        fail(ErrorCode::kSingularM, "convert: complex-linear part M is singular");
      }
      const double slack = tol.rel * std::max(1.0, frobenius_norm(p.m)) + tol.abs;
      if (frobenius_norm(p.m - Matrix::identity(n)) > slack) {
        fail(ErrorCode::kNotInNormalizedClass,
             "convert: complex-linear part M is not the identity; use map-normalize to factor it out");
      }
      out = RealLinearMap(NormalizedForm{std::move(e)});
      break;
    }
  }
  verify_same_action(t, out, tol, "convert");
  return out;
}

bool is_invertible(const RealLinearMap& t, const Tolerance& tol) {
  double ratio = 0.0;
  const bool by_realify = invertible_by_singular_values(realify(t), tol, &ratio);
  if (t.kind() == ReprKind::kSplit) {
    double b_ratio = 0.0;
    const bool by_b = invertible_by_singular_values(t.as<SplitForm>().b, tol, &b_ratio);
    // The two margins measure different matrices; only a disagreement far
    // from the threshold is a real contradiction.
    constexpr double kBand = 1e3;
    const bool clear = (ratio > kBand * tol.rel || ratio < tol.rel / kBand) &&
                       (b_ratio > kBand * tol.rel || b_ratio < tol.rel / kBand);
    if (clear && by_b != by_realify) {
      fail(ErrorCode::kInternalError, "is_invertible: split criterion disagrees with realification");
    }
  }
  return by_realify;
}

MajorizationReport majorization(const ConjugatePairForm& t, const Tolerance& tol) {
  MajorizationReport report;
  Matrix m_inv;
  try {
    m_inv = inverse(t.m, tol);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kSingularMatrix) throw;
    return report;
  }
  report.m_invertible = true;
  report.ratio_norm = operator_norm(t.n * m_inv);
  report.majorizes = report.ratio_norm < 1.0 - tol.rel;
  report.boundary = std::abs(report.ratio_norm - 1.0) <= tol.rel;
  return report;
}

bool majorizes(const ConjugatePairForm& t, const Tolerance& tol) {
  return majorization(t, tol).majorizes;
}

PostCompositionFactor normalize_post_composition(const ConjugatePairForm& t, const Tolerance& tol) {
  const RealLinearMap original(t);
  Matrix e;
  try {
    // M conj(w) = conj(conj(M) w), so M (z + conj(E z)) = M z + conj(N z)
    // exactly when conj(M) E = N.
    e = solve(conjugate(t.m), t.n, tol);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kSingularMatrix) throw;
    fail(ErrorCode::kSingularM, "normalize_post_composition: M is singular");
  }
  PostCompositionFactor out{t.m, NormalizedForm{std::move(e)}};

  const std::size_t n = original.dim();
  const Matrix r_original = realify(original);
  const Matrix r_factored =
      realify_complex_linear(out.g) * realify(RealLinearMap(NormalizedForm{out.e.e}));
  const double diff = frobenius_norm(r_original - r_factored);
  if (diff > tol.rel * std::max(1.0, frobenius_norm(r_original)) + tol.abs) {
    fail(ErrorCode::kInternalError,
         "normalize_post_composition: factorization fails on the basis (n = " + std::to_string(n) + ")");
  }
  return out;
}

ContractionReport contraction(const NormalizedForm& e, const Tolerance& tol) {
  const std::size_t n = e.e.rows();
  ContractionReport report;
  report.operator_norm = operator_norm(e.e);
  report.contractive = report.operator_norm < 1.0 - tol.rel;
  report.boundary = std::abs(report.operator_norm - 1.0) <= tol.rel;

  const Matrix gap = Matrix::identity(n) - adjoint(e.e) * e.e;
  report.min_gap_eigenvalue = hermitian_eig(gap, tol).values.front();
  // ||E|| < 1 - rel  <=>  lambda_min(I - E*E) > 1 - (1 - rel)^2.
  const double gap_threshold = 1.0 - (1.0 - tol.rel) * (1.0 - tol.rel);
  const bool by_gap = report.min_gap_eigenvalue > gap_threshold;
  const double rounding = 64.0 * 2.3e-16 * (1.0 + report.operator_norm * report.operator_norm) * n;
  if (by_gap != report.contractive &&
      std::abs(report.min_gap_eigenvalue - gap_threshold) > rounding) {
    fail(ErrorCode::kInternalError, "contraction_check: operator norm and I - E*E disagree");
  }
  return report;
}

bool contraction_check(const NormalizedForm& e, const Tolerance& tol) {
  return contraction(e, tol).contractive;
}

}  // namespace clat
