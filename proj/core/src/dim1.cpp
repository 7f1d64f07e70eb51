#include "clat/dim1.hpp"

#include <cmath>

#include "clat/error.hpp"

namespace clat::dim1 {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_agreement(const ScalarForms& f, const Tolerance& tol) {
  for (const Complex z : {Complex{1.0, 0.0}, kI}) {
    const Complex ref = evaluate(f.ab, z);
    const double slack = tol.rel * (std::abs(ref) + std::abs(f.ab.a) + std::abs(f.ab.b)) + tol.abs;
    auto check = [&](Complex v) {
      if (std::abs(v - ref) > slack) fail(ErrorCode::kInternalError, "dim1: scalar forms disagree");
    };
    check(evaluate(f.alphabeta, z));
    if (f.ac) check(evaluate(*f.ac, z));
    if (f.thetamu) check(evaluate(*f.thetamu, z));
  }
}

ScalarForms complete(AbForm ab, AlphaBetaForm alphabeta, const Tolerance& tol) {
  ScalarForms f;
  f.ab = ab;
  f.alphabeta = alphabeta;
  if (ab.a != Complex{}) f.ac = AcForm{ab.a, ab.b / ab.a};
  f.regime = classify(alphabeta, tol);
  if (f.regime == Regime::kMajorized) f.thetamu = ThetaMuForm{alphabeta.alpha, alphabeta.beta / alphabeta.alpha};
  require_agreement(f, tol);
  return f;
}

}  // namespace

Complex evaluate(const AbForm& f, Complex z) noexcept { return f.a * z.real() + kI * f.b * z.imag(); }

Complex evaluate(const AcForm& f, Complex z) noexcept { return f.a * (z.real() + kI * f.c * z.imag()); }

Complex evaluate(const AlphaBetaForm& f, Complex z) noexcept { return f.alpha * z + f.beta * std::conj(z); }

Complex evaluate(const ThetaMuForm& f, Complex z) noexcept { return f.theta * (z + f.mu * std::conj(z)); }

double invertibility_margin(const AlphaBetaForm& f) noexcept {
  const double sa = std::abs(f.alpha);
  const double sb = std::abs(f.beta);
  return sa + sb > 0.0 ? (sa - sb) / (sa + sb) : 0.0;
}

Regime classify(const AlphaBetaForm& f, const Tolerance& tol) noexcept {
  const double m = invertibility_margin(f);
  if (m > tol.rel) return Regime::kMajorized;
  if (m < -tol.rel) return Regime::kAntiDominant;
  return Regime::kSingular;
}

ScalarForms from_ab(Complex a, Complex b, const Tolerance& tol) {
  // x = (z + conj z) / 2 and i y = (z - conj z) / 2.
  return complete(AbForm{a, b}, AlphaBetaForm{0.5 * (a + b), 0.5 * (a - b)}, tol);
}

ScalarForms from_alphabeta(Complex alpha, Complex beta, const Tolerance& tol) {
  return complete(AbForm{alpha + beta, alpha - beta}, AlphaBetaForm{alpha, beta}, tol);
}

bool is_invertible_1d(const ScalarForms& f, const Tolerance& tol) {
  const double margin = std::abs(invertibility_margin(f.alphabeta));
  // The realification of alpha z + beta conj(z) has singular values
  // |alpha| + |beta| and ||alpha| - |beta||, so both routes see one number.
  const auto s = singular_values(realify(RealLinearMap(to_conjugate_pair(f.alphabeta))));
  const double ratio = s.front() > 0.0 ? s.back() / s.front() : 0.0;
  if (std::abs(ratio - margin) > 1e-10) {
    fail(ErrorCode::kInternalError, "is_invertible_1d: closed form disagrees with the realification");
  }
  return margin > tol.rel;
}

ThetaMuForm to_thetamu(const ScalarForms& f, const Tolerance& tol) {
  if (classify(f.alphabeta, tol) != Regime::kMajorized) {
    fail(ErrorCode::kMajorizationFails, "to_thetamu: requires |alpha| > |beta|");
  }
  return ThetaMuForm{f.alphabeta.alpha, f.alphabeta.beta / f.alphabeta.alpha};
}

ConjugatePairForm to_conjugate_pair(const AlphaBetaForm& f) {
  return ConjugatePairForm{Matrix(1, 1, {f.alpha}), Matrix(1, 1, {std::conj(f.beta)})};
}

}  // namespace clat::dim1
