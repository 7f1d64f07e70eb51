#pragma once

// Closed forms for real-linear maps of C (n = 1), in plain complex
// arithmetic:
//
//   ab          T(x + iy) = a x + i b y
//   ac          T(x + iy) = a (x + i c y),        a != 0
//   alpha/beta  T(z) = alpha z + beta conj(z)
//   theta/mu    T(z) = theta (z + mu conj(z)),    |mu| < 1
//
// T is invertible iff |alpha| != |beta|; in the ac form that is Re(c) != 0.

#include <optional>

#include "clat/numeric.hpp"
#include "clat/reallinear.hpp"

namespace clat::dim1 {

struct AbForm {
  Complex a, b;
};
struct AcForm {
  Complex a, c;
};
struct AlphaBetaForm {
  Complex alpha, beta;
};
struct ThetaMuForm {
  Complex theta, mu;
};

enum class Regime {
  kMajorized,     // |alpha| > |beta|: theta/mu form exists
  kAntiDominant,  // |alpha| < |beta|: invertible, theta/mu form does not apply
  kSingular,      // |alpha| = |beta| within the margin
};

struct ScalarForms {
  AbForm ab;
  std::optional<AcForm> ac;  // present iff a != 0
  AlphaBetaForm alphabeta;
  std::optional<ThetaMuForm> thetamu;  // present iff regime is kMajorized
  Regime regime = Regime::kSingular;
};

Complex evaluate(const AbForm& f, Complex z) noexcept;
Complex evaluate(const AcForm& f, Complex z) noexcept;
Complex evaluate(const AlphaBetaForm& f, Complex z) noexcept;
Complex evaluate(const ThetaMuForm& f, Complex z) noexcept;

// (|alpha| - |beta|) / (|alpha| + |beta|), or 0 for the zero map.
double invertibility_margin(const AlphaBetaForm& f) noexcept;
Regime classify(const AlphaBetaForm& f, const Tolerance& tol = kDefaultTolerance) noexcept;

// Fills every applicable form and checks that they agree on z = 1 and z = i.
ScalarForms from_ab(Complex a, Complex b, const Tolerance& tol = kDefaultTolerance);
ScalarForms from_alphabeta(Complex alpha, Complex beta, const Tolerance& tol = kDefaultTolerance);

// ||alpha| - |beta|| > tol.rel (|alpha| + |beta|), cross-checked against the
// singular values of the 2 x 2 realification.
bool is_invertible_1d(const ScalarForms& f, const Tolerance& tol = kDefaultTolerance);

// Raises kMajorizationFails unless |alpha| > |beta| beyond the margin.
ThetaMuForm to_thetamu(const ScalarForms& f, const Tolerance& tol = kDefaultTolerance);

// M = [alpha], N = [conj(beta)].
ConjugatePairForm to_conjugate_pair(const AlphaBetaForm& f);

}  // namespace clat::dim1
