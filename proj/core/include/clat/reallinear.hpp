#pragma once

// Real-linear transformations T of C^n in four interchangeable encodings:
//
//   block           T(x + iy) = E1 x + E2 y + i (E3 x + E4 y)   (E_k real)
//   split           T(x + iy) = x + A y + i B y                  (A, B real)
//   conjugate pair  T(z) = M z + conj(N z)
//   normalized      T(z) = z + conj(E z)
//
// A RealLinearMap remembers the encoding it was built in. convert() moves
// between encodings and re-checks the result against the input on the 2n
// real basis vectors before returning it.

#include <concepts>
#include <cstddef>
#include <span>
#include <string_view>
#include <type_traits>
#include <variant>

#include "clat/numeric.hpp"

namespace clat {

struct BlockForm {
  Matrix e1, e2, e3, e4;
};

struct SplitForm {
  Matrix a, b;
};

struct ConjugatePairForm {
  Matrix m, n;
};

struct NormalizedForm {
  Matrix e;
};

enum class ReprKind { kBlock, kSplit, kConjugatePair, kNormalized };

std::string_view kind_name(ReprKind kind) noexcept;
// Accepts "block", "split", "conjugate_pair", "normalized".
ReprKind parse_kind(std::string_view name);

class RealLinearMap {
 public:
  using Representation = std::variant<BlockForm, SplitForm, ConjugatePairForm, NormalizedForm>;

  // Each constructor checks that the matrices are n x n, and for the block
  // and split encodings that their imaginary parts are exactly zero.
  explicit RealLinearMap(BlockForm form);
  explicit RealLinearMap(SplitForm form);
  explicit RealLinearMap(ConjugatePairForm form);
  explicit RealLinearMap(NormalizedForm form);

  static RealLinearMap identity(std::size_t n);

  std::size_t dim() const noexcept { return dim_; }
  ReprKind kind() const noexcept { return static_cast<ReprKind>(repr_.index()); }
  const Representation& repr() const noexcept { return repr_; }

  template <typename Form>
  const Form& as() const {
    return std::get<Form>(repr_);
  }

 private:
  std::size_t dim_ = 0;
  Representation repr_;
};

// Evaluates the stored encoding literally.
Vector apply(const RealLinearMap& t, std::span<const Complex> z);
// Outranks std::apply, which ADL finds for Vector arguments, by being more
// constrained.
template <typename T, typename V>
  requires std::same_as<std::remove_cvref_t<T>, RealLinearMap> &&
           std::convertible_to<V, std::span<const Complex>>
Vector apply(T&& t, V&& z) {
  return apply(static_cast<const RealLinearMap&>(t), std::span<const Complex>(z));
}

// Real 2n x 2n matrix R with R (x; y) = (Re T(x + iy); Im T(x + iy)).
Matrix realify(const RealLinearMap& t);

// Split target requires E1 = I and E3 = 0; normalized target requires the
// complex-linear part M to be the identity (use normalize_post_composition
// to split off a general invertible M first).
RealLinearMap convert(const RealLinearMap& t, ReprKind target,
                      const Tolerance& tol = kDefaultTolerance);

// smallest singular value of realify(T) > tol.rel * largest. For split maps
// the answer is cross-checked against invertibility of B.
bool is_invertible(const RealLinearMap& t, const Tolerance& tol = kDefaultTolerance);

// |N z| < |M z| for all z != 0, tested as ||N M^-1|| < 1 - tol.rel.
struct MajorizationReport {
  bool majorizes = false;
  bool m_invertible = false;
  bool boundary = false;  // ||N M^-1|| within tol.rel of 1
  double ratio_norm = 0.0;
};

MajorizationReport majorization(const ConjugatePairForm& t, const Tolerance& tol = kDefaultTolerance);
bool majorizes(const ConjugatePairForm& t, const Tolerance& tol = kDefaultTolerance);

// T = G o (z + conj(E z)) with G = M and E = conj(M)^-1 N.
struct PostCompositionFactor {
  Matrix g;
  NormalizedForm e;
};

PostCompositionFactor normalize_post_composition(const ConjugatePairForm& t,
                                                 const Tolerance& tol = kDefaultTolerance);

struct ContractionReport {
  bool contractive = false;
  bool boundary = false;
  double operator_norm = 0.0;
  double min_gap_eigenvalue = 0.0;  // smallest eigenvalue of I - E*E
};

// ||E|| < 1 - tol.rel, checked both through the operator norm and through
// positivity of I - E*E.
ContractionReport contraction(const NormalizedForm& e, const Tolerance& tol = kDefaultTolerance);
bool contraction_check(const NormalizedForm& e, const Tolerance& tol = kDefaultTolerance);

}  // namespace clat
