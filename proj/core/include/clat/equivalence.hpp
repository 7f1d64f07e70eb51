#pragma once

// Semidecision procedure for equivalence of lattices A((Z[i])^n) under
// unitary (or special unitary) maps. Lattices A1, A2 are equivalent when
// A2 = T A1 B with T unitary and B in Sigma, which on Gram forms reads
// gram(A2) = B* gram(A1) B.
//
// Only kEquivalent and kRefutedByInvariant are definitive answers;
// kUndecidedUpToBound means no witness of height <= H exists.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "clat/lattice.hpp"
#include "clat/numeric.hpp"
#include "clat/polar.hpp"

namespace clat {

enum class VerdictStatus { kEquivalent, kRefutedByInvariant, kUndecidedUpToBound };

std::string_view status_name(VerdictStatus s) noexcept;

struct EquivalenceWitness {
  std::optional<Matrix> t;  // absent for Gram-level searches
  GaussianUnimodular b;
};

struct Refuter {
  std::string name;  // "covolume" or "short_vector_spectrum"
  double left = 0.0;
  double right = 0.0;
  std::string detail;
};

struct EquivalenceVerdict {
  VerdictStatus status = VerdictStatus::kUndecidedUpToBound;
  std::optional<EquivalenceWitness> witness;
  std::optional<Refuter> refuter;
  int bound = 0;
  std::uint64_t candidates_examined = 0;
  std::vector<std::string> skipped_refuters;
};

struct SearchBudget {
  std::size_t max_dim = 3;
  std::uint64_t max_candidates = 10'000'000;
};

// Extra acceptance test applied to each Gram-level witness; returning false
// continues the search.
using WitnessFilter = std::function<bool(const GaussianUnimodular&)>;

// Candidates B have entries with |Re|, |Im| <= height and exact det 1. Each
// column b_j must satisfy b_j* P1 b_j = P2_jj, so columns are drawn from a
// pre-filtered list and combined by backtracking on the off-diagonal
// entries. Column candidates are ordered by distance from e_j, then
// lexicographically, so the first witness found is deterministic.
EquivalenceVerdict sigma_orbit_equal(const GramForm& p1, const GramForm& p2, int height,
                                     const Tolerance& tol = kDefaultTolerance,
                                     const SearchBudget& budget = {},
                                     const WitnessFilter& filter = {});

struct ShortVectorSpectrum {
  double radius = 0.0;
  std::vector<double> norms;  // ascending squared lengths |A lambda|^2 <= radius
};

// All nonzero lambda in (Z[i])^n with |A lambda|^2 <= radius, by
// Fincke-Pohst enumeration on the realified Gram matrix. Raises
// kRadiusBudgetExceeded when more than `budget` tree nodes are visited.
ShortVectorSpectrum short_vectors(const Matrix& a, double radius,
                                  std::uint64_t budget = 10'000'000);

// First norm whose multiplicity differs between the spectra (matching norms
// within a relative 1e-9), ignoring a thin band at the radius.
std::optional<Refuter> compare_spectra(const ShortVectorSpectrum& s1, const ShortVectorSpectrum& s2,
                                       double radius);

enum class EquivalenceMode { kUnitary, kSpecialUnitary };

struct EquivalenceOptions {
  EquivalenceMode mode = EquivalenceMode::kUnitary;
  int height = 2;
  double radius = 4.0;
  Tolerance tol = kDefaultTolerance;
  SearchBudget budget;
};

EquivalenceVerdict lattice_equivalent(const Matrix& a1, const Matrix& a2,
                                      const EquivalenceOptions& options = {});

}  // namespace clat
