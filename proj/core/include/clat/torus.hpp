#pragma once

// Points of the quotient group C^n / L, represented by their coordinates in
// the half-open parallelepiped [0, 1)^{2n} spanned by the lattice generators.

#include <span>
#include <vector>

#include "clat/lattice.hpp"

namespace clat {

struct TorusPoint {
  LatticeBasis lattice;
  Vector rep;                  // G * coords
  std::vector<double> coords;  // each in [0, 1)
};

// Coordinates within tol.abs of 0 or 1 are stored as 0.
TorusPoint reduce(const LatticeBasis& l, std::span<const Complex> z,
                  const Tolerance& tol = kDefaultTolerance);

// Raises kLatticeMismatch unless q lives on the same lattice as p (identical
// generators or same_lattice).
TorusPoint torus_add(const TorusPoint& p, const TorusPoint& q, const Tolerance& tol = kDefaultTolerance);
TorusPoint torus_neg(const TorusPoint& p, const Tolerance& tol = kDefaultTolerance);

// Coordinate differences within tol.abs + tol.rel of integers.
bool torus_eq(const TorusPoint& p, const TorusPoint& q, const Tolerance& tol = kDefaultTolerance);

}  // namespace clat
