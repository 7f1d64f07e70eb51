#include "clat/torus.hpp"

#include <cmath>
#include <string>

#include "clat/error.hpp"

namespace clat {

namespace {

double wrap(double c, const Tolerance& tol) {
  double f = c - std::floor(c);
  if (f >= 1.0 - tol.abs || f <= tol.abs) f = 0.0;
  return f;
}

TorusPoint from_coords(const LatticeBasis& l, std::vector<double> coords) {
  const Matrix& g = l.generators();
  Vector rep(l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i) {
    Complex s{};
    for (std::size_t k = 0; k < coords.size(); ++k) s += g(i, k) * coords[k];
    rep[i] = s;
  }
  return TorusPoint{l, std::move(rep), std::move(coords)};
}

// q expressed on p's lattice.
TorusPoint align(const TorusPoint& p, const TorusPoint& q, const Tolerance& tol) {
  if (p.lattice == q.lattice) return q;
  if (p.lattice.dim() != q.lattice.dim() || !same_lattice(p.lattice, q.lattice, tol).same) {
    fail(ErrorCode::kLatticeMismatch, "torus points live on different lattices");
  }
  return reduce(p.lattice, q.rep, tol);
}

}  // namespace

TorusPoint reduce(const LatticeBasis& l, std::span<const Complex> z, const Tolerance& tol) {
  const std::size_t n = l.dim();
  if (z.size() != n) {
    fail(ErrorCode::kDimensionMismatch, "reduce: vector length " + std::to_string(z.size()) +
                                            " vs lattice dimension " + std::to_string(n));
  }
  Matrix rhs(2 * n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    rhs(i, 0) = z[i].real();
    rhs(n + i, 0) = z[i].imag();
  }
  const Matrix c = solve(l.realified(), rhs, tol);
  std::vector<double> coords(2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) coords[k] = wrap(c(k, 0).real(), tol);
  return from_coords(l, std::move(coords));
}

TorusPoint torus_add(const TorusPoint& p, const TorusPoint& q, const Tolerance& tol) {
  const TorusPoint qq = align(p, q, tol);
  std::vector<double> coords(p.coords.size());
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] = wrap(p.coords[k] + qq.coords[k], tol);
  return from_coords(p.lattice, std::move(coords));
}

TorusPoint torus_neg(const TorusPoint& p, const Tolerance& tol) {
  std::vector<double> coords(p.coords.size());
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] = wrap(-p.coords[k], tol);
  return from_coords(p.lattice, std::move(coords));
}

bool torus_eq(const TorusPoint& p, const TorusPoint& q, const Tolerance& tol) {
  const TorusPoint qq = align(p, q, tol);
  const double slack = tol.abs + tol.rel;
  for (std::size_t k = 0; k < p.coords.size(); ++k) {
    const double d = p.coords[k] - qq.coords[k];
    if (std::abs(d - std::round(d)) > slack) return false;
  }
  return true;
}

}  // namespace clat
