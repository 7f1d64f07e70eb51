#pragma once

// JSON encodings shared by the CLI and its tests. Complex numbers are
// [re, im] arrays; matrices are row-major arrays of rows; lattices are
// {"n": n, "generators": [...]} with row k the image of the k-th standard
// basis vector of R^{2n}.

#include <span>
#include <stdexcept>
#include <string>

#include "clat/gaussian.hpp"
#include "clat/lattice.hpp"
#include "clat/numeric.hpp"
#include "clat/reallinear.hpp"
#include "json.hpp"

namespace clat::cli {

using Json = nlohmann::ordered_json;

// Malformed input: wrong JSON shape, missing fields, bad types.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const Json& field(const Json& obj, const char* name);

double parse_real(const Json& j);
Complex parse_complex(const Json& j);
Vector parse_vector(const Json& j);
Matrix parse_matrix(const Json& j);
RealLinearMap parse_map(const Json& j);
LatticeBasis parse_lattice(const Json& j, const Tolerance& tol);

Json to_json(Complex z);
Json to_json(std::span<const Complex> v);
Json to_json(const Matrix& m);
Json to_json(const RealLinearMap& t);
Json to_json(const LatticeBasis& l);
Json to_json(const GaussianMatrix& g);
Json real_array(std::span<const double> v);

// Deterministic rendering: floats as %.17g, keys in insertion order, arrays
// of scalars on one line.
std::string dump(const Json& j);

}  // namespace clat::cli
