#include "cli/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace clat::cli {

namespace {

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void render(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::null: out += "null"; return;
    case Json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; return;
    case Json::value_t::number_integer: out += std::to_string(j.get<std::int64_t>()); return;
    case Json::value_t::number_unsigned: out += std::to_string(j.get<std::uint64_t>()); return;
    case Json::value_t::number_float: out += number(j.get<double>()); return;
    case Json::value_t::string: out += j.dump(); return;
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool flat = true;
      for (const auto& e : j) flat = flat && (is_scalar(e) || (e.is_array() && std::all_of(e.begin(), e.end(), is_scalar)));
      // Rows of complex pairs stay on one line.
      if (flat) {
        out += "[";
        for (std::size_t k = 0; k < j.size(); ++k) {
          if (k) out += ", ";
          render(j[k], indent + 1, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t k = 0; k < j.size(); ++k) {
        out += inner;
        render(j[k], indent + 1, out);
        out += k + 1 < j.size() ? ",\n" : "\n";
      }
      out += pad + "]";
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t k = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++k) {
        out += inner + Json(it.key()).dump() + ": ";
        render(it.value(), indent + 1, out);
        out += k + 1 < j.size() ? ",\n" : "\n";
      }
      out += pad + "}";
      return;
    }
    default: throw InputError("unsupported JSON value");
  }
}

Matrix parse_real_matrix(const Json& j, const char* name) {
  Matrix m = parse_matrix(j);
  if (!is_real(m)) throw InputError(std::string(name) + " must be a real matrix");
  return m;
}

}  // namespace

const Json& field(const Json& obj, const char* name) {
  if (!obj.is_object()) throw InputError("expected a JSON object");
  const auto it = obj.find(name);
  if (it == obj.end()) throw InputError(std::string("missing field '") + name + "'");
  return *it;
}

double parse_real(const Json& j) {
  if (!j.is_number()) throw InputError("expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError("non-finite number");
  return v;
}

Complex parse_complex(const Json& j) {
  if (j.is_number()) return {parse_real(j), 0.0};
  if (!j.is_array() || j.size() != 2) throw InputError("complex numbers are [re, im] arrays");
  return {parse_real(j[0]), parse_real(j[1])};
}

Vector parse_vector(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("expected a nonempty array of complex numbers");
  Vector v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(parse_complex(e));
  return v;
}

Matrix parse_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("matrices are nonempty arrays of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw InputError("matrix rows must be nonempty arrays");
  std::vector<Complex> entries;
  entries.reserve(j.size() * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw InputError("ragged matrix rows");
    for (const auto& e : row) entries.push_back(parse_complex(e));
  }
  return Matrix(j.size(), cols, std::move(entries));
}

RealLinearMap parse_map(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw InputError("map kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "block") {
    return RealLinearMap(BlockForm{parse_real_matrix(field(j, "E1"), "E1"), parse_real_matrix(field(j, "E2"), "E2"),
                                   parse_real_matrix(field(j, "E3"), "E3"), parse_real_matrix(field(j, "E4"), "E4")});
  }
  if (k == "split") {
    return RealLinearMap(SplitForm{parse_real_matrix(field(j, "A"), "A"), parse_real_matrix(field(j, "B"), "B")});
  }
  if (k == "conjugate_pair") {
    return RealLinearMap(ConjugatePairForm{parse_matrix(field(j, "M")), parse_matrix(field(j, "N"))});
  }
  if (k == "normalized") return RealLinearMap(NormalizedForm{parse_matrix(field(j, "E"))});
  throw InputError("unknown map kind '" + k + "'");
}

LatticeBasis parse_lattice(const Json& j, const Tolerance& tol) {
  const Json& nj = field(j, "n");
  if (!nj.is_number_integer() || nj.get<std::int64_t>() < 1) throw InputError("lattice n must be a positive integer");
  const auto n = static_cast<std::size_t>(nj.get<std::int64_t>());
  const Json& rows = field(j, "generators");
  if (!rows.is_array() || rows.size() != 2 * n) throw InputError("lattice needs 2n generator rows");
  Matrix g(n, 2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) {
    if (!rows[k].is_array() || rows[k].size() != n) throw InputError("each generator row has n entries");
    for (std::size_t i = 0; i < n; ++i) g(i, k) = parse_complex(rows[k][i]);
  }
  return LatticeBasis::make(std::move(g), tol);
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(std::span<const Complex> v) {
  Json out = Json::array();
  for (const Complex& z : v) out.push_back(to_json(z));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const RealLinearMap& t) {
  Json out;
  out["kind"] = std::string(kind_name(t.kind()));
  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, BlockForm>) {
          out["E1"] = to_json(f.e1);
          out["E2"] = to_json(f.e2);
          out["E3"] = to_json(f.e3);
          out["E4"] = to_json(f.e4);
        } else if constexpr (std::is_same_v<F, SplitForm>) {
          out["A"] = to_json(f.a);
          out["B"] = to_json(f.b);
        } else if constexpr (std::is_same_v<F, ConjugatePairForm>) {
          out["M"] = to_json(f.m);
          out["N"] = to_json(f.n);
        } else {
          out["E"] = to_json(f.e);
        }
      },
      t.repr());
  return out;
}

Json to_json(const LatticeBasis& l) {
  Json out;
  out["n"] = l.dim();
  Json rows = Json::array();
  for (std::size_t k = 0; k < 2 * l.dim(); ++k) rows.push_back(to_json(l.generators().col(k)));
  out["generators"] = std::move(rows);
  return out;
}

Json to_json(const GaussianMatrix& g) {
  Json out = Json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(Json::array({g(i, j).re, g(i, j).im}));
    out.push_back(std::move(row));
  }
  return out;
}

Json real_array(std::span<const double> v) {
  Json out = Json::array();
  for (double x : v) out.push_back(x);
  return out;
}

std::string dump(const Json& j) {
  std::string out;
  render(j, 0, out);
  out += "\n";
  return out;
}

}  // namespace clat::cli
