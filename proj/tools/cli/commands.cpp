#include "cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "clat/dim1.hpp"
#include "clat/equivalence.hpp"
#include "clat/error.hpp"
#include "clat/lattice.hpp"
#include "clat/polar.hpp"
#include "clat/reallinear.hpp"
#include "clat/torus.hpp"
#include "cli/json_io.hpp"

namespace clat::cli {

namespace {

struct Options {
  Tolerance tol;
  int height = 2;
  double radius = 4.0;
  EquivalenceMode mode = EquivalenceMode::kUnitary;
};

struct Output {
  Json payload = Json::object();
  Json diagnostics = Json::object();
};

using Handler = std::function<Output(const Json&, const Options&)>;

Json tolerance_json(const Tolerance& tol) {
  Json j;
  j["rel"] = tol.rel;
  j["abs"] = tol.abs;
  return j;
}

Json point_json(const TorusPoint& p) {
  Json j;
  j["rep"] = to_json(p.rep);
  j["coords"] = real_array(p.coords);
  return j;
}

RealLinearMap as_pair(const Json& input, const Options& o) {
  return convert(parse_map(field(input, "map")), ReprKind::kConjugatePair, o.tol);
}

Output map_apply(const Json& input, const Options&) {
  const RealLinearMap t = parse_map(field(input, "map"));
  Output out;
  out.payload["value"] = to_json(clat::apply(t, parse_vector(field(input, "z"))));
  out.diagnostics["kind"] = std::string(kind_name(t.kind()));
  return out;
}

Output map_convert(const Json& input, const Options& o) {
  const RealLinearMap t = parse_map(field(input, "map"));
  const Json& target = field(input, "target");
  if (!target.is_string()) throw InputError("target must be a representation name");
  ReprKind kind;
  try {
    kind = parse_kind(target.get<std::string>());
  } catch (const Error&) {
    throw InputError("unknown target '" + target.get<std::string>() + "'");
  }
  const RealLinearMap converted = convert(t, kind, o.tol);
  Output out;
  out.payload["map"] = to_json(converted);
  out.diagnostics["basis_residual"] = frobenius_norm(realify(t) - realify(converted));
  return out;
}

Output map_invertible(const Json& input, const Options& o) {
  const RealLinearMap t = parse_map(field(input, "map"));
  const auto s = singular_values(realify(t));
  Output out;
  out.payload["invertible"] = is_invertible(t, o.tol);
  out.diagnostics["min_singular_value"] = s.back();
  out.diagnostics["max_singular_value"] = s.front();
  out.diagnostics["threshold"] = o.tol.rel * s.front();
  return out;
}

Output map_majorizes(const Json& input, const Options& o) {
  const RealLinearMap t = as_pair(input, o);
  const MajorizationReport r = majorization(t.as<ConjugatePairForm>(), o.tol);
  Output out;
  out.payload["majorizes"] = r.majorizes;
  out.payload["boundary"] = r.boundary;
  out.diagnostics["m_invertible"] = r.m_invertible;
  out.diagnostics["ratio_norm"] = r.ratio_norm;
  return out;
}

Output map_normalize(const Json& input, const Options& o) {
  const RealLinearMap t = as_pair(input, o);
  const PostCompositionFactor f = normalize_post_composition(t.as<ConjugatePairForm>(), o.tol);
  const ContractionReport c = contraction(f.e, o.tol);
  Output out;
  out.payload["G"] = to_json(f.g);
  out.payload["map"] = to_json(RealLinearMap(f.e));
  out.payload["contractive"] = c.contractive;
  out.payload["boundary"] = c.boundary;
  out.diagnostics["operator_norm"] = c.operator_norm;
  out.diagnostics["min_gap_eigenvalue"] = c.min_gap_eigenvalue;
  return out;
}

Output polar_cmd(const Json& input, const Options& o) {
  const Matrix a = parse_matrix(field(input, "A"));
  const PolarDecomposition pd = polar(a, o.tol);
  Output out;
  out.payload["U"] = to_json(pd.u);
  out.payload["P"] = to_json(pd.p.matrix());
  out.diagnostics["residual"] = frobenius_norm(a - pd.u * pd.p.matrix());
  out.diagnostics["unitary_defect"] = classify(pd.u, o.tol).unitary_defect;
  return out;
}

Output gram_cmd(const Json& input, const Options& o) {
  const Matrix a = parse_matrix(field(input, "A"));
  const GramForm p = gram(a, o.tol);
  Output out;
  out.payload["P"] = to_json(p.matrix());
  out.diagnostics["det"] = to_json(det(p.matrix()));
  return out;
}

Output unitary_equiv(const Json& input, const Options& o) {
  const UnitaryEquivalence r =
      unitarily_equivalent(parse_matrix(field(input, "A1")), parse_matrix(field(input, "A2")), o.tol);
  Output out;
  out.payload["equivalent"] = r.equivalent;
  out.payload["T"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  out.diagnostics["gram_distance"] = r.gram_distance;
  out.diagnostics["threshold"] = r.threshold;
  return out;
}

Output sl_normalize_cmd(const Json& input, const Options& o) {
  const SlNormalization s = sl_normalize(parse_matrix(field(input, "A")), o.tol);
  Output out;
  out.payload["A"] = to_json(s.a);
  out.payload["delta"] = to_json(s.delta);
  out.diagnostics["det"] = to_json(det(s.a));
  return out;
}

Output lattice_validate(const Json& input, const Options& o) {
  const LatticeBasis l = parse_lattice(input, o.tol);
  Output out;
  out.payload["valid"] = true;
  out.payload["n"] = l.dim();
  out.diagnostics["rank_margin"] = rank_margin(l.generators());
  return out;
}

Output lattice_covolume(const Json& input, const Options& o) {
  Output out;
  out.payload["covolume"] = covolume(parse_lattice(input, o.tol));
  return out;
}

Output lattice_normalize(const Json& input, const Options& o) {
  const LatticeBasis l = parse_lattice(input, o.tol);
  const L1Ordering ordered = permute_to_L1(l, o.tol);
  const LStarStar normal = normalize_to_Lstarstar(ordered.basis, o.tol);
  const std::size_t n = l.dim();
  const Matrix standard_block = hstack(Matrix::identity(n), normal.z.z());
  const Matrix rebuilt = inverse(normal.a, o.tol) * standard_block;

  Output out;
  Json perm = Json::array();
  for (std::size_t k : ordered.perm) perm.push_back(k);
  out.payload["permutation"] = std::move(perm);
  out.payload["A"] = to_json(normal.a);
  out.payload["Z"] = to_json(normal.z.z());
  out.payload["split"] = to_json(RealLinearMap(to_split_form(normal.z)));
  out.diagnostics["reconstruction_residual"] = frobenius_norm(rebuilt - ordered.basis.generators());
  return out;
}

Output lattice_same(const Json& input, const Options& o) {
  const SameLatticeResult r =
      same_lattice(parse_lattice(field(input, "L1"), o.tol), parse_lattice(field(input, "L2"), o.tol), o.tol);
  Output out;
  out.payload["same"] = r.same;
  out.payload["ambiguous"] = r.ambiguous;
  out.payload["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  out.diagnostics["max_rounding_error"] = r.max_rounding_error;
  return out;
}

Output lattice_equiv(const Json& input, const Options& o) {
  EquivalenceOptions eo;
  eo.mode = o.mode;
  if (input.contains("mode")) {
    const Json& m = input["mode"];
    if (m == "unitary") eo.mode = EquivalenceMode::kUnitary;
    else if (m == "special_unitary") eo.mode = EquivalenceMode::kSpecialUnitary;
    else throw InputError("mode must be 'unitary' or 'special_unitary'");
  }
  eo.height = o.height;
  eo.radius = o.radius;
  eo.tol = o.tol;
  const EquivalenceVerdict v =
      lattice_equivalent(parse_matrix(field(input, "A1")), parse_matrix(field(input, "A2")), eo);

  Output out;
  out.payload["verdict"] = std::string(status_name(v.status));
  if (v.witness) {
    Json w;
    w["T"] = v.witness->t ? to_json(*v.witness->t) : Json(nullptr);
    w["B"] = to_json(v.witness->b.matrix());
    out.payload["witness"] = std::move(w);
  } else {
    out.payload["witness"] = nullptr;
  }
  if (v.refuter) {
    Json r;
    r["name"] = v.refuter->name;
    r["left"] = v.refuter->left;
    r["right"] = v.refuter->right;
    r["detail"] = v.refuter->detail;
    out.payload["refuter"] = std::move(r);
  } else {
    out.payload["refuter"] = nullptr;
  }
  out.payload["bound"] = v.bound;
  out.diagnostics["mode"] = eo.mode == EquivalenceMode::kUnitary ? "unitary" : "special_unitary";
  out.diagnostics["candidates_examined"] = v.candidates_examined;
  Json skipped = Json::array();
  for (const auto& s : v.skipped_refuters) skipped.push_back(s);
  out.diagnostics["skipped_refuters"] = std::move(skipped);
  return out;
}

Output sigma_check(const Json& input, const Options& o) {
  const GaussianUnimodular b = sigma_membership(parse_matrix(field(input, "B")), o.tol);
  Output out;
  out.payload["member"] = true;
  out.payload["B"] = to_json(b.matrix());
  out.payload["inverse"] = to_json(b.inverse());
  out.diagnostics["height"] = b.matrix().height();
  return out;
}

Output torus_reduce(const Json& input, const Options& o) {
  const LatticeBasis l = parse_lattice(field(input, "lattice"), o.tol);
  Output out;
  out.payload = point_json(reduce(l, parse_vector(field(input, "z")), o.tol));
  return out;
}

Output torus_add_cmd(const Json& input, const Options& o) {
  const LatticeBasis l = parse_lattice(field(input, "lattice"), o.tol);
  const TorusPoint p = reduce(l, parse_vector(field(input, "p")), o.tol);
  const TorusPoint q = reduce(l, parse_vector(field(input, "q")), o.tol);
  Output out;
  out.payload = point_json(torus_add(p, q, o.tol));
  return out;
}

Output dim1_forms(const Json& input, const Options& o) {
  const dim1::ScalarForms f =
      dim1::from_ab(parse_complex(field(input, "a")), parse_complex(field(input, "b")), o.tol);
  Output out;
  out.payload["a"] = to_json(f.ab.a);
  out.payload["b"] = to_json(f.ab.b);
  out.payload["c"] = f.ac ? to_json(f.ac->c) : Json(nullptr);
  out.payload["alpha"] = to_json(f.alphabeta.alpha);
  out.payload["beta"] = to_json(f.alphabeta.beta);
  out.payload["theta"] = f.thetamu ? to_json(f.thetamu->theta) : Json(nullptr);
  out.payload["mu"] = f.thetamu ? to_json(f.thetamu->mu) : Json(nullptr);
  out.payload["invertible"] = dim1::is_invertible_1d(f, o.tol);
  const char* regime = f.regime == dim1::Regime::kMajorized      ? "majorized"
                       : f.regime == dim1::Regime::kAntiDominant ? "anti_dominant"
                                                                 : "singular";
  out.payload["regime"] = regime;
  out.diagnostics["margin"] = dim1::invertibility_margin(f.alphabeta);
  return out;
}

const std::map<std::string_view, Handler>& handlers() {
  static const std::map<std::string_view, Handler> table = {
      {"map-apply", map_apply},
      {"map-convert", map_convert},
      {"map-invertible", map_invertible},
      {"map-majorizes", map_majorizes},
      {"map-normalize", map_normalize},
      {"polar", polar_cmd},
      {"gram", gram_cmd},
      {"unitary-equiv", unitary_equiv},
      {"sl-normalize", sl_normalize_cmd},
      {"lattice-validate", lattice_validate},
      {"lattice-covolume", lattice_covolume},
      {"lattice-normalize", lattice_normalize},
      {"lattice-same", lattice_same},
      {"lattice-equiv", lattice_equiv},
      {"sigma-check", sigma_check},
      {"torus-reduce", torus_reduce},
      {"torus-add", torus_add_cmd},
      {"dim1-forms", dim1_forms},
  };
  return table;
}

int emit_error(std::ostream& out, std::string_view command, std::string_view name,
               const std::string& message, int code) {
  Json result;
  result["status"] = "error";
  result["command"] = std::string(command);
  Json err;
  err["name"] = std::string(name);
  err["message"] = message;
  result["error"] = std::move(err);
  out << dump(result);
  return code;
}

}  // namespace

const std::vector<std::string_view>& command_names() {
  static const std::vector<std::string_view> names = {
      "map-apply",        "map-convert",      "map-invertible",    "map-majorizes", "map-normalize",
      "polar",            "gram",             "unitary-equiv",     "sl-normalize",  "lattice-validate",
      "lattice-covolume", "lattice-normalize", "lattice-same",     "lattice-equiv", "sigma-check",
      "torus-reduce",     "torus-add",        "dim1-forms",
  };
  return names;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  CLI::App app{"Real-linear maps and lattices in C^n"};
  std::string command;
  std::string in_path;
  double tol_rel = kDefaultTolerance.rel;
  double tol_abs = kDefaultTolerance.abs;
  int height = 2;
  double radius = 4.0;
  std::string mode = "unitary";

  std::vector<std::string> choices(command_names().begin(), command_names().end());
  app.add_option("command", command, "Subcommand")->required()->check(CLI::IsMember(choices));
  app.add_option("--in", in_path, "Input JSON file (default: standard input)");
  app.add_option("--tol-rel", tol_rel, "Relative tolerance");
  app.add_option("--tol-abs", tol_abs, "Absolute tolerance");
  app.add_option("--height", height, "Entry height bound for lattice-equiv")->check(CLI::NonNegativeNumber);
  app.add_option("--radius", radius, "Squared radius for the short-vector refuter")->check(CLI::PositiveNumber);
  app.add_option("--mode", mode, "lattice-equiv mode")->check(CLI::IsMember({"unitary", "special_unitary"}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return emit_error(out, command, "MalformedInput", e.what(), 2);
  }

  Options options;
  try {
    options.tol = Tolerance::make(tol_rel, tol_abs);
  } catch (const Error& e) {
    return emit_error(out, command, "MalformedInput", e.what(), 2);
  }
  options.height = height;
  options.radius = radius;
  options.mode = mode == "special_unitary" ? EquivalenceMode::kSpecialUnitary : EquivalenceMode::kUnitary;

  Json input;
  try {
    if (in_path.empty()) {
      input = Json::parse(in);
    } else {
      std::ifstream file(in_path);
      if (!file) return emit_error(out, command, "MalformedInput", "cannot open " + in_path, 2);
      input = Json::parse(file);
    }
  } catch (const Json::exception& e) {
    return emit_error(out, command, "MalformedInput", e.what(), 2);
  }

  Output result;
  try {
    result = handlers().at(command)(input, options);
  } catch (const InputError& e) {
    return emit_error(out, command, "MalformedInput", e.what(), 2);
  } catch (const Json::exception& e) {
    return emit_error(out, command, "MalformedInput", e.what(), 2);
  } catch (const Error& e) {
    return emit_error(out, command, e.name(), e.what(), 1);
  }

  Json doc;
  doc["status"] = "ok";
  doc["command"] = command;
  doc["payload"] = std::move(result.payload);
  result.diagnostics["tolerance"] = tolerance_json(options.tol);
  doc["diagnostics"] = std::move(result.diagnostics);
  out << dump(doc);
  return 0;
}

}  // namespace clat::cli
