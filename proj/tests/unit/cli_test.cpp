#include <gtest/gtest.h>

#include <sstream>

#include "cli/commands.hpp"
#include "cli/json_io.hpp"
#include "support/golden.hpp"

namespace clat::cli {
namespace {

struct Invocation {
  int code;
  Json doc;
};

Invocation invoke(const std::string& command, const Json& input, std::vector<std::string> flags = {}) {
  std::vector<std::string> args{"clat", command};
  args.insert(args.end(), flags.begin(), flags.end());
  std::istringstream in(input.dump());
  std::ostringstream out;
  const int code = run(args, in, out);
  return {code, Json::parse(out.str())};
}

Json ok_payload(const std::string& command, const Json& input) {
  const auto r = invoke(command, input);
  EXPECT_EQ(r.code, 0) << r.doc.dump();
  EXPECT_EQ(r.doc["status"], "ok");
  return r.doc["payload"];
}

double max_diff(const Json& a, const Json& b) {
  if (a.is_number()) return std::abs(a.get<double>() - b.get<double>());
  double m = 0.0;
  EXPECT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) m = std::max(m, max_diff(a[k], b[k]));
  return m;
}

Json c(double re, double im = 0.0) { return Json::array({re, im}); }

class Golden : public ::testing::TestWithParam<testing::GoldenCase> {};

TEST_P(Golden, MatchesExpectedBytes) {
  const auto& g = GetParam();
  const auto first = testing::run_in_process(g);
  const auto second = testing::run_in_process(g);
  EXPECT_EQ(first.exit_code, g.exit_code);
  EXPECT_EQ(first.output, g.expected);
  EXPECT_EQ(second.output, first.output);
  const auto doc = Json::parse(first.output);
  EXPECT_EQ(doc["status"] == "ok", g.exit_code == 0);
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(testing::load_golden_cases(CLAT_GOLDEN_DIR)),
                         [](const auto& info) {
                           std::string name = info.param.name;
                           for (char& ch : name)
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           return name;
                         });

TEST(Cli, FlagsAndErrors) {
  std::ostringstream out;
  std::istringstream in("{}");
  EXPECT_EQ(run({"clat", "frobnicate"}, in, out), 2);
  EXPECT_NE(out.str().find("MalformedInput"), std::string::npos);

  std::ostringstream help;
  EXPECT_EQ(run({"clat", "--help"}, in, help), 0);
  EXPECT_NE(help.str().find("--radius"), std::string::npos);

  Json lattice = {{"n", 1}, {"generators", Json::array({Json::array({c(1)}), Json::array({c(0, 1)})})}};
  EXPECT_EQ(invoke("lattice-covolume", lattice, {"--tol-rel", "0"}).code, 2);
  EXPECT_EQ(invoke("lattice-equiv", lattice, {"--mode", "orthogonal"}).code, 2);
  const auto missing = invoke("map-apply", Json::object());
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(missing.doc["error"]["name"], "MalformedInput");
}

TEST(Cli, RadiusFlagReachesRefuter) {
  const Json input = {{"A1", Json::array({Json::array({c(1)})})},
                      {"A2", Json::array({Json::array({c(1)})})}};
  const auto r = invoke("lattice-equiv", input, {"--radius", "1e9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.doc["payload"]["verdict"], "Equivalent");
  EXPECT_EQ(r.doc["diagnostics"]["skipped_refuters"], Json::array({"short_vector_spectrum"}));
}

TEST(CliRoundTrip, ConvertedMapsReparse) {
  const Json split = {{"kind", "split"},
                      {"A", Json::array({Json::array({c(1), c(2)}), Json::array({c(3), c(4)})})},
                      {"B", Json::array({Json::array({c(5), c(6)}), Json::array({c(7), c(8)})})}};
  const Json pair = ok_payload("map-convert", {{"map", split}, {"target", "conjugate_pair"}})["map"];
  const Json block = ok_payload("map-convert", {{"map", pair}, {"target", "block"}})["map"];
  const Json back = ok_payload("map-convert", {{"map", block}, {"target", "split"}})["map"];
  EXPECT_LT(max_diff(back["A"], split["A"]), 1e-12);
  EXPECT_LT(max_diff(back["B"], split["B"]), 1e-12);
  const Json z = Json::array({c(0.5, -1), c(2, 0.25)});
  EXPECT_LT(max_diff(ok_payload("map-apply", {{"map", block}, {"z", z}})["value"],
                     ok_payload("map-apply", {{"map", split}, {"z", z}})["value"]),
            1e-12);
}

TEST(CliRoundTrip, NormalizedFactorReparses) {
  const Json pair = {{"kind", "conjugate_pair"},
                     {"M", Json::array({Json::array({c(2), c(1)}), Json::array({c(0), c(0, 1)})})},
                     {"N", Json::array({Json::array({c(0.5), c(0)}), Json::array({c(0, 0.1), c(0.25)})})}};
  const Json factor = ok_payload("map-normalize", {{"map", pair}});
  const Json e_map = factor["map"];
  EXPECT_TRUE(ok_payload("map-invertible", {{"map", e_map}})["invertible"].get<bool>());
  // G applied to E's output reproduces the original map.
  const Json z = Json::array({c(1, 2), c(-0.5, 0.3)});
  const Json inner = ok_payload("map-apply", {{"map", e_map}, {"z", z}})["value"];
  const Json g_map = {{"kind", "conjugate_pair"},
                      {"M", factor["G"]},
                      {"N", Json::array({Json::array({c(0), c(0)}), Json::array({c(0), c(0)})})}};
  EXPECT_LT(max_diff(ok_payload("map-apply", {{"map", g_map}, {"z", inner}})["value"],
                     ok_payload("map-apply", {{"map", pair}, {"z", z}})["value"]),
            1e-12);
}

TEST(CliRoundTrip, PolarAndSlOutputsReparse) {
  const Json a = Json::array({Json::array({c(1, 0.5), c(2)}), Json::array({c(0), c(1, -1)})});
  const Json pd = ok_payload("polar", {{"A", a}});
  const Json check = ok_payload("unitary-equiv", {{"A1", pd["P"]}, {"A2", a}});
  EXPECT_TRUE(check["equivalent"].get<bool>());
  EXPECT_LT(max_diff(check["T"], pd["U"]), 1e-10);
  const Json sl = ok_payload("sl-normalize", {{"A", a}});
  const Json again = ok_payload("sl-normalize", {{"A", sl["A"]}});
  EXPECT_LT(max_diff(again["A"], sl["A"]), 1e-12);
  EXPECT_LT(max_diff(again["delta"], c(1)), 1e-12);
}

TEST(CliRoundTrip, LatticeOutputsReparse) {
  const Json lattice = {{"n", 2},
                        {"generators", Json::array({Json::array({c(1), c(0)}), Json::array({c(0, 1), c(0)}),
                                                    Json::array({c(0), c(1)}), Json::array({c(1), c(0, 0.5)})})}};
  const Json normal = ok_payload("lattice-normalize", lattice);
  EXPECT_TRUE(ok_payload("map-invertible", {{"map", normal["split"]}})["invertible"].get<bool>());

  const Json planted = {{"A1", Json::array({Json::array({c(1), c(0.5)}), Json::array({c(0), c(1.5)})})},
                        {"A2", Json::array({Json::array({c(1), c(0.5, 1)}), Json::array({c(0), c(1.5)})})}};
  const Json verdict = ok_payload("lattice-equiv", planted);
  ASSERT_EQ(verdict["verdict"], "Equivalent");
  const Json member = ok_payload("sigma-check", {{"B", verdict["witness"]["B"]}});
  EXPECT_TRUE(member["member"].get<bool>());

  const Json std1 = {{"n", 1}, {"generators", Json::array({Json::array({c(1)}), Json::array({c(0, 1)})})}};
  const Json reduced = ok_payload("torus-reduce", {{"lattice", std1}, {"z", Json::array({c(7.25, -3.5)})}});
  const Json twice = ok_payload("torus-reduce", {{"lattice", std1}, {"z", reduced["rep"]}});
  EXPECT_EQ(twice, reduced);
  const Json sum = ok_payload("torus-add", {{"lattice", std1}, {"p", reduced["rep"]}, {"q", reduced["rep"]}});
  EXPECT_LT(max_diff(sum["coords"], Json::array({0.5, 0.0})), 1e-15);
}

TEST(CliRoundTrip, Dim1FormsMatchMapApply) {
  const Json forms = ok_payload("dim1-forms", {{"a", c(1, 0.5)}, {"b", c(-0.25, 2)}});
  const Json as_map = {{"kind", "conjugate_pair"},
                       {"M", Json::array({Json::array({forms["alpha"]})})},
                       {"N", Json::array({Json::array({c(forms["beta"][0].get<double>(), -forms["beta"][1].get<double>())})})}};
  const Json z = Json::array({c(0.3, -0.7)});
  // a x + i b y at z = 0.3 - 0.7i.
  const std::complex<double> expected = std::complex<double>(1, 0.5) * 0.3 +
                                        std::complex<double>(0, 1) * std::complex<double>(-0.25, 2) * -0.7;
  const Json value = ok_payload("map-apply", {{"map", as_map}, {"z", z}})["value"];
  EXPECT_LT(max_diff(value, Json::array({c(expected.real(), expected.imag())})), 1e-15);
}

}  // namespace
}  // namespace clat::cli
