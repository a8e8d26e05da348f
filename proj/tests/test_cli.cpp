#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "support/generators.hpp"
#include "wlp/cli.hpp"

using namespace wlp;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = FIXTURE_DIR;

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

struct CliRun {
  int status;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "wlp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  fs::path p = fs::temp_directory_path() / ("wlp_test_" + name);
  std::ofstream(p) << body;
  return p.string();
}

const std::vector<std::string> kAllFixtures = {"conflicting_sum.wlp", "flat_sum.wlp", "square_pair_3x3.wlp",
                                               "two_cycles_5x6.wlp", "late_generator.wlp"};

}  // namespace

TEST(SpecFile, ParsesConstructions) {
  ModuleSpec sq = parse_spec(
      "field = Q\nmodule = submodule(ideal = (x,y)^8 + (x^2*y^5, x^4*y^3), gens = x^6, x^2*y^4, x^3*y^3)\n");
  EXPECT_EQ(sq.expr.kind, SpecNode::Kind::submodule);
  EXPECT_EQ(sq.expr.gens.size(), 3u);
  ModuleSpec sum = parse_spec(cli::read_file(fixture("conflicting_sum.wlp")));
  EXPECT_EQ(sum.expr.kind, SpecNode::Kind::sum);
  EXPECT_EQ(sum.expr.children.size(), 2u);
  ModuleSpec nested = parse_spec("# comment\nfield = GF(7)\nmodule = shift(dual(cyclic((x^2, y^2))), -3)  # trailing\n");
  EXPECT_EQ(nested.field, FieldSpec::prime_field(7));
  EXPECT_EQ(nested.expr.kind, SpecNode::Kind::shift);
  EXPECT_EQ(nested.expr.amount, -3);
  EXPECT_EQ(parse_spec("module = cyclic((x, y))").field, FieldSpec::rationals());
}

TEST(SpecFile, Errors) {
  EXPECT_THROW(parse_spec("module = submodule(ideal = (x, y^2), gens = )"), ParseError);
  EXPECT_THROW(parse_spec("module = submodule(ideal = (x, y^2), gens = ())"), ParseError);
  EXPECT_THROW(parse_spec("field = GF(8)\nmodule = cyclic((x, y))"), ParseError);
  EXPECT_THROW(parse_spec("field = R\nmodule = cyclic((x, y))"), ParseError);
  EXPECT_THROW(parse_spec("field = Q"), ParseError);
  EXPECT_THROW(parse_spec("module = tensor(cyclic((x, y)))"), ParseError);
  try {
    parse_spec("field = Q\nmodule = cyclic((x, z))\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 21u);
  }
  // non-Artinian ideals parse fine and fail when built
  ModuleSpec spec = parse_spec("module = cyclic((x^2))");
  EXPECT_THROW(build_module(spec), NotArtinian);
}

TEST(SpecFile, PrintParseRoundTrip) {
  for (const auto& name : kAllFixtures) {
    ModuleSpec spec = parse_spec(cli::read_file(fixture(name)));
    EXPECT_EQ(parse_spec(print_spec(spec)), spec) << name;
    EXPECT_EQ(print_spec(parse_spec(print_spec(spec))), print_spec(spec));
  }
  std::mt19937 rng(51);
  for (int k = 0; k < 50; ++k) {
    ModuleSpec spec;
    spec.field = k % 2 ? FieldSpec::rationals() : FieldSpec::prime_field(11);
    auto leaf = [&] {
      SpecNode n;
      n.kind = SpecNode::Kind::submodule;
      n.ideal.field = spec.field;
      n.ideal.terms.push_back({{BiPoly::x(spec.field), BiPoly::y(spec.field)}, gen::uniform(rng, 2, 6)});
      n.ideal.terms.push_back({{gen::random_form(rng, spec.field, 2, 3)}, 1});
      n.gens = {gen::random_form(rng, spec.field, 1, 2), gen::random_form(rng, spec.field, 1, 2)};
      return n;
    };
    SpecNode sum;
    sum.kind = SpecNode::Kind::sum;
    sum.children = {leaf(), leaf()};
    SpecNode sh;
    sh.kind = SpecNode::Kind::shift;
    sh.amount = gen::uniform(rng, -4, 4);
    sh.children = {sum};
    SpecNode du;
    du.kind = SpecNode::Kind::dual;
    du.children = {sh};
    spec.expr = du;
    EXPECT_EQ(parse_spec(print_spec(spec)), spec) << print_spec(spec);
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"check", fixture("two_cycles_5x6.wlp")}).status, 0);
  EXPECT_EQ(run({"check", fixture("late_generator.wlp")}).status, 1);
  EXPECT_EQ(run({"check", fixture("two_cycles_5x6.wlp"), fixture("late_generator.wlp")}).status, 1);
  std::string bad = temp_file("bad.wlp", "module = cyclic((x, \n");
  CliRun r = run({"check", bad, fixture("flat_sum.wlp")});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("error"), std::string::npos);
  EXPECT_EQ(run({"check", temp_file("na.wlp", "module = cyclic((x^3))\n")}).status, 2);
  EXPECT_EQ(run({"check", temp_file("zero.wlp", "module = submodule(ideal = (x, y^2), gens = x)\n")}).status, 2);
  EXPECT_EQ(run({"check", "/nonexistent/file.wlp"}).status, 2);
  EXPECT_EQ(run({"check"}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"check", "--method", "guess", fixture("conflicting_sum.wlp")}).status, 2);
}

TEST(Cli, TextReports) {
  CliRun three = run({"explain", fixture("two_cycles_5x6.wlp")});
  EXPECT_EQ(three.status, 0);
  EXPECT_NE(three.out.find("Hilbert function: (5, 6) from degree 8"), std::string::npos);
  EXPECT_NE(three.out.find("quotient: (5, 6) -> (3, 4)"), std::string::npos);
  EXPECT_NE(three.out.find("quotient: (3, 4) -> (1, 2)"), std::string::npos);
  EXPECT_NE(three.out.find("x is injective"), std::string::npos);

  CliRun four = run({"check", fixture("late_generator.wlp")});
  EXPECT_NE(four.out.find("failing degrees: 3 -> 4;"), std::string::npos);
  EXPECT_NE(four.out.find("1 in degree 4"), std::string::npos);

  CliRun batch = run({"check", fixture("flat_sum.wlp"), fixture("conflicting_sum.wlp"), fixture("late_generator.wlp")});
  std::size_t a = batch.out.find("flat_sum"), b = batch.out.find("conflicting_sum"), c = batch.out.find("late_generator");
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
}

TEST(Cli, DeterminantMethodFailsLoudly) {
  CliRun r = run({"check", "--method", "determinant", fixture("two_cycles_5x6.wlp")});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("determinant method"), std::string::npos);
  EXPECT_EQ(run({"check", "--method", "determinant", fixture("square_pair_3x3.wlp")}).status, 1);
}

TEST(Cli, Gamma) {
  CliRun sq = run({"gamma", fixture("square_pair_3x3.wlp")});
  EXPECT_EQ(sq.status, 1);
  EXPECT_NE(sq.out.find("p(g) = 0"), std::string::npos);
  EXPECT_EQ(run({"gamma", fixture("flat_sum.wlp")}).status, 0);
  EXPECT_EQ(run({"gamma", fixture("two_cycles_5x6.wlp")}).status, 2);
  CliRun js = run({"gamma", "--json", fixture("square_pair_3x3.wlp")});
  auto j = nlohmann::json::parse(js.out);
  EXPECT_EQ(j["pairs"][0]["polynomial"], "0");
  EXPECT_EQ(j["pairs"][0]["assignment"], "(x, y, y)");
}

TEST(Cli, OracleCommand) {
  CliRun r = run({"oracle", "--json", fixture("late_generator.wlp")});
  EXPECT_EQ(r.status, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["method"], "oracle");
  for (const auto& c : j["per_degree"]) EXPECT_TRUE(c["method"] == "oracle" || c["method"] == "trivial");
}

TEST(Cli, JsonMatchesText) {
  for (const auto& name : kAllFixtures) {
    CliRun text = run({"check", "--witness", fixture(name)});
    CliRun js = run({"check", "--witness", "--json", fixture(name)});
    EXPECT_EQ(text.status, js.status);
    auto arr = nlohmann::json::parse(js.out);
    ASSERT_EQ(arr.size(), 1u);
    const auto& j = arr[0];
    bool verdict = j["verdict"];
    EXPECT_NE(text.out.find(verdict ? "verdict: WLP" : "verdict: no WLP"), std::string::npos) << name;
    std::string witness = j["witness"].is_null() ? "none" : j["witness"]["form"].get<std::string>();
    EXPECT_NE(text.out.find("witness: " + witness + "\n"), std::string::npos) << name;
  }
}

TEST(Cli, JsonSchemaIsStable) {
  CliRun js = run({"check", "--json", fixture("conflicting_sum.wlp"), "/nonexistent.wlp"});
  auto arr = nlohmann::json::parse(js.out);
  ASSERT_EQ(arr.size(), 2u);
  for (const char* key : {"source", "field", "method", "hilbert_function", "minimal_generators", "verdict",
                          "finite_field_caveat", "per_degree", "failing_degrees", "summands"})
    EXPECT_TRUE(arr[0].contains(key)) << key;
  EXPECT_FALSE(arr[0].contains("witness"));
  EXPECT_FALSE(arr[0].contains("trace"));
  EXPECT_TRUE(arr[1].contains("error"));
  EXPECT_EQ(arr[1]["source"], "/nonexistent.wlp");
}
