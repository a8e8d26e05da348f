#pragma once

// Command-line driver: `wlp check|explain|oracle|gamma <file>...`.
// Exit status: 0 = WLP, 1 = no WLP, 2 = error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <future>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "wlp/report.hpp"
#include "wlp/spec_file.hpp"

namespace wlp::cli {

constexpr int kHasWlp = 0;
constexpr int kNoWlp = 1;
constexpr int kError = 2;

struct Options {
  Method method = Method::auto_select;
  bool json = false;
  bool witness = false;
  bool trace = false;
};

struct Outcome {
  int status = kError;
  std::string text;     // rendered text report or error line
  nlohmann::json json;  // rendered JSON report or {"source", "error"}
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline Outcome error_outcome(const std::string& source, const std::string& what) {
  Outcome o;
  o.status = kError;
  o.text = source + ": error: " + what + "\n";
  o.json = {{"source", source}, {"error", what}};
  return o;
}

/// Builds and decides the module described by `text`.
inline Outcome check_text(const std::string& source, const std::string& text, const Options& opt) {
  try {
    ModuleSpec spec = parse_spec(text);
    ModuleReport r{source, build_module(spec), {}, std::nullopt};
    r.wlp = has_wlp(r.module, opt.method);
    if (spec.expr.kind == SpecNode::Kind::sum) r.summands = direct_sum_wlp_analysis(build_summands(spec), opt.method);
    ReportOptions ro{opt.witness, opt.trace, opt.method};
    Outcome o;
    o.status = r.wlp.verdict ? kHasWlp : kNoWlp;
    o.text = render_text(r, ro);
    o.json = render_json(r, ro);
    return o;
  } catch (const std::exception& e) {
    return error_outcome(source, e.what());
  }
}

inline Outcome check_file(const std::string& path, const Options& opt) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    return error_outcome(path, e.what());
  }
  return check_text(path, text, opt);
}

/// p(g) for every square degree pair generated in its lower degree.
inline Outcome gamma_file(const std::string& path) {
  try {
    GradedModule m = build_module(parse_spec(read_file(path)));
    Outcome o;
    o.json = {{"source", path}, {"pairs", nlohmann::json::array()}};
    std::ostringstream os;
    os << path << "\n";
    bool any = false, all_pass = true;
    for (std::size_t i = 0; i + 1 < m.length(); ++i) {
      GradedModule pair = degree_pair(m, i);
      if (pair.dim(0) == 0 || pair.dim(0) != pair.dim(1) || !generated_in_degree_zero(pair)) continue;
      any = true;
      DeterminantResult d = determinant_method(pair);
      all_pass = all_pass && d.report.verdict;
      int deg = m.shift() + static_cast<int>(i);
      nlohmann::json entry{{"degree", deg}, {"verdict", d.report.verdict}};
      os << "  " << deg << " -> " << deg + 1 << ": ";
      if (d.p) {
        const TraceStep& step = d.report.trace.back();
        entry["polynomial"] = d.p->to_string();
        entry["A"] = detail::matrix_json(step.matrices.at(0));
        entry["B"] = detail::matrix_json(step.matrices.at(1));
        os << "p(g) = " << d.p->to_string() << "; A = " << step.matrices.at(0) << ", B = " << step.matrices.at(1);
      } else if (!d.report.trace.empty() && d.report.trace.back().kind == TraceStep::Kind::lemma1) {
        entry["polynomial"] = nullptr;
        os << "no independent assignment";
      } else {
        entry["polynomial"] = nullptr;
        os << "pure variable " << d.report.witness->to_string() << " is bijective";
      }
      if (!d.report.trace.empty() && d.report.trace.front().kind == TraceStep::Kind::lemma1 && d.report.trace.front().holds)
        entry["assignment"] = detail::assignment_string(d.report.trace.front().assignment);
      os << " -> " << (d.report.verdict ? "WLP" : "no WLP") << "\n";
      o.json["pairs"].push_back(std::move(entry));
    }
    if (!any) return error_outcome(path, "no square degree pair generated in its lower degree");
    o.status = all_pass ? kHasWlp : kNoWlp;
    o.text = os.str();
    return o;
  } catch (const std::exception& e) {
    return error_outcome(path, e.what());
  }
}

inline int combine_status(const std::vector<Outcome>& outcomes) {
  int status = kHasWlp;
  for (const auto& o : outcomes) status = std::max(status, o.status);
  return status;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak Lefschetz Property checker for graded K[x,y]-modules"};
  app.require_subcommand(1);

  Options opt;
  std::string method = "auto";
  std::vector<std::string> files;
  std::string file;

  auto add_flags = [&](CLI::App* sub, bool with_method) {
    if (with_method)
      sub->add_option("--method", method, "auto|algorithm|determinant|oracle")
          ->check(CLI::IsMember({"auto", "algorithm", "determinant", "oracle"}));
    sub->add_flag("--json", opt.json, "machine-readable output");
    sub->add_flag("--witness", opt.witness, "print a Lefschetz element");
    sub->add_flag("--trace", opt.trace, "print the decision trace");
  };

  auto* check = app.add_subcommand("check", "decide the WLP for each file");
  check->add_option("files", files, "module description files")->required();
  add_flags(check, true);

  auto* explain = app.add_subcommand("explain", "decide with the full trace and witness");
  explain->add_option("file", file, "module description file")->required();
  add_flags(explain, true);

  auto* oracle = app.add_subcommand("oracle", "decide with the pencil oracle only");
  oracle->add_option("file", file, "module description file")->required();
  add_flags(oracle, false);

  auto* gamma = app.add_subcommand("gamma", "print p(g) for square pairs generated in degree 0");
  gamma->add_option("file", file, "module description file")->required();
  gamma->add_flag("--json", opt.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kError;
  }
  opt.method = parse_method(method);

  std::vector<Outcome> outcomes;
  if (check->parsed()) {
    std::vector<std::future<Outcome>> jobs;
    for (const auto& f : files) jobs.push_back(std::async(std::launch::async, [f, opt] { return check_file(f, opt); }));
    for (auto& j : jobs) outcomes.push_back(j.get());
  } else if (explain->parsed()) {
    opt.trace = opt.witness = true;
    outcomes.push_back(check_file(file, opt));
  } else if (oracle->parsed()) {
    opt.method = Method::oracle;
    outcomes.push_back(check_file(file, opt));
  } else if (gamma->parsed()) {
    outcomes.push_back(gamma_file(file));
  }

  if (opt.json) {
    if (check->parsed()) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& o : outcomes) arr.push_back(o.json);
      out << arr.dump(2) << "\n";
    } else {
      out << outcomes.front().json.dump(2) << "\n";
    }
  } else {
    for (const auto& o : outcomes) (o.status == kError ? err : out) << o.text;
  }
  return combine_status(outcomes);
}

}  // namespace wlp::cli
