// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "wlp/cli.hpp"

using namespace wlp;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const std::string kFixtures = FIXTURE_DIR;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects failed checks for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

GradedModule load(const std::string& name) { return build_module(parse_spec(cli::read_file(kFixtures + "/" + name))); }

std::string dims_text(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Witness checks accumulated by every suite for criterion 10.
struct WitnessLedger {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  void record(const GradedModule& m, const WlpReport& r, const std::string& where) {
    if (!r.verdict || m.field().is_finite()) return;
    ++checked;
    if (!r.witness)
      failures.push_back(where + ": no witness");
    else if (!oracle::attains_max_rank_everywhere(m, *r.witness))
      failures.push_back(where + ": witness " + r.witness->to_string() + " drops rank");
  }
};

WitnessLedger witnesses;

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome conflicting_sum() {
  auto start = Clock::now();
  GradedModule m = load("conflicting_sum.wlp");
  WlpReport r = has_wlp(m);
  double t = seconds_since(start);
  Check c;
  HilbertFunction h = hilbert_function(m);
  c.expect(h.values == std::vector<std::size_t>{2, 2}, "HF " + h.to_string());
  c.expect(!r.verdict, "verdict should be no WLP");
  // no linear form is injective or surjective in degree 0
  c.expect(std::max(pencil_generic_rank(m.mul_x(0), m.mul_y(0)), rank(m.mul_x(0))) < 2, "some form has full rank");
  c.expect(t < 1.0, "runtime " + std::to_string(t) + " s");
  std::ostringstream d;
  d << "verdict " << (r.verdict ? "WLP" : "no WLP") << ", HF " << h.to_string() << ", " << t << " s";
  for (auto& f : c.failures) d << "; " << f;
  return {c.failures.empty(), d.str()};
}

Outcome flat_sum() {
  auto start = Clock::now();
  GradedModule m = load("flat_sum.wlp");
  WlpReport r = has_wlp(m);
  double t = seconds_since(start);
  Check c;
  c.expect(r.verdict, "verdict should be WLP");
  c.expect(r.witness && oracle::attains_max_rank_everywhere(m, *r.witness), "witness invalid");
  c.expect(is_lefschetz_element(m, LinearForm::y(Q)) && oracle::attains_max_rank_everywhere(m, LinearForm::y(Q)),
           "y rejected as a witness");
  c.expect(t < 1.0, "runtime " + std::to_string(t) + " s");
  witnesses.record(m, r, "flat_sum");
  std::ostringstream d;
  d << "verdict " << (r.verdict ? "WLP" : "no WLP") << ", witness " << (r.witness ? r.witness->to_string() : "none")
    << ", y accepted, " << t << " s";
  for (auto& f : c.failures) d << "; " << f;
  return {c.failures.empty(), d.str()};
}

Outcome square_pair() {
  auto start = Clock::now();
  GradedModule m = load("square_pair_3x3.wlp");
  GradedModule pair = degree_pair(m, 0);
  Lemma1Result l = lemma1_search(pair);
  DeterminantResult det = determinant_method(pair);
  WlpReport r = has_wlp(m);
  WlpReport rd = has_wlp(m, Method::determinant);
  double t = seconds_since(start);
  Check c;
  HilbertFunction h = hilbert_function(m);
  c.expect(h.values == std::vector<std::size_t>{3, 3}, "HF " + h.to_string());
  c.expect(l.found && l.assignment == std::vector<int>{0, 1, 1}, "assignment is not (x, y, y)");
  c.expect(det.p && det.p->is_zero(), "p(g) is not identically zero");
  c.expect(!det.report.verdict && !r.verdict && !rd.verdict, "verdict should be no WLP");
  const TraceStep* step = nullptr;
  for (const auto& s : rd.trace)
    if (s.kind == TraceStep::Kind::determinant) step = &s;
  c.expect(step && step->matrices.at(0) == Matrix::from_rows(Q, {{1, 1, 0}, {0, 0, 0}, {0, -2, 0}}) &&
               step->matrices.at(1) == Matrix::from_rows(Q, {{0, 0, 0}, {1, 1, 0}, {0, 0, 1}}),
           "trace matrices differ from the printed A, B");
  // same module presented by the unchanged generators x^6, x^2*y^4, x^3*y^3
  GradedModule plain = build_module(parse_spec(
      "module = submodule(ideal = (x,y)^8 + (x^2*y^5, x^4*y^3), gens = x^6, x^2*y^4, x^3*y^3)"));
  c.expect(hilbert_function(plain) == h && !has_wlp(plain).verdict, "unchanged basis disagrees");
  c.expect(t < 1.0, "runtime " + std::to_string(t) + " s");
  std::ostringstream d;
  d << "HF " << h.to_string() << ", assignment " << detail::assignment_string(l.assignment) << ", p(g) = "
    << (det.p ? det.p->to_string() : "?") << ", verdict " << (r.verdict ? "WLP" : "no WLP") << ", " << t << " s";
  for (auto& f : c.failures) d << "; " << f;
  return {c.failures.empty(), d.str()};
}

Outcome two_cycles() {
  auto start = Clock::now();
  GradedModule m = load("two_cycles_5x6.wlp");
  WlpReport r = has_wlp(m, Method::algorithm);
  double t = seconds_since(start);
  Check c;
  using K = TraceStep::Kind;
  HilbertFunction h = hilbert_function(m);
  c.expect(h.values == std::vector<std::size_t>{5, 6}, "HF " + h.to_string());
  c.expect(r.verdict, "verdict should be WLP");
  const auto& tr = r.trace;
  bool shape = tr.size() == 11;
  for (std::size_t cyc = 0; shape && cyc < 2; ++cyc) {
    const TraceStep* s = &tr[5 * cyc];
    shape = s[0].kind == K::inj_x && s[0].dim == 1 && s[1].kind == K::inj_y && s[1].dim == 1 &&
            s[2].kind == K::kernel_meet && s[2].dim == 0 && s[3].kind == K::image_meet && s[3].dim == 0 &&
            s[4].kind == K::quotient;
  }
  c.expect(shape, "trace does not show two kernel/quotient cycles");
  c.expect(shape && tr[4].dims_after == std::vector<std::size_t>{3, 4}, "first quotient is not (3, 4)");
  c.expect(shape && tr[9].dims_after == std::vector<std::size_t>{1, 2}, "second quotient is not (1, 2)");
  c.expect(shape && tr[10].kind == K::inj_x && tr[10].holds, "does not end with x injective");
  c.expect(t < 2.0, "runtime " + std::to_string(t) + " s");
  witnesses.record(m, r, "two_cycles");
  std::ostringstream d;
  d << "HF " << h.to_string();
  if (shape) d << " -> " << dims_text(tr[4].dims_after) << " -> " << dims_text(tr[9].dims_after) << ", x injective";
  d << ", verdict " << (r.verdict ? "WLP" : "no WLP") << ", " << t << " s";
  for (auto& f : c.failures) d << "; " << f;
  return {c.failures.empty(), d.str()};
}

Outcome late_generator() {
  auto start = Clock::now();
  GradedModule m = load("late_generator.wlp");
  WlpReport r = has_wlp(m);
  double t = seconds_since(start);
  Check c;
  HilbertFunction h = hilbert_function(m);
  c.expect(h.values == std::vector<std::size_t>{1, 2, 2, 2, 2}, "HF " + h.to_string());
  c.expect(!r.verdict, "verdict should be no WLP");
  auto failing = r.failing();
  c.expect(failing.size() == 1 && failing[0].degree == 3, "failing pairs are not exactly (3, 4)");
  bool gen4 = false;
  for (const auto& g : minimal_generator_degrees(m)) gen4 |= m.shift() + static_cast<int>(g.index) == 4;
  c.expect(gen4, "no minimal generator in degree 4");
  c.expect(t < 1.0, "runtime " + std::to_string(t) + " s");
  std::ostringstream d;
  d << "HF " << h.to_string() << " from degree " << h.shift << ", verdict " << (r.verdict ? "WLP" : "no WLP")
    << ", failing";
  for (const auto& f : failing) d << " (" << f.degree << "," << f.degree + 1 << ")";
  d << ", generator in degree 4: " << (gen4 ? "yes" : "no") << ", " << t << " s";
  for (auto& f : c.failures) d << "; " << f;
  return {c.failures.empty(), d.str()};
}

std::vector<GradedModule> step5_pairs;  // pairs that reached the quotient step, for criterion 9

Outcome method_agreement() {
  auto start = Clock::now();
  std::mt19937 rng(20240601);
  std::size_t pairs = 0, det_pairs = 0, negative = 0, disagreements = 0;
  std::vector<std::string> notes;
  for (int k = 0; k < 500; ++k) {
    GradedModule m = k % 3 == 0   ? gen::random_submodule(rng, Q)
                     : k % 3 == 1 ? gen::random_sparse_submodule(rng, Q)
                                  : gen::random_sum(rng, Q);
    for (std::size_t i = 0; i + 1 < m.length(); ++i) {
      GradedModule p = degree_pair(m, i);
      if (std::min(p.dim(0), p.dim(1)) == 0) continue;
      ++pairs;
      GradedModule q = p.dim(0) > p.dim(1) ? dual_pair(p) : p;
      bool alg = check_degree_pair_algorithm(q).verdict;
      bool orc = pencil_oracle(p).verdict;
      bool agree = alg == orc;
      if (p.dim(0) == p.dim(1) && generated_in_degree_zero(p)) {
        ++det_pairs;
        agree = agree && determinant_method(p).report.verdict == alg;
      }
      if (analyze_kernels(q).reaches_quotient()) step5_pairs.push_back(q);
      negative += alg ? 0 : 1;
      if (!agree) {
        ++disagreements;
        if (notes.size() < 3) notes.push_back("module " + std::to_string(k) + " pair " + std::to_string(i));
      }
    }
    WlpReport r = has_wlp(m);
    witnesses.record(m, r, "agreement module " + std::to_string(k));
  }
  double t = seconds_since(start);
  bool pass = disagreements == 0 && t < 60.0;
  std::ostringstream d;
  d << "500 modules, " << pairs << " degree pairs (" << det_pairs << " square, " << negative << " without maximal rank), "
    << disagreements << " disagreements, " << t << " s";
  for (auto& n : notes) d << "; " << n;
  return {pass, d.str()};
}

Outcome cyclic_law() {
  std::mt19937 rng(7);
  std::size_t failures = 0;
  for (int k = 0; k < 200; ++k) {
    GradedModule m = cyclic(gen::random_artinian_ideal(rng, Q, 2, 8));
    WlpReport r = has_wlp(m);
    failures += r.verdict ? 0 : 1;
    witnesses.record(m, r, "cyclic " + std::to_string(k));
  }
  return {failures == 0, "200 cyclic quotients, " + std::to_string(failures) + " without WLP"};
}

Outcome duality() {
  std::mt19937 rng(8);
  std::size_t failures = 0;
  for (int k = 0; k < 200; ++k) {
    GradedModule m = gen::random_module(rng, Q);
    GradedModule d = dual(m);
    WlpReport r = has_wlp(m), rd = has_wlp(d);
    std::vector<std::size_t> h = hilbert_function(m).values, hd = hilbert_function(d).values;
    std::reverse(h.begin(), h.end());
    failures += (r.verdict == rd.verdict && h == hd) ? 0 : 1;
    witnesses.record(m, r, "duality " + std::to_string(k));
    witnesses.record(d, rd, "duality dual " + std::to_string(k));
  }
  return {failures == 0, "200 modules, " + std::to_string(failures) + " mismatches"};
}

Outcome step_five() {
  std::mt19937 rng(9);
  for (int k = 0; k < 600; ++k) {
    GradedModule p = gen::random_pair(rng, Q, 6, true);
    if (p.dim(0) > p.dim(1)) p = dual_pair(p);
    if (analyze_kernels(p).reaches_quotient()) step5_pairs.push_back(p);
  }
  std::size_t failures = 0;
  for (const auto& p : step5_pairs) {
    GradedModule q = reduce_by_kernels(p);
    failures += pencil_oracle(p).verdict == pencil_oracle(q).verdict ? 0 : 1;
    WlpReport r = has_wlp(p);
    witnesses.record(p, r, "step-5 pair");
  }
  bool pass = failures == 0 && !step5_pairs.empty();
  return {pass, std::to_string(step5_pairs.size()) + " pairs reached the quotient step, " + std::to_string(failures) +
                    " verdict changes"};
}

Outcome witness_validity() {
  std::ostringstream d;
  d << witnesses.checked << " positive verdicts over Q re-checked, " << witnesses.failures.size() << " invalid";
  for (std::size_t i = 0; i < witnesses.failures.size() && i < 3; ++i) d << "; " << witnesses.failures[i];
  return {witnesses.failures.empty() && witnesses.checked > 0, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "two-summand sum with conflicting growth has no WLP", conflicting_sum},
      {2, "sum of two S/(x, y^2) has the WLP with y accepted", flat_sum},
      {3, "square 3x3 pair: assignment (x, y, y), p(g) = 0", square_pair},
      {4, "(5, 6) pair: two quotient cycles, then x injective", two_cycles},
      {5, "(1, 2, 2, 2, 2): fails at (3, 4), generator in degree 4", late_generator},
      {6, "method agreement on 500 random modules", method_agreement},
      {7, "cyclic quotients have the WLP", cyclic_law},
      {8, "duality preserves the verdict and reverses HF", duality},
      {9, "quotient step preserves the verdict", step_five},
      {10, "witnesses attain maximal rank in every degree", witness_validity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "AC" << c.id << " " << c.name << ": " << o.detail << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
