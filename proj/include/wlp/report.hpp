#pragma once

// Text and JSON rendering of WLP reports.

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "wlp/wlp.hpp"

namespace wlp {

struct ReportOptions {
  bool witness = false;
  bool trace = false;
  Method method = Method::auto_select;
};

/// Everything a report about one module needs.
struct ModuleReport {
  std::string source;  // file name or label
  GradedModule module;
  WlpReport wlp;
  std::optional<DirectSumAnalysis> summands;
};

namespace detail {

inline std::string dims_string(const std::vector<std::size_t>& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? ", " : "") + std::to_string(d[i]);
  return out + ")";
}

inline std::string assignment_string(const std::vector<int>& z) {
  std::string out = "(";
  for (std::size_t i = 0; i < z.size(); ++i) out += std::string(i ? ", " : "") + (z[i] == 0 ? "x" : "y");
  return out + ")";
}

inline std::string pair_label(const GradedModule& m, std::size_t index) {
  int d = m.shift() + static_cast<int>(index);
  return std::to_string(d) + " -> " + std::to_string(d + 1);
}

inline nlohmann::json matrix_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json vector_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

}  // namespace detail

inline std::string render_text(const ModuleReport& r, const ReportOptions& opt) {
  std::ostringstream os;
  const GradedModule& m = r.module;
  HilbertFunction hf = hilbert_function(m);
  os << r.source << "\n";
  os << "  field: " << m.field().to_string() << "\n";
  os << "  Hilbert function: " << hf.to_string() << " from degree " << hf.shift << "\n";
  os << "  minimal generators:";
  auto gens = minimal_generator_degrees(m);
  if (gens.empty()) os << " none";
  for (std::size_t k = 0; k < gens.size(); ++k)
    os << (k ? "," : "") << " " << gens[k].count << " in degree " << m.shift() + static_cast<int>(gens[k].index);
  os << "\n";
  os << "  verdict: " << (r.wlp.verdict ? "WLP" : "no WLP") << "\n";
  if (r.wlp.finite_field_caveat) os << "  caveat: finite field; generic arguments assume an infinite field\n";
  if (opt.witness) {
    os << "  witness: " << (r.wlp.witness ? r.wlp.witness->to_string() : std::string("none")) << "\n";
  }
  if (!r.wlp.per_degree.empty()) {
    os << "  per degree:\n";
    for (const auto& c : r.wlp.per_degree) {
      os << "    " << detail::pair_label(m, c.index) << ": dims " << c.source_dim << " -> " << c.target_dim
         << ", generic rank " << c.generic_rank << " / " << c.required_rank << ", " << c.method
         << (c.dualized ? " (dualized)" : "") << ", " << (c.passed ? "pass" : "FAIL") << "\n";
    }
  }
  auto failing = r.wlp.failing();
  if (!failing.empty()) {
    os << "  failing degrees:";
    for (const auto& c : failing) os << " " << detail::pair_label(m, c.index) << ";";
    os << "\n";
  }
  if (r.summands) {
    const auto& s = *r.summands;
    os << "  summands:";
    for (std::size_t p = 0; p < s.part_reports.size(); ++p)
      os << " [" << p + 1 << "] " << (s.part_reports[p].verdict ? "WLP" : "no WLP") << ";";
    os << " conflicts:";
    if (s.behavior_conflicts.empty()) os << " none";
    for (int d : s.behavior_conflicts) os << " " << d << " -> " << d + 1 << ";";
    os << "\n";
  }
  if (opt.trace && !r.wlp.trace.empty()) {
    os << "  trace:\n";
    for (const auto& t : r.wlp.trace) {
      os << "    [" << detail::pair_label(m, t.pair_index) << "] " << to_string(t.kind) << ": ";
      switch (t.kind) {
        case TraceStep::Kind::inj_x:
        case TraceStep::Kind::inj_y:
        case TraceStep::Kind::kernel_meet:
        case TraceStep::Kind::image_meet:
          os << t.note;
          if (!t.holds || t.kind == TraceStep::Kind::kernel_meet || t.kind == TraceStep::Kind::image_meet)
            os << " (dim " << t.dim << ")";
          break;
        case TraceStep::Kind::quotient:
        case TraceStep::Kind::dualize:
          os << detail::dims_string(t.dims_before) << " -> " << detail::dims_string(t.dims_after) << ", " << t.note;
          break;
        case TraceStep::Kind::lemma1:
          os << (t.holds ? "independent assignment " + detail::assignment_string(t.assignment) : t.note);
          break;
        case TraceStep::Kind::determinant:
          os << "A = " << t.matrices.at(0) << ", B = " << t.matrices.at(1) << ", p(g) = " << t.poly->to_string()
             << " [" << t.note << "]";
          break;
        default: os << t.note;
      }
      os << "\n";
    }
  }
  return os.str();
}

inline nlohmann::json render_json(const ModuleReport& r, const ReportOptions& opt) {
  using nlohmann::json;
  const GradedModule& m = r.module;
  HilbertFunction hf = hilbert_function(m);
  json j;
  j["source"] = r.source;
  j["field"] = m.field().to_string();
  j["method"] = to_string(opt.method);
  j["hilbert_function"] = {{"start_degree", hf.shift}, {"values", hf.values}};
  json gens = json::array();
  for (const auto& g : minimal_generator_degrees(m))
    gens.push_back({{"degree", m.shift() + static_cast<int>(g.index)}, {"count", g.count}});
  j["minimal_generators"] = gens;
  j["verdict"] = r.wlp.verdict;
  j["finite_field_caveat"] = r.wlp.finite_field_caveat;
  if (opt.witness) {
    if (r.wlp.witness)
      j["witness"] = {{"alpha", r.wlp.witness->alpha.to_string()},
                      {"beta", r.wlp.witness->beta.to_string()},
                      {"form", r.wlp.witness->to_string()}};
    else
      j["witness"] = nullptr;
  }
  json per = json::array();
  json failing = json::array();
  for (const auto& c : r.wlp.per_degree) {
    int d = m.shift() + static_cast<int>(c.index);
    per.push_back({{"index", c.index},
                   {"degree", d},
                   {"source_dim", c.source_dim},
                   {"target_dim", c.target_dim},
                   {"required_rank", c.required_rank},
                   {"generic_rank", c.generic_rank},
                   {"method", c.method},
                   {"dualized", c.dualized},
                   {"passed", c.passed}});
    if (!c.passed) failing.push_back({d, d + 1});
  }
  j["per_degree"] = per;
  j["failing_degrees"] = failing;
  if (r.summands) {
    json parts = json::array();
    for (const auto& p : r.summands->part_reports) parts.push_back(p.verdict);
    j["summands"] = {{"verdicts", parts},
                     {"behavior_conflicts", r.summands->behavior_conflicts},
                     {"sum_verdict", r.summands->sum_verdict}};
  }
  if (opt.trace) {
    json steps = json::array();
    for (const auto& t : r.wlp.trace) {
      json s{{"kind", to_string(t.kind)},
             {"degree", m.shift() + static_cast<int>(t.pair_index)},
             {"holds", t.holds},
             {"dim", t.dim},
             {"note", t.note}};
      if (!t.dims_before.empty()) s["dims_before"] = t.dims_before;
      if (!t.dims_after.empty()) s["dims_after"] = t.dims_after;
      if (!t.vectors.empty()) {
        json vs = json::array();
        for (const auto& v : t.vectors) vs.push_back(detail::vector_json(v));
        s["vectors"] = vs;
      }
      if (!t.matrices.empty()) {
        json ms = json::array();
        for (const auto& mat : t.matrices) ms.push_back(detail::matrix_json(mat));
        s["matrices"] = ms;
      }
      if (t.poly) s["polynomial"] = t.poly->to_string();
      if (!t.assignment.empty()) {
        json z = json::array();
        for (int v : t.assignment) z.push_back(v == 0 ? "x" : "y");
        s["assignment"] = z;
      }
      steps.push_back(std::move(s));
    }
    j["trace"] = steps;
  }
  return j;
}

}  // namespace wlp
