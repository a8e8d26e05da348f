#pragma once

// Deciding the Weak Lefschetz Property for graded K[x, y]-modules.
//
// A module has the WLP if some linear form l = a*x + b*y makes every map
// x l : M_i -> M_{i+1} injective or surjective. Each consecutive degree pair
// is decided on its own (surjectivity by dualizing to injectivity) with one of
// three methods:
//   * the kernel-quotient algorithm (check_degree_pair_algorithm),
//   * the determinant method for square pairs generated in degree 0,
//   * the pencil oracle, the rank of g*A + B over K(g).
// A common witness is then found among t*x + y, t = 0..D, and x.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wlp/module.hpp"
#include "wlp/pencil.hpp"

namespace wlp {

enum class Method { auto_select, algorithm, determinant, oracle };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::auto_select: return "auto";
    case Method::algorithm: return "algorithm";
    case Method::determinant: return "determinant";
    case Method::oracle: return "oracle";
  }
  return "?";
}

inline Method parse_method(const std::string& s) {
  if (s == "auto") return Method::auto_select;
  if (s == "algorithm") return Method::algorithm;
  if (s == "determinant") return Method::determinant;
  if (s == "oracle") return Method::oracle;
  throw PreconditionError("unknown method '" + s + "'");
}

struct TraceStep {
  enum class Kind { inj_x, inj_y, kernel_meet, image_meet, quotient, dualize, determinant, lemma1, oracle, obstruction };

  Kind kind;
  /// Component index of the degree pair this step belongs to (set by has_wlp).
  std::size_t pair_index = 0;
  /// Outcome of the test the step performs (e.g. "x is injective").
  bool holds = false;
  /// Dimension of the kernel or intersection examined.
  std::size_t dim = 0;
  /// Hilbert functions before/after for quotient and dualize steps.
  std::vector<std::size_t> dims_before, dims_after;
  /// Basis vectors of the examined subspace, or the matrices A, B.
  std::vector<Vector> vectors;
  std::vector<Matrix> matrices;
  std::optional<UniPoly> poly;
  /// Independent assignment, 0 = x, 1 = y.
  std::vector<int> assignment;
  std::string note;
};

inline std::string to_string(TraceStep::Kind k) {
  using K = TraceStep::Kind;
  switch (k) {
    case K::inj_x: return "inj_x";
    case K::inj_y: return "inj_y";
    case K::kernel_meet: return "kernel_meet";
    case K::image_meet: return "image_meet";
    case K::quotient: return "quotient";
    case K::dualize: return "dualize";
    case K::determinant: return "determinant";
    case K::lemma1: return "lemma1";
    case K::oracle: return "oracle";
    case K::obstruction: return "obstruction";
  }
  return "?";
}

struct DegreeCertificate {
  std::size_t index = 0;  // component i of the map M_i -> M_{i+1}
  int degree = 0;         // absolute degree of M_i
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::size_t required_rank = 0;  // min(h_i, h_{i+1})
  std::size_t generic_rank = 0;   // rank of the pencil over K(g)
  std::string method;
  bool dualized = false;
  bool passed = false;
};

struct WlpReport {
  bool verdict = true;
  std::optional<LinearForm> witness;
  /// Set for every verdict over GF(p): witness existence arguments need an infinite field.
  bool finite_field_caveat = false;
  std::vector<DegreeCertificate> per_degree;
  std::vector<TraceStep> trace;

  std::vector<DegreeCertificate> failing() const {
    std::vector<DegreeCertificate> out;
    for (const auto& c : per_degree)
      if (!c.passed) out.push_back(c);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Helpers

namespace detail {

inline void require_pair(const GradedModule& pair) {
  if (pair.length() != 2) throw PreconditionError("expected a module with exactly two components");
}

inline bool injective(const Matrix& m) { return rank(m) == m.cols(); }

/// rank of a*A + b*B equals min(rows, cols)
inline bool max_rank(const Matrix& a, const Matrix& b, const LinearForm& l) {
  return rank(Matrix::combine(l.alpha, a, l.beta, b)) == std::min(a.rows(), a.cols());
}

/// First t in 1..bound with t*x + y of maximal rank on the pair; the nonzero
/// maximal minor has degree <= min(h0, h1), so bound = min + 1 suffices over Q.
inline std::optional<LinearForm> mixed_witness(const Matrix& a, const Matrix& b) {
  const FieldSpec& f = a.field();
  long long bound = static_cast<long long>(std::min(a.rows(), a.cols())) + 1;
  for (long long t = 1; t <= bound; ++t) {
    if (f.is_finite() && static_cast<std::uint64_t>(t) >= f.characteristic()) break;
    LinearForm l = LinearForm::tx_plus_y(f, t);
    if (max_rank(a, b, l)) return l;
  }
  return std::nullopt;
}

}  // namespace detail

/// Is l a Lefschetz element: maximal rank in every degree?
inline bool is_lefschetz_element(const GradedModule& m, const LinearForm& l) {
  for (std::size_t i = 0; i + 1 < m.length(); ++i)
    if (!detail::max_rank(m.mul_x(i), m.mul_y(i), l)) return false;
  return true;
}

/// Swaps the roles of the components of a pair: dims (h1, h0), transposed maps.
inline GradedModule dual_pair(const GradedModule& pair) {
  detail::require_pair(pair);
  return shift(dual(pair), -dual(pair).shift());
}

// ---------------------------------------------------------------------------
// Minimal generators in degree 1

/// True iff the pair has a minimal generator in its second component. For a
/// square pair this rules out the WLP: l M_0 is then a proper subspace of M_1.
inline bool degree1_generator_obstruction(const GradedModule& pair) {
  detail::require_pair(pair);
  auto gens = minimal_generator_degrees(pair);
  return std::any_of(gens.begin(), gens.end(), [](const GeneratorCount& g) { return g.index == 1; });
}

inline bool generated_in_degree_zero(const GradedModule& pair) { return !degree1_generator_obstruction(pair); }

// ---------------------------------------------------------------------------
// Independent assignment search

struct Lemma1Result {
  bool found = false;
  /// Per generator e_i: 0 means x*e_i, 1 means y*e_i.
  std::vector<int> assignment;
};

/// Searches assignments z in {x, y}^n in lexicographic order (x < y) for which
/// z_1 e_1, ..., z_n e_n are linearly independent in M_1.
inline Lemma1Result lemma1_search(const GradedModule& pair) {
  detail::require_pair(pair);
  if (!generated_in_degree_zero(pair)) throw PreconditionError("lemma1_search needs a pair generated in degree 0");
  const std::size_t n = pair.dim(0);
  if (n > 20) throw PreconditionError("lemma1_search is exhaustive; too many generators");
  const Matrix& a = pair.mul_x(0);
  const Matrix& b = pair.mul_y(0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> z(n);
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < n; ++i) {
      z[i] = static_cast<int>((mask >> (n - 1 - i)) & 1);
      cols.push_back(z[i] == 0 ? a.column(i) : b.column(i));
    }
    if (rank(Matrix::from_columns(pair.field(), pair.dim(1), cols)) == n) return {true, z};
  }
  return {false, {}};
}

// ---------------------------------------------------------------------------
// Determinant method

struct DeterminantResult {
  WlpReport report;
  /// det(g*A + B) after the basis change; empty when a pure variable works
  /// or the lemma search fails.
  std::optional<UniPoly> p;
};

/// Decides a square pair (n, n) minimally generated in degree 0.
///
/// If x or y is already bijective it is the witness. Otherwise the assignment search picks a
/// basis {x e_1, ..., x e_r, y e_{r+1}, ..., y e_n} of M_1 (generators
/// reordered so the x-assigned ones come first), A and B are rewritten in it,
/// and the pair has the WLP iff p(g) = det(g*A + B) is not identically zero;
/// then t*x + y works for the least t >= 0 with p(t) != 0.
inline DeterminantResult determinant_method(const GradedModule& pair) {
  detail::require_pair(pair);
  const FieldSpec& f = pair.field();
  const std::size_t n = pair.dim(0);
  if (n != pair.dim(1) || n == 0)
    throw MethodNotApplicable("determinant method needs Hilbert function (n, n) with n >= 1; use the algorithm");
  if (!generated_in_degree_zero(pair))
    throw MethodNotApplicable("determinant method needs a pair generated in degree 0; use the algorithm");

  DeterminantResult out;
  out.report.finite_field_caveat = f.is_finite();
  const Matrix& a = pair.mul_x(0);
  const Matrix& b = pair.mul_y(0);

  if (rank(a) == n) {
    out.report.verdict = true;
    out.report.witness = LinearForm::x(f);
    out.report.trace.push_back({TraceStep::Kind::inj_x, 0, true, 0, {}, {}, {}, {a, b}, {}, {}, "x is bijective"});
    return out;
  }
  if (rank(b) == n) {
    out.report.verdict = true;
    out.report.witness = LinearForm::y(f);
    out.report.trace.push_back({TraceStep::Kind::inj_y, 0, true, 0, {}, {}, {}, {a, b}, {}, {}, "y is bijective"});
    return out;
  }

  Lemma1Result lem = lemma1_search(pair);
  TraceStep lstep{TraceStep::Kind::lemma1, 0, lem.found, 0, {}, {}, {}, {}, {}, lem.assignment, ""};
  if (!lem.found) {
    lstep.note = "every set {z_1 e_1, ..., z_n e_n} is dependent";
    out.report.trace.push_back(std::move(lstep));
    out.report.verdict = false;
    return out;
  }
  out.report.trace.push_back(std::move(lstep));

  // Generators assigned x first, then those assigned y, each in original order.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i)
    if (lem.assignment[i] == 0) order.push_back(i);
  for (std::size_t i = 0; i < n; ++i)
    if (lem.assignment[i] == 1) order.push_back(i);
  std::vector<Vector> new_basis;
  for (auto i : order) new_basis.push_back(lem.assignment[i] == 0 ? a.column(i) : b.column(i));
  Matrix p_inv = inverse(Matrix::from_columns(f, n, new_basis));
  Matrix a2 = p_inv * a.select_columns(order);
  Matrix b2 = p_inv * b.select_columns(order);
  UniPoly p = polydet(a2, b2);

  TraceStep dstep{TraceStep::Kind::determinant, 0, !p.is_zero(), 0, {}, {}, {}, {a2, b2}, p, {}, ""};
  std::string ord;
  for (auto i : order) ord += (ord.empty() ? "e" : ", e") + std::to_string(i + 1);
  dstep.note = "generator order " + ord;
  out.report.trace.push_back(std::move(dstep));
  out.p = p;

  if (p.is_zero()) {
    out.report.verdict = false;
    return out;
  }
  out.report.verdict = true;
  long long limit = p.degree() + 1;
  for (long long t = 0; t <= limit; ++t) {
    if (f.is_finite() && static_cast<std::uint64_t>(t) >= f.characteristic()) break;
    if (!p.evaluate(Scalar(f, t)).is_zero()) {
      out.report.witness = LinearForm::tx_plus_y(f, t);
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kernel-quotient algorithm

/// The checks of one pass of the algorithm on a pair with h0 <= h1.
struct KernelAnalysis {
  Subspace ker_x, ker_y;
  Subspace kernel_meet;      // ker(x) & ker(y)
  Subspace y_ker_x, x_ker_y;  // y ker(x), x ker(y)
  Subspace image_meet;       // y ker(x) & x ker(y)

  /// Steps 1-4 all answered "no": the quotient step applies.
  bool reaches_quotient() const {
    return !ker_x.is_zero() && !ker_y.is_zero() && kernel_meet.is_zero() && image_meet.is_zero();
  }
};

inline KernelAnalysis analyze_kernels(const GradedModule& pair) {
  detail::require_pair(pair);
  const Matrix& a = pair.mul_x(0);
  const Matrix& b = pair.mul_y(0);
  KernelAnalysis k;
  k.ker_x = kernel_basis(a);
  k.ker_y = kernel_basis(b);
  k.kernel_meet = subspace_meet(k.ker_x, k.ker_y);
  k.y_ker_x = image(b, k.ker_x);
  k.x_ker_y = image(a, k.ker_y);
  k.image_meet = subspace_meet(k.y_ker_x, k.x_ker_y);
  return k;
}

/// M / <ker(x) + ker(y)>.
inline GradedModule reduce_by_kernels(const GradedModule& pair, const KernelAnalysis& k) {
  std::vector<Seed> seeds;
  for (const auto& v : subspace_join(k.ker_x, k.ker_y).vectors()) seeds.push_back({0, v});
  return quotient(pair, submodule_generated(pair, seeds));
}

inline GradedModule reduce_by_kernels(const GradedModule& pair) { return reduce_by_kernels(pair, analyze_kernels(pair)); }

/// Kernel-quotient algorithm for a pair with h0 <= h1:
///   1. ker(x) = 0          -> WLP, witness x
///   2. ker(y) = 0          -> WLP, witness y
///   3. ker(x) & ker(y) != 0      -> no WLP
///   4. y ker(x) & x ker(y) != 0  -> no WLP
///   5. replace M by M / <ker(x) + ker(y)> and start over.
/// Each quotient step lowers both dimensions by r + s >= 2, so it terminates.
/// A positive verdict reached after a quotient step only certifies a pure
/// variable on the quotient, so a mixed witness t*x + y is searched on the
/// original pair instead of lifting.
inline WlpReport check_degree_pair_algorithm(const GradedModule& pair) {
  if (pair.length() == 0) return {};
  detail::require_pair(pair);
  if (pair.dim(0) > pair.dim(1)) throw PreconditionError("algorithm needs h0 <= h1; dualize first");
  const FieldSpec& f = pair.field();
  WlpReport report;
  report.finite_field_caveat = f.is_finite();
  using K = TraceStep::Kind;

  GradedModule current = pair;
  std::size_t cycles = 0;
  for (;;) {
    if (current.dim(0) == 0) {
      report.trace.push_back({K::inj_x, 0, true, 0, {}, {}, {}, {}, {}, {}, "M_0 = 0"});
      report.verdict = true;
      if (cycles == 0) report.witness = LinearForm::x(f);
      break;
    }
    KernelAnalysis k = analyze_kernels(current);
    if (k.ker_x.is_zero()) {
      report.trace.push_back({K::inj_x, 0, true, 0, {}, {}, {}, {}, {}, {}, "x is injective"});
      report.verdict = true;
      if (cycles == 0) report.witness = LinearForm::x(f);
      break;
    }
    report.trace.push_back({K::inj_x, 0, false, k.ker_x.dim(), {}, {}, k.ker_x.vectors(), {}, {}, {}, "ker(x) != 0"});
    if (k.ker_y.is_zero()) {
      report.trace.push_back({K::inj_y, 0, true, 0, {}, {}, {}, {}, {}, {}, "y is injective"});
      report.verdict = true;
      if (cycles == 0) report.witness = LinearForm::y(f);
      break;
    }
    report.trace.push_back({K::inj_y, 0, false, k.ker_y.dim(), {}, {}, k.ker_y.vectors(), {}, {}, {}, "ker(y) != 0"});

    bool meet = !k.kernel_meet.is_zero();
    report.trace.push_back({K::kernel_meet, 0, meet, k.kernel_meet.dim(), {}, {}, k.kernel_meet.vectors(), {}, {}, {},
                            meet ? "ker(x) & ker(y) != 0" : "ker(x) & ker(y) = 0"});
    if (meet) {
      report.verdict = false;
      break;
    }
    bool img = !k.image_meet.is_zero();
    report.trace.push_back({K::image_meet, 0, img, k.image_meet.dim(), {}, {}, k.image_meet.vectors(), {}, {}, {},
                            img ? "y ker(x) & x ker(y) != 0" : "y ker(x) & x ker(y) = 0"});
    if (img) {
      report.verdict = false;
      break;
    }

    GradedModule next = reduce_by_kernels(current, k);
    report.trace.push_back({K::quotient, 0, true, k.ker_x.dim() + k.ker_y.dim(), current.dims(), next.dims(), {}, {}, {},
                            {}, "pass to M / <ker(x) + ker(y)>"});
    current = std::move(next);
    ++cycles;
  }
  if (report.verdict && !report.witness) report.witness = detail::mixed_witness(pair.mul_x(0), pair.mul_y(0));
  return report;
}

// ---------------------------------------------------------------------------
// Pencil oracle

/// Verdict from the generic rank of g*A + B over K(g), together with the
/// point x = (1:0) of the pencil, compared against min(h0, h1).
inline WlpReport pencil_oracle(const GradedModule& pair) {
  if (pair.length() == 0) return {};
  detail::require_pair(pair);
  const FieldSpec& f = pair.field();
  const Matrix& a = pair.mul_x(0);
  const Matrix& b = pair.mul_y(0);
  const std::size_t required = std::min(pair.dim(0), pair.dim(1));
  const std::size_t generic = pencil_generic_rank(a, b);
  const std::size_t at_x = rank(a);

  WlpReport report;
  report.finite_field_caveat = f.is_finite();
  report.verdict = std::max(generic, at_x) == required;
  report.trace.push_back({TraceStep::Kind::oracle, 0, report.verdict, generic, {pair.dim(0), pair.dim(1)}, {}, {}, {},
                          {}, {}, "generic rank " + std::to_string(generic) + ", required " + std::to_string(required)});
  if (report.verdict) {
    if (at_x == required)
      report.witness = LinearForm::x(f);
    else if (rank(b) == required)
      report.witness = LinearForm::y(f);
    else
      report.witness = detail::mixed_witness(a, b);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Whole modules

/// Decides one degree pair with the chosen method; pairs with h0 > h1 are
/// dualized first. Records the certificate and appends trace steps.
inline DegreeCertificate decide_pair(const GradedModule& m, std::size_t i, Method method, std::vector<TraceStep>& trace) {
  GradedModule pair = degree_pair(m, i);
  DegreeCertificate cert;
  cert.index = i;
  cert.degree = m.shift() + static_cast<int>(i);
  cert.source_dim = pair.dim(0);
  cert.target_dim = pair.dim(1);
  cert.required_rank = std::min(pair.dim(0), pair.dim(1));
  cert.generic_rank = std::max(pencil_generic_rank(pair.mul_x(0), pair.mul_y(0)), rank(pair.mul_x(0)));

  if (cert.required_rank == 0) {
    cert.method = "trivial";
    cert.passed = true;
    return cert;
  }

  std::vector<TraceStep> steps;
  if (pair.dim(0) > pair.dim(1)) {
    GradedModule d = dual_pair(pair);
    steps.push_back({TraceStep::Kind::dualize, i, true, 0, pair.dims(), d.dims(), {}, {}, {}, {},
                     "surjectivity of the pair is injectivity of its dual"});
    pair = std::move(d);
    cert.dualized = true;
  }

  WlpReport r;
  Method chosen = method == Method::auto_select ? Method::algorithm : method;
  if (chosen == Method::determinant) {
    if (pair.dim(0) != pair.dim(1))
      throw MethodNotApplicable("determinant method needs square degree pairs; pair at degree " +
                                std::to_string(cert.degree) + " has dimensions (" + std::to_string(cert.source_dim) +
                                ", " + std::to_string(cert.target_dim) + ")");
    if (degree1_generator_obstruction(pair)) {
      r.verdict = false;
      r.finite_field_caveat = pair.field().is_finite();
      r.trace.push_back({TraceStep::Kind::obstruction, i, true, 0, pair.dims(), {}, {}, {}, {}, {},
                         "minimal generator in the upper degree of a square pair"});
      cert.method = "degree1-obstruction";
    } else {
      r = determinant_method(pair).report;
      cert.method = "determinant";
    }
  } else if (chosen == Method::oracle) {
    r = pencil_oracle(pair);
    cert.method = "oracle";
  } else {
    r = check_degree_pair_algorithm(pair);
    cert.method = "algorithm";
#ifndef NDEBUG
    if (method == Method::auto_select) assert(r.verdict == pencil_oracle(pair).verdict);
#endif
  }
  cert.passed = r.verdict;
  for (auto& s : r.trace) {
    s.pair_index = i;
    steps.push_back(std::move(s));
  }
  trace.insert(trace.end(), steps.begin(), steps.end());
  return cert;
}

/// Decides the WLP for m.
///
/// The witness is the first of t*x + y (t = 0, 1, ..., D) and then x that has
/// maximal rank in every degree, re-checked directly. Bad values of t are roots
/// of one nonzero maximal minor per degree, of degree <= min(h_i, h_{i+1}), so
/// D = 1 + sum of those bounds is enough over an infinite field.
inline WlpReport has_wlp(const GradedModule& m, Method method = Method::auto_select) {
  const FieldSpec& f = m.field();
  WlpReport report;
  report.finite_field_caveat = f.is_finite();
  long long bound = 1;
  for (std::size_t i = 0; i + 1 < m.length(); ++i) {
    report.per_degree.push_back(decide_pair(m, i, method, report.trace));
    bound += static_cast<long long>(std::min(m.dim(i), m.dim(i + 1)));
  }
  report.verdict = std::all_of(report.per_degree.begin(), report.per_degree.end(),
                               [](const DegreeCertificate& c) { return c.passed; });
  if (!report.verdict) return report;

  for (long long t = 0; t <= bound && !report.witness; ++t) {
    if (f.is_finite() && static_cast<std::uint64_t>(t) >= f.characteristic()) break;
    LinearForm l = LinearForm::tx_plus_y(f, t);
    if (is_lefschetz_element(m, l)) report.witness = l;
  }
  if (!report.witness && is_lefschetz_element(m, LinearForm::x(f))) report.witness = LinearForm::x(f);
  if (!report.witness && !f.is_finite())
    throw std::logic_error("positive WLP verdict over Q without a Lefschetz element among t*x + y, x");
  return report;
}

// ---------------------------------------------------------------------------
// Direct sums

enum class Behavior { increase, decrease, flat };

inline std::string to_string(Behavior b) {
  switch (b) {
    case Behavior::increase: return "increase";
    case Behavior::decrease: return "decrease";
    case Behavior::flat: return "flat";
  }
  return "?";
}

struct DirectSumAnalysis {
  bool sum_verdict = true;
  std::vector<WlpReport> part_reports;
  /// behaviors[p][k]: part p between degrees lo + k and lo + k + 1.
  std::vector<std::vector<Behavior>> behaviors;
  int lowest_degree = 0;
  /// Degrees d where one part strictly increases d -> d+1 while another strictly decreases.
  std::vector<int> behavior_conflicts;
};

/// A direct sum has the WLP iff every summand has it and, in every degree, no
/// summand's Hilbert function strictly increases while another's strictly
/// decreases.
inline DirectSumAnalysis direct_sum_wlp_analysis(const std::vector<GradedModule>& parts, Method method = Method::auto_select) {
  DirectSumAnalysis out;
  std::optional<int> lo, hi;
  for (const auto& p : parts) {
    out.part_reports.push_back(has_wlp(p, method));
    if (!out.part_reports.back().verdict) out.sum_verdict = false;
    if (p.length() == 0) continue;
    lo = lo ? std::min(*lo, p.shift()) : p.shift();
    hi = hi ? std::max(*hi, p.shift() + static_cast<int>(p.length())) : p.shift() + static_cast<int>(p.length());
  }
  if (!lo) return out;
  out.lowest_degree = *lo;
  auto h = [](const GradedModule& p, int d) -> std::size_t {
    int k = d - p.shift();
    return k < 0 ? 0 : p.dim(static_cast<std::size_t>(k));
  };
  for (const auto& p : parts) {
    std::vector<Behavior> row;
    for (int d = *lo; d < *hi; ++d) {
      std::size_t a = h(p, d), b = h(p, d + 1);
      row.push_back(b > a ? Behavior::increase : (b < a ? Behavior::decrease : Behavior::flat));
    }
    out.behaviors.push_back(std::move(row));
  }
  for (int d = *lo; d < *hi; ++d) {
    bool up = false, down = false;
    for (const auto& row : out.behaviors) {
      up |= row[static_cast<std::size_t>(d - *lo)] == Behavior::increase;
      down |= row[static_cast<std::size_t>(d - *lo)] == Behavior::decrease;
    }
    if (up && down) out.behavior_conflicts.push_back(d);
  }
  if (!out.behavior_conflicts.empty()) out.sum_verdict = false;
  return out;
}

}  // namespace wlp
