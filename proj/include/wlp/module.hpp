#pragma once

// Finite-length graded modules over S = K[x, y], stored as graded dimensions
// plus the matrices of multiplication by x and by y between consecutive
// components.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wlp/groebner.hpp"
#include "wlp/linalg.hpp"

namespace wlp {

/// The linear form alpha*x + beta*y.
struct LinearForm {
  Scalar alpha;
  Scalar beta;

  static LinearForm x(const FieldSpec& f) { return {Scalar::one(f), Scalar::zero(f)}; }
  static LinearForm y(const FieldSpec& f) { return {Scalar::zero(f), Scalar::one(f)}; }
  /// t*x + y
  static LinearForm tx_plus_y(const FieldSpec& f, long long t) { return {Scalar(f, t), Scalar::one(f)}; }

  bool is_zero() const { return alpha.is_zero() && beta.is_zero(); }

  std::string to_string() const {
    BiPoly p(alpha.field());
    p.add_term({1, 0}, alpha);
    p.add_term({0, 1}, beta);
    return p.to_string();
  }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

class GradedModule {
 public:
  /// The zero module over Q.
  GradedModule() = default;

  /// Component i lives in degree shift + i and has dimension dims[i];
  /// mul_x[i], mul_y[i] map component i to component i+1 (shape dims[i+1] x dims[i]).
  /// Throws InvalidModule on inconsistent shapes or if x and y do not commute.
  GradedModule(FieldSpec field, int shift, std::vector<std::size_t> dims, std::vector<Matrix> mul_x,
               std::vector<Matrix> mul_y, std::vector<std::vector<std::string>> labels = {})
      : field_(field),
        shift_(shift),
        dims_(std::move(dims)),
        mul_x_(std::move(mul_x)),
        mul_y_(std::move(mul_y)),
        labels_(std::move(labels)) {
    validate();
  }

  static GradedModule zero(const FieldSpec& f) {
    GradedModule m;
    m.field_ = f;
    return m;
  }

  const FieldSpec& field() const noexcept { return field_; }
  /// Degree of component 0.
  int shift() const noexcept { return shift_; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t length() const noexcept { return dims_.size(); }
  std::size_t dim(std::size_t i) const { return i < dims_.size() ? dims_[i] : 0; }
  std::size_t total_dim() const {
    std::size_t s = 0;
    for (auto d : dims_) s += d;
    return s;
  }
  bool is_zero() const { return total_dim() == 0; }

  const Matrix& mul_x(std::size_t i) const { return mul_x_.at(i); }
  const Matrix& mul_y(std::size_t i) const { return mul_y_.at(i); }
  const std::vector<Matrix>& mul_x() const noexcept { return mul_x_; }
  const std::vector<Matrix>& mul_y() const noexcept { return mul_y_; }

  /// Matrix of multiplication by l from component i to component i+1.
  Matrix multiplication(std::size_t i, const LinearForm& l) const {
    return Matrix::combine(l.alpha, mul_x(i), l.beta, mul_y(i));
  }

  /// Optional names of basis vectors, per component (may be empty).
  const std::vector<std::vector<std::string>>& labels() const noexcept { return labels_; }
  std::vector<std::string> labels(std::size_t i) const { return i < labels_.size() ? labels_[i] : std::vector<std::string>{}; }

  friend bool operator==(const GradedModule& a, const GradedModule& b) {
    return a.field_ == b.field_ && a.shift_ == b.shift_ && a.dims_ == b.dims_ && a.mul_x_ == b.mul_x_ &&
           a.mul_y_ == b.mul_y_;
  }

 private:
  void validate() const {
    const std::size_t steps = dims_.empty() ? 0 : dims_.size() - 1;
    if (mul_x_.size() != steps || mul_y_.size() != steps)
      throw InvalidModule("expected " + std::to_string(steps) + " multiplication matrices per variable");
    for (std::size_t i = 0; i < steps; ++i) {
      for (const Matrix* m : {&mul_x_[i], &mul_y_[i]}) {
        if (m->field() != field_) throw FieldMismatch();
        if (m->rows() != dims_[i + 1] || m->cols() != dims_[i])
          throw InvalidModule("multiplication matrix " + std::to_string(i) + " has the wrong shape");
      }
    }
    for (std::size_t i = 0; i + 1 < steps; ++i)
      if (!(mul_y_[i + 1] * mul_x_[i] == mul_x_[i + 1] * mul_y_[i]))
        throw InvalidModule("x and y do not commute at component " + std::to_string(i));
    if (!labels_.empty()) {
      if (labels_.size() != dims_.size()) throw InvalidModule("labels must be given for every component");
      for (std::size_t i = 0; i < dims_.size(); ++i)
        if (!labels_[i].empty() && labels_[i].size() != dims_[i]) throw InvalidModule("label count mismatch");
    }
  }

  FieldSpec field_;
  int shift_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> mul_x_;
  std::vector<Matrix> mul_y_;
  std::vector<std::vector<std::string>> labels_;
};

/// Hilbert function with leading and trailing zeros trimmed; `shift` is the
/// degree of the first value.
struct HilbertFunction {
  int shift = 0;
  std::vector<std::size_t> values;

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + std::to_string(values[i]);
    return out + ")";
  }
};

inline HilbertFunction hilbert_function(const GradedModule& m) {
  const auto& d = m.dims();
  std::size_t lo = 0, hi = d.size();
  while (lo < hi && d[lo] == 0) ++lo;
  while (hi > lo && d[hi - 1] == 0) --hi;
  if (lo == hi) return {};
  return {m.shift() + static_cast<int>(lo), std::vector<std::size_t>(d.begin() + lo, d.begin() + hi)};
}

// ---------------------------------------------------------------------------
// Constructors from S/I

/// The submodule of S/I generated by the classes of `module_gens`.
///
/// Component 0 sits in the lowest degree where a generator is nonzero mod I;
/// shift() records that degree. In that degree the basis is the generators in
/// the given order (dependent ones dropped), so generator labels
/// e_1, ..., e_n line up with basis vectors. Higher components take the
/// independent vectors among x*b, then y*b for the previous basis, then any
/// generators of that degree.
inline GradedModule from_quotient_submodule(const IdealGens& ideal, const std::vector<BiPoly>& module_gens) {
  const FieldSpec& f = ideal.field();
  GroebnerBasis gb = buchberger(ideal);
  auto art = is_artinian(gb);
  if (!art.artinian) throw NotArtinian();

  std::vector<BiPoly> gens;
  for (const auto& g : module_gens) {
    if (g.field() != f) throw FieldMismatch();
    if (!g.is_homogeneous()) throw PreconditionError("module generator is not homogeneous: " + g.to_string());
    BiPoly r = normal_form(g, gb);
    if (!r.is_zero()) gens.push_back(r);
  }
  if (gens.empty()) throw PreconditionError("every module generator is zero modulo the ideal");

  int lo = gens.front().degree();
  for (const auto& g : gens) lo = std::min(lo, g.degree());
  const int top = art.top_degree;  // (S/I)_d = 0 for d >= top

  std::vector<std::size_t> dims;
  std::vector<Matrix> mx, my;
  std::vector<std::vector<std::string>> labels;
  std::vector<BiPoly> prev;  // basis representatives of the previous component

  for (int d = lo; d < top; ++d) {
    auto stdm = standard_monomials(gb, d);
    IncrementalBasis basis(f, stdm.size());
    std::vector<BiPoly> reps;
    auto coords = [&](const BiPoly& p) {
      Vector v;
      for (const auto& m : stdm) v.push_back(p.coefficient(m));
      return v;
    };
    auto consider = [&](const BiPoly& p) {
      BiPoly r = normal_form(p, gb);
      if (basis.add(coords(r))) reps.push_back(r);
    };
    std::vector<BiPoly> xs, ys;
    for (const auto& b : prev) {
      xs.push_back(normal_form(b.times_monomial({1, 0}), gb));
      ys.push_back(normal_form(b.times_monomial({0, 1}), gb));
    }
    for (const auto& p : xs) consider(p);
    for (const auto& p : ys) consider(p);
    for (const auto& g : gens)
      if (g.degree() == d) consider(g);

    if (d > lo) {
      Matrix ax(f, reps.size(), prev.size()), ay(f, reps.size(), prev.size());
      for (std::size_t j = 0; j < prev.size(); ++j) {
        auto cx = basis.coordinates(coords(xs[j]));
        auto cy = basis.coordinates(coords(ys[j]));
        for (std::size_t i = 0; i < reps.size(); ++i) {
          ax(i, j) = (*cx)[i];
          ay(i, j) = (*cy)[i];
        }
      }
      mx.push_back(std::move(ax));
      my.push_back(std::move(ay));
    }
    dims.push_back(reps.size());
    std::vector<std::string> names;
    for (const auto& r : reps) names.push_back(r.to_string());
    labels.push_back(std::move(names));
    prev = std::move(reps);
  }

  // Trim trailing zero components.
  while (!dims.empty() && dims.back() == 0) {
    dims.pop_back();
    labels.pop_back();
    if (!mx.empty()) {
      mx.pop_back();
      my.pop_back();
    }
  }
  return GradedModule(f, lo, std::move(dims), std::move(mx), std::move(my), std::move(labels));
}

/// S/I as a graded module.
inline GradedModule cyclic(const IdealGens& ideal) {
  return from_quotient_submodule(ideal, {BiPoly::constant(Scalar::one(ideal.field()))});
}

// ---------------------------------------------------------------------------
// Structural operations

inline GradedModule shift(const GradedModule& m, int k) {
  return GradedModule(m.field(), m.shift() + k, m.dims(), m.mul_x(), m.mul_y(), m.labels());
}

/// Direct sum with components aligned by absolute degree; maps are block diagonal.
inline GradedModule direct_sum(const std::vector<GradedModule>& parts) {
  if (parts.empty()) return GradedModule();
  const FieldSpec& f = parts.front().field();
  std::optional<int> lo, hi;  // [lo, hi)
  for (const auto& p : parts) {
    if (p.field() != f) throw FieldMismatch();
    if (p.length() == 0) continue;
    int a = p.shift(), b = p.shift() + static_cast<int>(p.length());
    lo = lo ? std::min(*lo, a) : a;
    hi = hi ? std::max(*hi, b) : b;
  }
  if (!lo) return GradedModule::zero(f);
  const std::size_t len = static_cast<std::size_t>(*hi - *lo);

  auto local = [&](const GradedModule& p, std::size_t i) -> std::optional<std::size_t> {
    int k = *lo + static_cast<int>(i) - p.shift();
    if (k < 0 || k >= static_cast<int>(p.length())) return std::nullopt;
    return static_cast<std::size_t>(k);
  };

  std::vector<std::size_t> dims(len, 0);
  std::vector<std::vector<std::string>> labels(len);
  bool have_labels = true;
  for (std::size_t i = 0; i < len; ++i)
    for (const auto& p : parts)
      if (auto k = local(p, i)) {
        dims[i] += p.dim(*k);
        auto l = p.labels(*k);
        if (l.size() != p.dim(*k)) have_labels = false;
        labels[i].insert(labels[i].end(), l.begin(), l.end());
      }

  std::vector<Matrix> mx, my;
  for (std::size_t i = 0; i + 1 < len; ++i) {
    Matrix ax(f, dims[i + 1], dims[i]), ay(f, dims[i + 1], dims[i]);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& p : parts) {
      auto k = local(p, i);
      auto k1 = local(p, i + 1);
      std::size_t src = k ? p.dim(*k) : 0;
      std::size_t dst = k1 ? p.dim(*k1) : 0;
      if (k && k1)
        for (std::size_t r = 0; r < dst; ++r)
          for (std::size_t c = 0; c < src; ++c) {
            ax(r0 + r, c0 + c) = p.mul_x(*k)(r, c);
            ay(r0 + r, c0 + c) = p.mul_y(*k)(r, c);
          }
      r0 += dst;
      c0 += src;
    }
    mx.push_back(std::move(ax));
    my.push_back(std::move(ay));
  }
  if (!have_labels) labels.clear();
  return GradedModule(f, *lo, std::move(dims), std::move(mx), std::move(my), std::move(labels));
}

/// Hom_K(M, K): component j has dimension h_{s-j}; multiplication maps are
/// the transposes of the original ones in reverse order.
inline GradedModule dual(const GradedModule& m) {
  const std::size_t n = m.length();
  if (n == 0) return GradedModule::zero(m.field());
  std::vector<std::size_t> dims(m.dims().rbegin(), m.dims().rend());
  std::vector<Matrix> mx, my;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    mx.push_back(m.mul_x(n - 2 - j).transpose());
    my.push_back(m.mul_y(n - 2 - j).transpose());
  }
  int shift = -(m.shift() + static_cast<int>(n) - 1);
  return GradedModule(m.field(), shift, std::move(dims), std::move(mx), std::move(my));
}

/// The two-component module M_i -> M_{i+1}, shifted to start in degree 0.
inline GradedModule degree_pair(const GradedModule& m, std::size_t i) {
  if (i + 1 >= m.length()) throw PreconditionError("degree pair index out of range");
  std::vector<std::vector<std::string>> labels;
  if (!m.labels().empty()) labels = {m.labels(i), m.labels(i + 1)};
  return GradedModule(m.field(), 0, {m.dim(i), m.dim(i + 1)}, {m.mul_x(i)}, {m.mul_y(i)}, std::move(labels));
}

/// A submodule with explicit inclusion maps: inclusion[i] is
/// dims_ambient[i] x dims_sub[i], its columns the basis of the sub's component i.
struct EmbeddedSubmodule {
  GradedModule module;
  std::vector<Matrix> inclusion;
};

struct Seed {
  std::size_t index;  // component
  Vector coords;      // in the ambient basis of that component
};

/// Smallest submodule of m containing the seeds.
inline EmbeddedSubmodule submodule_generated(const GradedModule& m, const std::vector<Seed>& seeds) {
  const FieldSpec& f = m.field();
  for (const auto& s : seeds) {
    if (s.index >= m.length()) throw PreconditionError("seed component out of range");
    if (s.coords.size() != m.dim(s.index)) throw PreconditionError("seed vector has the wrong length");
  }
  std::vector<IncrementalBasis> bases;
  for (std::size_t i = 0; i < m.length(); ++i) {
    IncrementalBasis b(f, m.dim(i));
    if (i > 0) {
      const auto prev = bases[i - 1].vectors();
      for (const auto& v : prev) b.add(m.mul_x(i - 1) * v);
      for (const auto& v : prev) b.add(m.mul_y(i - 1) * v);
    }
    for (const auto& s : seeds)
      if (s.index == i) b.add(s.coords);
    bases.push_back(std::move(b));
  }
  std::vector<std::size_t> dims;
  std::vector<Matrix> inclusion, mx, my;
  for (std::size_t i = 0; i < m.length(); ++i) {
    dims.push_back(bases[i].size());
    inclusion.push_back(bases[i].as_columns());
  }
  for (std::size_t i = 0; i + 1 < m.length(); ++i) {
    Matrix ax(f, dims[i + 1], dims[i]), ay(f, dims[i + 1], dims[i]);
    const auto& src = bases[i].vectors();
    for (std::size_t j = 0; j < src.size(); ++j) {
      auto cx = bases[i + 1].coordinates(m.mul_x(i) * src[j]);
      auto cy = bases[i + 1].coordinates(m.mul_y(i) * src[j]);
      for (std::size_t r = 0; r < dims[i + 1]; ++r) {
        ax(r, j) = (*cx)[r];
        ay(r, j) = (*cy)[r];
      }
    }
    mx.push_back(std::move(ax));
    my.push_back(std::move(ay));
  }
  return {GradedModule(f, m.shift(), std::move(dims), std::move(mx), std::move(my)), std::move(inclusion)};
}

/// m / sub, component by component. The basis of each quotient component is
/// the classes of the first standard unit vectors that extend sub's basis.
inline GradedModule quotient(const GradedModule& m, const EmbeddedSubmodule& sub) {
  const FieldSpec& f = m.field();
  if (sub.inclusion.size() != m.length()) throw PreconditionError("submodule has a different number of components");
  std::vector<IncrementalBasis> full;
  std::vector<std::size_t> sub_dims, dims;
  std::vector<std::vector<std::size_t>> chosen;  // unit vectors completing the basis
  for (std::size_t i = 0; i < m.length(); ++i) {
    const Matrix& inc = sub.inclusion[i];
    if (inc.rows() != m.dim(i)) throw PreconditionError("inclusion map has the wrong shape");
    IncrementalBasis b(f, m.dim(i));
    for (std::size_t c = 0; c < inc.cols(); ++c)
      if (!b.add(inc.column(c))) throw PreconditionError("inclusion map is not injective");
    sub_dims.push_back(b.size());
    std::vector<std::size_t> units;
    for (std::size_t k = 0; k < m.dim(i); ++k)
      if (b.add(unit_vector(f, m.dim(i), k))) units.push_back(k);
    dims.push_back(units.size());
    chosen.push_back(std::move(units));
    full.push_back(std::move(b));
  }
  for (std::size_t i = 0; i + 1 < m.length(); ++i) {
    IncrementalBasis target(f, m.dim(i + 1));
    for (std::size_t c = 0; c < sub.inclusion[i + 1].cols(); ++c) target.add(sub.inclusion[i + 1].column(c));
    for (std::size_t c = 0; c < sub.inclusion[i].cols(); ++c) {
      Vector v = sub.inclusion[i].column(c);
      if (!target.contains(m.mul_x(i) * v) || !target.contains(m.mul_y(i) * v))
        throw PreconditionError("submodule is not closed under multiplication");
    }
  }
  std::vector<Matrix> mx, my;
  for (std::size_t i = 0; i + 1 < m.length(); ++i) {
    Matrix ax(f, dims[i + 1], dims[i]), ay(f, dims[i + 1], dims[i]);
    for (std::size_t j = 0; j < chosen[i].size(); ++j) {
      Vector e = unit_vector(f, m.dim(i), chosen[i][j]);
      auto cx = full[i + 1].coordinates(m.mul_x(i) * e);
      auto cy = full[i + 1].coordinates(m.mul_y(i) * e);
      for (std::size_t r = 0; r < dims[i + 1]; ++r) {
        ax(r, j) = (*cx)[sub_dims[i + 1] + r];
        ay(r, j) = (*cy)[sub_dims[i + 1] + r];
      }
    }
    mx.push_back(std::move(ax));
    my.push_back(std::move(ay));
  }
  std::vector<std::vector<std::string>> labels;
  if (!m.labels().empty()) {
    for (std::size_t i = 0; i < m.length(); ++i) {
      std::vector<std::string> names;
      auto old = m.labels(i);
      for (auto k : chosen[i]) names.push_back(k < old.size() ? "[" + old[k] + "]" : "");
      labels.push_back(old.size() == m.dim(i) ? std::move(names) : std::vector<std::string>{});
    }
  }
  return GradedModule(f, m.shift(), std::move(dims), std::move(mx), std::move(my), std::move(labels));
}

struct GeneratorCount {
  std::size_t index;  // component
  std::size_t count;

  friend bool operator==(const GeneratorCount&, const GeneratorCount&) = default;
};

/// Number of minimal generators in each component (only nonzero counts):
/// h_i - dim(x M_{i-1} + y M_{i-1}).
inline std::vector<GeneratorCount> minimal_generator_degrees(const GradedModule& m) {
  std::vector<GeneratorCount> out;
  for (std::size_t i = 0; i < m.length(); ++i) {
    std::size_t reached = i == 0 ? 0 : rank(Matrix::hstack(m.mul_x(i - 1), m.mul_y(i - 1)));
    std::size_t c = m.dim(i) - reached;
    if (c > 0) out.push_back({i, c});
  }
  return out;
}

}  // namespace wlp
