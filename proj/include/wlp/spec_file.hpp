#pragma once

// Module description files.
//
//   # comment
//   field = Q                       (or GF(p); defaults to Q)
//   module = <expr>
//
//   <expr> := submodule(ideal = <ideal>, gens = <poly-list>)
//           | cyclic(<ideal>)
//           | sum(<expr>, <expr>, ...)
//           | dual(<expr>)
//           | shift(<expr>, k)
//
// The module expression may span several lines.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wlp/module.hpp"

namespace wlp {

struct SpecNode {
  enum class Kind { submodule, cyclic, sum, dual, shift };

  Kind kind = Kind::cyclic;
  IdealExpr ideal;              // submodule, cyclic
  std::vector<BiPoly> gens;     // submodule
  std::vector<SpecNode> children;  // sum (>= 1), dual and shift (exactly 1)
  int amount = 0;               // shift

  friend bool operator==(const SpecNode&, const SpecNode&) = default;
};

struct ModuleSpec {
  FieldSpec field;
  SpecNode expr;

  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string text) : text_(strip_comments(std::move(text))) {}

  ModuleSpec parse() {
    ModuleSpec spec;
    bool have_field = false, have_module = false;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      std::size_t at = pos_;
      std::string key = identifier();
      expect('=');
      if (key == "field") {
        if (have_field) fail("duplicate 'field'", at);
        if (have_module) fail("'field' must come before 'module'", at);
        spec.field = field_value();
        have_field = true;
      } else if (key == "module") {
        if (have_module) fail("duplicate 'module'", at);
        spec.expr = expr(spec.field);
        have_module = true;
      } else {
        fail("unknown key '" + key + "'", at);
      }
      end_of_statement();
    }
    if (!have_module) fail("missing 'module = ...'", pos_);
    return spec;
  }

 private:
  static std::string strip_comments(std::string s) {
    bool in_comment = false;
    for (char& c : s) {
      if (c == '\n') in_comment = false;
      else if (c == '#') in_comment = true;
      if (in_comment) c = ' ';
    }
    return s;
  }

  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    auto [line, col] = line_column(at);
    throw ParseError(what, at, line, col);
  }

  std::pair<std::size_t, std::size_t> line_column(std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  void skip_ws(bool newlines = true) {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' || (newlines && text_[pos_] == '\n')))
      ++pos_;
  }

  void end_of_statement() {
    skip_ws(false);
    if (pos_ < text_.size() && text_[pos_] != '\n') fail("expected end of line", pos_);
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'", pos_);
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name", start);
    return text_.substr(start, pos_ - start);
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) fail("expected integer", start);
    if (pos_ - digits > 9) fail("integer too large", start);
    return std::stoll(text_.substr(start, pos_ - start));
  }

  FieldSpec field_value() {
    std::size_t at = pos_;
    std::string name = identifier();
    if (name == "Q" || name == "QQ") return FieldSpec::rationals();
    if (name == "GF") {
      expect('(');
      std::size_t pat = pos_;
      long long p = integer();
      expect(')');
      try {
        return FieldSpec::prime_field(static_cast<std::uint64_t>(p < 0 ? 0 : p));
      } catch (const PreconditionError& e) {
        fail(e.what(), pat);
      }
    }
    fail("unknown field '" + name + "'; expected Q or GF(p)", at);
  }

  template <typename F>
  auto with_poly_lexer(const FieldSpec& field, F&& body) {
    PolyLexer lex(text_, pos_, field);
    try {
      auto result = body(lex);
      pos_ = lex.pos();
      return result;
    } catch (const ParseError& e) {
      fail(e.message(), e.offset());
    } catch (const Error& e) {
      fail(e.what(), pos_);
    }
  }

  IdealExpr ideal(const FieldSpec& field) {
    return with_poly_lexer(field, [&](PolyLexer& lex) { return parse_ideal(lex, field); });
  }

  std::vector<BiPoly> poly_list(const FieldSpec& field) {
    bool parenthesized = accept('(');
    if (peek() == ')' || peek() == '\0') fail("empty generator list", pos_);
    auto out = with_poly_lexer(field, [&](PolyLexer& lex) { return parse_poly_list(lex); });
    if (parenthesized) expect(')');
    return out;
  }

  SpecNode expr(const FieldSpec& field) {
    std::size_t at = pos_;
    std::string name = identifier();
    SpecNode node;
    expect('(');
    if (name == "submodule") {
      node.kind = SpecNode::Kind::submodule;
      keyword("ideal");
      node.ideal = ideal(field);
      expect(',');
      keyword("gens");
      node.gens = poly_list(field);
    } else if (name == "cyclic") {
      node.kind = SpecNode::Kind::cyclic;
      node.ideal = ideal(field);
    } else if (name == "sum") {
      node.kind = SpecNode::Kind::sum;
      do node.children.push_back(expr(field));
      while (accept(','));
    } else if (name == "dual") {
      node.kind = SpecNode::Kind::dual;
      node.children.push_back(expr(field));
    } else if (name == "shift") {
      node.kind = SpecNode::Kind::shift;
      node.children.push_back(expr(field));
      expect(',');
      node.amount = static_cast<int>(integer());
    } else {
      fail("unknown construction '" + name + "'", at);
    }
    expect(')');
    return node;
  }

  void keyword(const std::string& word) {
    std::size_t at = pos_;
    if (identifier() != word) fail("expected '" + word + " ='", at);
    expect('=');
  }

  std::string text_;
  std::size_t pos_ = 0;
};

inline std::string print_node(const SpecNode& n) {
  switch (n.kind) {
    case SpecNode::Kind::submodule: {
      std::string gens;
      for (std::size_t i = 0; i < n.gens.size(); ++i) gens += (i ? ", " : "") + n.gens[i].to_string();
      return "submodule(ideal = " + n.ideal.to_string() + ", gens = " + gens + ")";
    }
    case SpecNode::Kind::cyclic: return "cyclic(" + n.ideal.to_string() + ")";
    case SpecNode::Kind::sum: {
      std::string out = "sum(";
      for (std::size_t i = 0; i < n.children.size(); ++i) out += (i ? ", " : "") + print_node(n.children[i]);
      return out + ")";
    }
    case SpecNode::Kind::dual: return "dual(" + print_node(n.children.at(0)) + ")";
    case SpecNode::Kind::shift: return "shift(" + print_node(n.children.at(0)) + ", " + std::to_string(n.amount) + ")";
  }
  return "";
}

}  // namespace detail

inline ModuleSpec parse_spec(std::string text) { return detail::SpecParser(std::move(text)).parse(); }

inline std::string print_spec(const ModuleSpec& spec) {
  return "field = " + spec.field.to_string() + "\nmodule = " + detail::print_node(spec.expr) + "\n";
}

/// Builds the module a spec node describes. Throws NotArtinian etc.
inline GradedModule build_module(const SpecNode& n, const FieldSpec& field) {
  switch (n.kind) {
    case SpecNode::Kind::submodule: return from_quotient_submodule(n.ideal.expand(), n.gens);
    case SpecNode::Kind::cyclic: return cyclic(n.ideal.expand());
    case SpecNode::Kind::sum: {
      std::vector<GradedModule> parts;
      for (const auto& c : n.children) parts.push_back(build_module(c, field));
      return direct_sum(parts);
    }
    case SpecNode::Kind::dual: return dual(build_module(n.children.at(0), field));
    case SpecNode::Kind::shift: return shift(build_module(n.children.at(0), field), n.amount);
  }
  throw PreconditionError("unknown spec node");
}

inline GradedModule build_module(const ModuleSpec& spec) { return build_module(spec.expr, spec.field); }

/// The summands when the top-level construction is a direct sum.
inline std::vector<GradedModule> build_summands(const ModuleSpec& spec) {
  std::vector<GradedModule> out;
  if (spec.expr.kind == SpecNode::Kind::sum)
    for (const auto& c : spec.expr.children) out.push_back(build_module(c, spec.field));
  return out;
}

}  // namespace wlp
