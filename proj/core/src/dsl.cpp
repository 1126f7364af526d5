#include "quiverhh/dsl.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "quiverhh/errors.hpp"

namespace quiverhh {

namespace {

enum class Tok { Ident, Number, Symbol, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view src, std::size_t first_line = 1) {
  std::vector<Token> out;
  std::size_t line = first_line, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (c == '\n') {
      out.push_back({Tok::Newline, "\n", line, col, i});
      advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    std::size_t start = i, l = line, cc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\'')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, cc, start});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), l, cc, start});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Symbol, "->", l, cc, start});
      advance(2);
      continue;
    }
    static const std::string symbols = "{};:*+-/^()=,";
    if (symbols.find(c) != std::string::npos) {
      out.push_back({Tok::Symbol, std::string(1, c), l, cc, start});
      advance(1);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", l, cc);
  }
  out.push_back({Tok::End, "", line, col, src.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, std::vector<Token> toks) : src_(src), toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool at_symbol(std::string_view s) const { return peek().kind == Tok::Symbol && peek().text == s; }
  bool at_end() const { return peek().kind == Tok::End; }

  [[noreturn]] void fail(const std::string& msg, const Token& t) const { throw ParseError(msg, t.line, t.column); }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, peek()); }

  void expect(std::string_view s) {
    if (!at_symbol(s)) fail("expected '" + std::string(s) + "'" + found());
    next();
  }
  std::string found() const {
    const Token& t = peek();
    if (t.kind == Tok::End) return ", found end of input";
    if (t.kind == Tok::Newline) return ", found end of line";
    return ", found '" + t.text + "'";
  }
  void skip_separators() {
    while (peek().kind == Tok::Newline || at_symbol(";")) next();
  }
  void skip_newlines() {
    while (peek().kind == Tok::Newline) next();
  }
  bool at_separator() const { return peek().kind == Tok::Newline || at_symbol(";") || at_symbol("}") || at_end(); }

  std::string name() {
    if (peek().kind != Tok::Ident && peek().kind != Tok::Number) fail("expected a name" + found());
    return next().text;
  }
  unsigned long number() {
    if (peek().kind != Tok::Number) fail("expected a number" + found());
    const Token& t = next();
    try {
      return std::stoul(t.text);
    } catch (const std::exception&) {
      fail("number out of range", t);
    }
  }

  // expressions ------------------------------------------------------------

  Element expression(const Quiver& q, const Field& k) {
    Element acc;
    bool first = true;
    for (;;) {
      bool negative = false;
      if (at_symbol("+") || at_symbol("-")) {
        negative = next().text == "-";
      } else if (!first) {
        break;
      }
      Element t = term(q, k);
      acc.axpy(k, negative ? k.make(-1) : k.make(1), t);
      first = false;
    }
    return acc;
  }

  Element term(const Quiver& q, const Field& k) {
    Element acc = factor(q, k);
    while (at_symbol("*")) {
      next();
      const Token& at = peek();
      Element rhs = factor(q, k);
      bool both_nonzero = !acc.is_zero() && !rhs.is_zero();
      acc = multiply(k, acc, rhs);
      if (both_nonzero && acc.is_zero()) fail("paths do not compose", at);
    }
    return acc;
  }

  Element factor(const Quiver& q, const Field& k) {
    Element base = atom(q, k);
    if (at_symbol("^")) {
      next();
      const Token& t = peek();
      unsigned long e = number();
      if (e == 0) return Element::scalar(q, k, k.make(1));
      Element acc = base;
      for (unsigned long i = 1; i < e; ++i) {
        acc = multiply(k, acc, base);
        if (acc.is_zero() && !base.is_zero()) fail("paths do not compose", t);
      }
      return acc;
    }
    return base;
  }

  Element atom(const Quiver& q, const Field& k) {
    const Token& t = peek();
    if (at_symbol("(")) {
      ++depth_;
      next();
      skip_newlines_in_parens();
      Element e = expression(q, k);
      skip_newlines_in_parens();
      expect(")");
      --depth_;
      return e;
    }
    if (t.kind == Tok::Number) {
      next();
      mpq_class value(mpz_class(t.text));
      if (at_symbol("/")) {
        next();
        const Token& d = peek();
        if (d.kind != Tok::Number) fail("expected a denominator" + found());
        next();
        mpz_class den(d.text);
        if (den == 0) fail("zero denominator", d);
        value = mpq_class(mpz_class(t.text), den);
        value.canonicalize();
      }
      Scalar c;
      try {
        c = k.make(value);
      } catch (const InputError& e) {
        fail(e.what(), t);
      }
      return Element::scalar(q, k, c);
    }
    if (t.kind == Tok::Ident) {
      next();
      if (t.text == "e" && at_symbol("(")) {
        next();
        const Token& v = peek();
        std::string label = name();
        expect(")");
        auto idx = q.vertex_index(label);
        if (!idx) fail("unknown vertex '" + label + "'", v);
        return Element::of(Path::trivial(*idx), k.make(1));
      }
      auto a = q.arrow_index(t.text);
      if (!a) fail("unknown arrow '" + t.text + "'", t);
      return Element::of(Path::of_arrow(q, *a), k.make(1));
    }
    fail("expected a coefficient, arrow or e(vertex)" + found());
  }

  void skip_newlines_in_parens() {
    if (depth_ > 0) skip_newlines();
  }

  std::string_view source() const { return src_; }
  std::size_t position() const { return pos_; }

 private:
  std::string_view src_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

void parse_quiver_block(Parser& ps, Quiver& q) {
  ps.expect("{");
  for (;;) {
    ps.skip_separators();
    if (ps.at_symbol("}")) break;
    if (ps.at_end()) ps.fail("unterminated quiver block");
    const Token first = ps.peek();
    std::string label = ps.name();
    if (ps.at_symbol(":")) {
      ps.next();
      const Token& s = ps.peek();
      std::string src = ps.name();
      ps.expect("->");
      const Token& t = ps.peek();
      std::string tgt = ps.name();
      auto si = q.vertex_index(src);
      if (!si) ps.fail("unknown vertex '" + src + "'", s);
      auto ti = q.vertex_index(tgt);
      if (!ti) ps.fail("unknown vertex '" + tgt + "'", t);
      if (label == "e") ps.fail("'e' is reserved for trivial paths", first);
      try {
        q.add_arrow(label, *si, *ti);
      } catch (const InputError& e) {
        ps.fail(e.what(), first);
      }
    } else {
      // a list of vertex names
      std::vector<std::pair<std::string, Token>> names{{label, first}};
      while (!ps.at_separator()) {
        const Token t = ps.peek();
        if (ps.at_symbol(",")) {
          ps.next();
          continue;
        }
        names.emplace_back(ps.name(), t);
      }
      for (auto& [n, t] : names) {
        try {
          q.add_vertex(n);
        } catch (const InputError& e) {
          ps.fail(e.what(), t);
        }
      }
    }
    if (!ps.at_separator()) ps.fail("expected ';' or a new line" + ps.found());
  }
  ps.expect("}");
}

}  // namespace

std::size_t Presentation::max_relation_length() const {
  std::size_t m = 0;
  for (const auto& r : relations) m = std::max(m, r.degree());
  return m;
}

std::optional<std::size_t> longest_path_length(const Quiver& q) {
  const std::size_t n = q.num_vertices();
  // Kahn on vertices, longest path ending at each vertex
  std::vector<std::size_t> indeg(n, 0), best(n, 0);
  for (const auto& a : q.arrows()) ++indeg[a.target];
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0) stack.push_back(v);
  }
  std::size_t done = 0, longest = 0;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    ++done;
    for (const auto& a : q.arrows()) {
      if (a.source != v) continue;
      best[a.target] = std::max(best[a.target], best[v] + 1);
      longest = std::max(longest, best[a.target]);
      if (--indeg[a.target] == 0) stack.push_back(a.target);
    }
  }
  if (done < n) return std::nullopt;
  return longest;
}

std::size_t default_degree_bound(const Quiver& q, std::size_t max_relation_length) {
  std::size_t d = 2 * max_relation_length;
  if (auto l = longest_path_length(q)) d = std::max(d, *l);
  return d;
}

Presentation parse_presentation(std::string_view text, const ParseOptions& options) {
  Parser ps(text, tokenize(text));
  Presentation pres;
  bool have_field = false, have_quiver = false;
  std::optional<std::size_t> file_bound;

  for (;;) {
    ps.skip_separators();
    if (ps.at_end()) break;
    const Token kw = ps.peek();
    if (kw.kind != Tok::Ident) ps.fail("expected a section keyword" + ps.found());
    ps.next();
    if (kw.text == "field") {
      if (have_field) ps.fail("field given twice", kw);
      std::string spec = ps.name();
      if (ps.at_symbol("(")) {
        ps.next();
        spec += "(" + std::to_string(ps.number()) + ")";
        ps.expect(")");
      }
      try {
        pres.field = Field::parse(spec);
      } catch (const InputError& e) {
        ps.fail(e.what(), kw);
      }
      have_field = true;
    } else if (kw.text == "quiver") {
      if (have_quiver) ps.fail("quiver given twice", kw);
      parse_quiver_block(ps, pres.quiver);
      have_quiver = true;
    } else if (kw.text == "relations") {
      if (!have_quiver) ps.fail("relations before quiver", kw);
      if (options.field_override) pres.field = *options.field_override;
      if (!have_field && !options.field_override) ps.fail("relations before field", kw);
      ps.expect("{");
      for (;;) {
        ps.skip_separators();
        if (ps.at_symbol("}")) break;
        if (ps.at_end()) ps.fail("unterminated relations block");
        const Token start = ps.peek();
        Element r = ps.expression(pres.quiver, pres.field);
        if (!ps.at_separator()) ps.fail("expected ';' or a new line" + ps.found());
        if (r.is_zero()) ps.fail("relation vanishes over " + pres.field.name(), start);
        if (!r.endpoints()) ps.fail("non-parallel relation", start);
        pres.relations.push_back(std::move(r));
      }
      ps.expect("}");
    } else if (kw.text == "maps") {
      ps.expect("{");
      for (;;) {
        ps.skip_separators();
        if (ps.at_symbol("}")) break;
        if (ps.at_end()) ps.fail("unterminated maps block");
        std::string arrow = ps.name();
        ps.expect("=");
        const Token& first = ps.peek();
        std::size_t begin = first.offset;
        std::size_t end = begin;
        int depth = 0;
        while (!ps.at_end() && !(depth == 0 && ps.at_separator())) {
          if (ps.at_symbol("(")) ++depth;
          if (ps.at_symbol(")")) --depth;
          const Token& t = ps.next();
          end = t.offset + t.text.size();
        }
        if (end == begin) ps.fail("empty map expression", first);
        pres.maps.push_back(ArrowMap{arrow, std::string(text.substr(begin, end - begin)), first.line, first.column});
      }
      ps.expect("}");
    } else if (kw.text == "degree_bound") {
      file_bound = ps.number();
    } else {
      ps.fail("unknown section '" + kw.text + "'", kw);
    }
  }
  if (!have_quiver) throw ParseError("missing quiver block", 1, 1);
  if (options.field_override) {
    pres.field = *options.field_override;
  } else if (!have_field) {
    throw ParseError("missing field declaration", 1, 1);
  }
  for (const auto& m : pres.maps) {
    if (!pres.quiver.arrow_index(m.arrow)) {
      throw ParseError("maps block names unknown arrow '" + m.arrow + "'", m.line, m.column);
    }
  }

  std::size_t longest = pres.max_relation_length();
  if (options.degree_bound) {
    pres.degree_bound = *options.degree_bound;
  } else if (file_bound) {
    pres.degree_bound = *file_bound;
  } else {
    pres.degree_bound = default_degree_bound(pres.quiver, longest);
  }
  if (pres.degree_bound < longest) {
    throw InputError("degree bound " + std::to_string(pres.degree_bound) + " is below the longest relation (" +
                     std::to_string(longest) + ")");
  }
  return pres;
}

Presentation load_presentation(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  Presentation p;
  try {
    p = parse_presentation(buf.str(), options);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
  p.name = std::filesystem::path(path).stem().string();
  return p;
}

Element parse_element(std::string_view text, const Quiver& q, const Field& k) {
  Parser ps(text, tokenize(text));
  ps.skip_newlines();
  Element e = ps.expression(q, k);
  ps.skip_separators();
  if (!ps.at_end()) ps.fail("unexpected trailing input" + ps.found());
  return e;
}

}  // namespace quiverhh
