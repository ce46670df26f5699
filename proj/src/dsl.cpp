#include "polygroth/dsl.hpp"

#include <cctype>
#include <functional>
#include <optional>

#include "polygroth/errors.hpp"

namespace polygroth {

namespace {

enum class Tok { Number, Ident, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t col = 1;
};

std::vector<Token> lex(std::string_view src) {
  static const char* const two_char[] = {">=", "<=", "=="};
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
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
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    std::size_t len = 0;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Number;
      while (i + len < src.size() && std::isdigit(static_cast<unsigned char>(src[i + len]))) ++len;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Ident;
      while (i + len < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i + len])) || src[i + len] == '_'))
        ++len;
    } else {
      t.kind = Tok::Sym;
      for (const char* s : two_char)
        if (src.substr(i, 2) == s) len = 2;
      if (len == 0) {
        if (std::string_view("()&|!\\+-*/^;=<>,").find(c) == std::string_view::npos)
          throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        len = 1;
      }
    }
    t.text = std::string(src.substr(i, len));
    advance(len);
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

enum class Rel { Ge, Gt, Le, Lt, Eq };

// Linear form sum coef_i x_i + constant.
struct Linear {
  QVec coef;
  Rat constant;
};

ExprPtr node(Op op, Atom atom = {}, std::vector<ExprPtr> args = {}) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->atom = std::move(atom);
  e->args = std::move(args);
  return e;
}

ExprPtr flat(Op op, ExprPtr lhs, ExprPtr rhs) {
  std::vector<ExprPtr> args;
  for (auto& e : {lhs, rhs}) {
    if (e->op == op) {
      args.insert(args.end(), e->args.begin(), e->args.end());
    } else {
      args.push_back(e);
    }
  }
  return node(op, {}, std::move(args));
}

// Builds the expression for lhs REL rhs where both sides are linear.
ExprPtr relation(QVec a, Rat b, Rel rel) {
  // a·x REL b
  if (is_zero(a)) {
    const int c = cmp(Rat(0), b);
    bool truth = false;
    switch (rel) {
      case Rel::Ge: truth = c >= 0; break;
      case Rel::Gt: truth = c > 0; break;
      case Rel::Le: truth = c <= 0; break;
      case Rel::Lt: truth = c < 0; break;
      case Rel::Eq: truth = c == 0; break;
    }
    return node(truth ? Op::True : Op::False);
  }
  auto make = [](const QVec& v, const Rat& r, bool strict) {
    auto [pa, pb] = primitive_normalize(v, r);
    return node(Op::Atom, Atom{std::move(pa), std::move(pb), strict});
  };
  QVec na = a;
  for (auto& x : na) x = -x;
  switch (rel) {
    case Rel::Ge: return make(a, b, false);
    case Rel::Gt: return make(a, b, true);
    case Rel::Le: return make(na, -b, false);
    case Rel::Lt: return make(na, -b, true);
    case Rel::Eq: return node(Op::And, {}, {make(a, b, false), make(na, -b, false)});
  }
  return nullptr;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  ConstructibleSet constructible() {
    expect_ident("dim");
    dim_ = header_size();
    ExprPtr e = expression();
    expect_end();
    return ConstructibleSet(dim_, e);
  }

  SemialgDesc semialg() {
    expect_ident("torus");
    dim_ = header_size();
    semialg_ = true;
    SemialgDesc out;
    out.n = dim_;
    std::optional<ExprPtr> body;
    while (peek().kind != Tok::End) {
      if (accept(";")) continue;
      if (peek().kind == Tok::Ident && peek().text == "point") {
        ++pos_;
        ++out.extra_points;
        continue;
      }
      const Token& start = peek();
      if (body) throw ParseError("at most one body expression is allowed", start.line, start.col);
      body = expression();
    }
    out.body = ConstructibleSet(dim_, body ? *body : node(Op::False));
    return out;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  bool is_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }

  bool accept(const char* s) {
    if (!is_sym(s)) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    const std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + ", found " + got, t.line, t.col);
  }

  void expect(const char* s) {
    if (!accept(s)) fail(std::string("expected '") + s + "'");
  }

  void expect_ident(const char* s) {
    if (peek().kind != Tok::Ident || peek().text != s) fail(std::string("expected '") + s + "'");
    ++pos_;
  }

  void expect_end() {
    accept(";");
    if (peek().kind != Tok::End) fail("expected end of input");
  }

  std::size_t header_size() {
    if (peek().kind != Tok::Number) fail("expected a dimension");
    const Token& t = peek();
    if (t.text.size() > 3) throw ParseError("dimension too large", t.line, t.col);
    const std::size_t n = std::stoul(t.text);
    ++pos_;
    expect(";");
    return n;
  }

  ExprPtr expression() {
    ExprPtr e = diff();
    while (accept("|")) e = flat(Op::Or, e, diff());
    return e;
  }

  ExprPtr diff() {
    ExprPtr e = conj();
    while (accept("\\")) e = flat(Op::And, e, node(Op::Not, {}, {conj()}));
    return e;
  }

  ExprPtr conj() {
    ExprPtr e = unary();
    while (accept("&")) e = flat(Op::And, e, unary());
    return e;
  }

  ExprPtr unary() {
    if (accept("!")) return node(Op::Not, {}, {unary()});
    return primary();
  }

  ExprPtr primary() {
    if (accept("(")) {
      ExprPtr e = expression();
      expect(")");
      return e;
    }
    if (peek().kind == Tok::Ident && (peek().text == "true" || peek().text == "false")) {
      const bool t = peek().text == "true";
      ++pos_;
      return node(t ? Op::True : Op::False);
    }
    const Linear lhs = side();
    Rel rel;
    if (accept(">=")) {
      rel = Rel::Ge;
    } else if (accept(">")) {
      rel = Rel::Gt;
    } else if (accept("<=")) {
      rel = Rel::Le;
    } else if (accept("<")) {
      rel = Rel::Lt;
    } else if (accept("==") || accept("=")) {
      rel = Rel::Eq;
    } else {
      fail("expected a relation");
    }
    const Linear rhs = side();
    QVec a(dim_);
    for (std::size_t i = 0; i < dim_; ++i) a[i] = lhs.coef[i] - rhs.coef[i];
    return relation(std::move(a), rhs.constant - lhs.constant, rel);
  }

  Linear side() { return semialg_ ? valuation_side() : linear(); }

  Rat number() {
    if (peek().kind != Tok::Number) fail("expected a number");
    Int num(peek().text, 10);
    ++pos_;
    if (accept("/")) {
      if (peek().kind != Tok::Number) fail("expected a denominator");
      const Token& t = peek();
      Int den(t.text, 10);
      if (den == 0) throw ParseError("zero denominator", t.line, t.col);
      ++pos_;
      return make_rat(num, den);
    }
    return Rat(num);
  }

  Rat signed_number() {
    if (accept("-")) return -number();
    accept("+");
    return number();
  }

  // Index of variable x<k>, if the current token is one.
  std::optional<std::size_t> variable() {
    const Token& t = peek();
    if (t.kind != Tok::Ident || t.text.size() < 2 || t.text[0] != 'x') return std::nullopt;
    for (std::size_t i = 1; i < t.text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) return std::nullopt;
    if (t.text.size() > 4) throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
    const std::size_t k = std::stoul(t.text.substr(1));
    if (k < 1 || k > dim_)
      throw ParseError("variable '" + t.text + "' outside x1..x" + std::to_string(dim_), t.line, t.col);
    ++pos_;
    return k - 1;
  }

  Linear linear() {
    Linear out{QVec(dim_), Rat(0)};
    bool first = true;
    for (;;) {
      Rat sign = 1;
      if (accept("-")) {
        sign = -1;
      } else if (!accept("+") && !first) {
        break;
      }
      first = false;
      Rat c = 1;
      bool has_number = false;
      if (peek().kind == Tok::Number) {
        c = number();
        has_number = true;
        accept("*");
      }
      if (auto v = variable()) {
        out.coef[*v] += sign * c;
      } else if (has_number) {
        out.constant += sign * c;
      } else {
        fail("expected a term");
      }
    }
    return out;
  }

  // val(monomial) contributes its valuation q + alpha·w; a bare rational is a
  // constant valuation.
  Linear valuation_side() {
    Linear out{QVec(dim_), Rat(0)};
    if (peek().kind != Tok::Ident || peek().text != "val") {
      out.constant = signed_number();
      return out;
    }
    ++pos_;
    expect("(");
    for (bool more = true; more; more = accept("*")) {
      if (peek().kind == Tok::Ident && peek().text == "t") {
        ++pos_;
        out.constant += accept("^") ? signed_number() : Rat(1);
      } else if (auto v = variable()) {
        out.coef[*v] += accept("^") ? signed_number() : Rat(1);
      } else if (peek().kind == Tok::Number) {
        const Token& t = peek();
        if (number() == 0) throw ParseError("valuation of zero", t.line, t.col);
      } else {
        fail("expected t, a variable or a constant");
      }
    }
    if (is_sym("+") || is_sym("-"))
      throw UnsupportedError("only monomial arguments of val are supported (the tropical-preimage fragment); "
                             "found a sum at " + std::to_string(peek().line) + ":" +
                             std::to_string(peek().col));
    expect(")");
    return out;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t dim_ = 0;
  bool semialg_ = false;
};

bool starts_with_dim(std::string_view text) {
  for (const auto& t : lex(text)) return t.kind == Tok::Ident && t.text == "dim";
  return false;
}

void collect_closed_rows(const Expr& e, std::vector<Row>& rows) {
  switch (e.op) {
    case Op::True: return;
    case Op::Atom:
      if (!e.atom.strict) {
        rows.push_back(Row{e.atom.a, e.atom.b});
        return;
      }
      break;
    case Op::And:
      for (const auto& a : e.args) collect_closed_rows(*a, rows);
      return;
    default: break;
  }
  throw UsageError("a polyhedron must be a conjunction of closed atoms");
}

}  // namespace

ConstructibleSet parse_constructible(std::string_view text) { return Parser(text).constructible(); }

SemialgDesc parse_semialg(std::string_view text) { return Parser(text).semialg(); }

HPolyhedron parse_polyhedron(std::string_view text) {
  if (starts_with_dim(text)) {
    const ConstructibleSet C = parse_constructible(text);
    if (C.expr()->op == Op::False) {
      IntVec a(C.dim());
      if (C.dim() == 0) throw UsageError("the empty set in R^0 is not a polyhedron literal");
      a[0] = 1;
      const Row r{a, Rat(1)};
      return HPolyhedron(C.dim(), std::vector<Row>{r, Row{a, Rat(0)}.reversed()});
    }
    std::vector<Row> rows;
    collect_closed_rows(*C.expr(), rows);
    return HPolyhedron(C.dim(), std::move(rows));
  }
  std::vector<Row> rows;
  std::optional<std::size_t> dim;
  std::size_t line_no = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != '\n' && text[i] != ';') continue;
    std::string_view line = text.substr(line_start, i - line_start);
    line_start = i + 1;
    const std::size_t this_line = line_no;
    if (i < text.size() && text[i] == '\n') ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    // Whitespace-separated words with their columns.
    std::vector<std::pair<std::string, std::size_t>> words;
    for (std::size_t j = 0; j < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[j]))) {
        ++j;
        continue;
      }
      std::size_t k = j;
      while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
      words.emplace_back(std::string(line.substr(j, k - j)), j + 1);
      j = k;
    }
    if (words.empty()) continue;
    std::size_t ge = words.size();
    for (std::size_t j = 0; j < words.size(); ++j)
      if (words[j].first == ">=") ge = j;
    if (ge == words.size()) throw ParseError("expected 'a1 ... an >= b'", this_line, words[0].second);
    if (ge + 2 != words.size())
      throw ParseError("expected one right-hand side after '>='", this_line, words[ge].second);
    IntVec a;
    for (std::size_t j = 0; j < ge; ++j) {
      const auto& [w, c] = words[j];
      std::string_view digits = w;
      if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.remove_prefix(1);
      if (digits.empty() ||
          !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw ParseError("expected an integer coefficient, found '" + w + "'", this_line, c);
      a.emplace_back(w[0] == '+' ? w.substr(1) : w, 10);
    }
    Rat b;
    try {
      b = parse_rational(words[ge + 1].first);
    } catch (const UsageError& e) {
      throw ParseError(e.what(), this_line, words[ge + 1].second);
    }
    if (!dim) dim = a.size();
    if (a.size() != *dim)
      throw ParseError("row has " + std::to_string(a.size()) + " coefficients, expected " + std::to_string(*dim),
                       this_line, words[0].second);
    if (is_zero(a)) throw ParseError("constraint with zero normal vector", this_line, words[0].second);
    rows.push_back(Row{std::move(a), b});
  }
  if (!dim) throw ParseError("no constraints; write 'dim n; true' for the whole space", line_no, 1);
  return HPolyhedron(*dim, std::move(rows));
}

std::string render_linear(const IntVec& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const Int m = abs(a[i]);
    if (out.empty()) {
      if (a[i] < 0) out = "-";
    } else {
      out += a[i] < 0 ? " - " : " + ";
    }
    if (m != 1) out += m.get_str();
    out += "x" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string render_atom(const Atom& atom) {
  return render_linear(atom.a) + (atom.strict ? " > " : " >= ") + to_string(atom.b);
}

namespace {

int precedence(Op op) {
  switch (op) {
    case Op::Or: return 1;
    case Op::And: return 2;
    case Op::Not: return 3;
    default: return 4;
  }
}

}  // namespace

std::string render_expr(const Expr& e) {
  auto child = [&](const ExprPtr& c, int min_prec) {
    std::string s = render_expr(*c);
    return precedence(c->op) < min_prec ? "(" + s + ")" : s;
  };
  switch (e.op) {
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::Atom: return render_atom(e.atom);
    case Op::Not: return "!" + child(e.args[0], 4);
    case Op::And:
    case Op::Or: {
      const char* sep = e.op == Op::And ? " & " : " | ";
      std::string out;
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += sep;
        // Nested nodes of the same kind keep their parentheses.
        out += child(e.args[i], precedence(e.op) + (e.args[i]->op == e.op ? 1 : 0));
      }
      return out;
    }
  }
  return "";
}

std::string render_constructible(const ConstructibleSet& C) {
  return "dim " + std::to_string(C.dim()) + "; " + render_expr(*C.expr());
}

std::string render_row(const Row& r) {
  std::string out;
  for (const auto& x : r.a) out += x.get_str() + " ";
  return out + ">= " + to_string(r.b);
}

std::string render_polyhedron(const HPolyhedron& P) {
  if (P.rows().empty()) return "dim " + std::to_string(P.dim()) + "; true\n";
  std::string out;
  for (const auto& r : P.rows()) out += render_row(r) + "\n";
  return out;
}

namespace {

std::string render_val_atom(const Atom& atom) {
  std::string mono;
  for (std::size_t i = 0; i < atom.a.size(); ++i) {
    if (atom.a[i] == 0) continue;
    if (!mono.empty()) mono += " * ";
    mono += "x" + std::to_string(i + 1);
    if (atom.a[i] != 1) mono += "^" + atom.a[i].get_str();
  }
  return "val(" + mono + ")" + (atom.strict ? " > " : " >= ") + to_string(atom.b);
}

std::string render_val_expr(const Expr& e) {
  if (e.op == Op::Atom) return render_val_atom(e.atom);
  auto child = [&](const ExprPtr& c, int min_prec) {
    std::string s = render_val_expr(*c);
    return precedence(c->op) < min_prec ? "(" + s + ")" : s;
  };
  switch (e.op) {
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::Not: return "!" + child(e.args[0], 4);
    default: {
      const char* sep = e.op == Op::And ? " & " : " | ";
      std::string out;
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += sep;
        out += child(e.args[i], precedence(e.op) + (e.args[i]->op == e.op ? 1 : 0));
      }
      return out;
    }
  }
}

}  // namespace

std::string render_semialg(const SemialgDesc& s) {
  std::string out = "torus " + std::to_string(s.n) + "; " + render_val_expr(*s.body.expr()) + ";";
  for (std::int64_t i = 0; i < s.extra_points; ++i) out += " point;";
  return out;
}

bool same_expression(const Expr& x, const Expr& y) {
  if (x.op != y.op || x.args.size() != y.args.size()) return false;
  if (x.op == Op::Atom && !(x.atom == y.atom)) return false;
  for (std::size_t i = 0; i < x.args.size(); ++i)
    if (!same_expression(*x.args[i], *y.args[i])) return false;
  return true;
}

}  // namespace polygroth
