#include "socle/text.hpp"

#include <cctype>
#include <sstream>

#include "socle/error.hpp"

namespace socle {

Lexer::Lexer(std::string_view text) {
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col;
    std::size_t start = i;
    if (std::isalpha(c) || c == '_') {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) advance(1);
      tok.kind = Token::Kind::Identifier;
    } else if (std::isdigit(c)) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) advance(1);
      tok.kind = Token::Kind::Integer;
    } else if (c == '=' && i + 1 < text.size() && text[i + 1] == '=') {
      advance(2);
      tok.kind = Token::Kind::Symbol;
    } else if (std::string_view("()[],;=+-*^/").find(static_cast<char>(c)) != std::string_view::npos) {
      advance(1);
      tok.kind = Token::Kind::Symbol;
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
    }
    tok.text = std::string(text.substr(start, i - start));
    tokens_.push_back(std::move(tok));
  }
  Token end;
  end.kind = Token::Kind::End;
  end.line = line;
  end.column = col;
  tokens_.push_back(end);
}

const Token& Lexer::peek(std::size_t ahead) const {
  std::size_t p = std::min(pos_ + ahead, tokens_.size() - 1);
  return tokens_[p];
}

Token Lexer::next() {
  Token t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

bool Lexer::accept_symbol(std::string_view sym) {
  if (peek().kind == Token::Kind::Symbol && peek().text == sym) {
    next();
    return true;
  }
  return false;
}

Token Lexer::expect_symbol(std::string_view sym) {
  if (peek().kind != Token::Kind::Symbol || peek().text != sym) fail(peek(), "'" + std::string(sym) + "'");
  return next();
}

Token Lexer::expect_identifier() {
  if (peek().kind != Token::Kind::Identifier) fail(peek(), "identifier");
  return next();
}

Token Lexer::expect_integer() {
  if (peek().kind != Token::Kind::Integer) fail(peek(), "integer");
  return next();
}

void Lexer::fail(const Token& at, const std::string& expected) const {
  std::string found = at.kind == Token::Kind::End ? "end of input" : "'" + at.text + "'";
  throw ParseError("expected " + expected + ", found " + found, at.line, at.column);
}

namespace {

PolyExpr make(PolyExpr::Kind kind, const Token& at) {
  PolyExpr e;
  e.kind = kind;
  e.line = at.line;
  e.column = at.column;
  return e;
}

PolyExpr parse_sum(Lexer& lex);

PolyExpr parse_atom(Lexer& lex) {
  const Token& t = lex.peek();
  if (t.kind == Token::Kind::Integer) {
    Token num = lex.next();
    PolyExpr e = make(PolyExpr::Kind::Number, num);
    e.text = num.text;
    if (lex.peek().kind == Token::Kind::Symbol && lex.peek().text == "/" &&
        lex.peek(1).kind == Token::Kind::Integer) {
      lex.next();
      e.text += "/" + lex.next().text;
    }
    return e;
  }
  if (t.kind == Token::Kind::Identifier) {
    Token name = lex.next();
    PolyExpr e = make(PolyExpr::Kind::Variable, name);
    e.text = name.text;
    return e;
  }
  if (t.kind == Token::Kind::Symbol && t.text == "(") {
    lex.next();
    PolyExpr inner = parse_sum(lex);
    lex.expect_symbol(")");
    return inner;
  }
  lex.fail(t, "number, variable or '('");
}

PolyExpr parse_power(Lexer& lex) {
  PolyExpr base = parse_atom(lex);
  if (lex.peek().kind == Token::Kind::Symbol && lex.peek().text == "^") {
    Token caret = lex.next();
    Token exp = lex.expect_integer();
    PolyExpr e = make(PolyExpr::Kind::Pow, caret);
    e.line = base.line;
    e.column = base.column;
    try {
      e.exponent = static_cast<unsigned>(std::stoul(exp.text));
    } catch (const std::exception&) {
      throw ParseError("exponent too large", exp.line, exp.column);
    }
    e.args.push_back(std::move(base));
    return e;
  }
  return base;
}

PolyExpr parse_unary(Lexer& lex) {
  if (lex.peek().kind == Token::Kind::Symbol && lex.peek().text == "-") {
    Token minus = lex.next();
    PolyExpr e = make(PolyExpr::Kind::Neg, minus);
    e.args.push_back(parse_unary(lex));
    return e;
  }
  return parse_power(lex);
}

PolyExpr parse_product(Lexer& lex) {
  PolyExpr lhs = parse_unary(lex);
  while (lex.peek().kind == Token::Kind::Symbol && lex.peek().text == "*") {
    Token op = lex.next();
    PolyExpr e = make(PolyExpr::Kind::Mul, op);
    e.line = lhs.line;
    e.column = lhs.column;
    e.args.push_back(std::move(lhs));
    e.args.push_back(parse_unary(lex));
    lhs = std::move(e);
  }
  return lhs;
}

PolyExpr parse_sum(Lexer& lex) {
  PolyExpr lhs = parse_product(lex);
  while (lex.peek().kind == Token::Kind::Symbol && (lex.peek().text == "+" || lex.peek().text == "-")) {
    Token op = lex.next();
    PolyExpr e = make(op.text == "+" ? PolyExpr::Kind::Add : PolyExpr::Kind::Sub, op);
    e.line = lhs.line;
    e.column = lhs.column;
    e.args.push_back(std::move(lhs));
    e.args.push_back(parse_product(lex));
    lhs = std::move(e);
  }
  return lhs;
}

int precedence(const PolyExpr& e) {
  switch (e.kind) {
    case PolyExpr::Kind::Add:
    case PolyExpr::Kind::Sub:
      return 1;
    case PolyExpr::Kind::Mul:
      return 2;
    case PolyExpr::Kind::Neg:
      return 3;
    case PolyExpr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const PolyExpr& e, int min_prec) {
  std::string s = format_poly_expr(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

PolyExpr parse_poly_expr(Lexer& lex) { return parse_sum(lex); }

std::string format_poly_expr(const PolyExpr& e) {
  switch (e.kind) {
    case PolyExpr::Kind::Number:
    case PolyExpr::Kind::Variable:
      return e.text;
    case PolyExpr::Kind::Add:
      return wrap(e.args[0], 1) + " + " + wrap(e.args[1], 2);
    case PolyExpr::Kind::Sub:
      return wrap(e.args[0], 1) + " - " + wrap(e.args[1], 2);
    case PolyExpr::Kind::Mul:
      return wrap(e.args[0], 2) + "*" + wrap(e.args[1], 3);
    case PolyExpr::Kind::Neg:
      return "-" + wrap(e.args[0], 3);
    case PolyExpr::Kind::Pow:
      return wrap(e.args[0], 5) + "^" + std::to_string(e.exponent);
  }
  return {};
}

Polynomial evaluate_poly_expr(const PolyExpr& e, const PolyRingPtr& ring) {
  switch (e.kind) {
    case PolyExpr::Kind::Number: {
      auto slash = e.text.find('/');
      mpz_class num(e.text.substr(0, slash));
      mpz_class den = slash == std::string::npos ? mpz_class(1) : mpz_class(e.text.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator", e.line, e.column);
      try {
        return Polynomial::constant(ring, ring->field().from_fraction(num, den));
      } catch (const ComputationError&) {
        throw ParseError("denominator vanishes in " + ring->field().descriptor(), e.line, e.column);
      }
    }
    case PolyExpr::Kind::Variable: {
      auto idx = ring->index_of(e.text);
      if (!idx) throw ParseError("unknown variable '" + e.text + "' in ring " + ring->id(), e.line, e.column);
      return Polynomial::variable(ring, *idx);
    }
    case PolyExpr::Kind::Add:
      return evaluate_poly_expr(e.args[0], ring) + evaluate_poly_expr(e.args[1], ring);
    case PolyExpr::Kind::Sub:
      return evaluate_poly_expr(e.args[0], ring) - evaluate_poly_expr(e.args[1], ring);
    case PolyExpr::Kind::Mul:
      return evaluate_poly_expr(e.args[0], ring) * evaluate_poly_expr(e.args[1], ring);
    case PolyExpr::Kind::Neg:
      return -evaluate_poly_expr(e.args[0], ring);
    case PolyExpr::Kind::Pow:
      return evaluate_poly_expr(e.args[0], ring).pow(e.exponent);
  }
  return Polynomial(ring);
}

Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring) {
  Lexer lex(text);
  PolyExpr e = parse_poly_expr(lex);
  if (!lex.at_end()) lex.fail(lex.peek(), "end of polynomial");
  return evaluate_poly_expr(e, ring);
}

namespace {

std::vector<Polynomial> parse_bare_list(Lexer& lex, const PolyRingPtr& ring, std::string_view terminator) {
  std::vector<Polynomial> out;
  auto at_terminator = [&] {
    return terminator.empty() ? lex.at_end()
                              : lex.peek().kind == Token::Kind::Symbol && lex.peek().text == terminator;
  };
  if (at_terminator()) return out;
  do {
    out.push_back(evaluate_poly_expr(parse_poly_expr(lex), ring));
  } while (lex.accept_symbol(","));
  return out;
}

}  // namespace

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const PolyRingPtr& ring) {
  {
    Lexer lex(text);
    if (lex.accept_symbol("(")) {
      try {
        auto out = parse_bare_list(lex, ring, ")");
        lex.expect_symbol(")");
        if (lex.at_end()) return out;
      } catch (const ParseError&) {
        // Fall through: the leading parenthesis belongs to the first polynomial.
      }
    }
  }
  Lexer lex(text);
  auto out = parse_bare_list(lex, ring, "");
  if (!lex.at_end()) lex.fail(lex.peek(), "',' or end of list");
  return out;
}

std::string format_polynomial_list(const std::vector<Polynomial>& polys) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < polys.size(); ++i) os << (i ? ", " : "") << polys[i].to_string();
  os << ")";
  return os.str();
}

}  // namespace socle
