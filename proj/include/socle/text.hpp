#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "socle/polynomial.hpp"

namespace socle {

struct Token {
  enum class Kind { Identifier, Integer, Symbol, End };

  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

/// Tokenizer shared by the polynomial reader and the script language.
/// Symbols are single characters except "==". `#` and `//` start comments.
class Lexer {
 public:
  explicit Lexer(std::string_view text);

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool accept_symbol(std::string_view sym);
  Token expect_symbol(std::string_view sym);
  Token expect_identifier();
  Token expect_integer();

  [[noreturn]] void fail(const Token& at, const std::string& expected) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// Unevaluated polynomial expression; kept so scripts can be printed back
/// exactly as parsed.
struct PolyExpr {
  enum class Kind { Number, Variable, Add, Sub, Mul, Pow, Neg };

  Kind kind = Kind::Number;
  std::string text;  // digits ("12" or "3/4") or a variable name
  unsigned exponent = 0;
  std::vector<PolyExpr> args;
  int line = 0;
  int column = 0;

  /// Structural equality; source positions are ignored.
  friend bool operator==(const PolyExpr& a, const PolyExpr& b) {
    return a.kind == b.kind && a.text == b.text && a.exponent == b.exponent && a.args == b.args;
  }
};

/// poly := term {("+"|"-") term}; term := unary {"*" unary};
/// unary := "-" unary | power; power := atom ["^" INT];
/// atom := INT ["/" INT] | NAME | "(" poly ")".
PolyExpr parse_poly_expr(Lexer& lex);

/// Minimal-parenthesis rendering that reparses to the same tree.
std::string format_poly_expr(const PolyExpr& e);

/// Evaluates in `ring`; unknown variable names raise ParseError at their position.
Polynomial evaluate_poly_expr(const PolyExpr& e, const PolyRingPtr& ring);

Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring);

/// "(f, g, ...)" or "f, g, ...".
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const PolyRingPtr& ring);

std::string format_polynomial_list(const std::vector<Polynomial>& polys);

}  // namespace socle
