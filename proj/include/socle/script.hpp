#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "socle/ring.hpp"
#include "socle/text.hpp"

namespace socle {

/// Script language:
///
///   statement := (ring-decl | ideal-decl | print | check) ";"
///   ring-decl := "ring" NAME "=" FIELD "[" NAME {"," NAME} "]" [order] ["/" ideal-literal]
///   FIELD     := "Q" | "F" INT (written F101)
///   order     := "degrevlex" | "lex" | "elim" "(" INT ")"
///   ideal-decl:= "ideal" NAME "=" expr
///   print     := "print" expr
///   check     := "check" expr "==" expr
///   expr      := ideal-literal | NAME | INT | poly | CALL "(" [expr {"," expr}] ")"
///
/// The most recent ring declaration is the active ring; ideals are bound to
/// the ring that was active when they were declared.
struct ScriptExpr {
  enum class Kind { Integer, Boolean, None, Name, Poly, IdealLiteral, Call };

  Kind kind = Kind::Integer;
  std::string name;              // Name, Call
  long integer = 0;              // Integer, Boolean
  PolyExpr poly;                 // Poly
  std::vector<PolyExpr> polys;   // IdealLiteral
  std::vector<ScriptExpr> args;  // Call
  int line = 0;
  int column = 0;

  friend bool operator==(const ScriptExpr& a, const ScriptExpr& b) {
    return a.kind == b.kind && a.name == b.name && a.integer == b.integer && a.poly == b.poly &&
           a.polys == b.polys && a.args == b.args;
  }
};

struct ScriptStatement {
  enum class Kind { Ring, Ideal, Print, Check };

  Kind kind = Kind::Print;
  std::string name;                 // Ring, Ideal
  std::string field;                // Ring: "Q" or "F<p>"
  std::vector<std::string> vars;    // Ring
  std::string order;                // Ring: "degrevlex", "lex" or "elim(k)"
  std::vector<PolyExpr> defining;   // Ring
  ScriptExpr expr;                  // Ideal, Print, Check (left side)
  ScriptExpr rhs;                   // Check
  int line = 0;
  int column = 0;

  friend bool operator==(const ScriptStatement& a, const ScriptStatement& b) {
    return a.kind == b.kind && a.name == b.name && a.field == b.field && a.vars == b.vars && a.order == b.order &&
           a.defining == b.defining && a.expr == b.expr && a.rhs == b.rhs;
  }
};

struct Script {
  std::vector<ScriptStatement> statements;
  friend bool operator==(const Script& a, const Script& b) = default;
};

/// Parses and resolves names: unbound rings or ideals, unknown variables,
/// unknown functions and wrong argument counts are ParseErrors carrying the
/// offending position.
Script parse_script(std::string_view text);

/// Canonical text, one statement per line; parse_script reads it back to an
/// equal Script.
std::string serialize_script(const Script& script);

struct ScriptResult {
  int checks_passed = 0;
  int checks_failed = 0;
};

/// Executes the statements in order, writing one line per print and per
/// failed check to `out`.
ScriptResult run_script(const Script& script, std::ostream& out);

/// Ring from "FIELD[vars] [order] [/ (defining)]", e.g. "Q[x,y]" or
/// "F101[x,y,z] lex / (x*y)". Uses the ring-declaration grammar.
RingPtr parse_ring_spec(std::string_view spec);

/// Names of the value and ideal functions, for diagnostics and docs.
std::vector<std::string> script_functions();

}  // namespace socle
