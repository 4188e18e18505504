#include "socle/script.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "socle/error.hpp"
#include "socle/invariants.hpp"

namespace socle {

namespace {

enum class Type { Ideal, Poly, Int, Bool, None, Value };

struct FunctionSpec {
  std::vector<Type> args;
  std::size_t required;  // leading args that must be present
  Type result;
};

const std::map<std::string, FunctionSpec>& functions() {
  static const std::map<std::string, FunctionSpec> table = {
      {"colon", {{Type::Ideal, Type::Ideal}, 2, Type::Ideal}},
      {"sum", {{Type::Ideal, Type::Ideal}, 2, Type::Ideal}},
      {"product", {{Type::Ideal, Type::Ideal}, 2, Type::Ideal}},
      {"power", {{Type::Ideal, Type::Int}, 2, Type::Ideal}},
      {"intersect", {{Type::Ideal, Type::Ideal}, 2, Type::Ideal}},
      {"maxideal", {{}, 0, Type::Ideal}},
      {"length", {{Type::Ideal}, 1, Type::Value}},
      {"socle", {{Type::Ideal}, 1, Type::Value}},
      {"mu", {{Type::Ideal}, 1, Type::Value}},
      {"mult", {{Type::Ideal}, 1, Type::Value}},
      {"defect", {{Type::Ideal}, 1, Type::Value}},
      {"dim", {{Type::Ideal}, 1, Type::Value}},
      {"type", {{Type::Ideal}, 1, Type::Value}},
      {"gb", {{Type::Ideal}, 1, Type::Value}},
      {"rellength", {{Type::Ideal, Type::Ideal}, 2, Type::Value}},
      {"stability", {{Type::Ideal, Type::Ideal, Type::Int}, 2, Type::Value}},
      {"member", {{Type::Poly, Type::Ideal}, 2, Type::Value}},
      {"equal", {{Type::Ideal, Type::Ideal}, 2, Type::Value}},
      {"contains", {{Type::Ideal, Type::Ideal}, 2, Type::Value}},
      {"depth", {{}, 0, Type::Value}},
  };
  return table;
}

const char* type_name(Type t) {
  switch (t) {
    case Type::Ideal: return "ideal";
    case Type::Poly: return "polynomial";
    case Type::Int: return "integer";
    case Type::Bool: return "boolean";
    case Type::None: return "none";
    case Type::Value: return "value";
  }
  return "?";
}

std::optional<MonomialOrder> order_from_name(const std::string& name) {
  if (name == "degrevlex") return MonomialOrder::degrevlex();
  if (name == "lex") return MonomialOrder::lex();
  if (name.rfind("elim(", 0) == 0 && name.back() == ')') {
    return MonomialOrder::elimination(std::stoul(name.substr(5, name.size() - 6)));
  }
  return std::nullopt;
}

Field field_from_name(const std::string& name) {
  if (name == "Q") return Field::rationals();
  return Field::prime(static_cast<std::uint32_t>(std::stoul(name.substr(1))));
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Script parse() {
    Script script;
    while (!lex_.at_end()) {
      script.statements.push_back(statement());
      lex_.expect_symbol(";");
    }
    return script;
  }

 private:
  struct RingScope {
    std::string name;
    std::set<std::string> vars;
  };

  [[noreturn]] void error(int line, int column, const std::string& message) const {
    throw ParseError(message, line, column);
  }

  const RingScope& active_ring(const Token& at) const {
    if (rings_.empty()) error(at.line, at.column, "no ring declared before this statement");
    return rings_.back();
  }

  ScriptStatement statement() {
    const Token head = lex_.expect_identifier();
    ScriptStatement st;
    st.line = head.line;
    st.column = head.column;
    if (head.text == "ring") {
      st.kind = ScriptStatement::Kind::Ring;
      ring_decl(st);
    } else if (head.text == "ideal") {
      st.kind = ScriptStatement::Kind::Ideal;
      const Token name = lex_.expect_identifier();
      const RingScope& ring = active_ring(head);
      if (ring.vars.count(name.text) || functions().count(name.text)) {
        error(name.line, name.column, "'" + name.text + "' is a variable or function name");
      }
      lex_.expect_symbol("=");
      st.name = name.text;
      auto [e, type] = expr();
      if (type != Type::Ideal) error(e.line, e.column, std::string("ideal expected, found ") + type_name(type));
      st.expr = std::move(e);
      ideals_[st.name] = rings_.size() - 1;
    } else if (head.text == "print") {
      st.kind = ScriptStatement::Kind::Print;
      st.expr = expr().first;
    } else if (head.text == "check") {
      st.kind = ScriptStatement::Kind::Check;
      st.expr = expr().first;
      lex_.expect_symbol("==");
      st.rhs = expr().first;
    } else {
      lex_.fail(head, "'ring', 'ideal', 'print' or 'check'");
    }
    return st;
  }

  void ring_decl(ScriptStatement& st) {
    st.name = lex_.expect_identifier().text;
    lex_.expect_symbol("=");
    const Token field = lex_.expect_identifier();
    if (field.text != "Q") {
      bool digits = field.text.size() > 1 && field.text[0] == 'F' &&
                    field.text.find_first_not_of("0123456789", 1) == std::string::npos;
      if (!digits) lex_.fail(field, "field 'Q' or 'F<prime>'");
      if (field.text.size() > 11 || !is_prime(std::stoull(field.text.substr(1))) ||
          std::stoull(field.text.substr(1)) >= (1ull << 31)) {
        error(field.line, field.column, "characteristic " + field.text.substr(1) + " is not a supported prime");
      }
    }
    st.field = field.text;
    lex_.expect_symbol("[");
    RingScope scope{st.name, {}};
    do {
      const Token v = lex_.expect_identifier();
      if (!scope.vars.insert(v.text).second) error(v.line, v.column, "duplicate variable '" + v.text + "'");
      st.vars.push_back(v.text);
    } while (lex_.accept_symbol(","));
    lex_.expect_symbol("]");
    st.order = "degrevlex";
    if (lex_.peek().kind == Token::Kind::Identifier) {
      const Token o = lex_.next();
      if (o.text == "elim") {
        lex_.expect_symbol("(");
        const Token k = lex_.expect_integer();
        lex_.expect_symbol(")");
        if (std::stoul(k.text) > st.vars.size()) error(k.line, k.column, "elimination block larger than the ring");
        st.order = "elim(" + k.text + ")";
      } else if (o.text == "degrevlex" || o.text == "lex") {
        st.order = o.text;
      } else {
        lex_.fail(o, "monomial order 'degrevlex', 'lex' or 'elim(k)'");
      }
    }
    rings_.push_back(std::move(scope));
    if (lex_.accept_symbol("/")) {
      const Token open = lex_.peek();
      lex_.expect_symbol("(");
      st.defining = poly_list(open);
    }
    // Ideals of earlier rings stay bound but cannot be mixed with this one.
  }

  std::vector<PolyExpr> poly_list(const Token& open) {
    std::vector<PolyExpr> out;
    if (lex_.accept_symbol(")")) return out;
    do {
      PolyExpr p = parse_poly_expr(lex_);
      check_vars(p, active_ring(open));
      out.push_back(std::move(p));
    } while (lex_.accept_symbol(","));
    lex_.expect_symbol(")");
    return out;
  }

  void check_vars(const PolyExpr& p, const RingScope& ring) const {
    if (p.kind == PolyExpr::Kind::Variable && !ring.vars.count(p.text)) {
      std::string what = ideals_.count(p.text) ? "ideal '" + p.text + "' used inside a polynomial"
                                               : "unbound name '" + p.text + "'";
      error(p.line, p.column, what);
    }
    for (const auto& a : p.args) check_vars(a, ring);
  }

  std::pair<ScriptExpr, Type> expr() {
    const Token t = lex_.peek();
    ScriptExpr e;
    e.line = t.line;
    e.column = t.column;
    if (t.kind == Token::Kind::Symbol && t.text == "(") {
      lex_.next();
      e.kind = ScriptExpr::Kind::IdealLiteral;
      e.polys = poly_list(t);
      return {std::move(e), Type::Ideal};
    }
    if (t.kind == Token::Kind::Identifier) {
      const Token& after = lex_.peek(1);
      if (after.kind == Token::Kind::Symbol && after.text == "(" && functions().count(t.text)) return call();
      if (t.text == "true" || t.text == "false") {
        lex_.next();
        e.kind = ScriptExpr::Kind::Boolean;
        e.integer = t.text == "true";
        return {std::move(e), Type::Bool};
      }
      if (t.text == "none") {
        lex_.next();
        e.kind = ScriptExpr::Kind::None;
        return {std::move(e), Type::None};
      }
      if (auto it = ideals_.find(t.text); it != ideals_.end()) {
        lex_.next();
        if (it->second != rings_.size() - 1) {
          error(t.line, t.column, "ideal '" + t.text + "' belongs to ring '" + rings_[it->second].name +
                                      "', but the active ring is '" + rings_.back().name + "'");
        }
        e.kind = ScriptExpr::Kind::Name;
        e.name = t.text;
        return {std::move(e), Type::Ideal};
      }
    }
    if (t.kind == Token::Kind::Integer) {
      const Token& after = lex_.peek(1);
      bool alone = after.kind == Token::Kind::End ||
                   (after.kind == Token::Kind::Symbol && (after.text == "," || after.text == ")" ||
                                                          after.text == ";" || after.text == "=="));
      if (alone) {
        lex_.next();
        e.kind = ScriptExpr::Kind::Integer;
        e.integer = std::stol(t.text);
        return {std::move(e), Type::Int};
      }
    }
    if (t.kind == Token::Kind::Identifier && !rings_.empty() && !rings_.back().vars.count(t.text)) {
      const Token& after = lex_.peek(1);
      if (after.kind == Token::Kind::Symbol && after.text == "(") {
        error(t.line, t.column, "unknown function '" + t.text + "'");
      }
    }
    e.kind = ScriptExpr::Kind::Poly;
    e.poly = parse_poly_expr(lex_);
    check_vars(e.poly, active_ring(t));
    return {std::move(e), Type::Poly};
  }

  std::pair<ScriptExpr, Type> call() {
    const Token name = lex_.next();
    const FunctionSpec& spec = functions().at(name.text);
    ScriptExpr e;
    e.kind = ScriptExpr::Kind::Call;
    e.name = name.text;
    e.line = name.line;
    e.column = name.column;
    lex_.expect_symbol("(");
    std::vector<Type> types;
    if (!lex_.accept_symbol(")")) {
      do {
        auto [arg, type] = expr();
        e.args.push_back(std::move(arg));
        types.push_back(type);
      } while (lex_.accept_symbol(","));
      lex_.expect_symbol(")");
    }
    if (e.args.size() < spec.required || e.args.size() > spec.args.size()) {
      std::string count = std::to_string(spec.required);
      if (spec.args.size() != spec.required) count += " to " + std::to_string(spec.args.size());
      error(name.line, name.column, "'" + name.text + "' takes " + count + " argument(s), got " +
                                        std::to_string(e.args.size()));
    }
    for (std::size_t i = 0; i < types.size(); ++i) {
      Type want = spec.args[i], got = types[i];
      bool ok = want == got || (want == Type::Poly && got == Type::Int);
      if (!ok) {
        error(e.args[i].line, e.args[i].column, "argument " + std::to_string(i + 1) + " of '" + name.text +
                                                    "' must be " + type_name(want) + ", found " + type_name(got));
      }
    }
    if ((spec.result == Type::Ideal || spec.args.empty()) && rings_.empty()) {
      error(name.line, name.column, "no ring declared before this statement");
    }
    return {std::move(e), spec.result};
  }

  Lexer lex_;
  std::vector<RingScope> rings_;
  std::map<std::string, std::size_t> ideals_;  // name -> ring index
};

std::string join_polys(const std::vector<PolyExpr>& polys) {
  std::string s = "(";
  for (std::size_t i = 0; i < polys.size(); ++i) s += (i ? ", " : "") + format_poly_expr(polys[i]);
  return s + ")";
}

std::string format_expr(const ScriptExpr& e) {
  switch (e.kind) {
    case ScriptExpr::Kind::Integer: return std::to_string(e.integer);
    case ScriptExpr::Kind::Boolean: return e.integer ? "true" : "false";
    case ScriptExpr::Kind::None: return "none";
    case ScriptExpr::Kind::Name: return e.name;
    case ScriptExpr::Kind::Poly: return format_poly_expr(e.poly);
    case ScriptExpr::Kind::IdealLiteral: return join_polys(e.polys);
    case ScriptExpr::Kind::Call: {
      std::string s = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? ", " : "") + format_expr(e.args[i]);
      return s + ")";
    }
  }
  return {};
}

// --- evaluation ---------------------------------------------------------------

struct Value {
  enum class Kind { Int, Bool, None, Ideal, Poly, Text } kind = Kind::None;
  long integer = 0;
  IdealHandle ideal;
  Polynomial poly;
  std::string text;

  static Value of_int(long v) { return Value{Kind::Int, v, {}, {}, {}}; }
  static Value of_bool(bool v) { return Value{Kind::Bool, v, {}, {}, {}}; }
  static Value of_ideal(IdealHandle i) { return Value{Kind::Ideal, 0, std::move(i), {}, {}}; }
  static Value of_optional(std::optional<int> v) { return v ? of_int(*v) : Value{}; }

  std::string to_string() const {
    switch (kind) {
      case Kind::Int: return std::to_string(integer);
      case Kind::Bool: return integer ? "true" : "false";
      case Kind::None: return "none";
      case Kind::Ideal: return ideal.to_string();
      case Kind::Poly: return poly.to_string();
      case Kind::Text: return text;
    }
    return {};
  }
};

bool values_equal(const Value& a, const Value& b) {
  if (a.kind == Value::Kind::Ideal && b.kind == Value::Kind::Ideal) return ideal_equal(a.ideal, b.ideal);
  if (a.kind == Value::Kind::Poly || b.kind == Value::Kind::Poly) {
    auto as_poly = [](const Value& v, const PolyRingPtr& ring) {
      return v.kind == Value::Kind::Poly ? v.poly : Polynomial::from_int(ring, v.integer);
    };
    if ((a.kind != Value::Kind::Poly && a.kind != Value::Kind::Int) ||
        (b.kind != Value::Kind::Poly && b.kind != Value::Kind::Int)) {
      return false;
    }
    const PolyRingPtr& ring = a.kind == Value::Kind::Poly ? a.poly.ring() : b.poly.ring();
    return as_poly(a, ring) == as_poly(b, ring);
  }
  return a.kind == b.kind && a.integer == b.integer && a.text == b.text;
}

RingPtr make_ring(const ScriptStatement& st) {
  auto plain = RingPresentation::make(field_from_name(st.field), st.vars, *order_from_name(st.order));
  std::vector<Polynomial> defining;
  for (const auto& p : st.defining) defining.push_back(evaluate_poly_expr(p, plain->ambient()));
  return defining.empty() ? plain : RingPresentation::quotient(plain->ambient(), std::move(defining));
}

class Runner {
 public:
  explicit Runner(std::ostream& out) : out_(out) {}

  ScriptResult run(const Script& script) {
    ScriptResult result;
    for (const auto& st : script.statements) {
      switch (st.kind) {
        case ScriptStatement::Kind::Ring: declare_ring(st); break;
        case ScriptStatement::Kind::Ideal: ideals_[st.name] = eval(st.expr).ideal; break;
        case ScriptStatement::Kind::Print: out_ << eval(st.expr).to_string() << '\n'; break;
        case ScriptStatement::Kind::Check: {
          Value lhs = eval(st.expr), rhs = eval(st.rhs);
          if (values_equal(lhs, rhs)) {
            ++result.checks_passed;
          } else {
            ++result.checks_failed;
            out_ << "check failed at " << st.line << ":" << st.column << ": " << format_expr(st.expr) << " is "
                 << lhs.to_string() << ", expected " << rhs.to_string() << '\n';
          }
          break;
        }
      }
    }
    return result;
  }

 private:
  void declare_ring(const ScriptStatement& st) { ring_ = make_ring(st); }

  Value eval(const ScriptExpr& e) {
    switch (e.kind) {
      case ScriptExpr::Kind::Integer: return Value::of_int(e.integer);
      case ScriptExpr::Kind::Boolean: return Value::of_bool(e.integer != 0);
      case ScriptExpr::Kind::None: return Value{};
      case ScriptExpr::Kind::Name: return Value::of_ideal(ideals_.at(e.name));
      case ScriptExpr::Kind::Poly: {
        Value v;
        v.kind = Value::Kind::Poly;
        v.poly = evaluate_poly_expr(e.poly, ring_->ambient());
        return v;
      }
      case ScriptExpr::Kind::IdealLiteral: {
        std::vector<Polynomial> gens;
        for (const auto& p : e.polys) gens.push_back(evaluate_poly_expr(p, ring_->ambient()));
        return Value::of_ideal(IdealHandle(ring_, std::move(gens)));
      }
      case ScriptExpr::Kind::Call: return call(e);
    }
    return {};
  }

  Value call(const ScriptExpr& e) {
    std::vector<Value> a;
    for (const auto& arg : e.args) a.push_back(eval(arg));
    const std::string& f = e.name;
    auto I = [&](std::size_t i) -> const IdealHandle& { return a[i].ideal; };
    if (f == "colon") return Value::of_ideal(colon(I(0), I(1)));
    if (f == "sum") return Value::of_ideal(sum(I(0), I(1)));
    if (f == "product") return Value::of_ideal(product(I(0), I(1)));
    if (f == "power") {
      if (a[1].integer < 1) throw PreconditionError("power exponent must be positive");
      return Value::of_ideal(power(I(0), static_cast<unsigned>(a[1].integer)));
    }
    if (f == "intersect") return Value::of_ideal(intersect(I(0), I(1)));
    if (f == "maxideal") return Value::of_ideal(IdealHandle::maximal(ring_));
    if (f == "length") return Value::of_int(length(I(0)));
    if (f == "socle") return Value::of_int(socle(I(0)).length);
    if (f == "mu") return Value::of_int(min_generators(I(0)));
    if (f == "mult") return Value::of_int(multiplicity(I(0)));
    if (f == "defect") return Value::of_int(buchsbaum_defect(I(0)));
    if (f == "dim") return Value::of_int(krull_dimension(I(0)));
    if (f == "type") return Value::of_int(cm_type(I(0)));
    if (f == "rellength") return Value::of_int(relative_length(I(0), I(1)));
    if (f == "stability") {
      int kmax = a.size() > 2 ? static_cast<int>(a[2].integer) : 4;
      return Value::of_optional(stability_index(I(0), I(1), kmax));
    }
    if (f == "member") {
      Polynomial p = a[0].kind == Value::Kind::Poly ? a[0].poly : Polynomial::from_int(ring_->ambient(), a[0].integer);
      return Value::of_bool(is_member(p, I(1)));
    }
    if (f == "equal") return Value::of_bool(ideal_equal(I(0), I(1)));
    if (f == "contains") return Value::of_bool(I(0).contains(I(1)));
    if (f == "gb") {
      Value v;
      v.kind = Value::Kind::Text;
      v.text = I(0).basis().serialize();
      while (!v.text.empty() && v.text.back() == '\n') v.text.pop_back();
      return v;
    }
    if (f == "depth") return Value::of_optional(depth_probe(ring_, 4, 7).depth);
    throw PreconditionError("unknown function '" + f + "'");
  }

  std::ostream& out_;
  RingPtr ring_;
  std::map<std::string, IdealHandle> ideals_;
};

}  // namespace

Script parse_script(std::string_view text) { return Parser(text).parse(); }

std::string serialize_script(const Script& script) {
  std::ostringstream os;
  for (const auto& st : script.statements) {
    switch (st.kind) {
      case ScriptStatement::Kind::Ring: {
        os << "ring " << st.name << " = " << st.field << "[";
        for (std::size_t i = 0; i < st.vars.size(); ++i) os << (i ? ", " : "") << st.vars[i];
        os << "] " << st.order;
        if (!st.defining.empty()) os << " / " << join_polys(st.defining);
        break;
      }
      case ScriptStatement::Kind::Ideal: os << "ideal " << st.name << " = " << format_expr(st.expr); break;
      case ScriptStatement::Kind::Print: os << "print " << format_expr(st.expr); break;
      case ScriptStatement::Kind::Check:
        os << "check " << format_expr(st.expr) << " == " << format_expr(st.rhs);
        break;
    }
    os << ";\n";
  }
  return os.str();
}

RingPtr parse_ring_spec(std::string_view spec) {
  const std::string prefix = "ring R = ";
  Script script;
  try {
    script = parse_script(prefix + std::string(spec) + ";");
  } catch (const ParseError& e) {
    std::string msg = e.what();
    msg = msg.substr(msg.find(": ") + 2);
    int column = e.line() == 1 ? e.column() - static_cast<int>(prefix.size()) : e.column();
    throw ParseError("in ring '" + std::string(spec) + "': " + msg, e.line(), column);
  }
  if (script.statements.size() != 1) throw ParseError("ring specification must be a single ring", 1, 1);
  return make_ring(script.statements.front());
}

ScriptResult run_script(const Script& script, std::ostream& out) { return Runner(out).run(script); }

std::vector<std::string> script_functions() {
  std::vector<std::string> out;
  for (const auto& [name, _] : functions()) out.push_back(name);
  return out;
}

}  // namespace socle
