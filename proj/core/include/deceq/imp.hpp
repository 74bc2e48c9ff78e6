#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deceq/model.hpp"
#include "deceq/term.hpp"
#include "deceq/theory.hpp"

// IMP with exceptions. Every command elaborates to a decorated term 1 -> 1
// over the model's locations and exceptions.
//
//   cmd  ::= "skip" | loc ":=" aexp | cmd ";" cmd
//          | "if" bexp "then" "{" cmd "}" "else" "{" cmd "}"
//          | "while" bexp "do" "{" cmd "}"
//          | "throw" name "(" aexp ")"
//          | "try" "{" cmd "}" ("catch" name "(" loc ")" "{" cmd "}")+
//   aexp ::= literal | loc | aexp ("+" | "-" | "*") aexp | "(" aexp ")"
//   bexp ::= "true" | "false" | aexp ("=" | "<=") aexp | "not" bexp
//          | bexp "and" bexp | "(" bexp ")"
//
// Arithmetic is modular: values of a base type are its carrier atoms, and
// + - * act on atom indices modulo the carrier size. Literals must be atoms
// of the type the context expects.
namespace deceq::imp {

struct AExp;
struct BExp;
struct Cmd;
using AExpPtr = std::shared_ptr<const AExp>;
using BExpPtr = std::shared_ptr<const BExp>;
using CmdPtr = std::shared_ptr<const Cmd>;

struct AExp {
  enum class Kind { Lit, Read, Add, Sub, Mul };
  Kind kind = Kind::Lit;
  std::string name;  // literal atom or location
  AExpPtr lhs, rhs;

  static AExpPtr lit(std::string atom);
  static AExpPtr read(std::string loc);
  static AExpPtr bin(Kind k, AExpPtr a, AExpPtr b);
};

struct BExp {
  enum class Kind { True, False, Eq, Le, Not, And };
  Kind kind = Kind::True;
  AExpPtr x, y;  // Eq, Le
  BExpPtr p, q;  // Not (p), And (p, q)

  static BExpPtr constant(bool b);
  static BExpPtr cmp(Kind k, AExpPtr x, AExpPtr y);
  static BExpPtr negate(BExpPtr p);
  static BExpPtr conj(BExpPtr p, BExpPtr q);
};

// While catching exception `exception`, the parameter is stored in location
// `binder` for the duration of the handler; the location gets its previous
// value back when the handler finishes normally.
struct Handler {
  std::string exception;
  std::string binder;
  CmdPtr body;
};

struct Cmd {
  enum class Kind { Skip, Assign, Seq, If, While, Throw, TryCatch };
  Kind kind = Kind::Skip;
  std::string name;  // Assign: location; Throw: exception
  AExpPtr value;     // Assign, Throw
  BExpPtr cond;      // If, While
  CmdPtr first, second;  // Seq: both; If: then/else; While, TryCatch: first = body
  std::vector<Handler> handlers;

  static CmdPtr skip();
  static CmdPtr assign(std::string loc, AExpPtr value);
  static CmdPtr seq(CmdPtr a, CmdPtr b);
  static CmdPtr if_(BExpPtr cond, CmdPtr then_c, CmdPtr else_c);
  static CmdPtr while_(BExpPtr cond, CmdPtr body);
  static CmdPtr throw_(std::string exc, AExpPtr value);
  static CmdPtr try_(CmdPtr body, std::vector<Handler> handlers);
};

bool operator==(const AExp& a, const AExp& b);
bool operator==(const BExp& a, const BExp& b);
bool operator==(const Cmd& a, const Cmd& b);

// Throws SyntaxError ("line:col: ...").
CmdPtr parse(std::string_view source);
CmdPtr load(const std::string& path);
// Canonical text; reparses to an identical AST for right-nested sequences
// (which is all the parser produces).
std::string print(const Cmd& c);
std::string print(const AExp& a);
std::string print(const BExp& b);

// The model's theory (states, exceptions or both) extended with the pure
// arithmetic and boolean operations and the fuel-exhaustion operation.
// Its flavor is always Combined.
Theory imp_theory(const FiniteModel& model);

// Elaborates to a term 1 -> 1. While loops are unrolled `fuel` times; a run
// needing more iterations raises the reserved fuel-exhaustion outcome.
// Throws UndeclaredLocation, UndeclaredException, TypeMismatch.
Term elaborate(const Cmd& program, const Theory& theory, const FiniteModel& model, int fuel = 64);

enum class Verdict { StrongEq, WeakEq, NotEq, FuelExhausted };
std::string_view to_string(Verdict v);

struct EquivResult {
  Verdict verdict = Verdict::StrongEq;
  std::optional<State> state;  // NotEq and FuelExhausted: the initial state
  std::string str(const FiniteModel& model) const;  // e.g. "NotEq x=0,y=1"
};

// Runs both programs from every initial state (enumeration order). The first
// state where a run exhausts its fuel gives FuelExhausted, the first state
// where the final results differ gives NotEq; otherwise StrongEq when final
// states agree everywhere, WeakEq when they do not.
EquivResult check_equiv(const Cmd& a, const Cmd& b, const FiniteModel& model, int fuel = 64);

}  // namespace deceq::imp
