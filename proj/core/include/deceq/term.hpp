#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "deceq/decoration.hpp"
#include "deceq/error.hpp"
#include "deceq/types.hpp"

namespace deceq {

// What an operation symbol means in a finite model. Symbols introduced by the
// bundled theories carry their meaning so that models can interpret them;
// `Opaque` symbols have no built-in meaning.
enum class PrimKind {
  Opaque,
  Lookup,   // read location `subject`
  Update,   // overwrite location `subject`
  Tag,      // raise exception `subject` with the argument as parameter
  Untag,    // catch exception `subject`, yielding its parameter
  Add,
  Sub,
  Mul,      // modular arithmetic on the carrier of `subject` (a base type)
  Eq,
  Le,       // comparisons on the carrier of `subject`, into 1+1
  Not,
  And,      // on 1+1, with inl = true
  Diverge,  // raises the reserved fuel-exhaustion outcome
};

std::string_view to_string(PrimKind k);
std::optional<PrimKind> prim_kind_from_string(std::string_view s);

struct Primitive {
  PrimKind kind = PrimKind::Opaque;
  std::string subject;
  friend bool operator==(const Primitive&, const Primitive&) = default;
};

struct OpSymbol {
  std::string name;
  ObjType source;
  ObjType target;
  Decorations decoration;
  Primitive prim;
  friend bool operator==(const OpSymbol&, const OpSymbol&) = default;
};

// Typed, decorated operation symbols with unique names.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OpSymbol> ops);

  void add(OpSymbol op);  // throws NameClash on duplicate names
  const OpSymbol* find(std::string_view name) const;
  const std::vector<OpSymbol>& ops() const { return ops_; }
  bool empty() const { return ops_.empty(); }

 private:
  std::vector<OpSymbol> ops_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

enum class TermKind {
  Id, Comp, Op, Proj1, Proj2, Inj1, Inj2, PairSeq, CaseSeq, Bang, Absurd, Const
};

// Result of syntax-directed typing. Computed once when a node is built, so
// every term carries its own report.
struct TypedReport {
  bool ok = false;
  ObjType source;
  ObjType target;
  std::optional<ErrorKind> error;
  std::string detail;
};

// An immutable decorated term. Nodes are shared, so terms may be DAGs (loop
// unrolling relies on this); all queries are O(1) on the root.
class Term {
 public:
  Term() : Term(id(ObjType::unit())) {}  // id(1)
  static Term id(ObjType at);
  static Term comp(Term outer, Term inner);
  static Term op(OpSymbol symbol);
  static Term proj1(ObjType of_prod);
  static Term proj2(ObjType of_prod);
  static Term inj1(ObjType into_sum);
  static Term inj2(ObjType into_sum);
  static Term pair(Term first, Term second);
  static Term cases(Term on_left, Term on_right);
  static Term bang(ObjType from);
  static Term absurd(ObjType to);
  static Term constant(ObjType base, std::string atom);

  TermKind kind() const { return node_->kind; }
  // Type argument of Id/Proj/Inj/Bang/Absurd/Const.
  const ObjType& type_arg() const { return node_->type; }
  const OpSymbol& symbol() const { return *node_->symbol; }
  const std::string& atom() const { return node_->atom; }
  // Comp: outer/inner; PairSeq: first/second; CaseSeq: on_left/on_right.
  const Term& left() const { return *node_->a; }
  const Term& right() const { return *node_->b; }

  const TypedReport& typing() const { return node_->typing; }
  bool well_typed() const { return node_->typing.ok; }
  const ObjType& source() const;  // throws the typing error when ill-typed
  const ObjType& target() const;
  // Max over children; structural nodes are pure. Meaningless when ill-typed.
  const Decorations& decoration() const { return node_->decoration; }

  bool same_node(const Term& o) const { return node_ == o.node_; }
  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

  // Canonical prefix text, e.g. comp(op(update_x), op(lookup_x)).
  std::string str() const;

 private:
  struct Node {
    TermKind kind;
    ObjType type;
    std::shared_ptr<const OpSymbol> symbol;
    std::string atom;
    std::shared_ptr<const Term> a, b;
    TypedReport typing;
    Decorations decoration;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(Node n);

  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Term& t);

// Checked combinators.
Term pair_seq(Term first, Term second);     // throws SourceMismatch
Term seq_then(Term effectful, Term rest);   // Proj2 . PairSeq(effectful, rest)
Term copy_of(ObjType t);                    // PairSeq(Id t, Id t)
Term swap_of(ObjType a, ObjType b);         // a x b -> b x a
Term compose(std::initializer_list<Term> outermost_first);

// Typechecks `term` and verifies every symbol it uses is declared (with the
// same type and decoration) in `sig`. Never throws.
TypedReport typecheck(const Term& term, const Signature& sig);

// Throws the typing error for ill-typed terms.
Decorations infer_decoration(const Term& term);

// Normal form used for equation matching: Comp chains flattened to a right
// nested spine with identities removed, recursively. Nothing else.
Term canonical(const Term& t);
// Factors of the canonical Comp spine, outermost first; empty for an identity.
std::vector<Term> comp_chain(const Term& t);
// Rebuilds a chain; `source` is needed when the chain is empty.
Term from_chain(const std::vector<Term>& outermost_first, const ObjType& source);

enum class Mode { Weak = 0, Strong = 1 };
std::string_view to_string(Mode m);

struct Equation {
  Term lhs;
  Term rhs;
  Mode mode = Mode::Strong;
  std::string label;
};

// Parallel check on already-typed sides.
bool parallel(const Equation& eq);
// Same sides up to canonical form and the same mode.
bool same_equation(const Equation& a, const Equation& b);

}  // namespace deceq
