#include "deceq/term.hpp"

#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace deceq {

namespace {

const char* const kPrimNames[] = {"opaque", "lookup", "update", "tag", "untag", "add", "sub",
                                  "mul",    "eq",     "le",     "not", "and",   "diverge"};

TypedReport ok_report(ObjType s, ObjType t) {
  return TypedReport{true, std::move(s), std::move(t), std::nullopt, {}};
}

TypedReport bad_report(ErrorKind k, std::string detail) {
  return TypedReport{false, ObjType::unit(), ObjType::unit(), k, std::move(detail)};
}

}  // namespace

std::string_view to_string(PrimKind k) { return kPrimNames[static_cast<int>(k)]; }

std::optional<PrimKind> prim_kind_from_string(std::string_view s) {
  for (int i = 0; i < static_cast<int>(std::size(kPrimNames)); ++i)
    if (s == kPrimNames[i]) return static_cast<PrimKind>(i);
  return std::nullopt;
}

std::string Decorations::str() const {
  return "(" + std::to_string(level(state)) + "," + std::to_string(level(exc)) + ")";
}

std::string_view to_string(Mode m) { return m == Mode::Strong ? "strong" : "weak"; }

// -- Signature ---------------------------------------------------------------

Signature::Signature(std::vector<OpSymbol> ops) {
  for (auto& op : ops) add(std::move(op));
}

void Signature::add(OpSymbol op) {
  if (index_.count(op.name)) throw Error(ErrorKind::NameClash, "duplicate symbol " + op.name);
  index_.emplace(op.name, ops_.size());
  ops_.push_back(std::move(op));
}

const OpSymbol* Signature::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &ops_[it->second];
}

// -- Term construction -------------------------------------------------------

Term Term::make(Node n) { return Term(std::make_shared<const Node>(std::move(n))); }

Term Term::id(ObjType at) {
  Node n{TermKind::Id, at, nullptr, {}, nullptr, nullptr, ok_report(at, at), {}};
  return make(std::move(n));
}

Term Term::comp(Term outer, Term inner) {
  TypedReport r;
  const auto& o = outer.typing();
  const auto& i = inner.typing();
  if (!i.ok) r = i;
  else if (!o.ok) r = o;
  else if (i.target != o.source)
    r = bad_report(ErrorKind::SourceTargetMismatch,
                   "comp: inner target " + i.target.str() + " != outer source " + o.source.str());
  else r = ok_report(i.source, o.target);
  Decorations d = outer.decoration().join(inner.decoration());
  Node n{TermKind::Comp, {}, nullptr, {}, std::make_shared<const Term>(std::move(outer)),
         std::make_shared<const Term>(std::move(inner)), std::move(r), d};
  return make(std::move(n));
}

Term Term::op(OpSymbol symbol) {
  auto r = ok_report(symbol.source, symbol.target);
  Decorations d = symbol.decoration;
  Node n{TermKind::Op, {}, std::make_shared<const OpSymbol>(std::move(symbol)), {}, nullptr, nullptr,
         std::move(r), d};
  return make(std::move(n));
}

namespace {

TypedReport projection_typing(const ObjType& p, bool first) {
  if (!p.is(ObjType::Kind::Prod))
    return bad_report(ErrorKind::IllFormedPair, "projection from non-product " + p.str());
  return ok_report(p, first ? p.left() : p.right());
}

TypedReport injection_typing(const ObjType& s, bool first) {
  if (!s.is(ObjType::Kind::Sum))
    return bad_report(ErrorKind::IllFormedPair, "injection into non-sum " + s.str());
  return ok_report(first ? s.left() : s.right(), s);
}

}  // namespace

Term Term::proj1(ObjType p) {
  auto r = projection_typing(p, true);
  return make(Node{TermKind::Proj1, std::move(p), nullptr, {}, nullptr, nullptr, std::move(r), {}});
}

Term Term::proj2(ObjType p) {
  auto r = projection_typing(p, false);
  return make(Node{TermKind::Proj2, std::move(p), nullptr, {}, nullptr, nullptr, std::move(r), {}});
}

Term Term::inj1(ObjType s) {
  auto r = injection_typing(s, true);
  return make(Node{TermKind::Inj1, std::move(s), nullptr, {}, nullptr, nullptr, std::move(r), {}});
}

Term Term::inj2(ObjType s) {
  auto r = injection_typing(s, false);
  return make(Node{TermKind::Inj2, std::move(s), nullptr, {}, nullptr, nullptr, std::move(r), {}});
}

Term Term::pair(Term first, Term second) {
  TypedReport r;
  const auto& a = first.typing();
  const auto& b = second.typing();
  if (!a.ok) r = a;
  else if (!b.ok) r = b;
  else if (a.source != b.source)
    r = bad_report(ErrorKind::IllFormedPair,
                   "pair: sources differ (" + a.source.str() + " vs " + b.source.str() + ")");
  else r = ok_report(a.source, ObjType::prod(a.target, b.target));
  Decorations d = first.decoration().join(second.decoration());
  return make(Node{TermKind::PairSeq, {}, nullptr, {}, std::make_shared<const Term>(std::move(first)),
                   std::make_shared<const Term>(std::move(second)), std::move(r), d});
}

Term Term::cases(Term on_left, Term on_right) {
  TypedReport r;
  const auto& a = on_left.typing();
  const auto& b = on_right.typing();
  if (!a.ok) r = a;
  else if (!b.ok) r = b;
  else if (a.target != b.target)
    r = bad_report(ErrorKind::IllFormedPair,
                   "case: targets differ (" + a.target.str() + " vs " + b.target.str() + ")");
  else r = ok_report(ObjType::sum(a.source, b.source), a.target);
  Decorations d = on_left.decoration().join(on_right.decoration());
  return make(Node{TermKind::CaseSeq, {}, nullptr, {}, std::make_shared<const Term>(std::move(on_left)),
                   std::make_shared<const Term>(std::move(on_right)), std::move(r), d});
}

Term Term::bang(ObjType from) {
  auto r = ok_report(from, ObjType::unit());
  return make(Node{TermKind::Bang, std::move(from), nullptr, {}, nullptr, nullptr, std::move(r), {}});
}

Term Term::absurd(ObjType to) {
  auto r = ok_report(ObjType::empty(), to);
  return make(Node{TermKind::Absurd, std::move(to), nullptr, {}, nullptr, nullptr, std::move(r), {}});
}

Term Term::constant(ObjType base, std::string atom) {
  TypedReport r = base.is(ObjType::Kind::Base)
                      ? ok_report(ObjType::unit(), base)
                      : bad_report(ErrorKind::UnknownBaseType, "const at non-base type " + base.str());
  return make(Node{TermKind::Const, std::move(base), nullptr, std::move(atom), nullptr, nullptr,
                   std::move(r), {}});
}

const ObjType& Term::source() const {
  if (!node_->typing.ok) throw Error(*node_->typing.error, node_->typing.detail);
  return node_->typing.source;
}

const ObjType& Term::target() const {
  if (!node_->typing.ok) throw Error(*node_->typing.error, node_->typing.detail);
  return node_->typing.target;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case TermKind::Comp:
    case TermKind::PairSeq:
    case TermKind::CaseSeq: return *x.a == *y.a && *x.b == *y.b;
    case TermKind::Op: return *x.symbol == *y.symbol;
    case TermKind::Const: return x.type == y.type && x.atom == y.atom;
    default: return x.type == y.type;
  }
}

std::string Term::str() const {
  std::ostringstream os;
  std::function<void(const Term&)> go = [&](const Term& t) {
    switch (t.kind()) {
      case TermKind::Id: os << "id(" << t.type_arg() << ")"; break;
      case TermKind::Comp:
        os << "comp(";
        go(t.left());
        os << ", ";
        go(t.right());
        os << ")";
        break;
      case TermKind::Op: os << "op(" << t.symbol().name << ")"; break;
      case TermKind::Proj1: os << "proj1(" << t.type_arg() << ")"; break;
      case TermKind::Proj2: os << "proj2(" << t.type_arg() << ")"; break;
      case TermKind::Inj1: os << "inj1(" << t.type_arg() << ")"; break;
      case TermKind::Inj2: os << "inj2(" << t.type_arg() << ")"; break;
      case TermKind::PairSeq:
      case TermKind::CaseSeq:
        os << (t.kind() == TermKind::PairSeq ? "pair(" : "case(");
        go(t.left());
        os << ", ";
        go(t.right());
        os << ")";
        break;
      case TermKind::Bang: os << "bang(" << t.type_arg() << ")"; break;
      case TermKind::Absurd: os << "absurd(" << t.type_arg() << ")"; break;
      case TermKind::Const: os << "const(" << t.type_arg() << ", " << t.atom() << ")"; break;
    }
  };
  go(*this);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << t.str(); }

// -- Checked combinators -----------------------------------------------------

Term pair_seq(Term first, Term second) {
  if (first.source() != second.source())
    throw Error(ErrorKind::SourceMismatch, "pair_seq: " + first.source().str() + " vs " +
                                               second.source().str());
  return Term::pair(std::move(first), std::move(second));
}

Term seq_then(Term effectful, Term rest) {
  if (effectful.target() != ObjType::unit())
    throw Error(ErrorKind::SourceTargetMismatch,
                "seq_then: effectful part must target unit, got " + effectful.target().str());
  ObjType prod = ObjType::prod(ObjType::unit(), rest.target());
  return Term::comp(Term::proj2(prod), pair_seq(std::move(effectful), std::move(rest)));
}

Term copy_of(ObjType t) { return Term::pair(Term::id(t), Term::id(t)); }

Term swap_of(ObjType a, ObjType b) {
  ObjType p = ObjType::prod(a, b);
  return Term::pair(Term::proj2(p), Term::proj1(p));
}

Term compose(std::initializer_list<Term> outermost_first) {
  if (outermost_first.size() == 0) throw Error(ErrorKind::InvalidArgument, "compose: empty chain");
  std::vector<Term> v(outermost_first);
  Term acc = v.back();
  for (std::size_t i = v.size() - 1; i-- > 0;) acc = Term::comp(v[i], acc);
  return acc;
}

// -- Typing / decoration -----------------------------------------------------

TypedReport typecheck(const Term& term, const Signature& sig) {
  std::unordered_set<const void*> seen;
  std::optional<TypedReport> unknown;
  std::function<void(const Term&)> visit = [&](const Term& t) {
    if (unknown) return;
    if (!seen.insert(&t.typing()).second) return;
    switch (t.kind()) {
      case TermKind::Op: {
        const OpSymbol* decl = sig.find(t.symbol().name);
        if (!decl)
          unknown = bad_report(ErrorKind::UnknownSymbol, "undeclared symbol " + t.symbol().name);
        else if (!(*decl == t.symbol()))
          unknown = bad_report(ErrorKind::UnknownSymbol,
                               "symbol " + t.symbol().name + " does not match its declaration");
        break;
      }
      case TermKind::Comp:
      case TermKind::PairSeq:
      case TermKind::CaseSeq:
        visit(t.left());
        visit(t.right());
        break;
      default: break;
    }
  };
  visit(term);
  if (unknown) return *unknown;
  return term.typing();
}

Decorations infer_decoration(const Term& term) {
  if (!term.well_typed()) throw Error(*term.typing().error, term.typing().detail);
  return term.decoration();
}

// -- Canonical form ----------------------------------------------------------

namespace {

void flatten(const Term& t, std::vector<Term>& out, const std::function<Term(const Term&)>& canon) {
  if (t.kind() == TermKind::Comp) {
    flatten(t.left(), out, canon);
    flatten(t.right(), out, canon);
  } else if (t.kind() != TermKind::Id) {
    out.push_back(canon(t));
  }
}

}  // namespace

Term from_chain(const std::vector<Term>& chain, const ObjType& source) {
  if (chain.empty()) return Term::id(source);
  Term acc = chain.back();
  for (std::size_t i = chain.size() - 1; i-- > 0;) acc = Term::comp(chain[i], acc);
  return acc;
}

Term canonical(const Term& t) {
  if (!t.well_typed()) return t;
  std::unordered_map<const void*, Term> memo;
  std::function<Term(const Term&)> canon = [&](const Term& u) -> Term {
    auto it = memo.find(&u.typing());
    if (it != memo.end()) return it->second;
    Term r = u;
    switch (u.kind()) {
      case TermKind::Comp: {
        std::vector<Term> chain;
        flatten(u, chain, canon);
        r = from_chain(chain, u.source());
        break;
      }
      case TermKind::PairSeq: r = Term::pair(canon(u.left()), canon(u.right())); break;
      case TermKind::CaseSeq: r = Term::cases(canon(u.left()), canon(u.right())); break;
      default: break;
    }
    memo.emplace(&u.typing(), r);
    return r;
  };
  return canon(t);
}

std::vector<Term> comp_chain(const Term& t) {
  Term c = canonical(t);
  std::vector<Term> out;
  if (c.kind() == TermKind::Id) return out;
  Term cur = c;
  while (cur.kind() == TermKind::Comp) {
    out.push_back(cur.left());
    Term next = cur.right();
    cur = next;
  }
  out.push_back(cur);
  return out;
}

bool parallel(const Equation& eq) {
  return eq.lhs.well_typed() && eq.rhs.well_typed() && eq.lhs.source() == eq.rhs.source() &&
         eq.lhs.target() == eq.rhs.target();
}

bool same_equation(const Equation& a, const Equation& b) {
  return a.mode == b.mode && canonical(a.lhs) == canonical(b.lhs) &&
         canonical(a.rhs) == canonical(b.rhs);
}

}  // namespace deceq
