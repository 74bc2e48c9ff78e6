#include <algorithm>

#include "deceq/eval.hpp"
#include "deceq/imp.hpp"

namespace deceq::imp {

namespace {

const ObjType kBool = ObjType::sum(ObjType::unit(), ObjType::unit());

OpSymbol pure_op(std::string name, ObjType src, ObjType tgt, PrimKind k, std::string subject = {}) {
  return {std::move(name), std::move(src), std::move(tgt), {}, {k, std::move(subject)}};
}

class Elaborator {
 public:
  Elaborator(const Theory& theory, const FiniteModel& model, int fuel)
      : theory_(theory), model_(model), fuel_(fuel) {
    if (fuel < 0) throw Error(ErrorKind::InvalidArgument, "fuel must not be negative");
  }

  Term cmd(const Cmd& c) {
    switch (c.kind) {
      case Cmd::Kind::Skip: return Term::id(ObjType::unit());
      case Cmd::Kind::Assign:
        return Term::comp(update(c.name), aexp(*c.value, location_type(c.name)));
      case Cmd::Kind::Seq: return Term::comp(cmd(*c.second), cmd(*c.first));
      case Cmd::Kind::If: return branch(bexp(*c.cond), cmd(*c.first), cmd(*c.second));
      case Cmd::Kind::While: {
        Term b = bexp(*c.cond);
        Term body = cmd(*c.first);
        Term skip = Term::id(ObjType::unit());
        Term w = branch(b, op("diverge"), skip);
        for (int k = 0; k < fuel_; ++k) w = branch(b, Term::comp(w, body), skip);
        return w;
      }
      case Cmd::Kind::Throw: {
        Term tag = op_for("tag_" + c.name, ErrorKind::UndeclaredException, "exception " + c.name);
        return Term::comp(Term::absurd(ObjType::unit()), Term::comp(tag, aexp(*c.value, tag.source())));
      }
      case Cmd::Kind::TryCatch: return try_catch(c);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown command");
  }

  Term bexp(const BExp& b) {
    switch (b.kind) {
      case BExp::Kind::True: return Term::inj1(kBool);
      case BExp::Kind::False: return Term::inj2(kBool);
      case BExp::Kind::Eq:
      case BExp::Kind::Le: {
        ObjType t = infer(*b.x).value_or(infer(*b.y).value_or(default_type()));
        std::string name = (b.kind == BExp::Kind::Eq ? "eq_" : "le_") + t.name();
        return Term::comp(op(name), Term::pair(aexp(*b.x, t), aexp(*b.y, t)));
      }
      case BExp::Kind::Not: return Term::comp(op("not"), bexp(*b.p));
      case BExp::Kind::And: return Term::comp(op("and"), Term::pair(bexp(*b.p), bexp(*b.q)));
    }
    throw Error(ErrorKind::InvalidArgument, "unknown boolean expression");
  }

  Term aexp(const AExp& a, const ObjType& t) {
    switch (a.kind) {
      case AExp::Kind::Lit: {
        const auto& atoms = model_.carrier(t.name()).atoms;
        if (std::find(atoms.begin(), atoms.end(), a.name) == atoms.end())
          throw Error(ErrorKind::TypeMismatch, "literal " + a.name + " is not a value of " + t.name());
        return Term::constant(t, a.name);
      }
      case AExp::Kind::Read: {
        ObjType lt = location_type(a.name);
        if (lt != t)
          throw Error(ErrorKind::TypeMismatch,
                      "location " + a.name + " has type " + lt.str() + ", expected " + t.str());
        return op("lookup_" + a.name);
      }
      case AExp::Kind::Add:
      case AExp::Kind::Sub:
      case AExp::Kind::Mul: {
        const char* prefix = a.kind == AExp::Kind::Add ? "add_" : a.kind == AExp::Kind::Sub ? "sub_" : "mul_";
        return Term::comp(op(prefix + t.name()), Term::pair(aexp(*a.lhs, t), aexp(*a.rhs, t)));
      }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown expression");
  }

 private:
  static Term branch(const Term& cond, const Term& then_c, const Term& else_c) {
    return Term::comp(Term::cases(then_c, else_c), cond);
  }

  // Behaves as t on ordinary inputs and lets exceptions already in flight
  // pass, so catchers inside t only see exceptions raised by t itself.
  static Term guard(const Term& t) { return seq_then(Term::bang(t.source()), t); }

  Term try_catch(const Cmd& c) {
    const auto& hs = c.handlers;
    std::vector<Term> untags, runs;
    for (const auto& h : hs) {
      Term untag = op_for("untag_" + h.exception, ErrorKind::UndeclaredException, "exception " + h.exception);
      ObjType v = untag.target();
      if (location_type(h.binder) != v)
        throw Error(ErrorKind::TypeMismatch, "binder " + h.binder + " must have type " + v.str());
      // Save the binder, store the parameter, run the handler, restore.
      Term save = Term::comp(op("lookup_" + h.binder), Term::bang(v));
      Term run = Term::comp(cmd(*h.body), update(h.binder));
      Term restore = Term::comp(update(h.binder), Term::proj1(ObjType::prod(v, ObjType::unit())));
      untags.push_back(untag);
      runs.push_back(guard(Term::comp(restore, Term::pair(save, run))));
    }
    // Dispatch: K sends a caught exception to inl(param) of its handler's
    // summand and re-raises anything no handler names.
    Term k = untags.back();
    Term dispatch = runs.back();
    for (std::size_t i = hs.size() - 1; i-- > 0;) {
      ObjType sum = ObjType::sum(untags[i].target(), k.target());
      Term empty2 = Term::inj2(ObjType::sum(ObjType::empty(), ObjType::empty()));
      k = Term::comp(Term::cases(Term::comp(Term::inj2(sum), k), Term::comp(Term::inj1(sum), untags[i])),
                     empty2);
      dispatch = Term::cases(runs[i], dispatch);
    }
    Term body = Term::comp(Term::inj2(ObjType::sum(ObjType::empty(), ObjType::unit())), cmd(*c.first));
    Term handle = Term::cases(Term::comp(dispatch, k), Term::id(ObjType::unit()));
    return guard(Term::comp(handle, body));
  }

  ObjType default_type() const {
    if (model_.carriers().empty()) throw Error(ErrorKind::UnknownBaseType, "model declares no types");
    return ObjType::base(model_.carriers().front().name);
  }

  std::optional<ObjType> infer(const AExp& a) const {
    switch (a.kind) {
      case AExp::Kind::Lit: return std::nullopt;
      case AExp::Kind::Read: return location_type(a.name);
      default: {
        auto l = infer(*a.lhs);
        return l ? l : infer(*a.rhs);
      }
    }
  }

  ObjType location_type(const std::string& loc) const {
    const OpSymbol* s = theory_.signature.find("lookup_" + loc);
    if (!s || s->prim.kind != PrimKind::Lookup)
      throw Error(ErrorKind::UndeclaredLocation, "location " + loc + " is not declared");
    return s->target;
  }

  Term update(const std::string& loc) {
    return op_for("update_" + loc, ErrorKind::UndeclaredLocation, "location " + loc);
  }

  Term op_for(const std::string& name, ErrorKind kind, const std::string& what) const {
    const OpSymbol* s = theory_.signature.find(name);
    if (!s) throw Error(kind, what + " is not declared");
    return Term::op(*s);
  }

  Term op(const std::string& name) const {
    return op_for(name, ErrorKind::UnknownSymbol, "operation " + name);
  }

  const Theory& theory_;
  const FiniteModel& model_;
  int fuel_;
};

}  // namespace

Theory imp_theory(const FiniteModel& model) {
  Theory t;
  if (!model.locations().empty() || !model.exceptions().empty()) t = theory_for(model);
  t.flavor = Flavor::Combined;
  for (const auto& c : model.carriers()) {
    ObjType v = ObjType::base(c.name);
    ObjType vv = ObjType::prod(v, v);
    t.signature.add(pure_op("add_" + c.name, vv, v, PrimKind::Add, c.name));
    t.signature.add(pure_op("sub_" + c.name, vv, v, PrimKind::Sub, c.name));
    t.signature.add(pure_op("mul_" + c.name, vv, v, PrimKind::Mul, c.name));
    t.signature.add(pure_op("eq_" + c.name, vv, kBool, PrimKind::Eq, c.name));
    t.signature.add(pure_op("le_" + c.name, vv, kBool, PrimKind::Le, c.name));
  }
  t.signature.add(pure_op("not", kBool, kBool, PrimKind::Not));
  t.signature.add(pure_op("and", ObjType::prod(kBool, kBool), kBool, PrimKind::And));
  OpSymbol diverge = pure_op("diverge", ObjType::unit(), ObjType::unit(), PrimKind::Diverge);
  diverge.decoration.exc = Decoration::Ro;
  t.signature.add(diverge);
  return t;
}

Term elaborate(const Cmd& program, const Theory& theory, const FiniteModel& model, int fuel) {
  return Elaborator(theory, model, fuel).cmd(program);
}

}  // namespace deceq::imp
