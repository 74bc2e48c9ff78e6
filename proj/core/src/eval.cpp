#include "deceq/eval.hpp"

#include "deceq/error.hpp"

namespace deceq {

namespace {

Value boolean(bool b) { return b ? Value::left(Value::unit()) : Value::right(Value::unit()); }

bool truth(const Value& v) { return v.tag() == Value::Tag::Left; }

int modulo(long v, int n) { return static_cast<int>(((v % n) + n) % n); }

}  // namespace

Outcome Evaluator::eval(const Term& t, const Result& input, const State& s) const {
  const ObjType& src = t.source();  // throws on ill-typed terms
  if (is_ordinary(input) && !model_.contains(src, ordinary(input)))
    throw Error(ErrorKind::CarrierMismatch, "input does not inhabit " + src.str());
  if (s.size() != model_.locations().size())
    throw Error(ErrorKind::CarrierMismatch, "state has the wrong number of locations");
  return run(t, input, s);
}

Outcome Evaluator::run(const Term& t, const Result& input, const State& s) const {
  // No catcher below this node: an exception in flight passes untouched.
  if (!is_ordinary(input) && t.decoration().exc < Decoration::Rw) return {input, s};

  switch (t.kind()) {
    case TermKind::Id: return {input, s};

    case TermKind::Comp: {
      const Term& g = t.left();
      const Term& f = t.right();
      bool accessors = g.decoration().state <= Decoration::Ro && f.decoration().state <= Decoration::Ro;
      bool co = rule_ == CompositionRule::CoKleisli || (rule_ == CompositionRule::Auto && accessors);
      if (co) {
        auto f0 = [&](const comonad::Phi<Result>& p) { return run(f, p.first, p.second).result; };
        auto g0 = [&](const comonad::Phi<Result>& p) { return run(g, p.first, p.second).result; };
        return {comonad::cokleisli(g0, f0)(comonad::Phi<Result>{input, s}), s};
      }
      Outcome mid = run(f, input, s);
      return run(g, mid.result, mid.state);
    }

    case TermKind::Op: return apply(t.symbol(), input, s);

    case TermKind::PairSeq: {
      if (!is_ordinary(input)) return {input, s};
      Outcome a = run(t.left(), input, s);
      if (!is_ordinary(a.result)) return a;
      Outcome b = run(t.right(), input, a.state);
      if (!is_ordinary(b.result)) return b;
      return {Value::pair(ordinary(a.result), ordinary(b.result)), std::move(b.state)};
    }

    case TermKind::CaseSeq: {
      const Term& on_left = t.left();
      const Term& on_right = t.right();
      if (is_ordinary(input) && ordinary(input).tag() == Value::Tag::Left)
        return run(on_left, ordinary(input).payload(), s);
      Result inner = is_ordinary(input) ? Result(ordinary(input).payload()) : input;
      Outcome r = run(on_right, inner, s);
      if (is_ordinary(r.result)) return r;
      return run(on_left, r.result, r.state);
    }

    case TermKind::Proj1: return {ordinary(input).first(), s};
    case TermKind::Proj2: return {ordinary(input).second(), s};
    case TermKind::Inj1: return {Value::left(ordinary(input)), s};
    case TermKind::Inj2: return {Value::right(ordinary(input)), s};
    case TermKind::Bang: return {Value::unit(), s};
    case TermKind::Absurd:
      throw Error(ErrorKind::CarrierMismatch, "absurd applied to an ordinary value");
    case TermKind::Const:
      return {Value::atom(model_.atom_index(t.type_arg().name(), t.atom())), s};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown term kind");
}

Outcome Evaluator::apply(const OpSymbol& op, const Result& input, const State& s) const {
  const std::string& subject = op.prim.subject;
  auto location = [&] {
    int i = model_.location_index(subject);
    if (i < 0) throw Error(ErrorKind::MissingInterpretation, op.name + ": no location " + subject);
    return i;
  };
  auto exception = [&] {
    int i = model_.exception_index(subject);
    if (i < 0) throw Error(ErrorKind::MissingInterpretation, op.name + ": no exception " + subject);
    return i;
  };

  switch (op.prim.kind) {
    case PrimKind::Opaque:
      throw Error(ErrorKind::MissingInterpretation, "no interpretation for " + op.name);
    case PrimKind::Untag: {
      int e = exception();
      if (is_ordinary(input))
        throw Error(ErrorKind::CarrierMismatch, op.name + " applied to an ordinary value");
      if (raised(input).exception == e) return {raised(input).param, s};
      return {input, s};
    }
    default: break;
  }

  if (!is_ordinary(input)) return {input, s};
  const Value& v = ordinary(input);

  switch (op.prim.kind) {
    case PrimKind::Lookup: return {Value::atom(s[location()]), s};
    case PrimKind::Update: {
      State next = s;
      next[location()] = v.atom_index();
      return {Value::unit(), std::move(next)};
    }
    case PrimKind::Tag: return {Raised{exception(), v}, s};
    case PrimKind::Add:
    case PrimKind::Sub:
    case PrimKind::Mul: {
      int n = model_.carrier_size(subject);
      long a = v.first().atom_index();
      long b = v.second().atom_index();
      long r = op.prim.kind == PrimKind::Add ? a + b : op.prim.kind == PrimKind::Sub ? a - b : a * b;
      return {Value::atom(modulo(r, n)), s};
    }
    case PrimKind::Eq: return {boolean(v.first().atom_index() == v.second().atom_index()), s};
    case PrimKind::Le: return {boolean(v.first().atom_index() <= v.second().atom_index()), s};
    case PrimKind::Not: return {boolean(!truth(v)), s};
    case PrimKind::And: return {boolean(truth(v.first()) && truth(v.second())), s};
    case PrimKind::Diverge: return {Raised{Raised::kFuelExhausted, Value::unit()}, s};
    default: break;
  }
  throw Error(ErrorKind::MissingInterpretation, "no interpretation for " + op.name);
}

Outcome eval(const Term& t, const FiniteModel& model, const Result& input, const State& s) {
  return Evaluator(model).eval(t, input, s);
}

std::vector<Value> enumerate_points(const ObjType& t, const FiniteModel& model) {
  return model.enumerate_points(t);
}

std::vector<Result> enumerate_inputs(const ObjType& source, const FiniteModel& model,
                                     bool with_exceptional) {
  std::vector<Result> out;
  for (auto& v : model.enumerate_points(source)) out.emplace_back(std::move(v));
  if (with_exceptional)
    for (auto& r : model.exception_space()) out.emplace_back(std::move(r));
  return out;
}

namespace {

enum class Compare { Full, ResultOnly };

Verdict scan(const Term& lhs, const Term& rhs, const FiniteModel& model, bool with_exceptional,
             Compare cmp) {
  if (lhs.source() != rhs.source() || lhs.target() != rhs.target())
    throw Error(ErrorKind::SourceTargetMismatch,
                "terms are not parallel: " + lhs.str() + " vs " + rhs.str());
  Evaluator ev(model);
  auto inputs = enumerate_inputs(lhs.source(), model, with_exceptional);
  for (const auto& s : model.states()) {
    for (const auto& in : inputs) {
      Outcome a = ev.eval(lhs, in, s);
      Outcome b = ev.eval(rhs, in, s);
      bool same = cmp == Compare::Full ? a == b : a.result == b.result;
      if (!same) return Verdict{Counterexample{in, s, std::move(a), std::move(b)}};
    }
  }
  return Verdict{};
}

}  // namespace

Verdict check_strong_eq(const Term& lhs, const Term& rhs, const FiniteModel& model) {
  return scan(lhs, rhs, model, true, Compare::Full);
}

Verdict check_weak_eq(const Term& lhs, const Term& rhs, const FiniteModel& model, Flavor flavor) {
  switch (flavor) {
    case Flavor::States: return scan(lhs, rhs, model, true, Compare::ResultOnly);
    case Flavor::Exceptions: return scan(lhs, rhs, model, false, Compare::Full);
    case Flavor::Combined: return scan(lhs, rhs, model, false, Compare::ResultOnly);
  }
  return Verdict{};
}

Verdict check_eq(const Equation& eq, const FiniteModel& model, Flavor flavor) {
  return eq.mode == Mode::Strong ? check_strong_eq(eq.lhs, eq.rhs, model)
                                 : check_weak_eq(eq.lhs, eq.rhs, model, flavor);
}

std::string format_counterexample(const Counterexample& c, const ObjType& source,
                                  const FiniteModel& model) {
  std::string st = model.format_state(c.state);
  std::string in = "v=" + model.format_result(c.input, source);
  return st.empty() ? in : st + "," + in;
}

}  // namespace deceq
