#include "deceq/eval.hpp"
#include "deceq/imp.hpp"

namespace deceq::imp {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::StrongEq: return "StrongEq";
    case Verdict::WeakEq: return "WeakEq";
    case Verdict::NotEq: return "NotEq";
    case Verdict::FuelExhausted: return "FuelExhausted";
  }
  return "?";
}

std::string EquivResult::str(const FiniteModel& model) const {
  std::string out(to_string(verdict));
  if (state) out += " " + model.format_state(*state);
  return out;
}

namespace {

bool exhausted(const Outcome& o) {
  return !is_ordinary(o.result) && raised(o.result).exception == Raised::kFuelExhausted;
}

}  // namespace

EquivResult check_equiv(const Cmd& a, const Cmd& b, const FiniteModel& model, int fuel) {
  Theory theory = imp_theory(model);
  Term ta = elaborate(a, theory, model, fuel);
  Term tb = elaborate(b, theory, model, fuel);
  Evaluator ev(model);
  bool same_states = true;
  for (const auto& s : model.states()) {
    Outcome oa = ev.eval(ta, Value::unit(), s);
    Outcome ob = ev.eval(tb, Value::unit(), s);
    if (exhausted(oa) || exhausted(ob)) return {Verdict::FuelExhausted, s};
    if (oa.result != ob.result) return {Verdict::NotEq, s};
    if (oa.state != ob.state) same_states = false;
  }
  return {same_states ? Verdict::StrongEq : Verdict::WeakEq, std::nullopt};
}

}  // namespace deceq::imp
