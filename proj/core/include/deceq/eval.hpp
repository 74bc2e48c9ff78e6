#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deceq/model.hpp"
#include "deceq/term.hpp"
#include "deceq/value.hpp"

namespace deceq {

// The states comonad Phi(X) = X x S with duplicate (x,s) |-> ((x,s),s) and
// extract (x,s) |-> x, and coKleisli composition g0 . Phi(f0) . duplicate.
// The evaluator composes accessors through `cokleisli`.
namespace comonad {

template <class X>
using Phi = std::pair<X, State>;

template <class X>
Phi<Phi<X>> duplicate(const Phi<X>& p) {
  return {p, p.second};
}

template <class X>
X extract(const Phi<X>& p) {
  return p.first;
}

template <class F, class X>
auto fmap(const F& f, const Phi<X>& p) -> Phi<decltype(f(p.first))> {
  return {f(p.first), p.second};
}

template <class G, class F>
auto cokleisli(G g0, F f0) {
  return [g0, f0](const auto& p) { return g0(fmap(f0, duplicate(p))); };
}

}  // namespace comonad

// How Comp nodes combine their factors. Auto picks the coKleisli rule when
// both factors are accessors on the state axis and threads the state
// (Kleisli rule) otherwise. The forced variants exist so tests can compare
// the two interpretations on terms where they must agree.
enum class CompositionRule { Auto, CoKleisli, Kleisli };

// Denotation of decorated terms as maps (X + E) x S -> (Y + E) x S.
//
// Exceptional inputs propagate through everything except catchers (untag)
// and the exception-side dispatch of CaseSeq, which hands the exception to
// its right branch first and whatever that branch leaves raised to its left
// branch. PairSeq evaluates left then right on the left's output state and
// short-circuits on a raised component; it propagates exceptional inputs.
// The state is threaded through raises.
class Evaluator {
 public:
  explicit Evaluator(const FiniteModel& model, CompositionRule rule = CompositionRule::Auto)
      : model_(model), rule_(rule) {}

  // Validates that `input` inhabits the source (CarrierMismatch) and that the
  // term is well typed.
  Outcome eval(const Term& t, const Result& input, const State& s) const;

  const FiniteModel& model() const { return model_; }

 private:
  Outcome run(const Term& t, const Result& input, const State& s) const;
  Outcome apply(const OpSymbol& op, const Result& input, const State& s) const;

  const FiniteModel& model_;
  CompositionRule rule_;
};

Outcome eval(const Term& t, const FiniteModel& model, const Result& input, const State& s);

std::vector<Value> enumerate_points(const ObjType& t, const FiniteModel& model);

// Ordinary points of `source`, then (if requested) every exception in E.
std::vector<Result> enumerate_inputs(const ObjType& source, const FiniteModel& model,
                                     bool with_exceptional);

struct Counterexample {
  Result input;
  State state;
  Outcome lhs;
  Outcome rhs;
};

// Equal, or the first counterexample in enumeration order: states outermost
// (FiniteModel::states order), inputs innermost (enumerate_inputs order).
struct Verdict {
  std::optional<Counterexample> counterexample;
  bool equal() const { return !counterexample.has_value(); }
};

// Full outcomes agree on every ordinary and exceptional input and state.
Verdict check_strong_eq(const Term& lhs, const Term& rhs, const FiniteModel& model);

// States: results agree on every input, final state discarded.
// Exceptions: outcomes agree on ordinary inputs.
// Combined: results agree on ordinary inputs, final state discarded.
Verdict check_weak_eq(const Term& lhs, const Term& rhs, const FiniteModel& model, Flavor flavor);

Verdict check_eq(const Equation& eq, const FiniteModel& model, Flavor flavor);

// "x=0,v=1": the state assignment followed by the input.
std::string format_counterexample(const Counterexample& c, const ObjType& source,
                                  const FiniteModel& model);

}  // namespace deceq
