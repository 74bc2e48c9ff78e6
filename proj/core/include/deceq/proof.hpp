#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deceq/term.hpp"
#include "deceq/theory.hpp"

namespace deceq::proof {

// Inference rules of decorated equational logic. Decoration side conditions
// are stated per axis (s = state, e = exception) so that one rule set serves
// the states, exceptions and combined theories: for a states theory every e
// bound holds trivially, for an exceptions theory every s bound does.
//
//   refl            |- t = t                                    (any mode)
//   sym             f = g |- g = f
//   trans           f = g, g = h |- f = h                       (same mode)
//   axiom [label]   |- the axiom
//   strong-to-weak  f == g |- f ~ g
//   subs            f = g |- f.h = g.h          weak: e(h) = 0
//   repl            f = g |- h.f = h.g          weak: s(h) = 0
//   effect          f ~ g |- f == g             s, e <= 1 on both sides
//   obs             theory observational rule   states: e(f), e(g) = 0
//                                               exceptions: s(f), s(g) = 0
//   pair-cong       f1 = g1, f2 = g2 |- <f1,f2> = <g1,g2>
//                   1st weak: s(f2), s(g2) = 0; 2nd weak: e(f1), e(g1) = 0
//   case-cong       f1 = g1, f2 = g2 |- [f1|f2] = [g1|g2]
//                   1st weak: e(f2), e(g2) = 0; 2nd weak: s(f1), s(g1) = 0
//   unit            |- f ~ g          f, g : X -> 1,  e(f), e(g) = 0
//   empty           |- f ~ g          f, g : 0 -> Y,  s(f), s(g) = 0
//   proj1           |- pi1.<f,g> ~ f                 e(g) = 0
//   inj1            |- [f|g].in1 ~ f                 s(g) = 0
//   proj2           |- pi2.<f,g> = g   strong: s(f) <= 1, e(f) = 0, e(g) <= 1
//                                      weak:   e(f) = 0 and (s(f) <= 1 or s(g) = 0)
//   inj2            |- [f|g].in2 = g   strong: e(f) <= 1, s(f) = 0, s(g) <= 1
//                                      weak:   s(f) = 0 and (e(f) <= 1 or e(g) = 0)
//   seq-comp        |- pi2.<f, h.r> == h.pi2.<f, r>      e(h) <= 1
//   coseq-comp      |- [f | r.h].in2 == [f | r].in2.h    s(h) <= 1
//   unit-seq        |- pi2.<e, bang> == e                e : X -> 1, e(e) <= 1
//   counit-seq      |- [e | absurd].in2 == e             e : 0 -> Y, s(e) <= 1
//   split           f ~ g, bang.f == bang.g |- f == g    e(f), e(g) <= 1
//   cosplit         f ~ g, f.absurd == g.absurd |- f == g  s(f), s(g) <= 1
//   pair-ext        pi1.h = pi1.k, pi2.h = pi2.k |- h = k
//   case-ext        h.in1 = k.in1, h.in2 = k.in2 |- h = k
//
// Equations are compared up to canonical form (Comp associativity and
// identity units only). Rules whose conclusion mode may vary take the
// weakest premise mode.
enum class Rule {
  Refl, Sym, Trans, Axiom, StrongToWeak, Subs, Repl, Effect, Obs, PairCong, CaseCong,
  Unit, Empty, Proj1, Inj1, Proj2, Inj2, SeqComp, CoseqComp, UnitSeq, CounitSeq,
  Split, Cosplit, PairExt, CaseExt,
};

inline constexpr Rule kAllRules[] = {
    Rule::Refl,   Rule::Sym,      Rule::Trans,    Rule::Axiom,    Rule::StrongToWeak,
    Rule::Subs,   Rule::Repl,     Rule::Effect,   Rule::Obs,      Rule::PairCong,
    Rule::CaseCong, Rule::Unit,   Rule::Empty,    Rule::Proj1,    Rule::Inj1,
    Rule::Proj2,  Rule::Inj2,     Rule::SeqComp,  Rule::CoseqComp, Rule::UnitSeq,
    Rule::CounitSeq, Rule::Split, Rule::Cosplit,  Rule::PairExt,  Rule::CaseExt,
};

std::string_view to_string(Rule r);
std::optional<Rule> rule_from_string(std::string_view s);
// The rule that the states/exceptions duality maps `r` to.
Rule dual(Rule r);

// A premise is an earlier step (1-based number) or an axiom label.
struct Premise {
  int step = 0;
  std::string label;

  static Premise of_step(int n) { return {n, {}}; }
  static Premise of_axiom(std::string l) { return {0, std::move(l)}; }
  bool is_step() const { return label.empty(); }
  friend bool operator==(const Premise&, const Premise&) = default;
};

struct ProofStep {
  Rule rule = Rule::Refl;
  std::vector<Premise> premises;
  Equation conclusion;
};

struct ProofScript {
  Equation goal;
  std::vector<ProofStep> steps;
};

enum class ProofError {
  UnknownRule,
  SideConditionViolated,
  PremiseShapeMismatch,
  BadPremise,
  IllTyped,
  GoalMismatch,
};

std::string_view to_string(ProofError e);

struct StepVerdict {
  std::optional<ProofError> error;
  std::string detail;
  bool ok() const { return !error.has_value(); }
};

struct ScriptVerdict {
  std::optional<ProofError> error;
  int failing_step = 0;  // 1-based; 0 when the goal itself is at fault
  std::string detail;
  bool ok() const { return !error.has_value(); }
};

struct CheckerOptions {
  // Deliberately unsound variant kept for probing the probe: allows weak
  // replacement under accessor (s <= 1) contexts instead of pure ones.
  bool unsound_weak_repl_under_accessor = false;
};

// Checks step number `index` (1-based) of a script whose earlier steps are
// `earlier` (only their conclusions are consulted; they are not rechecked).
StepVerdict check_step(const ProofStep& step, const std::vector<ProofStep>& earlier,
                       const Theory& theory, const CheckerOptions& options = {});

ScriptVerdict check_script(const ProofScript& script, const Theory& theory,
                           const CheckerOptions& options = {});

// Text format:
//   goal <mode> <lhs> = <rhs>
//   step <n>: <rule> [<premise>, ...] ⊢ <mode> <lhs> = <rhs>
//   An empty premise list may be omitted.
// '|-' is accepted for '⊢'. '#' starts a comment.
std::string print_script(const ProofScript& script);
ProofScript parse_script(std::string_view text, const Signature& sig);

// Maps every step through the states/exceptions duality.
ProofScript dualize(const ProofScript& script);

}  // namespace deceq::proof
