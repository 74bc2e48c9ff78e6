#include "deceq/proof.hpp"

#include <algorithm>

namespace deceq::proof {

namespace {

struct RuleName {
  Rule rule;
  std::string_view name;
  Rule dual;
};

constexpr RuleName kRuleNames[] = {
    {Rule::Refl, "refl", Rule::Refl},
    {Rule::Sym, "sym", Rule::Sym},
    {Rule::Trans, "trans", Rule::Trans},
    {Rule::Axiom, "axiom", Rule::Axiom},
    {Rule::StrongToWeak, "strong-to-weak", Rule::StrongToWeak},
    {Rule::Subs, "subs", Rule::Repl},
    {Rule::Repl, "repl", Rule::Subs},
    {Rule::Effect, "effect", Rule::Effect},
    {Rule::Obs, "obs", Rule::Obs},
    {Rule::PairCong, "pair-cong", Rule::CaseCong},
    {Rule::CaseCong, "case-cong", Rule::PairCong},
    {Rule::Unit, "unit", Rule::Empty},
    {Rule::Empty, "empty", Rule::Unit},
    {Rule::Proj1, "proj1", Rule::Inj1},
    {Rule::Inj1, "inj1", Rule::Proj1},
    {Rule::Proj2, "proj2", Rule::Inj2},
    {Rule::Inj2, "inj2", Rule::Proj2},
    {Rule::SeqComp, "seq-comp", Rule::CoseqComp},
    {Rule::CoseqComp, "coseq-comp", Rule::SeqComp},
    {Rule::UnitSeq, "unit-seq", Rule::CounitSeq},
    {Rule::CounitSeq, "counit-seq", Rule::UnitSeq},
    {Rule::Split, "split", Rule::Cosplit},
    {Rule::Cosplit, "cosplit", Rule::Split},
    {Rule::PairExt, "pair-ext", Rule::CaseExt},
    {Rule::CaseExt, "case-ext", Rule::PairExt},
};

const RuleName& entry(Rule r) {
  for (const auto& e : kRuleNames)
    if (e.rule == r) return e;
  return kRuleNames[0];
}

using D = Decoration;

StepVerdict accept() { return {}; }
StepVerdict reject(ProofError e, std::string detail) { return {e, std::move(detail)}; }
StepVerdict side(std::string detail) {
  return reject(ProofError::SideConditionViolated, std::move(detail));
}
StepVerdict shape(std::string detail) {
  return reject(ProofError::PremiseShapeMismatch, std::move(detail));
}

std::string dstr(const Term& t) { return t.str() + " has decoration " + t.decoration().str(); }

Mode weakest(Mode a, Mode b) { return std::min(a, b); }

bool starts_with(const std::vector<Term>& v, const std::vector<Term>& prefix) {
  return prefix.size() <= v.size() && std::equal(prefix.begin(), prefix.end(), v.begin());
}

bool ends_with(const std::vector<Term>& v, const std::vector<Term>& suffix) {
  return suffix.size() <= v.size() &&
         std::equal(suffix.begin(), suffix.end(), v.end() - static_cast<long>(suffix.size()));
}

std::vector<Term> slice(const std::vector<Term>& v, std::size_t from, std::size_t to) {
  return std::vector<Term>(v.begin() + static_cast<long>(from), v.begin() + static_cast<long>(to));
}

// Canonical view of an equation.
struct Eq {
  Term lhs, rhs;
  Mode mode;
};

Eq canon(const Equation& e) { return {canonical(e.lhs), canonical(e.rhs), e.mode}; }

class StepChecker {
 public:
  StepChecker(const ProofStep& step, const std::vector<ProofStep>& earlier, const Theory& theory,
              const CheckerOptions& options)
      : step_(step), earlier_(earlier), theory_(theory), options_(options) {}

  StepVerdict run() {
    const Equation& c = step_.conclusion;
    for (const Term* t : {&c.lhs, &c.rhs}) {
      TypedReport r = typecheck(*t, theory_.signature);
      if (!r.ok) return reject(ProofError::IllTyped, t->str() + ": " + r.detail);
    }
    if (!parallel(c)) return reject(ProofError::IllTyped, "conclusion sides are not parallel");
    c_ = canon(c);

    if (step_.rule == Rule::Axiom) return axiom();
    for (const auto& p : step_.premises) {
      if (!p.is_step()) return reject(ProofError::BadPremise, "axiom label " + p.label + " used as a step");
      if (p.step < 1 || p.step > static_cast<int>(earlier_.size()))
        return reject(ProofError::BadPremise, "premise " + std::to_string(p.step) + " is not an earlier step");
      prem_.push_back(canon(earlier_[p.step - 1].conclusion));
    }

    switch (step_.rule) {
      case Rule::Refl: return refl();
      case Rule::Sym: return sym();
      case Rule::Trans: return trans();
      case Rule::StrongToWeak: return strong_to_weak();
      case Rule::Subs: return subs();
      case Rule::Repl: return repl();
      case Rule::Effect: return effect();
      case Rule::Obs: return obs();
      case Rule::PairCong: return cong(TermKind::PairSeq);
      case Rule::CaseCong: return cong(TermKind::CaseSeq);
      case Rule::Unit: return unit_or_empty(true);
      case Rule::Empty: return unit_or_empty(false);
      case Rule::Proj1: return proj1();
      case Rule::Inj1: return inj1();
      case Rule::Proj2: return proj2();
      case Rule::Inj2: return inj2();
      case Rule::SeqComp: return seq_comp();
      case Rule::CoseqComp: return coseq_comp();
      case Rule::UnitSeq: return unit_seq();
      case Rule::CounitSeq: return counit_seq();
      case Rule::Split: return split(true);
      case Rule::Cosplit: return split(false);
      case Rule::PairExt: return ext(true);
      case Rule::CaseExt: return ext(false);
      case Rule::Axiom: break;
    }
    return reject(ProofError::UnknownRule, "unknown rule");
  }

 private:
  StepVerdict arity(std::size_t n) {
    if (prem_.size() != n)
      return shape(std::string(to_string(step_.rule)) + " takes " + std::to_string(n) + " premise(s)");
    return accept();
  }

  StepVerdict axiom() {
    if (step_.premises.size() != 1 || step_.premises[0].is_step())
      return reject(ProofError::BadPremise, "axiom takes exactly one axiom label");
    const Equation* ax = theory_.axiom(step_.premises[0].label);
    if (!ax) return reject(ProofError::BadPremise, "no axiom labelled " + step_.premises[0].label);
    if (!same_equation(*ax, step_.conclusion))
      return shape("conclusion is not axiom " + ax->label);
    return accept();
  }

  StepVerdict refl() {
    if (auto v = arity(0); !v.ok()) return v;
    if (c_.lhs != c_.rhs) return shape("refl needs identical sides");
    return accept();
  }

  StepVerdict sym() {
    if (auto v = arity(1); !v.ok()) return v;
    const Eq& p = prem_[0];
    if (p.mode != c_.mode) return shape("sym keeps the mode");
    if (p.lhs != c_.rhs || p.rhs != c_.lhs) return shape("conclusion is not the premise reversed");
    return accept();
  }

  StepVerdict trans() {
    if (auto v = arity(2); !v.ok()) return v;
    const Eq& a = prem_[0];
    const Eq& b = prem_[1];
    if (a.mode != c_.mode || b.mode != c_.mode) return shape("trans needs premises of the conclusion's mode");
    if (a.rhs != b.lhs) return shape("premises do not chain");
    if (a.lhs != c_.lhs || b.rhs != c_.rhs) return shape("conclusion does not match the chained premises");
    return accept();
  }

  StepVerdict strong_to_weak() {
    if (auto v = arity(1); !v.ok()) return v;
    const Eq& p = prem_[0];
    if (p.mode != Mode::Strong || c_.mode != Mode::Weak) return shape("strong-to-weak: strong premise, weak conclusion");
    if (p.lhs != c_.lhs || p.rhs != c_.rhs) return shape("sides differ from the premise");
    return accept();
  }

  // f = g |- f.h = g.h
  StepVerdict subs() {
    if (auto v = arity(1); !v.ok()) return v;
    const Eq& p = prem_[0];
    if (p.mode != c_.mode) return shape("subs keeps the mode");
    auto f = comp_chain(p.lhs), g = comp_chain(p.rhs);
    auto l = comp_chain(c_.lhs), r = comp_chain(c_.rhs);
    if (!starts_with(l, f) || !starts_with(r, g)) return shape("conclusion does not start with the premise sides");
    auto h = slice(l, f.size(), l.size());
    if (h != slice(r, g.size(), r.size())) return shape("the two sides substitute different terms");
    Term ht = from_chain(h, c_.lhs.source());
    if (c_.mode == Mode::Weak && ht.decoration().exc != D::Pure)
      return side("weak subs needs an exception-pure substituted term: " + dstr(ht));
    return accept();
  }

  // f = g |- h.f = h.g
  StepVerdict repl() {
    if (auto v = arity(1); !v.ok()) return v;
    const Eq& p = prem_[0];
    if (p.mode != c_.mode) return shape("repl keeps the mode");
    auto f = comp_chain(p.lhs), g = comp_chain(p.rhs);
    auto l = comp_chain(c_.lhs), r = comp_chain(c_.rhs);
    if (!ends_with(l, f) || !ends_with(r, g)) return shape("conclusion does not end with the premise sides");
    auto h = slice(l, 0, l.size() - f.size());
    if (h != slice(r, 0, r.size() - g.size())) return shape("the two sides use different contexts");
    Term ht = from_chain(h, p.lhs.target());
    D bound = options_.unsound_weak_repl_under_accessor ? D::Ro : D::Pure;
    if (c_.mode == Mode::Weak && ht.decoration().state > bound)
      return side("weak repl needs a state-pure context: " + dstr(ht));
    return accept();
  }

  StepVerdict effect() {
    if (auto v = arity(1); !v.ok()) return v;
    const Eq& p = prem_[0];
    if (p.mode != Mode::Weak || c_.mode != Mode::Strong) return shape("effect: weak premise, strong conclusion");
    if (p.lhs != c_.lhs || p.rhs != c_.rhs) return shape("sides differ from the premise");
    for (const Term* t : {&c_.lhs, &c_.rhs})
      if (t->decoration().state > D::Ro || t->decoration().exc > D::Ro)
        return side("effect needs decorations <= 1: " + dstr(*t));
    return accept();
  }

  StepVerdict obs() {
    if (c_.mode != Mode::Strong) return shape("obs concludes a strong equation");
    std::string why = "no observational rule of the theory matches";
    for (const auto& rule : theory_.observational_rules) {
      if (rule.observers.size() != prem_.size()) continue;
      bool states = rule.direction == ObsRule::Direction::States;
      if (states && c_.lhs.target() != ObjType::unit()) continue;
      if (!states && c_.lhs.source() != ObjType::empty()) continue;
      bool match = true;
      for (std::size_t k = 0; k < prem_.size() && match; ++k) {
        Term o = Term::op(rule.observers[k]);
        Term l = canonical(states ? Term::comp(o, c_.lhs) : Term::comp(c_.lhs, o));
        Term r = canonical(states ? Term::comp(o, c_.rhs) : Term::comp(c_.rhs, o));
        match = prem_[k].mode == Mode::Weak && prem_[k].lhs == l && prem_[k].rhs == r;
      }
      if (!match) continue;
      for (const Term* t : {&c_.lhs, &c_.rhs}) {
        if (states && t->decoration().exc != D::Pure)
          return side("obs (states) needs exception-pure sides: " + dstr(*t));
        if (!states && t->decoration().state != D::Pure)
          return side("obs (exceptions) needs state-pure sides: " + dstr(*t));
      }
      return accept();
    }
    return shape(why);
  }

  StepVerdict cong(TermKind kind) {
    if (auto v = arity(2); !v.ok()) return v;
    if (c_.lhs.kind() != kind || c_.rhs.kind() != kind)
      return shape("conclusion sides must both be " + std::string(kind == TermKind::PairSeq ? "pairs" : "cases"));
    const Eq& a = prem_[0];
    const Eq& b = prem_[1];
    if (c_.lhs.left() != a.lhs || c_.rhs.left() != a.rhs) return shape("first components do not match premise 1");
    if (c_.lhs.right() != b.lhs || c_.rhs.right() != b.rhs) return shape("second components do not match premise 2");
    if (c_.mode > weakest(a.mode, b.mode)) return shape("conclusion is stronger than its premises");
    bool pair = kind == TermKind::PairSeq;
    auto axis = [](const Term& t, bool state) { return state ? t.decoration().state : t.decoration().exc; };
    if (a.mode == Mode::Weak)
      for (const Term* t : {&c_.lhs.right(), &c_.rhs.right()})
        if (axis(*t, pair) != D::Pure)
          return side("weak first premise needs a pure second component: " + dstr(*t));
    if (b.mode == Mode::Weak)
      for (const Term* t : {&c_.lhs.left(), &c_.rhs.left()})
        if (axis(*t, !pair) != D::Pure)
          return side("weak second premise needs a pure first component: " + dstr(*t));
    return accept();
  }

  StepVerdict unit_or_empty(bool unit) {
    if (auto v = arity(0); !v.ok()) return v;
    if (c_.mode != Mode::Weak) return shape("concludes a weak equation");
    if (unit && c_.lhs.target() != ObjType::unit()) return shape("unit: sides must target 1");
    if (!unit && c_.lhs.source() != ObjType::empty()) return shape("empty: sides must start at 0");
    for (const Term* t : {&c_.lhs, &c_.rhs}) {
      D d = unit ? t->decoration().exc : t->decoration().state;
      if (d != D::Pure) return side(std::string(unit ? "unit" : "empty") + " needs pure sides: " + dstr(*t));
    }
    return accept();
  }

  // The lhs chain must be exactly [outer, inner] (after canonicalisation).
  static std::vector<Term> two_factors(const Term& t, TermKind outer, TermKind inner) {
    auto ch = comp_chain(t);
    if (ch.size() != 2 || ch[0].kind() != outer || ch[1].kind() != inner) return {};
    return ch;
  }

  StepVerdict proj1() {
    if (auto v = arity(0); !v.ok()) return v;
    auto f2 = two_factors(c_.lhs, TermKind::Proj1, TermKind::PairSeq);
    if (f2.empty()) return shape("lhs must be proj1.pair(f,g)");
    const Term& pair = f2[1];
    if (c_.mode != Mode::Weak) return shape("proj1 is weak");
    if (c_.rhs != pair.left()) return shape("rhs must be the first component");
    if (pair.right().decoration().exc != D::Pure) return side("proj1 needs an exception-pure g: " + dstr(pair.right()));
    return accept();
  }

  StepVerdict inj1() {
    if (auto v = arity(0); !v.ok()) return v;
    auto f2 = two_factors(c_.lhs, TermKind::CaseSeq, TermKind::Inj1);
    if (f2.empty()) return shape("lhs must be case(f,g).inj1");
    const Term& cs = f2[0];
    if (c_.mode != Mode::Weak) return shape("inj1 is weak");
    if (c_.rhs != cs.left()) return shape("rhs must be the left branch");
    if (cs.right().decoration().state != D::Pure) return side("inj1 needs a state-pure g: " + dstr(cs.right()));
    return accept();
  }

  StepVerdict proj2() {
    if (auto v = arity(0); !v.ok()) return v;
    auto f2 = two_factors(c_.lhs, TermKind::Proj2, TermKind::PairSeq);
    if (f2.empty()) return shape("lhs must be proj2.pair(f,g)");
    const Term& pair = f2[1];
    if (c_.rhs != pair.right()) return shape("rhs must be the second component");
    Decorations f = pair.left().decoration(), g = pair.right().decoration();
    bool ok = c_.mode == Mode::Strong
                  ? f.state <= D::Ro && f.exc == D::Pure && g.exc <= D::Ro
                  : f.exc == D::Pure && (f.state <= D::Ro || g.state == D::Pure);
    if (!ok) return side("proj2 side condition fails for f " + f.str() + ", g " + g.str());
    return accept();
  }

  StepVerdict inj2() {
    if (auto v = arity(0); !v.ok()) return v;
    auto f2 = two_factors(c_.lhs, TermKind::CaseSeq, TermKind::Inj2);
    if (f2.empty()) return shape("lhs must be case(f,g).inj2");
    const Term& cs = f2[0];
    if (c_.rhs != cs.right()) return shape("rhs must be the right branch");
    Decorations f = cs.left().decoration(), g = cs.right().decoration();
    bool ok = c_.mode == Mode::Strong
                  ? f.exc <= D::Ro && f.state == D::Pure && g.state <= D::Ro
                  : f.state == D::Pure && (f.exc <= D::Ro || g.exc == D::Pure);
    if (!ok) return side("inj2 side condition fails for f " + f.str() + ", g " + g.str());
    return accept();
  }

  // pi2.<f, h.r> == h.pi2.<f, r>
  StepVerdict seq_comp() {
    if (auto v = arity(0); !v.ok()) return v;
    if (c_.mode != Mode::Strong) return shape("seq-comp is strong");
    auto f2 = two_factors(c_.lhs, TermKind::Proj2, TermKind::PairSeq);
    if (f2.empty()) return shape("lhs must be proj2.pair(f, h.r)");
    const Term& pair = f2[1];
    auto r = comp_chain(c_.rhs);
    if (r.size() < 2 || r[r.size() - 2].kind() != TermKind::Proj2 || r.back().kind() != TermKind::PairSeq)
      return shape("rhs must be h.proj2.pair(f, r)");
    const Term& inner = r.back();
    if (inner.left() != pair.left()) return shape("first components differ");
    auto h = slice(r, 0, r.size() - 2);
    auto s = comp_chain(pair.right());
    auto rest = comp_chain(inner.right());
    if (s.size() != h.size() + rest.size() || !starts_with(s, h) || !ends_with(s, rest))
      return shape("second component is not h.r");
    Term ht = from_chain(h, inner.right().target());
    if (ht.decoration().exc > D::Ro) return side("seq-comp needs a propagating h: " + dstr(ht));
    return accept();
  }

  // [f | r.h].in2 == [f | r].in2.h
  StepVerdict coseq_comp() {
    if (auto v = arity(0); !v.ok()) return v;
    if (c_.mode != Mode::Strong) return shape("coseq-comp is strong");
    auto f2 = two_factors(c_.lhs, TermKind::CaseSeq, TermKind::Inj2);
    if (f2.empty()) return shape("lhs must be case(f, r.h).inj2");
    const Term& cs = f2[0];
    auto r = comp_chain(c_.rhs);
    if (r.size() < 2 || r[0].kind() != TermKind::CaseSeq || r[1].kind() != TermKind::Inj2)
      return shape("rhs must be case(f, r).inj2.h");
    const Term& inner = r[0];
    if (inner.left() != cs.left()) return shape("left branches differ");
    auto h = slice(r, 2, r.size());
    auto s = comp_chain(cs.right());
    auto rest = comp_chain(inner.right());
    if (s.size() != h.size() + rest.size() || !starts_with(s, rest) || !ends_with(s, h))
      return shape("right branch is not r.h");
    Term ht = from_chain(h, c_.rhs.source());
    if (ht.decoration().state > D::Ro) return side("coseq-comp needs an accessor h: " + dstr(ht));
    return accept();
  }

  StepVerdict unit_seq() {
    if (auto v = arity(0); !v.ok()) return v;
    if (c_.mode != Mode::Strong) return shape("unit-seq is strong");
    auto f2 = two_factors(c_.lhs, TermKind::Proj2, TermKind::PairSeq);
    if (f2.empty() || f2[1].right().kind() != TermKind::Bang)
      return shape("lhs must be proj2.pair(e, bang)");
    const Term& pair = f2[1];
    if (c_.rhs != pair.left()) return shape("rhs must be e");
    if (pair.left().target() != ObjType::unit()) return shape("e must target 1");
    if (pair.left().decoration().exc > D::Ro) return side("unit-seq needs a propagating e: " + dstr(pair.left()));
    return accept();
  }

  StepVerdict counit_seq() {
    if (auto v = arity(0); !v.ok()) return v;
    if (c_.mode != Mode::Strong) return shape("counit-seq is strong");
    auto f2 = two_factors(c_.lhs, TermKind::CaseSeq, TermKind::Inj2);
    if (f2.empty() || f2[0].right().kind() != TermKind::Absurd)
      return shape("lhs must be case(e, absurd).inj2");
    const Term& cs = f2[0];
    if (c_.rhs != cs.left()) return shape("rhs must be e");
    if (cs.left().source() != ObjType::empty()) return shape("e must start at 0");
    if (cs.left().decoration().state > D::Ro) return side("counit-seq needs an accessor e: " + dstr(cs.left()));
    return accept();
  }

  StepVerdict split(bool states) {
    if (auto v = arity(2); !v.ok()) return v;
    const Eq& w = prem_[0];
    const Eq& s = prem_[1];
    if (c_.mode != Mode::Strong || w.mode != Mode::Weak || s.mode != Mode::Strong)
      return shape("split: weak and strong premises, strong conclusion");
    if (w.lhs != c_.lhs || w.rhs != c_.rhs) return shape("first premise must relate the conclusion's sides");
    Term l, r;
    if (states) {
      Term b = Term::bang(c_.lhs.target());
      l = canonical(Term::comp(b, c_.lhs));
      r = canonical(Term::comp(b, c_.rhs));
    } else {
      Term a = Term::absurd(c_.lhs.source());
      l = canonical(Term::comp(c_.lhs, a));
      r = canonical(Term::comp(c_.rhs, a));
    }
    if (s.lhs != l || s.rhs != r)
      return shape(states ? "second premise must be bang.f == bang.g" : "second premise must be f.absurd == g.absurd");
    for (const Term* t : {&c_.lhs, &c_.rhs}) {
      D d = states ? t->decoration().exc : t->decoration().state;
      if (d > D::Ro) return side("split needs sides with decoration <= 1 on the other axis: " + dstr(*t));
    }
    return accept();
  }

  StepVerdict ext(bool pairs) {
    if (auto v = arity(2); !v.ok()) return v;
    const ObjType& y = pairs ? c_.lhs.target() : c_.lhs.source();
    if (!y.is(pairs ? ObjType::Kind::Prod : ObjType::Kind::Sum))
      return shape(pairs ? "pair-ext needs a product target" : "case-ext needs a sum source");
    if (c_.mode > weakest(prem_[0].mode, prem_[1].mode)) return shape("conclusion is stronger than its premises");
    for (int k = 0; k < 2; ++k) {
      Term probe = pairs ? (k == 0 ? Term::proj1(y) : Term::proj2(y)) : (k == 0 ? Term::inj1(y) : Term::inj2(y));
      Term l = canonical(pairs ? Term::comp(probe, c_.lhs) : Term::comp(c_.lhs, probe));
      Term r = canonical(pairs ? Term::comp(probe, c_.rhs) : Term::comp(c_.rhs, probe));
      if (prem_[k].lhs != l || prem_[k].rhs != r)
        return shape("premise " + std::to_string(k + 1) + " does not observe component " + std::to_string(k + 1));
    }
    return accept();
  }

  const ProofStep& step_;
  const std::vector<ProofStep>& earlier_;
  const Theory& theory_;
  const CheckerOptions& options_;
  Eq c_{Term::id(ObjType::unit()), Term::id(ObjType::unit()), Mode::Strong};
  std::vector<Eq> prem_;
};

}  // namespace

std::string_view to_string(Rule r) { return entry(r).name; }

std::optional<Rule> rule_from_string(std::string_view s) {
  for (const auto& e : kRuleNames)
    if (e.name == s) return e.rule;
  return std::nullopt;
}

Rule dual(Rule r) { return entry(r).dual; }

std::string_view to_string(ProofError e) {
  switch (e) {
    case ProofError::UnknownRule: return "UnknownRule";
    case ProofError::SideConditionViolated: return "SideConditionViolated";
    case ProofError::PremiseShapeMismatch: return "PremiseShapeMismatch";
    case ProofError::BadPremise: return "BadPremise";
    case ProofError::IllTyped: return "IllTyped";
    case ProofError::GoalMismatch: return "GoalMismatch";
  }
  return "?";
}

StepVerdict check_step(const ProofStep& step, const std::vector<ProofStep>& earlier,
                       const Theory& theory, const CheckerOptions& options) {
  try {
    return StepChecker(step, earlier, theory, options).run();
  } catch (const Error& e) {
    return reject(ProofError::IllTyped, e.what());
  }
}

ScriptVerdict check_script(const ProofScript& script, const Theory& theory,
                           const CheckerOptions& options) {
  for (const Term* t : {&script.goal.lhs, &script.goal.rhs}) {
    TypedReport r = typecheck(*t, theory.signature);
    if (!r.ok) return {ProofError::IllTyped, 0, "goal: " + r.detail};
  }
  if (!parallel(script.goal)) return {ProofError::IllTyped, 0, "goal sides are not parallel"};
  if (script.steps.empty()) return {ProofError::GoalMismatch, 0, "script has no steps"};

  std::vector<ProofStep> earlier;
  earlier.reserve(script.steps.size());
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    StepVerdict v = check_step(script.steps[i], earlier, theory, options);
    if (!v.ok()) return {v.error, static_cast<int>(i + 1), v.detail};
    earlier.push_back(script.steps[i]);
  }
  const Equation& last = script.steps.back().conclusion;
  if (last.mode < script.goal.mode || canonical(last.lhs) != canonical(script.goal.lhs) ||
      canonical(last.rhs) != canonical(script.goal.rhs))
    return {ProofError::GoalMismatch, static_cast<int>(script.steps.size()),
            "last step does not conclude the goal"};
  return {};
}

ProofScript dualize(const ProofScript& script) {
  ProofScript d;
  d.goal = deceq::dualize(script.goal);
  for (const auto& s : script.steps) {
    ProofStep ds;
    ds.rule = dual(s.rule);
    for (const auto& p : s.premises)
      ds.premises.push_back(p.is_step() ? p : Premise::of_axiom(dual_label(p.label)));
    ds.conclusion = deceq::dualize(s.conclusion);
    d.steps.push_back(std::move(ds));
  }
  return d;
}

}  // namespace deceq::proof
