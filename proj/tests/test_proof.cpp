#include <gtest/gtest.h>

#include "deceq/derivations.hpp"
#include "deceq/eval.hpp"
#include "deceq/proof.hpp"
#include "deceq/theory.hpp"
#include "fixtures.hpp"

using namespace deceq;
using namespace deceq::proof;

namespace {

const ObjType V = ObjType::base("V");

Theory xy() { return states_theory({{"x", V}, {"y", V}}); }

Term op(const Theory& t, const std::string& name) { return Term::op(*t.signature.find(name)); }

ProofStep step(Rule r, std::vector<Premise> ps, Term lhs, Term rhs, Mode m) {
  return {r, std::move(ps), {std::move(lhs), std::move(rhs), m, {}}};
}

ProofScript script_of(std::vector<ProofStep> steps) {
  ProofScript s;
  s.goal = steps.back().conclusion;
  s.steps = std::move(steps);
  return s;
}

// Every conclusion of an accepted script must hold in the model: a semantic
// check that does not trust the rule table.
void expect_steps_valid(const ProofScript& s, const Theory& th, const FiniteModel& m) {
  for (std::size_t i = 0; i < s.steps.size(); ++i)
    EXPECT_TRUE(check_eq(s.steps[i].conclusion, m, th.flavor).equal())
        << "step " << i + 1 << ": " << to_string(s.steps[i].rule);
}

}  // namespace

TEST(Derivations, SevenLawsAcceptedAndSemanticallyValid) {
  for (const auto& m : fixtures::state_models()) {
    if (m.locations().size() < 2) continue;
    Theory th = theory_for(m);
    auto laws = seven_laws(th);
    auto scripts = derive_seven_laws(th);
    ASSERT_EQ(scripts.size(), 7u);
    for (int n = 1; n <= 7; ++n) {
      const ProofScript& s = scripts[n - 1];
      ScriptVerdict v = check_script(s, th);
      EXPECT_TRUE(v.ok()) << "law " << n << " step " << v.failing_step << ": " << v.detail;
      EXPECT_TRUE(same_equation(s.goal, laws[n - 1])) << "law " << n;
      expect_steps_valid(s, th, m);
    }
  }
}

TEST(Derivations, DualLawsAcceptedAndSemanticallyValid) {
  for (const auto& m : fixtures::exception_models()) {
    if (m.exceptions().size() < 2) continue;
    Theory th = theory_for(m);
    auto colaws = dual_seven_laws(th);
    for (int n = 1; n <= 7; ++n) {
      ProofScript s = derive_dual_law(th, n);
      ScriptVerdict v = check_script(s, th);
      EXPECT_TRUE(v.ok()) << "colaw " << n << " step " << v.failing_step << ": " << v.detail;
      EXPECT_TRUE(same_equation(s.goal, colaws[n - 1])) << "colaw " << n;
      expect_steps_valid(s, th, m);
    }
  }
}

TEST(Derivations, SingleLocationLimits) {
  Theory th = states_theory({{"x", V}});
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(check_script(derive_law(th, n), th).ok());
  EXPECT_THROW(derive_law(th, 5), Error);
  EXPECT_THROW(derive_law(th, 8), Error);
}

TEST(Derivations, BundledScriptsMatchGenerator) {
  Theory st = theory_for(load_model(fixtures::data("models/states_xy.model")));
  Theory ex = theory_for(load_model(fixtures::data("models/exceptions_e12.model")));
  for (int n = 1; n <= 7; ++n) {
    std::string law = read_file(fixtures::data("proofs/law" + std::to_string(n) + ".proof"));
    std::string colaw = read_file(fixtures::data("proofs/colaw" + std::to_string(n) + ".proof"));
    EXPECT_EQ(law, print_script(derive_law(st, n))) << n;
    EXPECT_EQ(colaw, print_script(derive_dual_law(ex, n))) << n;
    EXPECT_TRUE(check_script(parse_script(law, st.signature), st).ok());
    EXPECT_TRUE(check_script(parse_script(colaw, ex.signature), ex).ok());
  }
}

TEST(Scripts, TextRoundTrip) {
  Theory th = xy();
  for (const auto& s : derive_seven_laws(th)) {
    std::string text = print_script(s);
    ProofScript back = parse_script(text, th.signature);
    EXPECT_EQ(print_script(back), text);
    ASSERT_EQ(back.steps.size(), s.steps.size());
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
      EXPECT_EQ(back.steps[i].rule, s.steps[i].rule);
      EXPECT_EQ(back.steps[i].premises, s.steps[i].premises);
      EXPECT_TRUE(same_equation(back.steps[i].conclusion, s.steps[i].conclusion));
    }
  }
  std::string ascii = "goal strong id(V) = id(V)\nstep 1: refl |- strong id(V) = id(V)\n";
  EXPECT_TRUE(check_script(parse_script(ascii, th.signature), th).ok());
}

TEST(Scripts, DualizeIsAnInvolution) {
  Theory th = xy();
  for (const auto& s : derive_seven_laws(th))
    EXPECT_EQ(print_script(dualize(dualize(s))), print_script(s));
  for (auto r : kAllRules) EXPECT_EQ(dual(dual(r)), r);
}

TEST(Rejections, BundledBadScript) {
  Theory th = theory_for(load_model(fixtures::data("models/states_x.model")));
  ProofScript s = parse_script(read_file(fixtures::data("proofs/bad_weak_repl.proof")), th.signature);
  ScriptVerdict v = check_script(s, th);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(*v.error, ProofError::SideConditionViolated);
  EXPECT_EQ(v.failing_step, 2);
}

TEST(Rejections, UnknownRule) {
  Theory th = xy();
  try {
    parse_script("goal strong id(V) = id(V)\nstep 1: magic |- strong id(V) = id(V)\n", th.signature);
    FAIL() << "parsed an unknown rule";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("magic"), std::string::npos);
  }
  EXPECT_FALSE(rule_from_string("magic").has_value());
  EXPECT_EQ(rule_from_string("pair-ext"), Rule::PairExt);
}

TEST(Rejections, SideConditions) {
  Theory th = xy();
  Term lx = op(th, "lookup_x"), ux = op(th, "update_x");
  // Weak substitution with an exception-free h is fine; weak replacement
  // under an updating context is not.
  ProofScript ok = script_of({step(Rule::Axiom, {Premise::of_axiom("ax1_x")}, Term::comp(lx, ux), Term::id(V),
                                   Mode::Weak),
                              step(Rule::Subs, {Premise::of_step(1)}, Term::comp(Term::comp(lx, ux), lx),
                                   lx, Mode::Weak)});
  EXPECT_TRUE(check_script(ok, th).ok());
  ProofScript bad = script_of({step(Rule::Axiom, {Premise::of_axiom("ax1_x")}, Term::comp(lx, ux),
                                    Term::id(V), Mode::Weak),
                               step(Rule::Repl, {Premise::of_step(1)}, Term::comp(ux, Term::comp(lx, ux)), ux,
                                    Mode::Weak)});
  ScriptVerdict v = check_script(bad, th);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(*v.error, ProofError::SideConditionViolated);
  // effect needs both sides to be accessors.
  ProofScript eff = script_of({step(Rule::Axiom, {Premise::of_axiom("ax1_x")}, Term::comp(lx, ux),
                                    Term::id(V), Mode::Weak),
                               step(Rule::Effect, {Premise::of_step(1)}, Term::comp(lx, ux), Term::id(V),
                                    Mode::Strong)});
  v = check_script(eff, th);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(*v.error, ProofError::SideConditionViolated);
  // proj1 may drop a modifier, but only weakly.
  Term pr = Term::comp(Term::proj1(ObjType::prod(V, ObjType::unit())), Term::pair(lx, Term::comp(ux, lx)));
  EXPECT_TRUE(check_script(script_of({step(Rule::Proj1, {}, pr, lx, Mode::Weak)}), th).ok());
  EXPECT_FALSE(check_script(script_of({step(Rule::Proj1, {}, pr, lx, Mode::Strong)}), th).ok());
}

TEST(Rejections, ShapesPremisesTypingGoal) {
  Theory th = xy();
  Term lx = op(th, "lookup_x"), ly = op(th, "lookup_y"), ux = op(th, "update_x");
  // trans whose middle terms differ.
  ProofScript shape = script_of({step(Rule::Refl, {}, lx, lx, Mode::Strong),
                                 step(Rule::Refl, {}, ly, ly, Mode::Strong),
                                 step(Rule::Trans, {Premise::of_step(1), Premise::of_step(2)}, lx, ly,
                                      Mode::Strong)});
  ScriptVerdict v = check_script(shape, th);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(*v.error, ProofError::PremiseShapeMismatch);
  EXPECT_EQ(v.failing_step, 3);

  ProofScript forward = script_of({step(Rule::Sym, {Premise::of_step(2)}, lx, lx, Mode::Strong),
                                   step(Rule::Refl, {}, lx, lx, Mode::Strong)});
  v = check_script(forward, th);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(*v.error, ProofError::BadPremise);
  EXPECT_EQ(v.failing_step, 1);

  ProofScript unknown_ax = script_of({step(Rule::Axiom, {Premise::of_axiom("ax9")}, lx, lx, Mode::Strong)});
  EXPECT_EQ(*check_script(unknown_ax, th).error, ProofError::BadPremise);

  ProofScript typing = script_of({step(Rule::Refl, {}, Term::comp(lx, lx), Term::comp(lx, lx), Mode::Strong)});
  EXPECT_EQ(*check_script(typing, th).error, ProofError::IllTyped);

  ProofScript goal = script_of({step(Rule::Refl, {}, lx, lx, Mode::Strong)});
  goal.goal = {ly, ly, Mode::Strong, {}};
  v = check_script(goal, th);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(*v.error, ProofError::GoalMismatch);

  // A weak step cannot close a strong goal.
  ProofScript weak = script_of({step(Rule::Axiom, {Premise::of_axiom("ax1_x")}, Term::comp(lx, ux), Term::id(V),
                                     Mode::Weak)});
  weak.goal.mode = Mode::Strong;
  EXPECT_EQ(*check_script(weak, th).error, ProofError::GoalMismatch);

  ProofScript empty;
  empty.goal = {lx, lx, Mode::Strong, {}};
  EXPECT_EQ(*check_script(empty, th).error, ProofError::GoalMismatch);
}

TEST(Rejections, CheckStepMatchesCheckScript) {
  Theory th = xy();
  ProofScript s = derive_law(th, 6);
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    std::vector<ProofStep> earlier(s.steps.begin(), s.steps.begin() + i);
    EXPECT_TRUE(check_step(s.steps[i], earlier, th).ok()) << i + 1;
  }
  // Corrupting any single conclusion is caught at that step.
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    ProofScript bad = s;
    Term& side = bad.steps[i].conclusion.rhs;
    side = Term::comp(side, Term::comp(op(th, "update_y"), op(th, "lookup_y")));
    ScriptVerdict v = check_script(bad, th);
    EXPECT_FALSE(v.ok()) << "corrupted step " << i + 1 << " accepted";
    if (!v.ok()) EXPECT_LE(v.failing_step, static_cast<int>(i) + 1);
  }
}
