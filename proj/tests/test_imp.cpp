#include <gtest/gtest.h>

#include "deceq/eval.hpp"
#include "deceq/imp.hpp"
#include "fixtures.hpp"
#include "reference_imp.hpp"

using namespace deceq;
using namespace deceq::imp;

namespace {

template <class F>
ErrorKind kind_of(F f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

ref::Verdict ref_verdict(imp::Verdict v) {
  switch (v) {
    case imp::Verdict::StrongEq: return ref::Verdict::StrongEq;
    case imp::Verdict::WeakEq: return ref::Verdict::WeakEq;
    case imp::Verdict::NotEq: return ref::Verdict::NotEq;
    case imp::Verdict::FuelExhausted: return ref::Verdict::FuelExhausted;
  }
  return ref::Verdict::NotEq;
}

// Runs the elaborated term from every state and compares with the reference
// interpreter.
void expect_agrees(const Cmd& c, const FiniteModel& m, int fuel) {
  Theory th = imp_theory(m);
  Term t = elaborate(c, th, m, fuel);
  for (const auto& s : m.states()) {
    ref::Outcome want = ref::Interpreter(m, fuel).run(c, s);
    ref::Outcome got = ref::from_term(eval(t, m, Value::unit(), s), m);
    ASSERT_EQ(got, want) << print(c) << " from " << m.format_state(s);
  }
}

}  // namespace

TEST(ImpParser, Examples) {
  CmdPtr p = parse("x := 1; y := x");
  EXPECT_EQ(*p, *Cmd::seq(Cmd::assign("x", AExp::lit("1")), Cmd::assign("y", AExp::read("x"))));

  p = parse("x := 1 + y * 0");
  auto want = AExp::bin(AExp::Kind::Add, AExp::lit("1"), AExp::bin(AExp::Kind::Mul, AExp::read("y"), AExp::lit("0")));
  EXPECT_EQ(*p, *Cmd::assign("x", want));

  p = parse("if (x = 1) and not y <= 0 then { skip } else { x := 0 }");
  ASSERT_EQ(p->kind, Cmd::Kind::If);
  EXPECT_EQ(p->cond->kind, BExp::Kind::And);

  p = parse("try { throw e(1) } catch f(x) { skip } catch e(y) { x := y }");
  ASSERT_EQ(p->kind, Cmd::Kind::TryCatch);
  ASSERT_EQ(p->handlers.size(), 2u);
  EXPECT_EQ(p->handlers[1].exception, "e");
  EXPECT_EQ(p->handlers[1].binder, "y");

  EXPECT_EQ(*parse("# comment\nwhile x <= 1 do { x := x - 1 }"),
            *Cmd::while_(BExp::cmp(BExp::Kind::Le, AExp::read("x"), AExp::lit("1")),
                         Cmd::assign("x", AExp::bin(AExp::Kind::Sub, AExp::read("x"), AExp::lit("1")))));
}

TEST(ImpParser, SyntaxErrorsCarryPosition) {
  try {
    parse("x := 1;\n  y = 2");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
    EXPECT_EQ(std::string(e.what()).substr(0, 4), "2:5:") << e.what();
  }
  EXPECT_EQ(kind_of([] { parse("if true then { skip }"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { parse("skip := 1"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { parse("try { skip }"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { parse("x := 1 skip"); }), ErrorKind::SyntaxError);
}

// Property: printing then parsing gives back the same (right-nested) AST.
TEST(ImpProperties, PrintParseRoundTrip) {
  fixtures::ProgramGen gen(5, true, true);
  for (int n = 0; n < 500; ++n) {
    CmdPtr c = fixtures::right_nested(gen.cmd(4));
    std::string text = print(*c);
    CmdPtr back = parse(text);
    ASSERT_EQ(*back, *c) << text;
    ASSERT_EQ(print(*back), text);
  }
}

// Property: the elaborated term evaluates exactly like the reference
// interpreter, with and without loops and exceptions.
TEST(ImpProperties, ElaborationAgreesWithReference) {
  FiniteModel m = fixtures::imp_model();
  for (bool loops : {false, true})
    for (bool exc : {false, true}) {
      fixtures::ProgramGen gen(100 + 2 * loops + exc, loops, exc);
      for (int n = 0; n < 150; ++n) expect_agrees(*gen.cmd(4), m, 4);
    }
}

TEST(ImpProperties, CheckEquivAgreesWithReference) {
  FiniteModel m = fixtures::imp_model();
  fixtures::ProgramGen gen(77, true, true);
  int seen[4] = {0, 0, 0, 0};
  for (int n = 0; n < 300; ++n) {
    CmdPtr a = gen.cmd(3);
    CmdPtr b = n % 3 == 0 ? a : gen.cmd(3);
    EquivResult got = check_equiv(*a, *b, m, 4);
    ref::Comparison want = ref::compare(*a, *b, m, 4);
    ASSERT_EQ(ref_verdict(got.verdict), want.verdict) << print(*a) << " vs " << print(*b);
    ASSERT_EQ(got.state, want.state);
    ++seen[static_cast<int>(got.verdict)];
  }
  EXPECT_GT(seen[static_cast<int>(imp::Verdict::StrongEq)], 0);
  EXPECT_GT(seen[static_cast<int>(imp::Verdict::NotEq)], 0);
}

struct Pair {
  const char* a;
  const char* b;
  imp::Verdict want;
};

TEST(ImpEquiv, Corpus) {
  FiniteModel m = fixtures::imp_model();
  const Pair corpus[] = {
      {"x := 1; y := x", "x := 1; y := 1", imp::Verdict::StrongEq},
      {"try { throw e(0) } catch e(v) { skip }", "skip", imp::Verdict::StrongEq},
      {"try { x := 1; throw e(0) } catch e(v) { skip }", "x := 1", imp::Verdict::StrongEq},
      {"while x = 1 do { x := 0 }", "x := 0", imp::Verdict::StrongEq},
      {"x := y", "x := 0", imp::Verdict::WeakEq},
      {"x := 1", "x := 0", imp::Verdict::WeakEq},
      {"throw e(1)", "throw e(0)", imp::Verdict::NotEq},
      {"throw e(1)", "throw f(1)", imp::Verdict::NotEq},
      {"try { throw e(1) } catch e(v) { x := v }", "x := 1", imp::Verdict::StrongEq},
      {"try { throw f(1) } catch e(v) { skip }", "throw f(1)", imp::Verdict::StrongEq},
      {"try { throw f(1) } catch e(v) { skip } catch f(y) { x := y }", "x := 1", imp::Verdict::StrongEq},
      {"try { throw e(1) } catch e(v) { throw f(v) }", "throw f(1)", imp::Verdict::WeakEq},
      {"try { throw e(1) } catch e(v) { throw f(v) }", "throw f(0)", imp::Verdict::NotEq},
      {"if x = 0 then { x := 1 } else { x := 0 }", "x := 1 - x", imp::Verdict::StrongEq},
      {"x := x + x", "x := 0", imp::Verdict::StrongEq},
      {"while true do { skip }", "skip", imp::Verdict::FuelExhausted},
      {"if x = 1 then { throw e(0) } else { skip }", "skip", imp::Verdict::NotEq},
  };
  for (const auto& p : corpus) {
    CmdPtr a = parse(p.a), b = parse(p.b);
    EquivResult r = check_equiv(*a, *b, m, 8);
    ref::Comparison oracle = ref::compare(*a, *b, m, 8);
    EXPECT_EQ(ref_verdict(r.verdict), oracle.verdict) << p.a << " vs " << p.b;
    EXPECT_EQ(r.verdict, p.want) << p.a << " vs " << p.b << ": " << r.str(m);
  }
}

TEST(ImpEquiv, ReportedStates) {
  FiniteModel m = fixtures::imp_model();
  EquivResult r = check_equiv(*parse("if x = 1 then { throw e(0) } else { skip }"), *parse("skip"), m);
  EXPECT_EQ(r.str(m), "NotEq x=1,y=0,v=0");
  r = check_equiv(*parse("while y = 1 do { skip }"), *parse("skip"), m);
  EXPECT_EQ(r.str(m), "FuelExhausted x=0,y=1,v=0");
  EXPECT_EQ(check_equiv(*parse("x := 0"), *parse("x := 0"), m).str(m), "StrongEq");
}

TEST(ImpEquiv, BundledPrograms) {
  FiniteModel m = load_model(fixtures::data("models/imp.model"));
  auto prog = [](const char* f) { return load(fixtures::data(std::string("imp/") + f + ".imp")); };
  EXPECT_EQ(check_equiv(*prog("write_read"), *prog("write_const"), m).verdict, imp::Verdict::StrongEq);
  EXPECT_EQ(check_equiv(*prog("throw_catch"), *prog("skip"), m).verdict, imp::Verdict::StrongEq);
  EXPECT_EQ(check_equiv(*prog("write_throw"), *prog("set_x"), m).verdict, imp::Verdict::StrongEq);
  EXPECT_EQ(check_equiv(*prog("loop_reset"), *prog("reset"), m).verdict, imp::Verdict::StrongEq);
  EXPECT_EQ(check_equiv(*prog("spin"), *prog("skip"), m).verdict, imp::Verdict::FuelExhausted);
  EXPECT_EQ(check_equiv(*prog("copy_y"), *prog("reset"), m).verdict, imp::Verdict::WeakEq);
}

// Property: once a run finishes within some fuel, more fuel changes nothing.
TEST(ImpProperties, FuelMonotonicity) {
  FiniteModel m = fixtures::imp_model3();
  Theory th = imp_theory(m);
  CmdPtr countdown = parse("while not x = 0 do { x := x - 1; y := y + 1 }");
  for (const auto& s : m.states()) {
    int needed = s[0];
    for (int fuel = 0; fuel <= 4; ++fuel) {
      Outcome o = eval(elaborate(*countdown, th, m, fuel), m, Value::unit(), s);
      bool exhausted = !is_ordinary(o.result) && raised(o.result).fuel_exhausted();
      EXPECT_EQ(exhausted, fuel < needed) << m.format_state(s) << " fuel " << fuel;
    }
  }
  FiniteModel m2 = fixtures::imp_model();
  Theory th2 = imp_theory(m2);
  fixtures::ProgramGen gen(9, true, true);
  for (int n = 0; n < 100; ++n) {
    CmdPtr c = gen.cmd(4);
    for (const auto& s : m2.states()) {
      std::optional<Outcome> first;
      for (int fuel = 0; fuel <= 5; ++fuel) {
        Outcome o = eval(elaborate(*c, th2, m2, fuel), m2, Value::unit(), s);
        bool exhausted = !is_ordinary(o.result) && raised(o.result).fuel_exhausted();
        if (first) ASSERT_EQ(o, *first) << print(*c);
        else if (!exhausted) first = o;
      }
    }
  }
}

TEST(ImpDecorations, Bounds) {
  FiniteModel m = fixtures::imp_model();
  Theory th = imp_theory(m);
  auto deco = [&](const char* src) { return infer_decoration(elaborate(*parse(src), th, m)); };
  EXPECT_EQ(deco("skip"), (Decorations{Decoration::Pure, Decoration::Pure}));
  EXPECT_EQ(deco("if x = 1 then { skip } else { skip }"), (Decorations{Decoration::Ro, Decoration::Pure}));
  EXPECT_EQ(deco("x := y"), (Decorations{Decoration::Rw, Decoration::Pure}));
  EXPECT_EQ(deco("throw e(0)"), (Decorations{Decoration::Pure, Decoration::Ro}));
  EXPECT_EQ(deco("while x = 1 do { skip }").exc, Decoration::Ro);
  // try/catch holds untag, so syntactically it is a catcher.
  EXPECT_EQ(deco("try { skip } catch e(v) { skip }"), (Decorations{Decoration::Rw, Decoration::Rw}));
}

// A try/catch never catches exceptions raised before it runs: on exceptional
// input it propagates unchanged, like any term of exception level 1.
TEST(ImpDecorations, TryCatchIsEncapsulated) {
  FiniteModel m = fixtures::imp_model();
  Theory th = imp_theory(m);
  fixtures::ProgramGen gen(41, false, true);
  int tries = 0;
  for (int n = 0; n < 200; ++n) {
    CmdPtr c = gen.cmd(4);
    if (c->kind != Cmd::Kind::TryCatch) continue;
    ++tries;
    Term t = elaborate(*c, th, m);
    for (const auto& s : m.states())
      for (const auto& r : m.exception_space()) {
        Outcome o = eval(t, m, r, s);
        ASSERT_EQ(o.result, Result(r)) << print(*c);
        ASSERT_EQ(o.state, s) << print(*c);
      }
  }
  EXPECT_GT(tries, 10);
}

TEST(ImpErrors, Kinds) {
  FiniteModel m = fixtures::imp_model();
  Theory th = imp_theory(m);
  auto elab = [&](const char* src) { return [&th, &m, src] { elaborate(*parse(src), th, m); }; };
  EXPECT_EQ(kind_of(elab("z := 1")), ErrorKind::UndeclaredLocation);
  EXPECT_EQ(kind_of(elab("x := z")), ErrorKind::UndeclaredLocation);
  EXPECT_EQ(kind_of(elab("try { skip } catch e(z) { skip }")), ErrorKind::UndeclaredLocation);
  EXPECT_EQ(kind_of(elab("throw g(0)")), ErrorKind::UndeclaredException);
  EXPECT_EQ(kind_of(elab("try { skip } catch g(v) { skip }")), ErrorKind::UndeclaredException);
  EXPECT_EQ(kind_of(elab("x := 7")), ErrorKind::TypeMismatch);

  FiniteModel mixed = make_model({{"V", fixtures::atoms(2)}, {"W", {"a", "b"}}}, {{"x", "V"}, {"w", "W"}},
                                 {{"e", "V"}});
  Theory tm = imp_theory(mixed);
  auto elab2 = [&](const char* src) { return [&tm, &mixed, src] { elaborate(*parse(src), tm, mixed); }; };
  EXPECT_EQ(kind_of(elab2("x := w")), ErrorKind::TypeMismatch);
  EXPECT_EQ(kind_of(elab2("try { skip } catch e(w) { skip }")), ErrorKind::TypeMismatch);
  EXPECT_EQ(kind_of(elab2("w := 0")), ErrorKind::TypeMismatch);
  EXPECT_NO_THROW(elaborate(*parse("w := w"), tm, mixed));
  EXPECT_EQ(kind_of([&] { elaborate(*parse("skip"), tm, mixed, -1); }), ErrorKind::InvalidArgument);
}
