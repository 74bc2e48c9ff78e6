#include <gtest/gtest.h>

#include "deceq/laws.hpp"
#include "deceq/theory.hpp"
#include "deceq/term_text.hpp"
#include "fixtures.hpp"

using namespace deceq;

namespace {

const ObjType V = ObjType::base("V");

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

// All-zero state, every other location untouched; the first strong
// counterexample of law 4 writes atom 1 into the first location.
void expect_law4_counterexample(const LawResult& r, const FiniteModel& m) {
  ASSERT_FALSE(r.strong.equal());
  const Counterexample& c = *r.strong.counterexample;
  EXPECT_EQ(c.state, State(m.locations().size(), 0));
  if (!r.dual) {
    EXPECT_EQ(c.input, Result(Value::atom(1)));
    EXPECT_EQ(c.lhs.state[0], 1);
    EXPECT_EQ(c.rhs.state[0], 0);
  } else {
    // Dual: an exception in flight is caught by one side only.
    EXPECT_FALSE(is_ordinary(c.input));
    EXPECT_TRUE(is_ordinary(c.lhs.result) != is_ordinary(c.rhs.result));
  }
}

}  // namespace

TEST(Laws, StateLawsInEveryModel) {
  for (const auto& m : fixtures::state_models()) {
    auto results = check_laws(m);
    std::size_t want = m.locations().size() == 1 ? 4 : 7;
    ASSERT_EQ(results.size(), want) << m.str();
    for (const auto& r : results) {
      EXPECT_FALSE(r.dual);
      EXPECT_TRUE(r.passed()) << format_law(r, m);
      if (r.number == 4) {
        EXPECT_EQ(r.law.mode, Mode::Weak);
        expect_law4_counterexample(r, m);
      } else {
        EXPECT_EQ(r.law.mode, Mode::Strong);
        EXPECT_TRUE(r.strong.equal()) << format_law(r, m);
      }
    }
  }
}

TEST(Laws, DualLawsInEveryModel) {
  for (const auto& m : fixtures::exception_models()) {
    auto results = check_laws(m);
    std::size_t want = m.exceptions().size() == 1 ? 4 : 7;
    ASSERT_EQ(results.size(), want) << m.str();
    for (const auto& r : results) {
      EXPECT_TRUE(r.dual);
      EXPECT_TRUE(r.passed()) << format_law(r, m);
      if (r.number == 4) {
        EXPECT_EQ(r.law.mode, Mode::Weak);
        expect_law4_counterexample(r, m);
      } else {
        EXPECT_TRUE(r.strong.equal()) << format_law(r, m);
      }
    }
  }
}

TEST(Laws, ReportLines) {
  FiniteModel m = load_model(fixtures::data("models/states_x.model"));
  auto rs = check_laws(m);
  ASSERT_EQ(rs.size(), 4u);
  EXPECT_EQ(format_law(rs[0], m), "LAW 1 STRONG ok");
  EXPECT_EQ(format_law(rs[3], m), "LAW 4 WEAK ok STRONG counterexample: x=0,v=1");
}

TEST(Laws, DualLawsAreDualsOfStateLaws) {
  Theory st = states_theory({{"x", V}, {"y", V}});
  Theory ex = dualize(st);
  auto laws = seven_laws(st);
  auto colaws = dual_seven_laws(ex);
  ASSERT_EQ(laws.size(), 7u);
  ASSERT_EQ(colaws.size(), 7u);
  for (std::size_t i = 0; i < 7; ++i) {
    EXPECT_EQ(colaws[i].label, "co" + laws[i].label);
    EXPECT_TRUE(same_equation(dualize(laws[i]), colaws[i])) << laws[i].label;
  }
}

TEST(Theories, DualizeIsAnInvolution) {
  Theory st = states_theory({{"x", V}, {"y", ObjType::base("W")}});
  Theory ex = dualize(st);
  EXPECT_EQ(ex.flavor, Flavor::Exceptions);
  EXPECT_EQ(print_theory(dualize(ex)), print_theory(st));
  for (const auto& op : ex.signature.ops()) {
    EXPECT_EQ(op.decoration.state, Decoration::Pure);
    EXPECT_NE(op.decoration.exc, Decoration::Pure);
  }
  ASSERT_NE(ex.axiom("coax1_x"), nullptr);
  EXPECT_EQ(dual_label("ax1_x"), "coax1_x");
  EXPECT_EQ(dual_label("coax1_x"), "ax1_x");
}

TEST(Theories, TextRoundTrip) {
  Theory st = states_theory({{"x", V}, {"y", V}});
  std::string text = print_theory(st);
  EXPECT_EQ(print_theory(parse_theory(text)), text);
  Theory ex = dualize(st);
  EXPECT_EQ(print_theory(parse_theory(print_theory(ex))), print_theory(ex));
  EXPECT_EQ(print_theory(parse_theory(read_file(fixtures::data("theories/states_xy.theory")))), text);
}

TEST(Theories, Combine) {
  Theory st = states_theory({{"x", V}});
  Theory ex = dualize(states_theory({{"e", V}}));
  Theory both = combine(st, ex);
  EXPECT_EQ(both.flavor, Flavor::Combined);
  EXPECT_NE(both.signature.find("lookup_x"), nullptr);
  EXPECT_NE(both.signature.find("tag_e"), nullptr);
  Theory clash = st;
  clash.signature.add(*ex.signature.find("tag_e"));
  EXPECT_EQ(kind_of([&] { combine(clash, ex); }), ErrorKind::NameClash);
  EXPECT_EQ(kind_of([&] { combine(ex, st); }), ErrorKind::WrongFlavor);
}

TEST(Theories, ErrorKinds) {
  EXPECT_EQ(kind_of([] { states_theory({{"x", V}, {"x", V}}); }), ErrorKind::DuplicateLocation);
  EXPECT_EQ(kind_of([] { states_theory({}); }), ErrorKind::InvalidArgument);
  Theory ex = dualize(states_theory({{"e", V}}));
  EXPECT_EQ(kind_of([&] { seven_laws(ex); }), ErrorKind::WrongFlavor);
  EXPECT_EQ(kind_of([] { dualize(Term::constant(V, "0")); }), ErrorKind::NotDualizable);
  Theory both = combine(states_theory({{"x", V}}), ex);
  EXPECT_EQ(kind_of([&] { dualize(both); }), ErrorKind::WrongFlavor);
  Signature sig;
  sig.add(ex.signature.ops()[0]);
  EXPECT_EQ(kind_of([&] { sig.add(ex.signature.ops()[0]); }), ErrorKind::NameClash);
}

TEST(Theories, AxiomsHoldInModels) {
  for (const auto& m : fixtures::state_models()) {
    Theory th = theory_for(m);
    for (const auto& ax : th.axioms) EXPECT_TRUE(check_eq(ax, m, th.flavor).equal()) << ax.label;
  }
  for (const auto& m : fixtures::exception_models()) {
    Theory th = theory_for(m);
    for (const auto& ax : th.axioms) EXPECT_TRUE(check_eq(ax, m, th.flavor).equal()) << ax.label;
  }
}
