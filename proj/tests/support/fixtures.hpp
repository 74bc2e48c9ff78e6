#pragma once

#include <random>
#include <string>
#include <vector>

#include "deceq/imp.hpp"
#include "deceq/model.hpp"
#include "deceq/term.hpp"

namespace fixtures {

inline std::string data(const std::string& rel) { return std::string(DECEQ_DATA_DIR) + "/" + rel; }

inline std::vector<std::string> atoms(int n) {
  std::vector<std::string> out;
  for (int k = 0; k < n; ++k) out.push_back(std::to_string(k));
  return out;
}

// Every model with 1-2 locations over one carrier of size 2-3.
inline std::vector<deceq::FiniteModel> state_models() {
  std::vector<deceq::FiniteModel> out;
  for (int n : {2, 3}) {
    out.push_back(deceq::make_model({{"V", atoms(n)}}, {{"x", "V"}}));
    out.push_back(deceq::make_model({{"V", atoms(n)}}, {{"x", "V"}, {"y", "V"}}));
  }
  // Locations of different types.
  out.push_back(deceq::make_model({{"V", atoms(2)}, {"W", atoms(3)}}, {{"x", "V"}, {"y", "W"}}));
  return out;
}

// Every model with 1-2 exception names over parameter carriers of size 2-3.
inline std::vector<deceq::FiniteModel> exception_models() {
  std::vector<deceq::FiniteModel> out;
  for (int n : {2, 3}) {
    out.push_back(deceq::make_model({{"P", atoms(n)}}, {}, {{"e1", "P"}}));
    out.push_back(deceq::make_model({{"P", atoms(n)}}, {}, {{"e1", "P"}, {"e2", "P"}}));
  }
  out.push_back(deceq::make_model({{"P", atoms(2)}, {"Q", atoms(3)}}, {}, {{"e1", "P"}, {"e2", "Q"}}));
  return out;
}

inline deceq::FiniteModel imp_model() {
  return deceq::make_model({{"V", atoms(2)}}, {{"x", "V"}, {"y", "V"}, {"v", "V"}}, {{"e", "V"}, {"f", "V"}});
}

inline deceq::FiniteModel imp_model3() {
  return deceq::make_model({{"V", atoms(3)}}, {{"x", "V"}, {"y", "V"}, {"v", "V"}}, {{"e", "V"}});
}

// Decoration oracle: leaves carry their own decoration, every other node the
// pointwise max over its children.
inline deceq::Decorations expected_decoration(const deceq::Term& t) {
  using deceq::TermKind;
  switch (t.kind()) {
    case TermKind::Op: return t.symbol().decoration;
    case TermKind::Comp:
    case TermKind::PairSeq:
    case TermKind::CaseSeq: {
      deceq::Decorations a = expected_decoration(t.left());
      deceq::Decorations b = expected_decoration(t.right());
      return {std::max(a.state, b.state), std::max(a.exc, b.exc)};
    }
    default: return {};
  }
}

// Random IMP programs over imp_model()'s names. `loops` and `exceptions`
// switch the corresponding constructs on.
class ProgramGen {
 public:
  ProgramGen(std::uint64_t seed, bool loops, bool exceptions)
      : rng_(seed), loops_(loops), exceptions_(exceptions) {}

  deceq::imp::CmdPtr cmd(int depth) {
    using namespace deceq::imp;
    int pick = upto(depth <= 0 ? 2 : 7);
    switch (pick) {
      case 0: return Cmd::skip();
      case 1:
      case 2: return Cmd::assign(loc(), aexp(2));
      case 3: return Cmd::seq(cmd(depth - 1), cmd(depth - 1));
      case 4: return Cmd::if_(bexp(2), cmd(depth - 1), cmd(depth - 1));
      case 5:
        if (loops_) {
          // Counting loop that always terminates within the carrier size.
          std::string l = loc();
          return Cmd::while_(BExp::negate(BExp::cmp(BExp::Kind::Eq, AExp::read(l), AExp::lit("0"))),
                             Cmd::seq(cmd(depth - 2), Cmd::assign(l, AExp::lit("0"))));
        }
        return Cmd::assign(loc(), aexp(2));
      case 6:
        if (exceptions_) {
          if (upto(2) == 0) return Cmd::throw_(exc(), aexp(1));
          std::vector<Handler> hs;
          int n = 1 + upto(2);
          for (int k = 0; k < n; ++k) hs.push_back({exc(), loc(), cmd(depth - 1)});
          return Cmd::try_(cmd(depth - 1), std::move(hs));
        }
        return Cmd::skip();
    }
    return Cmd::skip();
  }

  deceq::imp::AExpPtr aexp(int depth) {
    using namespace deceq::imp;
    int pick = upto(depth <= 0 ? 2 : 5);
    if (pick == 0) return AExp::lit(std::to_string(upto(2)));
    if (pick == 1) return AExp::read(loc());
    AExp::Kind k = pick == 2 ? AExp::Kind::Add : pick == 3 ? AExp::Kind::Sub : AExp::Kind::Mul;
    return AExp::bin(k, aexp(depth - 1), aexp(depth - 1));
  }

  deceq::imp::BExpPtr bexp(int depth) {
    using namespace deceq::imp;
    int pick = upto(depth <= 0 ? 4 : 6);
    switch (pick) {
      case 0: return BExp::constant(upto(2) == 0);
      case 1:
      case 2: return BExp::cmp(BExp::Kind::Eq, aexp(1), aexp(1));
      case 3: return BExp::cmp(BExp::Kind::Le, aexp(1), aexp(1));
      case 4: return BExp::negate(bexp(depth - 1));
      default: return BExp::conj(bexp(depth - 1), bexp(depth - 1));
    }
  }

 private:
  int upto(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::string loc() { return std::vector<std::string>{"x", "y", "v"}[upto(3)]; }
  std::string exc() { return upto(2) ? "e" : "f"; }

  std::mt19937_64 rng_;
  bool loops_;
  bool exceptions_;
};

// Right-nests every sequence, the shape the parser produces.
inline deceq::imp::CmdPtr right_nested(const deceq::imp::CmdPtr& c) {
  using namespace deceq::imp;
  switch (c->kind) {
    case Cmd::Kind::Seq: {
      CmdPtr a = right_nested(c->first);
      CmdPtr b = right_nested(c->second);
      if (a->kind != Cmd::Kind::Seq) return Cmd::seq(a, b);
      return right_nested(Cmd::seq(a->first, Cmd::seq(a->second, b)));
    }
    case Cmd::Kind::If: return Cmd::if_(c->cond, right_nested(c->first), right_nested(c->second));
    case Cmd::Kind::While: return Cmd::while_(c->cond, right_nested(c->first));
    case Cmd::Kind::TryCatch: {
      std::vector<Handler> hs;
      for (const auto& h : c->handlers) hs.push_back({h.exception, h.binder, right_nested(h.body)});
      return Cmd::try_(right_nested(c->first), std::move(hs));
    }
    default: return c;
  }
}

}  // namespace fixtures
