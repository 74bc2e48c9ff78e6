#include "deceq/soundness.hpp"

#include <functional>

namespace deceq {

TermGenerator::TermGenerator(const Theory& theory, const FiniteModel& model, std::uint64_t seed)
    : theory_(theory), model_(model), rng_(seed) {
  types_ = {ObjType::unit(), ObjType::empty(), ObjType::sum(ObjType::unit(), ObjType::unit())};
  if (!model.carriers().empty()) {
    ObjType b = ObjType::base(model.carriers().front().name);
    types_.push_back(b);
    types_.push_back(ObjType::prod(b, b));
    types_.push_back(ObjType::sum(b, b));
    types_.push_back(ObjType::prod(b, ObjType::unit()));
  }
  for (std::size_t k = 1; k < model.carriers().size(); ++k)
    types_.push_back(ObjType::base(model.carriers()[k].name));
}

const ObjType& TermGenerator::random_type() {
  return types_[std::uniform_int_distribution<std::size_t>(0, types_.size() - 1)(rng_)];
}

std::optional<Term> TermGenerator::leaf(const ObjType& src, const ObjType& tgt) {
  std::vector<Term> options;
  if (src == tgt) options.push_back(Term::id(src));
  if (tgt == ObjType::unit()) options.push_back(Term::bang(src));
  if (src == ObjType::empty()) options.push_back(Term::absurd(tgt));
  for (const auto& op : theory_.signature.ops())
    if (op.source == src && op.target == tgt) options.push_back(Term::op(op));
  if (src.is(ObjType::Kind::Prod)) {
    if (src.left() == tgt) options.push_back(Term::proj1(src));
    if (src.right() == tgt) options.push_back(Term::proj2(src));
  }
  if (tgt.is(ObjType::Kind::Sum)) {
    if (tgt.left() == src) options.push_back(Term::inj1(tgt));
    if (tgt.right() == src) options.push_back(Term::inj2(tgt));
  }
  if (src == ObjType::unit() && tgt.is(ObjType::Kind::Base)) {
    const auto& atoms = model_.carrier(tgt.name()).atoms;
    if (!atoms.empty())
      options.push_back(Term::constant(
          tgt, atoms[std::uniform_int_distribution<std::size_t>(0, atoms.size() - 1)(rng_)]));
  }
  if (options.empty()) return std::nullopt;
  return options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng_)];
}

std::optional<Term> TermGenerator::term(const ObjType& src, const ObjType& tgt, int depth) {
  std::uniform_int_distribution<int> pct(0, 99);
  if (depth <= 0 || pct(rng_) < 30) {
    if (auto l = leaf(src, tgt)) return l;
    if (depth <= 0) return std::nullopt;
  }
  int choice = pct(rng_);
  if (tgt.is(ObjType::Kind::Prod) && choice < 30) {
    auto a = term(src, tgt.left(), depth - 1);
    auto b = a ? term(src, tgt.right(), depth - 1) : std::nullopt;
    if (a && b) return Term::pair(*a, *b);
  }
  if (src.is(ObjType::Kind::Sum) && choice >= 70) {
    auto a = term(src.left(), tgt, depth - 1);
    auto b = a ? term(src.right(), tgt, depth - 1) : std::nullopt;
    if (a && b) return Term::cases(*a, *b);
  }
  ObjType mid = random_type();
  auto inner = term(src, mid, depth - 1);
  auto outer = inner ? term(mid, tgt, depth - 1) : std::nullopt;
  if (inner && outer) return Term::comp(*outer, *inner);
  return leaf(src, tgt);
}

std::optional<Term> TermGenerator::any_term(const ObjType& src, const ObjType& tgt, int depth) {
  for (int k = 0; k < 64; ++k)
    if (auto t = term(src, tgt, depth)) return t;
  return std::nullopt;
}

namespace proof {

namespace {

struct Instance {
  std::vector<Equation> premises;
  ProofStep step;
};

class Prober {
 public:
  Prober(const Theory& theory, const FiniteModel& model, std::uint64_t seed)
      : theory_(theory), model_(model), gen_(theory, model, seed) {}

  bool holds(const Equation& e) { return check_eq(e, model_, theory_.flavor).equal(); }

  std::optional<Instance> instance(Rule r) {
    switch (r) {
      case Rule::Refl: {
        auto t = term();
        if (!t) return std::nullopt;
        return make(r, {}, *t, *t, mode());
      }
      case Rule::Sym: {
        auto p = premise(mode());
        if (!p) return std::nullopt;
        return make(r, {*p}, p->rhs, p->lhs, p->mode);
      }
      case Rule::Trans: {
        Mode m = mode();
        auto g = term();
        if (!g) return std::nullopt;
        auto f = match(*g, [&](const Term& c) { return holds({c, *g, m, {}}); });
        auto h = match(*g, [&](const Term& c) { return holds({*g, c, m, {}}); });
        if (!f || !h) return std::nullopt;
        return make(r, {{*f, *g, m, {}}, {*g, *h, m, {}}}, *f, *h, m);
      }
      case Rule::Axiom: {
        if (theory_.axioms.empty()) return std::nullopt;
        const Equation& ax = theory_.axioms[pick(theory_.axioms.size())];
        Instance in{{}, {r, {Premise::of_axiom(ax.label)}, ax}};
        return in;
      }
      case Rule::StrongToWeak: {
        auto p = premise(Mode::Strong);
        if (!p) return std::nullopt;
        return make(r, {*p}, p->lhs, p->rhs, Mode::Weak);
      }
      case Rule::Effect: {
        auto p = premise(Mode::Weak);
        if (!p) return std::nullopt;
        return make(r, {*p}, p->lhs, p->rhs, Mode::Strong);
      }
      case Rule::Subs: {
        auto p = premise(mode());
        if (!p) return std::nullopt;
        auto h = gen_.any_term(gen_.random_type(), p->lhs.source());
        if (!h) return std::nullopt;
        return make(r, {*p}, Term::comp(p->lhs, *h), Term::comp(p->rhs, *h), p->mode);
      }
      case Rule::Repl: {
        auto p = premise(mode());
        if (!p) return std::nullopt;
        auto h = gen_.any_term(p->lhs.target(), gen_.random_type());
        if (!h) return std::nullopt;
        return make(r, {*p}, Term::comp(*h, p->lhs), Term::comp(*h, p->rhs), p->mode);
      }
      case Rule::Obs: return obs();
      case Rule::PairCong:
      case Rule::CaseCong: {
        bool pair = r == Rule::PairCong;
        ObjType a = gen_.random_type(), b = gen_.random_type(), x = gen_.random_type();
        auto p1 = pair ? premise_at(x, a, mode()) : premise_at(a, x, mode());
        auto p2 = pair ? premise_at(x, b, mode()) : premise_at(b, x, mode());
        if (!p1 || !p2) return std::nullopt;
        Term l = pair ? Term::pair(p1->lhs, p2->lhs) : Term::cases(p1->lhs, p2->lhs);
        Term rr = pair ? Term::pair(p1->rhs, p2->rhs) : Term::cases(p1->rhs, p2->rhs);
        return make(r, {*p1, *p2}, l, rr, std::min(p1->mode, p2->mode));
      }
      case Rule::Unit:
      case Rule::Empty: {
        ObjType x = gen_.random_type();
        ObjType src = r == Rule::Unit ? x : ObjType::empty();
        ObjType tgt = r == Rule::Unit ? ObjType::unit() : x;
        auto f = gen_.any_term(src, tgt);
        auto g = gen_.any_term(src, tgt);
        if (!f || !g) return std::nullopt;
        return make(r, {}, *f, *g, Mode::Weak);
      }
      case Rule::Proj1:
      case Rule::Proj2: {
        ObjType x = gen_.random_type();
        auto f = gen_.any_term(x, gen_.random_type());
        auto g = gen_.any_term(x, gen_.random_type());
        if (!f || !g) return std::nullopt;
        Term p = Term::pair(*f, *g);
        Term lhs = Term::comp(r == Rule::Proj1 ? Term::proj1(p.target()) : Term::proj2(p.target()), p);
        return make(r, {}, lhs, r == Rule::Proj1 ? *f : *g, r == Rule::Proj1 ? Mode::Weak : mode());
      }
      case Rule::Inj1:
      case Rule::Inj2: {
        ObjType y = gen_.random_type();
        auto f = gen_.any_term(gen_.random_type(), y);
        auto g = gen_.any_term(gen_.random_type(), y);
        if (!f || !g) return std::nullopt;
        Term c = Term::cases(*f, *g);
        Term lhs = Term::comp(c, r == Rule::Inj1 ? Term::inj1(c.source()) : Term::inj2(c.source()));
        return make(r, {}, lhs, r == Rule::Inj1 ? *f : *g, r == Rule::Inj1 ? Mode::Weak : mode());
      }
      case Rule::SeqComp: {
        ObjType x = gen_.random_type(), b = gen_.random_type();
        auto f = gen_.any_term(x, gen_.random_type());
        auto rr = gen_.any_term(x, b);
        auto h = gen_.any_term(b, gen_.random_type());
        if (!f || !rr || !h) return std::nullopt;
        Term lhs = Term::comp(Term::proj2(ObjType::prod(f->target(), h->target())),
                              Term::pair(*f, Term::comp(*h, *rr)));
        Term rhs = Term::comp(*h, Term::comp(Term::proj2(ObjType::prod(f->target(), b)), Term::pair(*f, *rr)));
        return make(r, {}, lhs, rhs, Mode::Strong);
      }
      case Rule::CoseqComp: {
        ObjType y = gen_.random_type(), b = gen_.random_type();
        auto f = gen_.any_term(gen_.random_type(), y);
        auto rr = gen_.any_term(b, y);
        auto h = gen_.any_term(gen_.random_type(), b);
        if (!f || !rr || !h) return std::nullopt;
        Term lhs = Term::comp(Term::cases(*f, Term::comp(*rr, *h)),
                              Term::inj2(ObjType::sum(f->source(), h->source())));
        Term rhs = Term::comp(Term::cases(*f, *rr), Term::comp(Term::inj2(ObjType::sum(f->source(), b)), *h));
        return make(r, {}, lhs, rhs, Mode::Strong);
      }
      case Rule::UnitSeq: {
        auto e = gen_.any_term(gen_.random_type(), ObjType::unit());
        if (!e) return std::nullopt;
        Term lhs = Term::comp(Term::proj2(ObjType::prod(ObjType::unit(), ObjType::unit())),
                              Term::pair(*e, Term::bang(e->source())));
        return make(r, {}, lhs, *e, Mode::Strong);
      }
      case Rule::CounitSeq: {
        auto e = gen_.any_term(ObjType::empty(), gen_.random_type());
        if (!e) return std::nullopt;
        Term lhs = Term::comp(Term::cases(*e, Term::absurd(e->target())),
                              Term::inj2(ObjType::sum(ObjType::empty(), ObjType::empty())));
        return make(r, {}, lhs, *e, Mode::Strong);
      }
      case Rule::Split:
      case Rule::Cosplit: {
        bool st = r == Rule::Split;
        auto f = term();
        if (!f) return std::nullopt;
        auto side = [&](const Term& t) {
          return st ? Term::comp(Term::bang(t.target()), t) : Term::comp(t, Term::absurd(t.source()));
        };
        auto g = match(*f, [&](const Term& c) {
          return holds({*f, c, Mode::Weak, {}}) && holds({side(*f), side(c), Mode::Strong, {}});
        });
        if (!g) return std::nullopt;
        return make(r, {{*f, *g, Mode::Weak, {}}, {side(*f), side(*g), Mode::Strong, {}}}, *f, *g,
                    Mode::Strong);
      }
      case Rule::PairExt:
      case Rule::CaseExt: {
        bool pairs = r == Rule::PairExt;
        ObjType a = gen_.random_type(), b = gen_.random_type(), x = gen_.random_type();
        ObjType y = pairs ? ObjType::prod(a, b) : ObjType::sum(a, b);
        auto h = pairs ? gen_.any_term(x, y) : gen_.any_term(y, x);
        if (!h) return std::nullopt;
        Mode m1 = mode(), m2 = mode();
        auto probe = [&](int k, const Term& t) {
          Term p = pairs ? (k == 1 ? Term::proj1(y) : Term::proj2(y)) : (k == 1 ? Term::inj1(y) : Term::inj2(y));
          return pairs ? Term::comp(p, t) : Term::comp(t, p);
        };
        auto k = match(*h, [&](const Term& c) {
          return holds({probe(1, *h), probe(1, c), m1, {}}) && holds({probe(2, *h), probe(2, c), m2, {}});
        });
        if (!k) return std::nullopt;
        return make(r, {{probe(1, *h), probe(1, *k), m1, {}}, {probe(2, *h), probe(2, *k), m2, {}}}, *h,
                    *k, std::min(m1, m2));
      }
    }
    return std::nullopt;
  }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_.rng()); }
  Mode mode() { return pick(2) ? Mode::Strong : Mode::Weak; }

  std::optional<Term> term() { return gen_.any_term(gen_.random_type(), gen_.random_type()); }

  // A term parallel to t satisfying pred: random candidates first, t itself
  // as the last resort.
  std::optional<Term> match(const Term& t, const std::function<bool(const Term&)>& pred) {
    for (int k = 0; k < 40; ++k) {
      auto c = gen_.term(t.source(), t.target(), 3);
      if (c && pred(*c)) return c;
    }
    if (pred(t)) return t;
    return std::nullopt;
  }

  std::optional<Equation> premise_at(const ObjType& src, const ObjType& tgt, Mode m) {
    auto f = gen_.any_term(src, tgt);
    if (!f) return std::nullopt;
    auto g = match(*f, [&](const Term& c) { return holds({*f, c, m, {}}); });
    if (!g) return std::nullopt;
    return Equation{*f, *g, m, {}};
  }

  std::optional<Equation> premise(Mode m) { return premise_at(gen_.random_type(), gen_.random_type(), m); }

  std::optional<Instance> obs() {
    if (theory_.observational_rules.empty()) return std::nullopt;
    const ObsRule& rule = theory_.observational_rules[pick(theory_.observational_rules.size())];
    bool st = rule.direction == ObsRule::Direction::States;
    ObjType x = gen_.random_type();
    auto f = st ? gen_.any_term(x, ObjType::unit()) : gen_.any_term(ObjType::empty(), x);
    if (!f) return std::nullopt;
    auto observed = [&](const OpSymbol& o, const Term& t) {
      return st ? Term::comp(Term::op(o), t) : Term::comp(t, Term::op(o));
    };
    auto g = match(*f, [&](const Term& c) {
      for (const auto& o : rule.observers)
        if (!holds({observed(o, *f), observed(o, c), Mode::Weak, {}})) return false;
      return true;
    });
    if (!g) return std::nullopt;
    std::vector<Equation> ps;
    for (const auto& o : rule.observers) ps.push_back({observed(o, *f), observed(o, *g), Mode::Weak, {}});
    return make(Rule::Obs, std::move(ps), *f, *g, Mode::Strong);
  }

  static Instance make(Rule r, std::vector<Equation> premises, Term lhs, Term rhs, Mode m) {
    Instance in;
    in.step.rule = r;
    for (std::size_t k = 0; k < premises.size(); ++k)
      in.step.premises.push_back(Premise::of_step(static_cast<int>(k + 1)));
    in.step.conclusion = {std::move(lhs), std::move(rhs), m, {}};
    in.premises = std::move(premises);
    return in;
  }

  const Theory& theory_;
  const FiniteModel& model_;
  TermGenerator gen_;
};

}  // namespace

ProbeReport soundness_probe(Rule rule, const Theory& theory, const FiniteModel& model, int samples,
                            std::uint64_t seed, const CheckerOptions& options, int max_attempts) {
  ProbeReport rep;
  rep.rule = rule;
  Prober prober(theory, model, seed);
  while (rep.applicable < samples && rep.attempts < max_attempts) {
    ++rep.attempts;
    auto in = prober.instance(rule);
    if (!in) continue;
    std::vector<ProofStep> earlier;
    for (const auto& p : in->premises) {
      if (!prober.holds(p)) break;
      earlier.push_back({Rule::Refl, {}, p});
    }
    if (earlier.size() != in->premises.size()) continue;
    if (!check_step(in->step, earlier, theory, options).ok()) continue;
    ++rep.applicable;
    if (!prober.holds(in->step.conclusion)) {
      if (rep.violations++ == 0) {
        const Equation& c = in->step.conclusion;
        rep.first_violation = std::string(to_string(c.mode)) + " " + c.lhs.str() + " = " + c.rhs.str();
      }
    }
  }
  return rep;
}

}  // namespace proof

}  // namespace deceq
