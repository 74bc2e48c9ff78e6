#include "deceq/derivations.hpp"

#include <algorithm>

namespace deceq::proof {

namespace {

// Appends steps and computes their conclusions, so a derivation reads as a
// sequence of rule applications. Returns 1-based step numbers.
class ProofBuilder {
 public:
  int axiom(const Equation& ax) {
    return add(Rule::Axiom, {Premise::of_axiom(ax.label)}, ax.lhs, ax.rhs, ax.mode);
  }
  int refl(const Term& t, Mode m) { return add(Rule::Refl, {}, t, t, m); }
  int sym(int n) { return add(Rule::Sym, {at(n)}, eq(n).rhs, eq(n).lhs, eq(n).mode); }
  int trans(int a, int b) { return add(Rule::Trans, {at(a), at(b)}, eq(a).lhs, eq(b).rhs, eq(a).mode); }
  // Chains premises left to right.
  int trans(std::initializer_list<int> ns) {
    std::vector<int> v(ns);
    int acc = v[0];
    for (std::size_t k = 1; k < v.size(); ++k) acc = trans(acc, v[k]);
    return acc;
  }
  int s2w(int n) { return add(Rule::StrongToWeak, {at(n)}, eq(n).lhs, eq(n).rhs, Mode::Weak); }
  int weak(int n) { return eq(n).mode == Mode::Weak ? n : s2w(n); }
  int effect(int n) { return add(Rule::Effect, {at(n)}, eq(n).lhs, eq(n).rhs, Mode::Strong); }
  int subs(int n, const Term& h) {
    return add(Rule::Subs, {at(n)}, Term::comp(eq(n).lhs, h), Term::comp(eq(n).rhs, h), eq(n).mode);
  }
  int repl(const Term& h, int n) {
    return add(Rule::Repl, {at(n)}, Term::comp(h, eq(n).lhs), Term::comp(h, eq(n).rhs), eq(n).mode);
  }
  int unit(const Term& f, const Term& g) { return add(Rule::Unit, {}, f, g, Mode::Weak); }
  // f == g for f, g : X -> 1 with decorations <= 1.
  int unit_strong(const Term& f, const Term& g) { return effect(unit(f, g)); }
  int proj1(const Term& pair) {
    return add(Rule::Proj1, {}, Term::comp(Term::proj1(pair.target()), pair), pair.left(), Mode::Weak);
  }
  int proj2(const Term& pair, Mode m) {
    return add(Rule::Proj2, {}, Term::comp(Term::proj2(pair.target()), pair), pair.right(), m);
  }
  // pi_k . pair == component, strong (proj1 needs accessor components).
  int proj_strong(int k, const Term& pair) { return k == 1 ? effect(proj1(pair)) : proj2(pair, Mode::Strong); }
  int seq_comp(const Term& f, const Term& h, const Term& r) {
    Term lhs = Term::comp(Term::proj2(ObjType::prod(f.target(), h.target())), Term::pair(f, Term::comp(h, r)));
    Term rhs = Term::comp(h, Term::comp(Term::proj2(ObjType::prod(f.target(), r.target())), Term::pair(f, r)));
    return add(Rule::SeqComp, {}, lhs, rhs, Mode::Strong);
  }
  int unit_seq(const Term& e) {
    Term lhs = Term::comp(Term::proj2(ObjType::prod(ObjType::unit(), ObjType::unit())),
                          Term::pair(e, Term::bang(e.source())));
    return add(Rule::UnitSeq, {}, lhs, e, Mode::Strong);
  }
  int pair_cong(int a, int b) {
    return add(Rule::PairCong, {at(a), at(b)}, Term::pair(eq(a).lhs, eq(b).lhs),
               Term::pair(eq(a).rhs, eq(b).rhs), std::min(eq(a).mode, eq(b).mode));
  }
  int pair_ext(int a, int b, const Term& lhs, const Term& rhs) {
    return add(Rule::PairExt, {at(a), at(b)}, lhs, rhs, std::min(eq(a).mode, eq(b).mode));
  }
  int split(int w, int s) { return add(Rule::Split, {at(w), at(s)}, eq(w).lhs, eq(w).rhs, Mode::Strong); }
  int obs(const std::vector<int>& ns, const Term& lhs, const Term& rhs) {
    std::vector<Premise> ps;
    for (int n : ns) ps.push_back(at(n));
    return add(Rule::Obs, std::move(ps), lhs, rhs, Mode::Strong);
  }

  const Equation& eq(int n) const { return steps_[n - 1].conclusion; }
  ProofScript finish(Equation goal) { return {std::move(goal), std::move(steps_)}; }

 private:
  static Premise at(int n) { return Premise::of_step(n); }

  int add(Rule r, std::vector<Premise> ps, const Term& lhs, const Term& rhs, Mode m) {
    steps_.push_back({r, std::move(ps), {canonical(lhs), canonical(rhs), m, {}}});
    return static_cast<int>(steps_.size());
  }

  std::vector<ProofStep> steps_;
};

struct Loc {
  std::string name;
  ObjType type;
  Term lookup, update;
};

class Deriver {
 public:
  explicit Deriver(const Theory& t) : theory_(t) {
    if (t.flavor != Flavor::States)
      throw Error(ErrorKind::WrongFlavor, "derivations need a states theory, got " + to_string(t.flavor));
    for (const auto& [name, type] : theory_subjects(t)) {
      Loc l{name, type, {}, {}};
      for (const auto& op : t.signature.ops()) {
        if (op.prim.subject != name) continue;
        if (op.prim.kind == PrimKind::Lookup) l.lookup = Term::op(op);
        if (op.prim.kind == PrimKind::Update) l.update = Term::op(op);
      }
      locs_.push_back(std::move(l));
    }
  }

  ProofScript law(int n) {
    auto laws = seven_laws(theory_);
    if (n < 1 || n > static_cast<int>(laws.size()))
      throw Error(ErrorKind::InvalidArgument, "no law " + std::to_string(n) + " for this theory");
    Equation goal = laws[n - 1];
    switch (n) {
      case 1: law1(); break;
      case 2: pair_law(goal, [&](int k) { return law2_component(k); }); break;
      case 3: case 6: obs_law(goal); break;
      case 4: b_.axiom(ax1(0)); break;
      case 5: pair_law(goal, [&](int k) { return law5_component(k); }); break;
      case 7: law7(); break;
    }
    return b_.finish(goal);
  }

 private:
  const Equation& ax1(std::size_t i) { return *theory_.axiom("ax1_" + locs_[i].name); }
  const Equation& ax2(std::size_t i, std::size_t j) {
    return *theory_.axiom("ax2_" + locs_[i].name + "_" + locs_[j].name);
  }

  // u_i . l_i == id(1), observed through every lookup.
  void law1() {
    const Loc& i = locs_[0];
    std::vector<int> obs;
    for (std::size_t k = 0; k < locs_.size(); ++k) {
      if (k == 0) {
        obs.push_back(b_.subs(b_.axiom(ax1(0)), i.lookup));
        continue;
      }
      const Loc& lk = locs_[k];
      int a = b_.subs(b_.axiom(ax2(0, k)), i.lookup);             // l_k.u_i.l_i ~ l_k.!.l_i
      int bl = b_.unit_strong(Term::comp(Term::bang(i.type), i.lookup), Term::id(ObjType::unit()));
      int c = b_.s2w(b_.repl(lk.lookup, bl));                     // l_k.!.l_i ~ l_k
      obs.push_back(b_.trans(a, c));
    }
    b_.obs(obs, Term::comp(i.update, i.lookup), Term::id(ObjType::unit()));
  }

  // Both laws relate two pairs: prove each projection strongly, then extend.
  template <class Component>
  void pair_law(const Equation& goal, Component component) {
    int p1 = component(1);
    int p2 = component(2);
    b_.pair_ext(p1, p2, goal.lhs, goal.rhs);
  }

  // pi_k . <l,l> == pi_k . copy . l
  int law2_component(int k) {
    const Loc& i = locs_[0];
    int a = b_.proj_strong(k, Term::pair(i.lookup, i.lookup));           // pi_k.<l,l> == l
    int c = b_.subs(b_.proj_strong(k, copy_of(i.type)), i.lookup);       // pi_k.copy.l == l
    return b_.trans(a, b_.sym(c));
  }

  // pi_k . <l_i,l_j> == pi_k . swap . <l_j,l_i>
  int law5_component(int k) {
    const Loc& i = locs_[0];
    const Loc& j = locs_[1];
    Term ji = Term::pair(j.lookup, i.lookup);
    int a = b_.proj_strong(k, Term::pair(i.lookup, j.lookup));  // pi_k.<l_i,l_j> == l_i or l_j
    int s = b_.subs(b_.proj_strong(k, swap_of(j.type, i.type)), ji);
    int t = b_.proj_strong(k == 1 ? 2 : 1, ji);
    return b_.trans(a, b_.sym(b_.trans(s, t)));
  }

  // Law 7 splits into its pure value part and its effect on the state.
  void law7() {
    const Loc& i = locs_[0];
    const Loc& j = locs_[1];
    Term lj_bang = Term::comp(j.lookup, Term::bang(i.type));
    Term pr = Term::pair(lj_bang, i.update);
    Term bang_vj = Term::bang(j.type);

    int w = b_.trans(b_.axiom(ax2(0, 1)), b_.sym(b_.proj1(pr)));

    int l = b_.subs(b_.unit_strong(Term::comp(bang_vj, j.lookup), Term::id(ObjType::unit())), i.update);
    ObjType vj1 = ObjType::prod(j.type, ObjType::unit());
    int r0 = b_.subs(b_.unit_strong(Term::comp(bang_vj, Term::proj1(vj1)), Term::proj2(vj1)), pr);
    int r = b_.trans(r0, b_.proj2(pr, Mode::Strong));
    int s = b_.trans(l, b_.sym(r));
    b_.split(w, s);
  }

  // A state program X -> 1 of the shape u_b . p or pi2 . <u_a . p_a, u_b . p_b>.
  struct Prog {
    int a = -1;  // index of the first update, -1 when absent
    Term pa;
    int b;
    Term pb;
  };

  Prog decompose(const Term& t) {
    auto chain = comp_chain(t);
    auto update_index = [&](const Term& u) {
      for (std::size_t k = 0; k < locs_.size(); ++k)
        if (locs_[k].update == u) return static_cast<int>(k);
      throw Error(ErrorKind::InvalidArgument, "not an update: " + u.str());
    };
    auto split_update = [&](const Term& u) {
      auto c = comp_chain(u);
      return std::pair{update_index(c[0]), from_chain({c.begin() + 1, c.end()}, u.source())};
    };
    if (chain.size() == 2 && chain[0].kind() == TermKind::Proj2 && chain[1].kind() == TermKind::PairSeq) {
      auto [a, pa] = split_update(chain[1].left());
      auto [b, pb] = split_update(chain[1].right());
      return {a, pa, b, pb};
    }
    auto [b, pb] = split_update(t);
    return {-1, {}, b, pb};
  }

  // l_k . u_b . p ~ p (k = b) or l_k . bang(X) (k != b).
  int observe_update(std::size_t k, std::size_t b, const Term& p) {
    if (k == b) return b_.subs(b_.axiom(ax1(b)), p);
    const Loc& lk = locs_[k];
    int a = b_.subs(b_.axiom(ax2(b, k)), p);
    int bp = b_.unit_strong(Term::comp(Term::bang(locs_[b].type), p), Term::bang(p.source()));
    return b_.trans(a, b_.s2w(b_.repl(lk.lookup, bp)));
  }

  int observe(std::size_t k, const Term& t) {
    Prog g = decompose(t);
    const Loc& lk = locs_[k];
    if (g.a < 0) return observe_update(k, g.b, g.pb);

    Term first = Term::comp(locs_[g.a].update, g.pa);
    Term second = Term::comp(locs_[g.b].update, g.pb);
    if (k == static_cast<std::size_t>(g.b)) {
      // l_b . pi2 . <A, u_b.p> == l_b . u_b . pi2 . <A, p> ~ pi2 . <A, p> ~ p
      int a = b_.repl(lk.lookup, b_.seq_comp(first, locs_[g.b].update, g.pb));
      int c = b_.subs(b_.axiom(ax1(g.b)), Term::comp(Term::proj2(ObjType::prod(ObjType::unit(), g.pb.target())),
                                                     Term::pair(first, g.pb)));
      int d = b_.proj2(Term::pair(first, g.pb), Mode::Weak);
      return b_.trans({b_.s2w(a), c, d});
    }
    // The second update does not touch k: push l_k inside, forget the second
    // update and read k after the first one.
    int a = b_.sym(b_.seq_comp(first, lk.lookup, second));           // l_k.pi2.<A,B> == pi2.<A, l_k.B>
    int lb = observe_update(k, g.b, g.pb);                           // l_k.B ~ l_k.!
    int pc = b_.pair_cong(b_.refl(first, Mode::Strong), lb);
    int c = b_.repl(Term::proj2(ObjType::prod(ObjType::unit(), lk.type)), pc);
    Term bang_x = Term::bang(t.source());
    int d = b_.seq_comp(first, lk.lookup, bang_x);                   // pi2.<A, l_k.!> == l_k.pi2.<A,!>
    int e = b_.repl(lk.lookup, b_.unit_seq(first));                  // == l_k.A
    int f = observe_update(k, g.a, g.pa);
    return b_.trans({b_.s2w(a), c, b_.s2w(d), b_.s2w(e), f});
  }

  void obs_law(const Equation& goal) {
    std::vector<int> obs;
    for (std::size_t k = 0; k < locs_.size(); ++k) {
      int l = observe(k, goal.lhs);
      int r = observe(k, goal.rhs);
      obs.push_back(b_.trans(l, b_.sym(r)));
    }
    b_.obs(obs, goal.lhs, goal.rhs);
  }

  const Theory& theory_;
  std::vector<Loc> locs_;
  ProofBuilder b_;
};

}  // namespace

ProofScript derive_law(const Theory& states, int n) { return Deriver(states).law(n); }

std::vector<ProofScript> derive_seven_laws(const Theory& states) {
  std::vector<ProofScript> out;
  std::size_t count = seven_laws(states).size();
  for (std::size_t n = 1; n <= count; ++n) out.push_back(derive_law(states, static_cast<int>(n)));
  return out;
}

ProofScript derive_dual_law(const Theory& exceptions, int n) {
  if (exceptions.flavor != Flavor::Exceptions)
    throw Error(ErrorKind::WrongFlavor, "derive_dual_law needs an exceptions theory");
  return dualize(derive_law(dualize(exceptions), n));
}

}  // namespace deceq::proof
