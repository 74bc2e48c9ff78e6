#include <set>

#include "deceq/theory.hpp"

namespace deceq {

namespace {

OpSymbol lookup_symbol(const std::string& loc, const ObjType& v) {
  return {"lookup_" + loc, ObjType::unit(), v, {Decoration::Ro, Decoration::Pure},
          {PrimKind::Lookup, loc}};
}

OpSymbol update_symbol(const std::string& loc, const ObjType& v) {
  return {"update_" + loc, v, ObjType::unit(), {Decoration::Rw, Decoration::Pure},
          {PrimKind::Update, loc}};
}

const OpSymbol& find_prim(const Theory& t, PrimKind kind, const std::string& subject) {
  for (const auto& op : t.signature.ops())
    if (op.prim.kind == kind && op.prim.subject == subject) return op;
  throw Error(ErrorKind::UnknownSymbol, std::string(to_string(kind)) + " for " + subject);
}

}  // namespace

const Equation* Theory::axiom(std::string_view label) const {
  for (const auto& ax : axioms)
    if (ax.label == label) return &ax;
  return nullptr;
}

Theory states_theory(const std::vector<std::pair<std::string, ObjType>>& locations) {
  if (locations.empty()) throw Error(ErrorKind::InvalidArgument, "states theory needs a location");
  std::set<std::string> seen;
  for (const auto& [name, type] : locations) {
    if (!seen.insert(name).second)
      throw Error(ErrorKind::DuplicateLocation, "location " + name + " declared twice");
    if (!type.is(ObjType::Kind::Base))
      throw Error(ErrorKind::UnknownBaseType, "location " + name + " must have a base type");
  }

  Theory t;
  t.flavor = Flavor::States;
  ObsRule obs{ObsRule::Direction::States, {}};
  for (const auto& [name, type] : locations) {
    t.signature.add(lookup_symbol(name, type));
    t.signature.add(update_symbol(name, type));
    obs.observers.push_back(lookup_symbol(name, type));
  }
  for (const auto& [i, vi] : locations) {
    Term li = Term::op(lookup_symbol(i, vi));
    Term ui = Term::op(update_symbol(i, vi));
    t.axioms.push_back({Term::comp(li, ui), Term::id(vi), Mode::Weak, "ax1_" + i});
    for (const auto& [j, vj] : locations) {
      if (i == j) continue;
      Term lj = Term::op(lookup_symbol(j, vj));
      t.axioms.push_back({Term::comp(lj, ui), Term::comp(lj, Term::bang(vi)), Mode::Weak,
                          "ax2_" + i + "_" + j});
    }
  }
  t.observational_rules.push_back(std::move(obs));
  return t;
}

std::vector<std::pair<std::string, ObjType>> theory_subjects(const Theory& t) {
  std::vector<std::pair<std::string, ObjType>> out;
  for (const auto& op : t.signature.ops()) {
    if (op.prim.kind == PrimKind::Lookup) out.emplace_back(op.prim.subject, op.target);
    if (op.prim.kind == PrimKind::Tag) out.emplace_back(op.prim.subject, op.source);
  }
  return out;
}

std::vector<Equation> seven_laws(const Theory& t) {
  if (t.flavor != Flavor::States)
    throw Error(ErrorKind::WrongFlavor, "seven_laws needs a states theory, got " + to_string(t.flavor));
  auto locs = theory_subjects(t);
  if (locs.empty()) throw Error(ErrorKind::InvalidArgument, "theory has no locations");

  const auto& [i, vi] = locs[0];
  Term li = Term::op(find_prim(t, PrimKind::Lookup, i));
  Term ui = Term::op(find_prim(t, PrimKind::Update, i));
  ObjType vivi = ObjType::prod(vi, vi);

  std::vector<Equation> laws;
  laws.push_back({Term::comp(ui, li), Term::id(ObjType::unit()), Mode::Strong, "law1"});
  laws.push_back({Term::pair(li, li), Term::comp(copy_of(vi), li), Mode::Strong, "law2"});
  laws.push_back({seq_then(Term::comp(ui, Term::proj1(vivi)), Term::comp(ui, Term::proj2(vivi))),
                  Term::comp(ui, Term::proj2(vivi)), Mode::Strong, "law3"});
  laws.push_back({Term::comp(li, ui), Term::id(vi), Mode::Weak, "law4"});
  if (locs.size() < 2) return laws;

  const auto& [j, vj] = locs[1];
  Term lj = Term::op(find_prim(t, PrimKind::Lookup, j));
  Term uj = Term::op(find_prim(t, PrimKind::Update, j));
  ObjType vivj = ObjType::prod(vi, vj);
  Term p1 = Term::proj1(vivj);
  Term p2 = Term::proj2(vivj);

  laws.push_back({Term::pair(li, lj), Term::comp(swap_of(vj, vi), Term::pair(lj, li)), Mode::Strong,
                  "law5"});
  laws.push_back({seq_then(Term::comp(ui, p1), Term::comp(uj, p2)),
                  seq_then(Term::comp(uj, p2), Term::comp(ui, p1)), Mode::Strong, "law6"});
  laws.push_back({Term::comp(lj, ui),
                  Term::comp(Term::proj1(ObjType::prod(vj, ObjType::unit())),
                             Term::pair(Term::comp(lj, Term::bang(vi)), ui)),
                  Mode::Strong, "law7"});
  return laws;
}

std::vector<Equation> dual_seven_laws(const Theory& exceptions_theory) {
  if (exceptions_theory.flavor != Flavor::Exceptions)
    throw Error(ErrorKind::WrongFlavor, "dual_seven_laws needs an exceptions theory");
  std::vector<Equation> out;
  for (const auto& law : seven_laws(dualize(exceptions_theory))) out.push_back(dualize(law));
  return out;
}

// -- Duality -----------------------------------------------------------------

std::string dual_label(std::string_view label) {
  if (label.substr(0, 2) == "co") return std::string(label.substr(2));
  return "co" + std::string(label);
}

OpSymbol dualize(const OpSymbol& op) {
  OpSymbol d;
  d.source = op.target.dual();
  d.target = op.source.dual();
  d.decoration = op.decoration.swapped();
  d.prim.subject = op.prim.subject;
  switch (op.prim.kind) {
    case PrimKind::Lookup: d.prim.kind = PrimKind::Tag; d.name = "tag_" + op.prim.subject; break;
    case PrimKind::Tag: d.prim.kind = PrimKind::Lookup; d.name = "lookup_" + op.prim.subject; break;
    case PrimKind::Update: d.prim.kind = PrimKind::Untag; d.name = "untag_" + op.prim.subject; break;
    case PrimKind::Untag: d.prim.kind = PrimKind::Update; d.name = "update_" + op.prim.subject; break;
    case PrimKind::Opaque: d.prim.kind = PrimKind::Opaque; d.name = dual_label(op.name); break;
    default:
      throw Error(ErrorKind::NotDualizable, "symbol " + op.name + " has no dual");
  }
  return d;
}

Term dualize(const Term& t) {
  switch (t.kind()) {
    case TermKind::Id: return Term::id(t.type_arg().dual());
    case TermKind::Comp: return Term::comp(dualize(t.right()), dualize(t.left()));
    case TermKind::Op: return Term::op(dualize(t.symbol()));
    case TermKind::Proj1: return Term::inj1(t.type_arg().dual());
    case TermKind::Proj2: return Term::inj2(t.type_arg().dual());
    case TermKind::Inj1: return Term::proj1(t.type_arg().dual());
    case TermKind::Inj2: return Term::proj2(t.type_arg().dual());
    case TermKind::PairSeq: return Term::cases(dualize(t.left()), dualize(t.right()));
    case TermKind::CaseSeq: return Term::pair(dualize(t.left()), dualize(t.right()));
    case TermKind::Bang: return Term::absurd(t.type_arg().dual());
    case TermKind::Absurd: return Term::bang(t.type_arg().dual());
    case TermKind::Const: break;
  }
  throw Error(ErrorKind::NotDualizable, "constants have no dual: " + t.str());
}

Equation dualize(const Equation& eq) {
  return {dualize(eq.lhs), dualize(eq.rhs), eq.mode, dual_label(eq.label)};
}

Theory dualize(const Theory& t) {
  if (t.flavor == Flavor::Combined)
    throw Error(ErrorKind::WrongFlavor, "cannot dualize a combined theory");
  Theory d;
  d.flavor = t.flavor == Flavor::States ? Flavor::Exceptions : Flavor::States;
  for (const auto& op : t.signature.ops()) d.signature.add(dualize(op));
  for (const auto& ax : t.axioms) d.axioms.push_back(dualize(ax));
  for (const auto& r : t.observational_rules) {
    ObsRule dr;
    dr.direction = r.direction == ObsRule::Direction::States ? ObsRule::Direction::Exceptions
                                                             : ObsRule::Direction::States;
    for (const auto& o : r.observers) dr.observers.push_back(dualize(o));
    d.observational_rules.push_back(std::move(dr));
  }
  return d;
}

Theory combine(const Theory& st, const Theory& ex) {
  if (st.flavor != Flavor::States || ex.flavor != Flavor::Exceptions)
    throw Error(ErrorKind::WrongFlavor, "combine expects a states and an exceptions theory");
  Theory c;
  c.flavor = Flavor::Combined;
  for (const auto* part : {&st, &ex}) {
    for (const auto& op : part->signature.ops()) c.signature.add(op);
    for (const auto& ax : part->axioms) {
      if (c.axiom(ax.label)) throw Error(ErrorKind::NameClash, "axiom label " + ax.label);
      c.axioms.push_back(ax);
    }
    for (const auto& r : part->observational_rules) c.observational_rules.push_back(r);
  }
  return c;
}

Theory theory_for(const FiniteModel& model) {
  std::vector<std::pair<std::string, ObjType>> locs, excs;
  for (const auto& l : model.locations()) locs.emplace_back(l.name, ObjType::base(l.type));
  for (const auto& e : model.exceptions()) excs.emplace_back(e.name, ObjType::base(e.type));
  if (locs.empty() && excs.empty())
    throw Error(ErrorKind::InvalidArgument, "model declares no locations and no exceptions");
  if (excs.empty()) return states_theory(locs);
  Theory ex = dualize(states_theory(excs));
  if (locs.empty()) return ex;
  return combine(states_theory(locs), ex);
}

}  // namespace deceq
