#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "deceq/model.hpp"
#include "deceq/term.hpp"

namespace deceq {

// For parallel f, g:
//   States direction      f, g : X -> 1, all k: o_k . f ~ o_k . g  =>  f == g
//   Exceptions direction  f, g : 0 -> Y, all k: f . o_k ~ g . o_k  =>  f == g
// The observers o_k are symbols of the theory (lookups / tags).
struct ObsRule {
  enum class Direction { States, Exceptions };
  Direction direction = Direction::States;
  std::vector<OpSymbol> observers;
};

struct Theory {
  Flavor flavor = Flavor::States;
  Signature signature;
  std::vector<Equation> axioms;
  std::vector<ObsRule> observational_rules;

  const Equation* axiom(std::string_view label) const;
};

// lookup_i : 1 -> V_i (1,0), update_i : V_i -> 1 (2,0) per location, with
//   ax1_i    lookup_i . update_i ~ id(V_i)
//   ax2_i_j  lookup_j . update_i ~ lookup_j . bang(V_i)      (i != j)
// and the lookup observational rule. Throws DuplicateLocation, and
// InvalidArgument for an empty location list.
Theory states_theory(const std::vector<std::pair<std::string, ObjType>>& locations);

// Locations (in signature order) of a states theory / exception names of an
// exceptions theory.
std::vector<std::pair<std::string, ObjType>> theory_subjects(const Theory& t);

// The seven state laws for i = first location and j = second location,
// labelled law1..law7. With one location only laws 1-4 are returned.
// Throws WrongFlavor unless t is a states theory.
std::vector<Equation> seven_laws(const Theory& t);
// The dual laws of an exceptions theory, labelled colaw1..colaw7.
std::vector<Equation> dual_seven_laws(const Theory& exceptions_theory);

// The states/exceptions duality: reverses arrows, swaps 1/0, products/sums,
// projections/injections, pair/case, bang/absurd, lookup_i/tag_i and
// update_i/untag_i, the two decoration axes, and toggles the "co" prefix of
// labels. It is an involution. Const literals and arithmetic primitives have
// no dual (NotDualizable).
std::string dual_label(std::string_view label);
OpSymbol dualize(const OpSymbol& op);
Term dualize(const Term& t);
Equation dualize(const Equation& eq);
// States <-> Exceptions. WrongFlavor for a combined theory.
Theory dualize(const Theory& t);

// Union of a states and an exceptions theory. Symbols keep their decoration
// pairs. Throws WrongFlavor or NameClash.
Theory combine(const Theory& states, const Theory& exceptions);

// States theory for the model's locations, exceptions theory for its
// exception names, or their combination when both are declared.
Theory theory_for(const FiniteModel& model);

// Text dump, stable across runs:
//   theory <flavor>
//   op <name> : <type> -> <type> @ (<s>,<e>) <prim> [<subject>]
//   axiom <label> <mode> <lhs> = <rhs>
//   obs <states|exceptions> <observer>...
std::string print_theory(const Theory& t);
Theory parse_theory(std::string_view text);

}  // namespace deceq
