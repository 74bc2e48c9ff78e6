#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deceq/eval.hpp"
#include "deceq/theory.hpp"

namespace deceq {

// Verdicts of one of the seven state laws (or its dual) in a finite model.
struct LawResult {
  int number = 0;
  bool dual = false;
  Equation law;
  Verdict strong;
  std::optional<Verdict> weak;  // weak laws only

  bool passed() const { return law.mode == Mode::Strong ? strong.equal() : weak->equal(); }
};

// The state laws for the model's locations, then the dual laws for its
// exceptions; either part is skipped when the model declares none.
std::vector<LawResult> check_laws(const FiniteModel& model);

// One report line, e.g. "LAW 1 STRONG ok" or
// "LAW 4 WEAK ok STRONG counterexample: x=0,v=1"; duals start with "DUAL".
std::string format_law(const LawResult& r, const FiniteModel& model);

}  // namespace deceq
