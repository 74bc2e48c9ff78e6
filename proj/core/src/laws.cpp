#include "deceq/laws.hpp"

namespace deceq {

namespace {

void check_all(const std::vector<Equation>& laws, const FiniteModel& model, Flavor flavor, bool dual,
               std::vector<LawResult>& out) {
  for (std::size_t k = 0; k < laws.size(); ++k) {
    LawResult r;
    r.number = static_cast<int>(k + 1);
    r.dual = dual;
    r.law = laws[k];
    r.strong = check_strong_eq(r.law.lhs, r.law.rhs, model);
    if (r.law.mode == Mode::Weak) r.weak = check_weak_eq(r.law.lhs, r.law.rhs, model, flavor);
    out.push_back(std::move(r));
  }
}

std::string verdict_text(const Verdict& v, const ObjType& source, const FiniteModel& model) {
  if (v.equal()) return "ok";
  return "counterexample: " + format_counterexample(*v.counterexample, source, model);
}

}  // namespace

std::vector<LawResult> check_laws(const FiniteModel& model) {
  std::vector<LawResult> out;
  std::vector<std::pair<std::string, ObjType>> locs, excs;
  for (const auto& l : model.locations()) locs.emplace_back(l.name, ObjType::base(l.type));
  for (const auto& e : model.exceptions()) excs.emplace_back(e.name, ObjType::base(e.type));
  if (!locs.empty()) check_all(seven_laws(states_theory(locs)), model, Flavor::States, false, out);
  if (!excs.empty())
    check_all(dual_seven_laws(dualize(states_theory(excs))), model, Flavor::Exceptions, true, out);
  return out;
}

std::string format_law(const LawResult& r, const FiniteModel& model) {
  const ObjType& src = r.law.lhs.source();
  std::string line = (r.dual ? "DUAL " : "LAW ") + std::to_string(r.number) + " ";
  if (r.law.mode == Mode::Weak) line += "WEAK " + verdict_text(*r.weak, src, model) + " ";
  return line + "STRONG " + verdict_text(r.strong, src, model);
}

}  // namespace deceq
