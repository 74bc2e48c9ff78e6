#include <algorithm>
#include <sstream>

#include "cursor.hpp"
#include "deceq/proof.hpp"
#include "text_internal.hpp"

namespace deceq::proof {

namespace {

void print_equation(std::ostream& os, const Equation& e) {
  os << to_string(e.mode) << " " << e.lhs << " = " << e.rhs;
}

std::string read_rule_name(text::Cursor& c) {
  std::string name = c.word();
  while (c.accept('-')) name += "-" + c.word();
  return name;
}

void end_line(text::Cursor& c) {
  if (c.eof()) return;
  if (!c.at_newline()) c.fail("expected end of line");
  while (c.at_newline()) c.accept('\n');
}

Equation read_equation(text::Cursor& c, const Signature& sig) {
  Equation e;
  e.mode = text::read_equation_mode(c);
  e.lhs = text::read_term(c, sig);
  c.expect('=');
  e.rhs = text::read_term(c, sig);
  return e;
}

}  // namespace

std::string print_script(const ProofScript& script) {
  std::ostringstream os;
  os << "goal ";
  print_equation(os, script.goal);
  os << "\n";
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const ProofStep& s = script.steps[i];
    os << "step " << i + 1 << ": " << to_string(s.rule) << " [";
    for (std::size_t k = 0; k < s.premises.size(); ++k) {
      if (k) os << ", ";
      const Premise& p = s.premises[k];
      if (p.is_step()) os << p.step;
      else os << p.label;
    }
    os << "] ⊢ ";
    print_equation(os, s.conclusion);
    os << "\n";
  }
  return os.str();
}

ProofScript parse_script(std::string_view src, const Signature& sig) {
  text::Cursor c(src);
  c.set_hash_comments(true);
  c.set_newline_significant(true);
  while (c.at_newline()) c.accept('\n');

  ProofScript script;
  c.expect("goal");
  script.goal = read_equation(c, sig);
  end_line(c);

  while (!c.eof()) {
    c.expect("step");
    std::string n = c.word();
    if (!std::all_of(n.begin(), n.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
        std::stoul(n) != script.steps.size() + 1)
      c.fail("expected step number " + std::to_string(script.steps.size() + 1));
    c.expect(':');

    ProofStep step;
    std::string rule = read_rule_name(c);
    auto r = rule_from_string(rule);
    if (!r) c.fail("unknown rule " + rule);
    step.rule = *r;

    if (c.accept('[') && !c.accept(']')) {
      do {
        std::string p = c.word();
        if (std::all_of(p.begin(), p.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
          step.premises.push_back(Premise::of_step(std::stoi(p)));
        else
          step.premises.push_back(Premise::of_axiom(p));
      } while (c.accept(','));
      c.expect(']');
    }
    if (!c.accept("⊢")) c.expect("|-");
    step.conclusion = read_equation(c, sig);
    script.steps.push_back(std::move(step));
    end_line(c);
  }
  return script;
}

}  // namespace deceq::proof
