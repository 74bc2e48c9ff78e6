// Command-line front end: checks terms, laws, proof scripts and IMP programs.
//
// Exit codes: 0 success / equal, 1 not equal / rejected, 2 usage or input errors.

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "deceq/derivations.hpp"
#include "deceq/imp.hpp"
#include "deceq/laws.hpp"
#include "deceq/soundness.hpp"
#include "deceq/term_text.hpp"

namespace {

using namespace deceq;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string model;
  std::string theory;
  std::vector<std::string> files;
  int fuel = 64;
  int law = 0;
  int samples = 200;
  std::uint64_t seed = 1;
};

FiniteModel model_of(const Options& o) {
  if (o.model.empty()) throw Error(ErrorKind::InvalidArgument, "no model given (--model or DECEQ_MODEL)");
  return load_model(o.model);
}

// --theory wins; otherwise the theory of the model's declarations.
Theory theory_of(const Options& o) {
  if (!o.theory.empty()) return parse_theory(read_file(o.theory));
  return theory_for(model_of(o));
}

int cmd_check(const Options& o) {
  Theory t = o.theory.empty() && !o.model.empty() ? imp::imp_theory(model_of(o)) : theory_of(o);
  std::string text = read_file(o.files.at(0));
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  Term term = parse_term(text, t.signature);
  TypedReport r = typecheck(term, t.signature);
  if (!r.ok) {
    std::cout << "ILL-TYPED " << (r.error ? to_string(*r.error) : "") << ": " << r.detail << "\n";
    return kFailed;
  }
  std::cout << "type " << r.source << " -> " << r.target << "\n";
  std::cout << "decoration " << infer_decoration(term) << "\n";
  return kOk;
}

int cmd_laws(const Options& o) {
  FiniteModel m = model_of(o);
  bool all = true;
  for (const auto& r : check_laws(m)) {
    std::cout << format_law(r, m) << "\n";
    all = all && r.passed();
  }
  return all ? kOk : kFailed;
}

int cmd_prove(const Options& o) {
  Theory t = theory_of(o);
  proof::ProofScript s = proof::parse_script(read_file(o.files.at(0)), t.signature);
  proof::ScriptVerdict v = proof::check_script(s, t);
  if (v.ok()) {
    std::cout << "ACCEPTED " << s.steps.size() << " steps\n";
    return kOk;
  }
  std::cout << "REJECTED step " << v.failing_step << ": " << proof::to_string(*v.error) << ": " << v.detail
            << "\n";
  return kFailed;
}

int cmd_dualize(const Options& o) {
  std::cout << print_theory(dualize(theory_of(o)));
  return kOk;
}

int cmd_theory(const Options& o) {
  std::cout << print_theory(theory_of(o));
  return kOk;
}

int cmd_derive(const Options& o) {
  Theory t = theory_of(o);
  proof::ProofScript s = t.flavor == Flavor::Exceptions ? proof::derive_dual_law(t, o.law)
                                                         : proof::derive_law(t, o.law);
  std::cout << proof::print_script(s);
  return kOk;
}

int cmd_imp_equiv(const Options& o) {
  FiniteModel m = model_of(o);
  imp::CmdPtr a = imp::load(o.files.at(0));
  imp::CmdPtr b = imp::load(o.files.at(1));
  imp::EquivResult r = imp::check_equiv(*a, *b, m, o.fuel);
  std::cout << r.str(m) << "\n";
  return r.verdict == imp::Verdict::StrongEq || r.verdict == imp::Verdict::WeakEq ? kOk : kFailed;
}

int cmd_probe(const Options& o) {
  FiniteModel m = model_of(o);
  Theory t = o.theory.empty() ? theory_for(m) : parse_theory(read_file(o.theory));
  bool clean = true;
  for (auto rule : proof::kAllRules) {
    auto r = proof::soundness_probe(rule, t, m, o.samples, o.seed);
    std::cout << "RULE " << proof::to_string(rule) << " applicable " << r.applicable << " violations "
              << r.violations;
    if (r.violations) std::cout << " first: " << r.first_violation;
    std::cout << "\n";
    clean = clean && r.violations == 0;
  }
  return clean ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equational reasoning for programs with state and exceptions"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv("DECEQ_MODEL")) o.model = env;

  auto model_opt = [&](CLI::App* c, bool required = false) {
    auto* opt = c->add_option("--model", o.model, "finite model file");
    if (required && o.model.empty()) opt->required();
  };

  auto* check = app.add_subcommand("check", "typecheck a term and report its decoration");
  check->add_option("term-file", o.files, "file holding one term")->required()->expected(1);
  model_opt(check);
  check->add_option("--theory", o.theory, "theory dump file");

  auto* laws = app.add_subcommand("laws", "check the seven state laws and their duals in a model");
  model_opt(laws, true);

  auto* prove = app.add_subcommand("prove", "check a proof script");
  prove->add_option("script", o.files, "proof script")->required()->expected(1);
  prove->add_option("--theory", o.theory, "theory dump file");
  model_opt(prove);

  auto* dual = app.add_subcommand("dualize", "print the dual theory");
  dual->add_option("--theory", o.theory, "theory dump file");
  model_opt(dual);

  auto* theory = app.add_subcommand("theory", "print the theory of a model");
  theory->add_option("--theory", o.theory, "theory dump file");
  model_opt(theory);

  auto* derive = app.add_subcommand("derive", "print the bundled proof script of a law");
  derive->add_option("--theory", o.theory, "theory dump file");
  model_opt(derive);
  derive->add_option("--law", o.law, "law number")->required()->check(CLI::Range(1, 7));

  auto* equiv = app.add_subcommand("imp-equiv", "compare two IMP programs");
  equiv->add_option("programs", o.files, "two .imp files")->required()->expected(2);
  model_opt(equiv, true);
  equiv->add_option("--fuel", o.fuel, "loop unrolling bound")->check(CLI::PositiveNumber);

  auto* probe = app.add_subcommand("probe", "random soundness probe of every rule");
  model_opt(probe, true);
  probe->add_option("--theory", o.theory, "theory dump file");
  probe->add_option("--samples", o.samples, "applicable instances per rule");
  probe->add_option("--seed", o.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(o);
    if (*laws) return cmd_laws(o);
    if (*prove) return cmd_prove(o);
    if (*dual) return cmd_dualize(o);
    if (*theory) return cmd_theory(o);
    if (*derive) return cmd_derive(o);
    if (*equiv) return cmd_imp_equiv(o);
    if (*probe) return cmd_probe(o);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
