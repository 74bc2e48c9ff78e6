#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "deceq/eval.hpp"
#include "deceq/proof.hpp"

namespace deceq {

// Random well-typed terms over a theory's symbols plus the structural
// constructors and constants of the model's carriers.
class TermGenerator {
 public:
  TermGenerator(const Theory& theory, const FiniteModel& model, std::uint64_t seed);

  // A term src -> tgt of nesting depth at most `depth`, or nothing when the
  // attempt hits a dead end (e.g. no way into 0).
  std::optional<Term> term(const ObjType& src, const ObjType& tgt, int depth);
  // Retries until a term is found; nothing when the types look unreachable.
  std::optional<Term> any_term(const ObjType& src, const ObjType& tgt, int depth = 3);

  // Object types the generator draws intermediate types from.
  const std::vector<ObjType>& types() const { return types_; }
  const ObjType& random_type();
  std::mt19937_64& rng() { return rng_; }

 private:
  std::optional<Term> leaf(const ObjType& src, const ObjType& tgt);

  const Theory& theory_;
  const FiniteModel& model_;
  std::vector<ObjType> types_;
  std::mt19937_64 rng_;
};

namespace proof {

struct ProbeReport {
  Rule rule = Rule::Refl;
  int attempts = 0;
  int applicable = 0;  // premises valid in the model and the step accepted
  int violations = 0;  // ... but the conclusion fails in the model
  std::string first_violation;
};

// Instantiates `rule` at random, keeps instances whose premises hold in the
// model and which the checker accepts, and checks their conclusions.
// Stops after `samples` applicable instances or `max_attempts` attempts.
ProbeReport soundness_probe(Rule rule, const Theory& theory, const FiniteModel& model, int samples,
                            std::uint64_t seed, const CheckerOptions& options = {},
                            int max_attempts = 20000);

}  // namespace proof

}  // namespace deceq
