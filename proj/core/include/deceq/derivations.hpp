#pragma once

#include <vector>

#include "deceq/proof.hpp"
#include "deceq/theory.hpp"

namespace deceq::proof {

// Proof script for law n (1..7, numbered as in seven_laws) in a states
// theory. Laws 5-7 need two locations (InvalidArgument otherwise).
ProofScript derive_law(const Theory& states, int n);
std::vector<ProofScript> derive_seven_laws(const Theory& states);

// Dual script for colaw n in an exceptions theory, obtained by dualizing the
// derivation in the dual states theory step by step.
ProofScript derive_dual_law(const Theory& exceptions, int n);

}  // namespace deceq::proof
