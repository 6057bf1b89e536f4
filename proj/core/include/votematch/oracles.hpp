#pragma once

#include "votematch/attack.hpp"

// Solver-independent reference deciders. They enumerate raw actions and
// re-score with election primitives only — no matching code on any path — so
// they can sit on the other side of differential tests.

namespace votematch {

// Enumerates every (removed, added) subset pair obeying the instance's limit.
// Throws CapExceeded when |V| + |W| > kBruteCcrvVoterCap.
AttackDecision brute_ccrv(const CcrvInstance& instance);

// Enumerates bribed subsets within budget and, per subset, every multiset of
// replacement votes. Throws CapExceeded beyond kBruteBriberyVoterCap voters
// or kBruteBriberyCandidateCap candidates.
AttackDecision brute_bribery(const BriberyInstance& instance);

}  // namespace votematch
