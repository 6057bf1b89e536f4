#pragma once

#include "votematch/io.hpp"

// Seed-deterministic random election instances for harnesses and the CLI.

namespace votematch {

struct GenElectionOptions {
  unsigned long long seed = 0;
  int candidates = 4;
  int voters = 5;
  int unregistered = 5;  // control kinds only
  Rule rule;
  ProblemKind kind = ProblemKind::kCcrv;
  long long max_price = 3;   // prices drawn from 0..max_price when priced
  long long limit = -1;      // -1: drawn from the seed
  long long max_budget = 5;  // upper bound for drawn priced limits
};

ProblemFile gen_election(const GenElectionOptions& options);

}  // namespace votematch
