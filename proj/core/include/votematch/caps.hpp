#pragma once

#include <stdexcept>

// Enumeration caps for the brute-force reference solvers. Inputs beyond a cap
// raise CapExceeded instead of being silently truncated; the CLI maps this to
// exit code 2.

namespace votematch {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kBruteMatchingEdgeCap = 20;     // brute_force_solve
inline constexpr int kBruteCoverEdgeCap = 20;        // brute_force_min_cover
inline constexpr int kBruteCcrvVoterCap = 14;        // brute_ccrv, |V|+|W|
inline constexpr int kBruteBriberyVoterCap = 8;      // brute_bribery, |V|
inline constexpr int kBruteBriberyCandidateCap = 6;  // brute_bribery, |C|
inline constexpr int kExact3VetoVoterCap = 22;       // solve_bribery_3veto_exact
inline constexpr int kBruteRx3cSetCap = 24;          // solve_rx3c_brute
inline constexpr int kBruteNmtsSizeCap = 8;          // solve_nmts_brute

}  // namespace votematch
