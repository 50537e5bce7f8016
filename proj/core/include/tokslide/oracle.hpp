#pragma once

#include <cstddef>
#include <optional>

#include "tokslide/error.hpp"
#include "tokslide/instance.hpp"

namespace tokslide {

struct OracleOptions {
  // Maximum number of distinct configurations the search may store.
  std::size_t state_cap = 10'000'000;
};

struct Discovery {
  int steps = 0;
  MoveSequence witness;
};

class StateCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Exhaustive breadth-first search over configurations of |start| tokens.
/// Returns the fewest slides (at most inst.budget) that reach a solution of
/// inst.problem, with a witness, or nullopt when no solution is reachable
/// within the budget. Throws StateCapExceeded rather than answering
/// approximately.
std::optional<Discovery> discover_min_moves(const DiscoveryInstance& inst,
                                            const OracleOptions& options = {});

bool decide(const DiscoveryInstance& inst, const OracleOptions& options = {});

}  // namespace tokslide
