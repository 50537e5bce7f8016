#pragma once

#include <utility>
#include <vector>

#include "tokslide/error.hpp"
#include "tokslide/instance.hpp"

namespace tokslide {

class RealizationError : public Error {
 public:
  using Error::Error;
};

/// Turns a token-to-target assignment into slides.
///
/// `targets` maps some start vertices to pairwise distinct target vertices;
/// unmatched tokens have no target of their own. Tokens advance along
/// shortest paths (next hop = lowest-index neighbor one step closer). When
/// the path ahead is blocked, the blocking token takes over the remaining
/// trip and the blocked one inherits the blocker's job, so every slide
/// lowers the total remaining distance by at least one. The result ends in
/// a configuration containing every target and has at most
/// sum dist(u, target(u)) moves.
MoveSequence realize_matching(const Graph& g, const Configuration& start,
                              const std::vector<std::pair<VertexId, VertexId>>& targets);

}  // namespace tokslide
