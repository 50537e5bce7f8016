#pragma once

#include <optional>
#include <vector>

#include "tokslide/fvs_fpt.hpp"
#include "tokslide/instance.hpp"

namespace tokslide {

// All enumerators throw UnsupportedInstance when g is not a connected split
// graph. Results are sorted lexicographically.

/// The |Q|+1 minimal vertex covers: Q, and (Q - v) + (N(v) & I) for v in Q.
std::vector<VertexSet> enumerate_minimal_vertex_covers_split(const Graph& g);

/// I, and {v} + (I - N(v)) for v in Q, deduplicated.
std::vector<VertexSet> enumerate_maximal_independent_sets_split(const Graph& g);

/// At most two clique vertices survive a feedback vertex set. Candidates are
/// (Q - {u,v}) + (N(u) & N(v) & I), Q - u and Q, filtered to minimal FVSs.
std::vector<VertexSet> enumerate_minimal_fvs_split(const Graph& g);

/// VC, IS and FVS discovery on split graphs. Dominating set throws
/// UnsupportedInstance (use the oracle).
SolveResult solve_split(const DiscoveryInstance& inst);

}  // namespace tokslide
