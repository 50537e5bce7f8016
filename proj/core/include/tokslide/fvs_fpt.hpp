#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tokslide/assignment.hpp"
#include "tokslide/instance.hpp"

namespace tokslide {

/// Pairwise disjoint vertex classes; picking one vertex from every class
/// yields a feedback vertex set. Classes are sorted by smallest vertex.
struct CompactRepresentation {
  std::vector<VertexSet> classes;

  friend bool operator==(const CompactRepresentation&, const CompactRepresentation&) = default;
  friend auto operator<=>(const CompactRepresentation&, const CompactRepresentation&) = default;
};

using RepresentationList = std::vector<CompactRepresentation>;

/// Complete list of k-compact representations: every inclusion-minimal
/// feedback vertex set of size <= k meets every class of some entry in
/// exactly one vertex.
///
/// Branching enumerator: strip vertices of degree <= 1, collapse maximal
/// induced paths of degree-2 vertices, stop when only disjoint cycles remain
/// (one class per cycle), fold a cycle hanging off a degree-3 vertex into a
/// single class, otherwise branch on the elements of a shortest cycle of the
/// collapsed multigraph (a branch vertex becomes a singleton class, a
/// collapsed path becomes the class of its vertices).
RepresentationList enumerate_compact_representations(const Graph& g, int k);

/// Classes as "{a b} {c d e}"; the empty representation prints as "-".
std::string format_representation(const Graph& g, const CompactRepresentation& rep);

struct CandidateBipartite {
  VertexSet tokens;               // rows
  std::vector<VertexSet> classes; // columns
  CostMatrix weights;             // min distance from token to class
};

/// Throws InputError when the representation has more classes than tokens.
CandidateBipartite build_candidate_bipartite(const Graph& g, const Configuration& start,
                                             const CompactRepresentation& rep);

struct SolveResult {
  bool yes = false;
  std::optional<int> steps;
  MoveSequence witness;
};

/// Fixed-parameter (in the token count) feedback-vertex-set discovery.
/// Throws UnsupportedInstance for other problems or disconnected graphs.
SolveResult solve_fvsd_fpt(const DiscoveryInstance& inst,
                           RepresentationList* representations = nullptr);

}  // namespace tokslide
