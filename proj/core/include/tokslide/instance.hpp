#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tokslide/error.hpp"
#include "tokslide/graph.hpp"

namespace tokslide {

// One token per occupied vertex.
using Configuration = VertexSet;

struct Move {
  VertexId from;
  VertexId to;

  friend bool operator==(const Move&, const Move&) = default;
};

using MoveSequence = std::vector<Move>;

struct DiscoveryInstance {
  Graph graph;
  Problem problem = Problem::VertexCover;
  Configuration start;
  int budget = 0;

  std::size_t tokens() const { return start.size(); }
};

/// True iff |s1| = |s2| and s2 is obtained from s1 by sliding one token
/// along an edge onto an unoccupied vertex.
bool configurations_adjacent(const Graph& g, const Configuration& s1, const Configuration& s2);

class SequenceError : public Error {
 public:
  enum class Reason { UnknownVertex, FromUnoccupied, ToOccupied, NotAnEdge, BudgetExceeded };

  SequenceError(Reason reason, std::size_t step, const std::string& what)
      : Error(what), reason_(reason), step_(step) {}

  Reason reason() const { return reason_; }
  // Zero-based index of the offending move.
  std::size_t step() const { return step_; }

 private:
  Reason reason_;
  std::size_t step_;
};

struct ReplayReport {
  Configuration final_configuration;
  std::size_t steps = 0;
  bool feasible = false;  // final configuration solves inst.problem
};

/// Replays `seq` from inst.start. Throws SequenceError on the first illegal
/// move or when the sequence is longer than inst.budget.
ReplayReport validate_sequence(const DiscoveryInstance& inst, const MoveSequence& seq);

/// Caps the budget at |start| * diam(G). Throws UnsupportedInstance when the
/// graph is disconnected.
DiscoveryInstance normalize_budget(DiscoveryInstance inst);

/// Common precondition for all solvers: connected graph, start inside V,
/// non-negative budget.
void require_solvable(const DiscoveryInstance& inst);

}  // namespace tokslide
