#include "tokslide/instance.hpp"

#include <algorithm>

namespace tokslide {

bool configurations_adjacent(const Graph& g, const Configuration& s1, const Configuration& s2) {
  if (s1.size() != s2.size()) return false;
  // s1 \ s2 must be a single vertex x and s2 \ s1 a single vertex y with xy an edge.
  std::vector<VertexId> only1;
  std::vector<VertexId> only2;
  std::set_difference(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(only1));
  std::set_difference(s2.begin(), s2.end(), s1.begin(), s1.end(), std::back_inserter(only2));
  if (only1.size() != 1 || only2.size() != 1) return false;
  if (only1[0] >= g.order() || only2[0] >= g.order()) return false;
  return g.adjacent(only1[0], only2[0]);
}

ReplayReport validate_sequence(const DiscoveryInstance& inst, const MoveSequence& seq) {
  const Graph& g = inst.graph;
  std::vector<char> occupied = membership(g.order(), inst.start);
  for (std::size_t step = 0; step < seq.size(); ++step) {
    const Move& mv = seq[step];
    auto where = " at move " + std::to_string(step + 1);
    if (mv.from >= g.order() || mv.to >= g.order()) {
      throw SequenceError(SequenceError::Reason::UnknownVertex, step, "unknown vertex" + where);
    }
    const auto& from = g.name(mv.from);
    const auto& to = g.name(mv.to);
    if (!occupied[mv.from]) {
      throw SequenceError(SequenceError::Reason::FromUnoccupied, step,
                          "no token on '" + from + "'" + where);
    }
    if (occupied[mv.to]) {
      throw SequenceError(SequenceError::Reason::ToOccupied, step,
                          "destination '" + to + "' already occupied" + where);
    }
    if (!g.adjacent(mv.from, mv.to)) {
      throw SequenceError(SequenceError::Reason::NotAnEdge, step,
                          from + "-" + to + " is not an edge" + where);
    }
    occupied[mv.from] = 0;
    occupied[mv.to] = 1;
  }
  if (seq.size() > static_cast<std::size_t>(std::max(inst.budget, 0))) {
    throw SequenceError(SequenceError::Reason::BudgetExceeded, seq.size() - 1,
                        std::to_string(seq.size()) + " moves exceed budget " +
                            std::to_string(inst.budget));
  }
  ReplayReport report;
  report.steps = seq.size();
  for (VertexId v = 0; v < g.order(); ++v) {
    if (occupied[v]) report.final_configuration.push_back(v);
  }
  report.feasible = check_solution_mask(g, inst.problem, occupied);
  return report;
}

DiscoveryInstance normalize_budget(DiscoveryInstance inst) {
  if (!is_connected(inst.graph)) throw UnsupportedInstance("graph is disconnected");
  const long long cap = static_cast<long long>(inst.start.size()) * diameter(inst.graph);
  if (inst.budget > cap) inst.budget = static_cast<int>(cap);
  return inst;
}

void require_solvable(const DiscoveryInstance& inst) {
  if (inst.budget < 0) throw InputError("budget must be non-negative");
  for (VertexId v : inst.start) {
    if (v >= inst.graph.order()) throw InputError("token on unknown vertex");
  }
  if (!std::is_sorted(inst.start.begin(), inst.start.end()) ||
      std::adjacent_find(inst.start.begin(), inst.start.end()) != inst.start.end()) {
    throw InputError("start configuration must be a sorted set of distinct vertices");
  }
  if (!is_connected(inst.graph)) {
    throw UnsupportedInstance("graph is disconnected; solve each component separately");
  }
}

}  // namespace tokslide
