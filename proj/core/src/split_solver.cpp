#include "tokslide/split_solver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "tokslide/assignment.hpp"
#include "tokslide/realize.hpp"

namespace tokslide {

namespace {

SplitPartition require_split(const Graph& g) {
  if (!is_connected(g)) throw UnsupportedInstance("graph is not connected");
  auto p = split_partition(g);
  if (!p) throw UnsupportedInstance("graph is not a split graph");
  return *std::move(p);
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet neighbors_in(const Graph& g, VertexId v, const std::vector<char>& side) {
  VertexSet out;
  for (VertexId w : g.neighbors(v)) {
    if (side[w]) out.push_back(w);
  }
  return out;
}

void sort_unique(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

// F is a minimal FVS iff G - F is a forest and every x in F has at least
// two neighbors in one tree of G - F (putting x back would close a cycle).
bool is_minimal_fvs(const Graph& g, const VertexSet& f) {
  auto removed = membership(g.order(), f);
  if (!is_forest_without(g, removed)) return false;
  std::vector<VertexId> parent(g.order());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges()) {
    if (!removed[e.u] && !removed[e.v]) parent[find(e.u)] = find(e.v);
  }
  for (VertexId x : f) {
    std::vector<VertexId> roots;
    for (VertexId w : g.neighbors(x)) {
      if (!removed[w]) roots.push_back(find(w));
    }
    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end()) == roots.end()) return false;
  }
  return true;
}

}  // namespace

std::vector<VertexSet> enumerate_minimal_vertex_covers_split(const Graph& g) {
  SplitPartition p = require_split(g);
  auto in_i = membership(g.order(), p.independent);
  std::vector<VertexSet> out{p.clique};
  for (VertexId v : p.clique) {
    out.push_back(unite(minus(p.clique, {v}), neighbors_in(g, v, in_i)));
  }
  sort_unique(out);
  return out;
}

std::vector<VertexSet> enumerate_maximal_independent_sets_split(const Graph& g) {
  SplitPartition p = require_split(g);
  auto in_i = membership(g.order(), p.independent);
  std::vector<VertexSet> out{p.independent};
  for (VertexId v : p.clique) {
    out.push_back(unite({v}, minus(p.independent, neighbors_in(g, v, in_i))));
  }
  sort_unique(out);
  return out;
}

std::vector<VertexSet> enumerate_minimal_fvs_split(const Graph& g) {
  SplitPartition p = require_split(g);
  auto in_i = membership(g.order(), p.independent);
  const VertexSet& q = p.clique;
  // Q - {u,v} + common I-neighbors leaves a double star around the edge uv,
  // and every removed vertex would close a triangle with u and v, so these
  // are minimal without checking.
  std::vector<VertexSet> out;
  std::vector<VertexSet> unchecked{q};
  std::vector<VertexSet> nbrs;
  for (VertexId u : q) nbrs.push_back(neighbors_in(g, u, in_i));
  for (std::size_t a = 0; a < q.size(); ++a) {
    unchecked.push_back(minus(q, {q[a]}));
    for (std::size_t b = a + 1; b < q.size(); ++b) {
      VertexSet common;
      std::set_intersection(nbrs[a].begin(), nbrs[a].end(), nbrs[b].begin(), nbrs[b].end(),
                            std::back_inserter(common));
      out.push_back(unite(minus(q, {q[a], q[b]}), common));
    }
  }
  for (auto& c : unchecked) {
    if (is_minimal_fvs(g, c)) out.push_back(std::move(c));
  }
  sort_unique(out);
  return out;
}

namespace {

// Tokens on candidate vertices stay where they are; in a metric this never
// costs optimality. What remains is matching the free tokens to the open
// targets.
struct Residual {
  std::vector<std::size_t> tokens;  // indices into start
  VertexSet targets;
};

Residual residual(const Configuration& start, const VertexSet& candidate) {
  Residual r;
  for (std::size_t i = 0; i < start.size(); ++i) {
    if (!std::binary_search(candidate.begin(), candidate.end(), start[i])) r.tokens.push_back(i);
  }
  r.targets = minus(candidate, start);
  return r;
}

// Pairs that are not a single edge cost at least 2, so saturating s vertices
// costs at least 2s - (maximum matching over adjacent pairs).
Cost matching_bound(const Graph& g, const Configuration& start, const Residual& r, std::size_t saturated) {
  std::vector<std::vector<std::size_t>> adj(r.tokens.size());
  for (std::size_t i = 0; i < r.tokens.size(); ++i) {
    for (VertexId w : g.neighbors(start[r.tokens[i]])) {
      auto it = std::lower_bound(r.targets.begin(), r.targets.end(), w);
      if (it != r.targets.end() && *it == w) adj[i].push_back(static_cast<std::size_t>(it - r.targets.begin()));
    }
  }
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(r.targets.size(), kFree);
  std::vector<std::size_t> seen(r.targets.size(), kFree);
  std::function<bool(std::size_t, std::size_t)> augment = [&](std::size_t i, std::size_t stamp) {
    for (std::size_t t : adj[i]) {
      if (seen[t] == stamp) continue;
      seen[t] = stamp;
      if (owner[t] == kFree || augment(owner[t], stamp)) {
        owner[t] = i;
        return true;
      }
    }
    return false;
  };
  Cost matched = 0;
  for (std::size_t i = 0; i < adj.size(); ++i) matched += augment(i, i) ? 1 : 0;
  return 2 * static_cast<Cost>(saturated) - matched;
}

struct Plan {
  Cost total = 0;
  std::vector<std::pair<VertexId, VertexId>> pairs;
};

Plan plan_moves(const Configuration& start, const VertexSet& candidate, const Residual& r,
                const std::vector<std::vector<int>>& dist) {
  Plan plan;
  for (VertexId v : start) {
    if (std::binary_search(candidate.begin(), candidate.end(), v)) plan.pairs.emplace_back(v, v);
  }
  if (r.tokens.empty() || r.targets.empty()) return plan;
  CostMatrix costs(r.tokens.size(), r.targets.size());
  for (std::size_t i = 0; i < r.tokens.size(); ++i) {
    for (std::size_t c = 0; c < r.targets.size(); ++c) costs.set(i, c, dist[r.tokens[i]][r.targets[c]]);
  }
  Assignment a = min_cost_assignment(costs);
  plan.total = a.total;
  for (auto [i, c] : a.pairs) plan.pairs.emplace_back(start[r.tokens[i]], r.targets[c]);
  return plan;
}

}  // namespace

SolveResult solve_split(const DiscoveryInstance& inst) {
  if (inst.problem == Problem::DominatingSet) {
    throw UnsupportedInstance("dominating set discovery is not supported on split graphs; use the oracle");
  }
  require_solvable(inst);
  const Graph& g = inst.graph;
  const std::size_t k = inst.start.size();

  std::vector<VertexSet> candidates;
  switch (inst.problem) {
    case Problem::VertexCover:
      candidates = enumerate_minimal_vertex_covers_split(g);
      break;
    case Problem::FeedbackVertexSet:
      candidates = enumerate_minimal_fvs_split(g);
      break;
    default:
      candidates = enumerate_maximal_independent_sets_split(g);
      break;
  }

  std::vector<std::vector<int>> dist;
  dist.reserve(k);
  for (VertexId u : inst.start) dist.push_back(distances_from(g, u));

  // VC and FVS must fill every open target; IS must place every free token.
  const bool fill_targets = inst.problem != Problem::IndependentSet;
  std::vector<std::pair<Cost, std::size_t>> order;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const VertexSet& c = candidates[i];
    if (fill_targets ? c.size() > k : c.size() < k) continue;
    std::size_t shared = 0;
    for (VertexId v : inst.start) shared += std::binary_search(c.begin(), c.end(), v) ? 1 : 0;
    // Each open target (IS: each free token) needs at least one move.
    order.emplace_back(static_cast<Cost>(fill_targets ? c.size() - shared : k - shared), i);
  }
  std::sort(order.begin(), order.end());

  // Candidates are visited by lower bound, so the scan stops as soon as no
  // remaining candidate can beat the best plan.
  std::optional<Plan> best;
  for (auto [bound, i] : order) {
    if (best && bound >= best->total) break;
    const VertexSet& c = candidates[i];
    Residual r = residual(inst.start, c);
    const std::size_t saturated = fill_targets ? r.targets.size() : r.tokens.size();
    if (best && matching_bound(g, inst.start, r, saturated) >= best->total) continue;
    Plan plan = plan_moves(inst.start, c, r, dist);
    if (!best || plan.total < best->total) best = std::move(plan);
  }

  SolveResult result;
  if (!best || best->total > inst.budget) return result;
  result.yes = true;
  result.steps = static_cast<int>(best->total);
  result.witness = realize_matching(g, inst.start, best->pairs);
  return result;
}

}  // namespace tokslide
