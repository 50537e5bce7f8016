#include "tokslide/fvs_fpt.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "tokslide/realize.hpp"

namespace tokslide {

namespace {

// A cycle of the collapsed multigraph, as the vertex sets of its elements.
using CycleElements = std::vector<VertexSet>;

class Enumerator {
 public:
  Enumerator(const Graph& g) : g_(g) {}

  RepresentationList run(int k) {
    std::vector<char> alive(g_.order(), 1);
    std::vector<VertexSet> classes;
    recurse(alive, classes, k);
    RepresentationList out(found_.begin(), found_.end());
    return out;
  }

 private:
  struct Chain {
    VertexSet vertices;
    VertexId end_a = 0;
    VertexId end_b = 0;
    bool closed = false;  // a whole component that is a cycle
  };

  std::size_t alive_degree(const std::vector<char>& alive, VertexId v) const {
    std::size_t d = 0;
    for (VertexId w : g_.neighbors(v)) d += alive[w] ? 1 : 0;
    return d;
  }

  void strip_low_degree(std::vector<char>& alive) const {
    std::vector<std::size_t> deg(g_.order(), 0);
    std::queue<VertexId> q;
    for (VertexId v = 0; v < g_.order(); ++v) {
      if (!alive[v]) continue;
      deg[v] = alive_degree(alive, v);
      if (deg[v] <= 1) q.push(v);
    }
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      if (!alive[v]) continue;
      alive[v] = 0;
      for (VertexId w : g_.neighbors(v)) {
        if (alive[w] && --deg[w] == 1) q.push(w);
      }
    }
  }

  // Maximal runs of degree-2 vertices. Every alive vertex has degree >= 2.
  std::vector<Chain> chains(const std::vector<char>& alive, const std::vector<char>& branch) const {
    std::vector<Chain> out;
    std::vector<char> seen(g_.order(), 0);
    auto alive_nbrs = [&](VertexId v) {
      std::vector<VertexId> r;
      for (VertexId w : g_.neighbors(v)) {
        if (alive[w]) r.push_back(w);
      }
      return r;
    };
    for (VertexId v = 0; v < g_.order(); ++v) {
      if (!alive[v] || branch[v] || seen[v]) continue;
      Chain c;
      // Walk both directions from v until a branch vertex or v again.
      auto nb = alive_nbrs(v);
      std::vector<VertexId> left, right;
      seen[v] = 1;
      auto walk = [&](VertexId prev, VertexId cur, std::vector<VertexId>& acc) -> VertexId {
        while (!branch[cur] && cur != v) {
          seen[cur] = 1;
          acc.push_back(cur);
          auto next = alive_nbrs(cur);
          VertexId nxt = next[0] == prev ? next[1] : next[0];
          prev = cur;
          cur = nxt;
        }
        return cur;
      };
      VertexId end_a = walk(v, nb[0], left);
      if (end_a == v) {
        c.closed = true;
        left.push_back(v);
        c.vertices = make_vertex_set(left);
        out.push_back(std::move(c));
        continue;
      }
      VertexId end_b = walk(v, nb[1], right);
      std::vector<VertexId> all = left;
      all.push_back(v);
      all.insert(all.end(), right.begin(), right.end());
      c.vertices = make_vertex_set(all);
      c.end_a = std::min(end_a, end_b);
      c.end_b = std::max(end_a, end_b);
      out.push_back(std::move(c));
    }
    return out;
  }

  // Shortest cycle in the multigraph on branch vertices whose edges are the
  // direct branch-branch edges plus the open chains.
  CycleElements shortest_cycle(const std::vector<char>& alive, const std::vector<char>& branch,
                               const std::vector<Chain>& cs) const {
    struct MEdge {
      VertexId a, b;
      int chain;  // -1 for a direct edge
    };
    std::vector<MEdge> edges;
    for (const auto& e : g_.edges()) {
      if (alive[e.u] && alive[e.v] && branch[e.u] && branch[e.v]) edges.push_back({e.u, e.v, -1});
    }
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (!cs[i].closed) edges.push_back({cs[i].end_a, cs[i].end_b, static_cast<int>(i)});
    }
    std::vector<std::vector<std::size_t>> inc(g_.order());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      inc[edges[i].a].push_back(i);
      if (edges[i].b != edges[i].a) inc[edges[i].b].push_back(i);
    }

    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::size_t best_len = kNone;
    std::vector<std::size_t> best_parent;
    VertexId best_u = 0, best_w = 0;
    std::size_t best_edge = kNone;

    for (VertexId root = 0; root < g_.order(); ++root) {
      if (!alive[root] || !branch[root]) continue;
      std::vector<std::size_t> dist(g_.order(), kNone), parent_edge(g_.order(), kNone);
      std::queue<VertexId> q;
      dist[root] = 0;
      q.push(root);
      while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        if (best_len != kNone && 2 * dist[u] + 1 >= best_len) break;
        for (std::size_t ei : inc[u]) {
          if (ei == parent_edge[u]) continue;
          VertexId w = edges[ei].a == u ? edges[ei].b : edges[ei].a;
          if (dist[w] == kNone) {
            dist[w] = dist[u] + 1;
            parent_edge[w] = ei;
            q.push(w);
          } else {
            std::size_t len = dist[u] + dist[w] + 1;
            if (best_len == kNone || len < best_len) {
              best_len = len;
              best_parent = parent_edge;
              best_u = u;
              best_w = w;
              best_edge = ei;
            }
          }
        }
      }
    }

    // Both tree paths lead to the BFS root; cut them at their lowest common
    // ancestor so the closed walk is a simple cycle.
    auto up = [&](VertexId v) {
      std::vector<VertexId> path{v};
      while (best_parent[v] != kNone) {
        const MEdge& e = edges[best_parent[v]];
        v = e.a == v ? e.b : e.a;
        path.push_back(v);
      }
      return path;
    };
    auto pu = up(best_u);
    auto pw = up(best_w);
    while (pu.size() >= 2 && pw.size() >= 2 && pu[pu.size() - 2] == pw[pw.size() - 2]) {
      pu.pop_back();
      pw.pop_back();
    }
    // pu and pw now end at the common ancestor.
    std::vector<VertexId> cycle_vertices(pu.begin(), pu.end());
    cycle_vertices.insert(cycle_vertices.end(), pw.begin(), pw.end() - 1);
    std::vector<std::size_t> cycle_edges{best_edge};
    for (auto* path : {&pu, &pw}) {
      for (std::size_t i = 0; i + 1 < path->size(); ++i) cycle_edges.push_back(best_parent[(*path)[i]]);
    }

    CycleElements elems;
    for (VertexId v : make_vertex_set(cycle_vertices)) elems.push_back({v});
    for (std::size_t ei : cycle_edges) {
      if (edges[ei].chain >= 0) elems.push_back(cs[static_cast<std::size_t>(edges[ei].chain)].vertices);
    }
    std::sort(elems.begin(), elems.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    return elems;
  }

  void emit(std::vector<VertexSet> classes) {
    std::sort(classes.begin(), classes.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    found_.insert(CompactRepresentation{std::move(classes)});
  }

  void recurse(std::vector<char> alive, std::vector<VertexSet>& classes, int k) {
    strip_low_degree(alive);
    std::vector<char> branch(g_.order(), 0);
    bool any_alive = false;
    bool any_branch = false;
    for (VertexId v = 0; v < g_.order(); ++v) {
      if (!alive[v]) continue;
      any_alive = true;
      if (alive_degree(alive, v) >= 3) {
        branch[v] = 1;
        any_branch = true;
      }
    }
    if (!any_alive) {
      emit(classes);
      return;
    }
    auto cs = chains(alive, branch);
    if (!any_branch) {
      // Disjoint cycles: any one vertex per cycle, nothing more.
      if (static_cast<int>(cs.size()) > k) return;
      auto extended = classes;
      for (auto& c : cs) extended.push_back(c.vertices);
      emit(std::move(extended));
      return;
    }
    if (k == 0) return;
    // A cycle hanging off a degree-3 vertex c: every minimal FVS takes exactly
    // one of its vertices, since c lies on no other cycle.
    for (const Chain& c : cs) {
      if (c.closed || c.end_a != c.end_b || alive_degree(alive, c.end_a) != 3) continue;
      VertexSet cls = make_vertex_set([&] {
        auto v = c.vertices;
        v.push_back(c.end_a);
        return v;
      }());
      auto next = alive;
      for (VertexId v : cls) next[v] = 0;
      classes.push_back(std::move(cls));
      recurse(std::move(next), classes, k - 1);
      classes.pop_back();
      return;
    }
    for (const VertexSet& element : shortest_cycle(alive, branch, cs)) {
      auto next = alive;
      for (VertexId v : element) next[v] = 0;
      classes.push_back(element);
      recurse(std::move(next), classes, k - 1);
      classes.pop_back();
    }
  }

  const Graph& g_;
  std::set<CompactRepresentation> found_;
};

}  // namespace

RepresentationList enumerate_compact_representations(const Graph& g, int k) {
  if (k < 0) throw InputError("token count must be non-negative");
  return Enumerator(g).run(k);
}

std::string format_representation(const Graph& g, const CompactRepresentation& rep) {
  if (rep.classes.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < rep.classes.size(); ++i) {
    if (i) os << ' ';
    os << format_set(g, rep.classes[i]);
  }
  return os.str();
}

namespace {

CandidateBipartite bipartite_from_distances(const Configuration& start, const CompactRepresentation& rep,
                                            const std::vector<std::vector<int>>& dist_from_token) {
  if (rep.classes.size() > start.size()) {
    throw InputError("representation has more classes than there are tokens");
  }
  CandidateBipartite h{start, rep.classes, CostMatrix(start.size(), rep.classes.size())};
  for (std::size_t r = 0; r < start.size(); ++r) {
    for (std::size_t c = 0; c < rep.classes.size(); ++c) {
      int best = kUnreachable;
      for (VertexId y : rep.classes[c]) best = std::min(best, dist_from_token[r][y]);
      h.weights.set(r, c, best == kUnreachable ? kForbidden : best);
    }
  }
  return h;
}

std::vector<std::vector<int>> token_distances(const Graph& g, const Configuration& start) {
  std::vector<std::vector<int>> d;
  d.reserve(start.size());
  for (VertexId u : start) d.push_back(distances_from(g, u));
  return d;
}

}  // namespace

CandidateBipartite build_candidate_bipartite(const Graph& g, const Configuration& start,
                                             const CompactRepresentation& rep) {
  return bipartite_from_distances(start, rep, token_distances(g, start));
}

SolveResult solve_fvsd_fpt(const DiscoveryInstance& inst, RepresentationList* representations) {
  if (inst.problem != Problem::FeedbackVertexSet) {
    throw UnsupportedInstance("the FPT solver handles feedback vertex set discovery only");
  }
  require_solvable(inst);
  const Graph& g = inst.graph;
  const int k = static_cast<int>(inst.start.size());
  RepresentationList reps = enumerate_compact_representations(g, k);
  const auto dist = token_distances(g, inst.start);

  std::optional<Cost> best;
  std::vector<std::pair<VertexId, VertexId>> best_targets;
  for (const auto& rep : reps) {
    if (rep.classes.size() > inst.start.size()) continue;
    if (rep.classes.empty()) {
      best = 0;
      best_targets.clear();
      break;
    }
    CandidateBipartite h = bipartite_from_distances(inst.start, rep, dist);
    Assignment a = min_cost_assignment(h.weights);
    if (best && a.total >= *best) continue;
    best = a.total;
    best_targets.clear();
    for (auto [r, c] : a.pairs) {
      // Closest class vertex, lowest index on ties.
      VertexId pick = rep.classes[c].front();
      for (VertexId y : rep.classes[c]) {
        if (dist[r][y] < dist[r][pick]) pick = y;
      }
      best_targets.emplace_back(inst.start[r], pick);
    }
  }
  if (representations) *representations = std::move(reps);

  SolveResult result;
  if (!best || *best > inst.budget) return result;
  result.yes = true;
  result.steps = static_cast<int>(*best);
  result.witness = realize_matching(g, inst.start, best_targets);
  return result;
}

}  // namespace tokslide
