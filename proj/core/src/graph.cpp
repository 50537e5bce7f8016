#include "tokslide/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "tokslide/error.hpp"

namespace tokslide {

namespace {

// Union-find used for acyclicity tests.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False when a and b were already connected.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Graph Graph::from_indices(std::vector<std::string> names,
                          const std::vector<std::pair<VertexId, VertexId>>& edges) {
  Graph g;
  g.index_.reserve(names.size());
  for (VertexId i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw InputError("empty vertex name");
    if (!g.index_.emplace(names[i], i).second) {
      throw InputError("duplicate vertex name '" + names[i] + "'");
    }
  }
  g.names_ = std::move(names);
  g.adjacency_.assign(g.names_.size(), {});
  g.edges_.reserve(edges.size());
  std::set<std::pair<VertexId, VertexId>> seen;
  for (auto [u, v] : edges) {
    if (u >= g.names_.size() || v >= g.names_.size()) {
      throw InputError("edge endpoint out of range");
    }
    if (u == v) throw InputError("self-loop at '" + g.names_[u] + "'");
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second) {
      throw InputError("duplicate edge " + g.names_[u] + "-" + g.names_[v]);
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
    g.edges_.push_back({key.first, key.second});
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

Graph Graph::build(std::vector<std::string> names,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, VertexId> idx;
  for (VertexId i = 0; i < names.size(); ++i) idx.emplace(names[i], i);
  std::vector<std::pair<VertexId, VertexId>> ie;
  ie.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = idx.find(a);
    auto ib = idx.find(b);
    if (ia == idx.end()) throw InputError("edge endpoint '" + a + "' not declared");
    if (ib == idx.end()) throw InputError("edge endpoint '" + b + "' not declared");
    ie.emplace_back(ia->second, ib->second);
  }
  return from_indices(std::move(names), ie);
}

std::optional<VertexId> Graph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::index(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<std::string> names;
  std::vector<VertexId> remap(order(), static_cast<VertexId>(-1));
  for (VertexId i = 0; i < keep.size(); ++i) {
    names.push_back(names_.at(keep[i]));
    remap[keep[i]] = i;
  }
  std::vector<std::pair<VertexId, VertexId>> es;
  for (const auto& e : edges_) {
    if (remap[e.u] != static_cast<VertexId>(-1) && remap[e.v] != static_cast<VertexId>(-1)) {
      es.emplace_back(remap[e.u], remap[e.v]);
    }
  }
  return from_indices(std::move(names), es);
}

std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::VertexCover: return "VC";
    case Problem::IndependentSet: return "IS";
    case Problem::DominatingSet: return "DS";
    case Problem::FeedbackVertexSet: return "FVS";
  }
  return "?";
}

Problem parse_problem(std::string_view tag) {
  if (tag == "VC") return Problem::VertexCover;
  if (tag == "IS") return Problem::IndependentSet;
  if (tag == "DS") return Problem::DominatingSet;
  if (tag == "FVS") return Problem::FeedbackVertexSet;
  throw InputError("unknown problem '" + std::string(tag) + "' (expected VC, IS, DS or FVS)");
}

std::vector<int> distances_from(const Graph& g, VertexId source) {
  if (source >= g.order()) throw InputError("unknown source vertex");
  std::vector<int> dist(g.order(), kUnreachable);
  std::queue<VertexId> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(g.order());
  for (VertexId v = 0; v < g.order(); ++v) d.push_back(distances_from(g, v));
  return d;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto d = distances_from(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

int diameter(const Graph& g) {
  int best = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    for (int x : distances_from(g, v)) {
      if (x == kUnreachable) throw UnsupportedInstance("diameter of a disconnected graph");
      best = std::max(best, x);
    }
  }
  return best;
}

bool is_forest_without(const Graph& g, const std::vector<char>& removed) {
  DisjointSets ds(g.order());
  for (const auto& e : g.edges()) {
    if (removed[e.u] || removed[e.v]) continue;
    if (!ds.unite(e.u, e.v)) return false;
  }
  return true;
}

bool check_solution_mask(const Graph& g, Problem problem, const std::vector<char>& in_set) {
  switch (problem) {
    case Problem::VertexCover:
      return std::all_of(g.edges().begin(), g.edges().end(),
                         [&](const Edge& e) { return in_set[e.u] || in_set[e.v]; });
    case Problem::IndependentSet:
      return std::none_of(g.edges().begin(), g.edges().end(),
                          [&](const Edge& e) { return in_set[e.u] && in_set[e.v]; });
    case Problem::DominatingSet:
      for (VertexId v = 0; v < g.order(); ++v) {
        if (in_set[v]) continue;
        auto nbrs = g.neighbors(v);
        if (std::none_of(nbrs.begin(), nbrs.end(), [&](VertexId w) { return in_set[w] != 0; })) {
          return false;
        }
      }
      return true;
    case Problem::FeedbackVertexSet:
      return is_forest_without(g, in_set);
  }
  return false;
}

bool check_solution(const Graph& g, Problem problem, const VertexSet& s) {
  for (VertexId v : s) {
    if (v >= g.order()) throw InputError("vertex index out of range in solution");
  }
  return check_solution_mask(g, problem, membership(g.order(), s));
}

std::optional<SplitPartition> split_partition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexId> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });

  // Hammer-Simeone: with degrees d_1 >= ... >= d_n and m = max{i : d_i >= i-1},
  // g is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.degree(by_degree[i]) >= i) m = i + 1;
  }
  std::size_t head = 0;
  std::size_t tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(by_degree[i]);
  if (head != m * (m == 0 ? 0 : m - 1) + tail) return std::nullopt;

  std::vector<char> in_clique(n, 0);
  for (std::size_t i = 0; i < m; ++i) in_clique[by_degree[i]] = 1;

  // Move clique vertices without an independent-side neighbor across. After
  // the first move every remaining clique vertex has that vertex as neighbor.
  for (VertexId v = static_cast<VertexId>(n); v-- > 0;) {
    if (!in_clique[v]) continue;
    auto nbrs = g.neighbors(v);
    bool has_outside = std::any_of(nbrs.begin(), nbrs.end(), [&](VertexId w) { return !in_clique[w]; });
    if (!has_outside) in_clique[v] = 0;
  }

  SplitPartition p;
  for (VertexId v = 0; v < n; ++v) (in_clique[v] ? p.clique : p.independent).push_back(v);

  for (std::size_t a = 0; a < p.clique.size(); ++a) {
    for (std::size_t b = a + 1; b < p.clique.size(); ++b) {
      if (!g.adjacent(p.clique[a], p.clique[b])) return std::nullopt;
    }
  }
  for (const auto& e : g.edges()) {
    if (!in_clique[e.u] && !in_clique[e.v]) return std::nullopt;
  }
  for (VertexId q : p.clique) {
    auto nbrs = g.neighbors(q);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](VertexId w) { return !in_clique[w]; })) {
      return std::nullopt;
    }
  }
  return p;
}

bool is_chordal(const Graph& g) {
  const std::size_t n = g.order();
  // Maximum-cardinality search; visit[v] is the position at which v is numbered.
  std::vector<int> weight(n, 0);
  std::vector<int> visit(n, -1);
  std::vector<VertexId> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    VertexId pick = 0;
    int best = -1;
    for (VertexId v = 0; v < n; ++v) {
      if (visit[v] < 0 && weight[v] > best) {
        best = weight[v];
        pick = v;
      }
    }
    visit[pick] = static_cast<int>(step);
    order.push_back(pick);
    for (VertexId w : g.neighbors(pick)) {
      if (visit[w] < 0) ++weight[w];
    }
  }
  // The reverse visit order is a perfect elimination ordering iff g is
  // chordal: for each v, its earlier-visited neighbors minus the latest of
  // them must all be adjacent to that latest one.
  for (VertexId v : order) {
    VertexId parent = 0;
    int parent_visit = -1;
    for (VertexId w : g.neighbors(v)) {
      if (visit[w] < visit[v] && visit[w] > parent_visit) {
        parent_visit = visit[w];
        parent = w;
      }
    }
    if (parent_visit < 0) continue;
    for (VertexId w : g.neighbors(v)) {
      if (w != parent && visit[w] < visit[v] && !g.adjacent(parent, w)) return false;
    }
  }
  return true;
}

VertexSet make_vertex_set(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<char> membership(std::size_t n, const VertexSet& s) {
  std::vector<char> in(n, 0);
  for (VertexId v : s) in.at(v) = 1;
  return in;
}

VertexSet names_to_set(const Graph& g, const std::vector<std::string>& names) {
  std::vector<VertexId> ids;
  ids.reserve(names.size());
  for (const auto& nm : names) ids.push_back(g.index(nm));
  auto set = make_vertex_set(ids);
  if (set.size() != ids.size()) throw InputError("vertex listed twice in a vertex set");
  return set;
}

std::vector<std::string> set_to_names(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (VertexId v : s) out.push_back(g.name(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_set(const Graph& g, const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& nm : set_to_names(g, s)) {
    if (!first) os << ' ';
    os << nm;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace tokslide
