#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tokslide {

using VertexId = std::uint32_t;

// Sorted, duplicate-free list of vertex indices. Used for configurations and
// candidate solutions alike.
using VertexSet = std::vector<VertexId>;

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Immutable simple undirected graph with named vertices.
///
/// Vertices are identified by dense indices in declaration order; the names
/// are opaque strings. Neighbor lists are sorted by index so every traversal
/// is deterministic.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds a graph. Throws InputError on duplicate names,
  /// self-loops, parallel edges, or undeclared endpoints.
  static Graph build(std::vector<std::string> names,
                     const std::vector<std::pair<std::string, std::string>>& edges);

  /// Same validation as build(), with edges given by index.
  static Graph from_indices(std::vector<std::string> names,
                            const std::vector<std::pair<VertexId, VertexId>>& edges);

  std::size_t order() const { return names_.size(); }
  std::size_t size() const { return edges_.size(); }

  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<VertexId> find(std::string_view name) const;
  /// Like find() but throws InputError for unknown names.
  VertexId index(std::string_view name) const;

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;

  /// Edges with u < v, in the order they were declared.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Induced subgraph on `keep` (sorted indices). Vertex i of the result is
  /// keep[i].
  Graph induced(const VertexSet& keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
};

/// Problem whose solutions the tokens must reach.
enum class Problem { VertexCover, IndependentSet, DominatingSet, FeedbackVertexSet };

std::string_view to_string(Problem p);
/// Accepts the short tags VC, IS, DS, FVS.
Problem parse_problem(std::string_view tag);

// --- metric queries -------------------------------------------------------

/// Breadth-first hop counts from `source`; unreachable vertices get
/// kUnreachable.
std::vector<int> distances_from(const Graph& g, VertexId source);
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);
bool is_connected(const Graph& g);
/// Throws UnsupportedInstance when g is disconnected.
int diameter(const Graph& g);

// --- feasibility ----------------------------------------------------------

/// Throws InputError when s names a vertex outside g.
bool check_solution(const Graph& g, Problem problem, const VertexSet& s);

/// Membership-vector variant used on hot paths (no range checks).
bool check_solution_mask(const Graph& g, Problem problem, const std::vector<char>& in_set);

/// True when G - s has no cycle.
bool is_forest_without(const Graph& g, const std::vector<char>& removed);

// --- graph classes --------------------------------------------------------

struct SplitPartition {
  VertexSet clique;       // Q
  VertexSet independent;  // I
};

/// Split partition in repartitioned form (every clique vertex has a
/// neighbor on the independent side), or nullopt when g is not split.
std::optional<SplitPartition> split_partition(const Graph& g);

/// Maximum-cardinality search followed by a perfect-elimination check.
bool is_chordal(const Graph& g);

// --- set helpers ----------------------------------------------------------

VertexSet make_vertex_set(std::vector<VertexId> v);
std::vector<char> membership(std::size_t n, const VertexSet& s);
VertexSet names_to_set(const Graph& g, const std::vector<std::string>& names);
std::vector<std::string> set_to_names(const Graph& g, const VertexSet& s);
/// "{a b c}" with names sorted lexicographically.
std::string format_set(const Graph& g, const VertexSet& s);

}  // namespace tokslide
