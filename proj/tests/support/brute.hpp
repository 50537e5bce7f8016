#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tokslide/instance.hpp"

namespace tokslide::testing {

// Straightforward BFS over sorted configurations kept in a std::map. Much
// slower than the library oracle and deliberately written differently.
std::optional<int> naive_min_moves(const DiscoveryInstance& inst);

// Every vertex subset with the given property, by bitmask enumeration (n <= 20).
std::vector<VertexSet> all_solutions(const Graph& g, Problem p);
std::vector<VertexSet> minimal_solutions(const Graph& g, Problem p);  // VC, DS, FVS
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

// A feasible set of exactly k vertices exists.
bool has_solution_of_size(const Graph& g, Problem p, int k);
// A feasible set of at most k vertices exists.
bool has_solution_at_most(const Graph& g, Problem p, int k);

// Vertices named v1..vn.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // centre c, leaves l1..ln
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges_1based);

Graph random_connected_graph(std::mt19937_64& rng, int n, double extra_edge_p);
// Clique of size nq, independent side of size ni, each cross pair kept with
// probability p; reconnected if needed.
Graph random_split_graph(std::mt19937_64& rng, int nq, int ni, double p);

Configuration random_configuration(std::mt19937_64& rng, std::size_t n, std::size_t k);

std::vector<VertexSet> sorted(std::vector<VertexSet> sets);

}  // namespace tokslide::testing
