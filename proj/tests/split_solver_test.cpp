#include <gtest/gtest.h>

#include "brute.hpp"
#include "tokslide/oracle.hpp"
#include "tokslide/split_solver.hpp"

namespace tokslide {
namespace {

// Q={a,b}, I={c,d}, edges ab, ac, bd.
Graph small_split() {
  return Graph::build({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}});
}

std::vector<std::vector<std::string>> names_of(const Graph& g, const std::vector<VertexSet>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : sets) out.push_back(set_to_names(g, s));
  std::sort(out.begin(), out.end());
  return out;
}

using Names = std::vector<std::vector<std::string>>;

TEST(Split, CoverExamples) {
  Graph g = small_split();
  EXPECT_EQ(names_of(g, enumerate_minimal_vertex_covers_split(g)), (Names{{"a", "b"}, {"a", "d"}, {"b", "c"}}));
  Graph edge = Graph::build({"a", "b"}, {{"a", "b"}});
  EXPECT_EQ(names_of(edge, enumerate_minimal_vertex_covers_split(edge)), (Names{{"a"}, {"b"}}));
  Graph star = testing::star_graph(3);
  EXPECT_EQ(names_of(star, enumerate_minimal_vertex_covers_split(star)), (Names{{"c"}, {"l1", "l2", "l3"}}));
  EXPECT_THROW(enumerate_minimal_vertex_covers_split(testing::cycle_graph(4)), UnsupportedInstance);
}

TEST(Split, IndependentSetExamples) {
  Graph g = small_split();
  EXPECT_EQ(names_of(g, enumerate_maximal_independent_sets_split(g)), (Names{{"a", "d"}, {"b", "c"}, {"c", "d"}}));
  Graph k3 = testing::complete_graph(3);
  EXPECT_EQ(names_of(k3, enumerate_maximal_independent_sets_split(k3)), (Names{{"v1"}, {"v2"}, {"v3"}}));
  Graph star = testing::star_graph(3);
  EXPECT_EQ(names_of(star, enumerate_maximal_independent_sets_split(star)), (Names{{"c"}, {"l1", "l2", "l3"}}));
}

TEST(Split, FvsExamples) {
  Graph tri = Graph::build({"a", "b", "c", "x"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"x", "a"}, {"x", "b"}});
  EXPECT_EQ(names_of(tri, enumerate_minimal_fvs_split(tri)), (Names{{"a"}, {"b"}, {"c", "x"}}));
  Graph star = testing::star_graph(3);
  EXPECT_EQ(enumerate_minimal_fvs_split(star), (std::vector<VertexSet>{{}}));
  Graph k4 = testing::complete_graph(4);
  EXPECT_EQ(enumerate_minimal_fvs_split(k4),
            (std::vector<VertexSet>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
}

TEST(Split, SolveExamples) {
  Graph g = small_split();
  SolveResult r = solve_split({g, Problem::VertexCover, names_to_set(g, {"c", "d"}), 1});
  EXPECT_TRUE(r.yes);
  EXPECT_EQ(r.steps, 1);
  r = solve_split({g, Problem::IndependentSet, names_to_set(g, {"a", "b"}), 2});
  EXPECT_TRUE(r.yes);
  EXPECT_EQ(r.steps, 1);

  Graph tri = Graph::build({"a", "b", "c", "x"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"x", "a"}});
  DiscoveryInstance pendant{tri, Problem::FeedbackVertexSet, names_to_set(tri, {"x"}), 1};
  auto expected = discover_min_moves(pendant);
  r = solve_split(pendant);
  EXPECT_EQ(r.yes, expected.has_value());
  EXPECT_EQ(r.steps, 1);

  EXPECT_THROW(solve_split({g, Problem::DominatingSet, {0}, 1}), UnsupportedInstance);
  EXPECT_THROW(solve_split({testing::cycle_graph(5), Problem::VertexCover, {0}, 1}), UnsupportedInstance);
}

TEST(Split, EnumerationsMatchBruteForce) {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 150; ++round) {
    int nq = 1 + static_cast<int>(rng() % 5);
    int ni = static_cast<int>(rng() % 6);
    Graph g = testing::random_split_graph(rng, nq, ni, 0.45);
    auto q = split_partition(g)->clique;
    auto covers = enumerate_minimal_vertex_covers_split(g);
    EXPECT_EQ(covers.size(), q.size() + 1);
    EXPECT_EQ(covers, testing::minimal_solutions(g, Problem::VertexCover));
    EXPECT_EQ(enumerate_maximal_independent_sets_split(g), testing::maximal_independent_sets(g));
    EXPECT_EQ(enumerate_minimal_fvs_split(g), testing::minimal_solutions(g, Problem::FeedbackVertexSet));
  }
}

TEST(Split, AgreesWithOracle) {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 300; ++round) {
    int nq = 1 + static_cast<int>(rng() % 5);
    int ni = static_cast<int>(rng() % 6);
    Graph g = testing::random_split_graph(rng, nq, ni, 0.45);
    std::size_t k = rng() % std::min<std::size_t>(4, g.order() + 1);
    Problem p = std::array{Problem::VertexCover, Problem::IndependentSet, Problem::FeedbackVertexSet}[rng() % 3];
    DiscoveryInstance inst{g, p, testing::random_configuration(rng, g.order(), k), static_cast<int>(rng() % 7)};
    auto expected = discover_min_moves(inst);
    SolveResult r = solve_split(inst);
    ASSERT_EQ(r.yes, expected.has_value()) << to_string(p);
    if (!r.yes) continue;
    EXPECT_EQ(r.steps, expected->steps);
    EXPECT_EQ(r.witness.size(), static_cast<std::size_t>(*r.steps));
    EXPECT_TRUE(validate_sequence(inst, r.witness).feasible);
  }
}

}  // namespace
}  // namespace tokslide
