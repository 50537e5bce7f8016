#include <gtest/gtest.h>

#include <set>

#include "brute.hpp"
#include "tokslide/fvs_fpt.hpp"
#include "tokslide/oracle.hpp"

namespace tokslide {
namespace {

// Triangles a-b-c and d-e-f joined by the bridge c-d.
Graph bridged_triangles() {
  return Graph::build({"a", "b", "c", "d", "e", "f"},
                      {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"}, {"d", "f"}});
}

std::vector<std::vector<std::string>> class_names(const Graph& g, const CompactRepresentation& rep) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : rep.classes) out.push_back(set_to_names(g, c));
  return out;
}

// Every one-per-class selection, as sorted vertex sets.
std::vector<VertexSet> selections(const CompactRepresentation& rep) {
  std::vector<VertexSet> out{{}};
  for (const auto& cls : rep.classes) {
    std::vector<VertexSet> next;
    for (const auto& partial : out) {
      for (VertexId v : cls) {
        VertexSet s = partial;
        s.push_back(v);
        next.push_back(s);
      }
    }
    out = std::move(next);
  }
  for (auto& s : out) std::sort(s.begin(), s.end());
  return out;
}

TEST(FvsFpt, Examples) {
  Graph tree = testing::make_graph(5, {{1, 2}, {1, 3}, {3, 4}, {3, 5}});
  auto reps = enumerate_compact_representations(tree, 2);
  ASSERT_EQ(reps.size(), 1u);
  EXPECT_TRUE(reps[0].classes.empty());
  EXPECT_EQ(format_representation(tree, reps[0]), "-");

  Graph c5 = testing::cycle_graph(5);
  reps = enumerate_compact_representations(c5, 1);
  ASSERT_EQ(reps.size(), 1u);
  EXPECT_EQ(reps[0].classes, (std::vector<VertexSet>{{0, 1, 2, 3, 4}}));
  EXPECT_TRUE(enumerate_compact_representations(c5, 0).empty());

  Graph bt = bridged_triangles();
  reps = enumerate_compact_representations(bt, 2);
  ASSERT_EQ(reps.size(), 1u);
  EXPECT_EQ(class_names(bt, reps[0]), (std::vector<std::vector<std::string>>{{"a", "b", "c"}, {"d", "e", "f"}}));
  EXPECT_EQ(format_representation(bt, reps[0]), "{a b c} {d e f}");
  EXPECT_TRUE(enumerate_compact_representations(bt, 1).empty());
}

TEST(FvsFpt, CandidateBipartite) {
  Graph c5 = testing::cycle_graph(5);
  CandidateBipartite h = build_candidate_bipartite(c5, {0}, {{{0, 1, 2, 3, 4}}});
  EXPECT_EQ(h.weights.at(0, 0), 0);

  Graph bt = bridged_triangles();
  CompactRepresentation rep{{{0, 1, 2}, {3, 4, 5}}};
  h = build_candidate_bipartite(bt, {0, 1}, rep);
  EXPECT_EQ(h.weights.at(0, 0), 0);
  EXPECT_EQ(h.weights.at(1, 0), 0);
  EXPECT_EQ(h.weights.at(1, 1), 2);

  h = build_candidate_bipartite(bt, {0, 1}, {});
  EXPECT_EQ(h.weights.rows(), 2u);
  EXPECT_EQ(h.weights.cols(), 0u);
  EXPECT_THROW(build_candidate_bipartite(bt, {0}, rep), InputError);
}

TEST(FvsFpt, SolveExamples) {
  SolveResult r = solve_fvsd_fpt({testing::cycle_graph(4), Problem::FeedbackVertexSet, {1}, 0});
  EXPECT_TRUE(r.yes);
  EXPECT_EQ(r.steps, 0);

  Graph bt = bridged_triangles();
  EXPECT_FALSE(solve_fvsd_fpt({bt, Problem::FeedbackVertexSet, {0, 1}, 1}).yes);
  r = solve_fvsd_fpt({bt, Problem::FeedbackVertexSet, {0, 1}, 2});
  EXPECT_TRUE(r.yes);
  EXPECT_EQ(r.steps, 2);
  EXPECT_EQ(r.witness.size(), 2u);
  EXPECT_TRUE(validate_sequence({bt, Problem::FeedbackVertexSet, {0, 1}, 2}, r.witness).feasible);

  Graph tree = testing::path_graph(4);
  EXPECT_TRUE(solve_fvsd_fpt({tree, Problem::FeedbackVertexSet, {0, 3}, 0}).yes);
  EXPECT_THROW(solve_fvsd_fpt({tree, Problem::VertexCover, {0}, 0}), UnsupportedInstance);
}

TEST(FvsFpt, MultigraphCases) {
  // K4: every pair is a minimal FVS.
  Graph k4 = testing::complete_graph(4);
  std::set<VertexSet> covered;
  for (const auto& rep : enumerate_compact_representations(k4, 2)) {
    for (const auto& s : selections(rep)) {
      EXPECT_TRUE(check_solution(k4, Problem::FeedbackVertexSet, s));
      covered.insert(s);
    }
  }
  for (const auto& m : testing::minimal_solutions(k4, Problem::FeedbackVertexSet)) EXPECT_TRUE(covered.count(m));
  // Theta graph: two branch vertices joined by three paths.
  Graph theta = testing::make_graph(7, {{1, 2}, {2, 7}, {1, 3}, {3, 4}, {4, 7}, {1, 5}, {5, 6}, {6, 7}});
  auto reps = enumerate_compact_representations(theta, 1);
  std::set<VertexSet> singles;
  for (const auto& rep : reps) {
    for (const auto& s : selections(rep)) singles.insert(s);
  }
  EXPECT_EQ(singles, (std::set<VertexSet>{{0}, {6}}));
}

// Soundness and completeness against subset enumeration.
TEST(FvsFpt, RepresentationsSoundAndComplete) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 150; ++round) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = testing::random_connected_graph(rng, n, 0.35);
    int k = static_cast<int>(rng() % 4);
    auto reps = enumerate_compact_representations(g, k);
    std::set<VertexSet> represented;
    for (const auto& rep : reps) {
      ASSERT_LE(rep.classes.size(), static_cast<std::size_t>(k));
      for (const auto& s : selections(rep)) {
        ASSERT_TRUE(check_solution(g, Problem::FeedbackVertexSet, s));
        represented.insert(s);
      }
    }
    for (const auto& m : testing::minimal_solutions(g, Problem::FeedbackVertexSet)) {
      if (m.size() <= static_cast<std::size_t>(k)) EXPECT_TRUE(represented.count(m)) << format_set(g, m);
    }
  }
}

TEST(FvsFpt, AgreesWithOracle) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 150; ++round) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = testing::random_connected_graph(rng, n, 0.35);
    std::size_t k = 1 + rng() % 3;
    if (k > g.order()) continue;
    DiscoveryInstance inst{g, Problem::FeedbackVertexSet, testing::random_configuration(rng, g.order(), k),
                           static_cast<int>(rng() % 6)};
    auto expected = discover_min_moves(inst);
    SolveResult r = solve_fvsd_fpt(inst);
    ASSERT_EQ(r.yes, expected.has_value());
    if (!r.yes) continue;
    EXPECT_EQ(r.steps, expected->steps);
    EXPECT_EQ(r.witness.size(), static_cast<std::size_t>(*r.steps));
    EXPECT_TRUE(validate_sequence(inst, r.witness).feasible);
  }
}

}  // namespace
}  // namespace tokslide
