#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "tokslide/io.hpp"

namespace tokslide {
namespace {

constexpr const char* kP3 =
    "# path on three vertices\n"
    "graph 3 2\n"
    "v v1\nv v2\nv v3\n"
    "e v1 v2\n"
    "e v2 v3   # trailing comment\n"
    "problem VC\n"
    "tokens v1\n"
    "budget 1\n";

TEST(Io, ParsesInstance) {
  DiscoveryInstance inst = io::parse_instance(kP3);
  EXPECT_EQ(inst.graph.order(), 3u);
  EXPECT_EQ(inst.graph.size(), 2u);
  EXPECT_EQ(inst.problem, Problem::VertexCover);
  EXPECT_EQ(inst.start, (Configuration{0}));
  EXPECT_EQ(inst.budget, 1);
}

TEST(Io, InstanceRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    Graph g = testing::random_connected_graph(rng, 2 + i % 8, 0.3);
    DiscoveryInstance inst{g, Problem::FeedbackVertexSet, testing::random_configuration(rng, g.order(), 2), i};
    DiscoveryInstance back = io::parse_instance(io::format_instance(inst));
    EXPECT_EQ(back.graph, inst.graph);
    EXPECT_EQ(back.start, inst.start);
    EXPECT_EQ(back.budget, inst.budget);
    EXPECT_EQ(back.problem, inst.problem);
  }
}

TEST(Io, GraphFileRejectsInstanceLines) {
  EXPECT_THROW(io::parse_graph(kP3), InputError);
  EXPECT_EQ(io::parse_graph(kP3, true).order(), 3u);
}

TEST(Io, Errors) {
  EXPECT_THROW(io::parse_graph(""), InputError);
  EXPECT_THROW(io::parse_graph("graph 2 1\nv a\nv b\n"), InputError);              // edge count
  EXPECT_THROW(io::parse_graph("graph 2 1\nv a\nv b\ne a c\n"), InputError);       // unknown endpoint
  EXPECT_THROW(io::parse_graph("graph x 0\n"), InputError);
  EXPECT_THROW(io::parse_instance("graph 1 0\nv a\nproblem VC\ntokens a\n"), InputError);  // budget missing
  EXPECT_THROW(io::parse_instance("graph 1 0\nv a\nproblem ZZ\ntokens a\nbudget 0\n"), InputError);
  EXPECT_THROW(io::parse_instance("graph 1 0\nv a\nproblem VC\ntokens a a\nbudget 0\n"), InputError);
  EXPECT_THROW(io::parse_instance("graph 1 0\nv a\nproblem VC\ntokens a\nbudget -1\n"), InputError);
}

TEST(Io, Moves) {
  DiscoveryInstance inst = io::parse_instance(kP3);
  MoveSequence seq = io::parse_moves("move v1 v2\n# done\n", inst.graph);
  ASSERT_EQ(seq.size(), 1u);
  EXPECT_EQ(seq[0], (Move{0, 1}));
  EXPECT_EQ(io::format_moves(inst.graph, seq), "move v1 v2\n");
  EXPECT_THROW(io::parse_moves("move v1 v9\n", inst.graph), InputError);
  EXPECT_THROW(io::parse_moves("slide v1 v2\n", inst.graph), InputError);
}

}  // namespace
}  // namespace tokslide
