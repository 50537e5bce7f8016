#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "tokslide/cw_expr.hpp"
#include "tokslide/instance.hpp"

namespace tokslide {

/// One state of the clique-width dynamic program for vertex-cover discovery.
///
/// All per-label vectors have one entry per label 1..w (index z-1). Moves
/// between G_t and the outside are routed through a virtual vertex adjacent
/// to everything: `absorb[z]` counts moves from it into z-vertices and
/// `project[z]` moves from z-vertices to it. `direct[z]` is the net number of
/// tokens that entered z-vertices over edges inside G_t that a join already
/// paid for; it is zero below the first join.
struct DpTuple {
  int moves = 0;             // moves performed inside G_t
  std::vector<int> tokens;   // final token count per label
  std::vector<int> absorb;
  std::vector<int> project;
  std::vector<int> direct;   // empty means all zero

  friend auto operator<=>(const DpTuple&, const DpTuple&) = default;
};

struct NodeContext {
  std::vector<int> label_sizes;     // |U_z| at this node
  std::vector<int> initial_tokens;  // |S ∩ U_z|
  int tokens = 0;                   // k
  int budget = 0;                   // b
};

/// Conditions: (a) total tokens <= k; (b) empty label classes carry nothing;
/// (c) moves <= b; (d) initial + absorb - project + direct = tokens, with
/// 0 <= tokens <= |U_z| and absorb, project in [0, b].
bool is_valid_tuple(const NodeContext& ctx, const DpTuple& s);

struct NodeTable {
  NodeContext context;
  std::vector<DpTuple> tuples;  // sorted
};

/// Tables for every expression node, indexed like WExpression::nodes().
/// Throws InputError when the expression is redundant or does not denote
/// inst.graph, and UnsupportedInstance when inst.problem is not VC.
std::vector<NodeTable> compute_all_tables(const WExpression& expr, const DiscoveryInstance& inst);

/// Root table only.
NodeTable compute_tables(const WExpression& expr, const DiscoveryInstance& inst);

struct CwResult {
  bool yes = false;
  std::optional<int> min_moves;  // set iff yes
};

/// Decides vertex-cover discovery from an irredundant expression of the
/// graph. Reports the fewest moves among accepting root tuples.
CwResult solve_vcd_cw(const WExpression& expr, const DiscoveryInstance& inst);

}  // namespace tokslide
