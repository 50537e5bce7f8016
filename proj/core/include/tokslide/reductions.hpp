#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tokslide/instance.hpp"

namespace tokslide {

/// Exact cover by 3-sets over the universe {1, ..., 3n}.
struct X3CInstance {
  int universe_size = 0;                 // 3n
  std::vector<std::array<int, 3>> family;  // 1-based element indices

  int n() const { return universe_size / 3; }
};

/// Throws InputError unless the universe size is a positive multiple of 3
/// and every set has three distinct elements inside the universe.
void validate(const X3CInstance& x);

/// Format: `x3c <3n> <m>` then m lines of three element indices. `#` starts
/// a comment.
X3CInstance parse_x3c(std::string_view text);
std::string format_x3c(const X3CInstance& x);

/// Chordal VC discovery instance: clique q0..q3n, and per set X_i a star with
/// root vi and leaves vi^1..vi^4, all five joined to q_j for u_j in X_i.
/// Tokens on all leaves, budget 4n.
DiscoveryInstance x3c_to_vcd(const X3CInstance& x);

/// Slides realizing an exact cover (0-based family indices) on the
/// x3c_to_vcd instance: vi^2, vi^3, vi^4 onto the three q's, then vi^1 onto
/// vi. Throws InputError when the cover is not exact.
MoveSequence x3c_witness_to_moves(const X3CInstance& x, const std::vector<std::size_t>& cover);

/// Every edge uv gains a vertex e_u_v adjacent to u and v; start and budget
/// carry over and the problem becomes FVS.
DiscoveryInstance vcd_to_fvsd(const DiscoveryInstance& inst);

/// Adds a universal vertex u. Size-k covers of G correspond to size-(k+1)
/// covers of the result.
std::pair<Graph, int> diameterize_vc(const Graph& g, int k);

/// Adds a universal vertex s and k+2 triangles s, si^1, si^2.
std::pair<Graph, int> diameterize_fvs(const Graph& g, int k);

/// (g, problem, placement, |placement| * diam(g)). Throws InputError when the
/// placement size differs from k.
DiscoveryInstance search_to_discovery(const Graph& g, Problem problem, int k, const Configuration& placement);

}  // namespace tokslide
