#include "tokslide/realize.hpp"

#include <algorithm>
#include <optional>

namespace tokslide {

MoveSequence realize_matching(const Graph& g, const Configuration& start,
                              const std::vector<std::pair<VertexId, VertexId>>& targets) {
  const std::size_t n = g.order();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Tokens are numbered by their position in `start`.
  std::vector<VertexId> pos(start.begin(), start.end());
  std::vector<std::size_t> occupant(n, kNone);
  for (std::size_t t = 0; t < pos.size(); ++t) {
    if (pos[t] >= n) throw InputError("start vertex out of range");
    if (occupant[pos[t]] != kNone) throw InputError("start configuration repeats a vertex");
    occupant[pos[t]] = t;
  }

  std::vector<std::optional<VertexId>> goal(pos.size());
  std::vector<char> is_target(n, 0);
  std::vector<std::vector<int>> dist_to(n);
  for (auto [from, to] : targets) {
    if (from >= n || to >= n) throw InputError("target pair out of range");
    if (occupant[from] == kNone) throw InputError("target assigned to an unoccupied vertex");
    if (goal[occupant[from]]) throw InputError("token assigned twice");
    if (is_target[to]) throw InputError("two tokens share a target");
    is_target[to] = 1;
    goal[occupant[from]] = to;
    dist_to[to] = distances_from(g, to);
  }

  long long remaining = 0;
  for (std::size_t t = 0; t < pos.size(); ++t) {
    if (!goal[t]) continue;
    int d = dist_to[*goal[t]][pos[t]];
    if (d == kUnreachable) throw RealizationError("target unreachable from its token");
    remaining += d;
  }

  MoveSequence moves;
  // Each slide lowers the remaining distance; each goal exchange without a
  // slide settles one more token. Anything beyond this bound is a bug.
  const long long guard = (remaining + 1) * static_cast<long long>(pos.size() + 1) + 1;
  for (long long iter = 0;; ++iter) {
    if (iter > guard) throw RealizationError("move scheduling did not terminate");
    std::size_t t = kNone;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      if (goal[i] && pos[i] != *goal[i]) {
        t = i;
        break;
      }
    }
    if (t == kNone) break;
    const VertexId target = *goal[t];
    const auto& dist = dist_to[target];

    if (std::size_t o = occupant[target]; o != kNone) {
      // Someone already sits on the target: they keep it, t takes over
      // their old job (if any).
      goal[t] = goal[o];
      goal[o] = target;
      continue;
    }

    std::vector<VertexId> path{pos[t]};
    while (path.back() != target) {
      VertexId here = path.back();
      VertexId next = here;
      for (VertexId w : g.neighbors(here)) {
        if (dist[w] == dist[here] - 1) {
          next = w;
          break;
        }
      }
      path.push_back(next);
    }
    // Last occupied vertex before the (free) target slides forward.
    std::size_t j = path.size() - 2;
    while (occupant[path[j]] == kNone) --j;
    const std::size_t mover = occupant[path[j]];
    moves.push_back({path[j], path[j + 1]});
    occupant[path[j]] = kNone;
    occupant[path[j + 1]] = mover;
    pos[mover] = path[j + 1];
    if (mover != t) std::swap(goal[t], goal[mover]);
  }
  return moves;
}

}  // namespace tokslide
