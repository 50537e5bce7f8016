#include "tokslide/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

namespace tokslide {

namespace {

using Word = std::uint64_t;

// Configurations are bitsets of `words` 64-bit words stored back to back in
// one pool; the visited set holds pool indices and compares full bitsets.
class StatePool {
 public:
  explicit StatePool(std::size_t words) : words_(words) {}

  std::size_t size() const { return parent_.size(); }
  const Word* state(std::size_t id) const { return bits_.data() + id * words_; }

  struct Hash {
    const StatePool* pool;
    std::size_t operator()(std::size_t id) const {
      const Word* s = pool->state(id);
      std::uint64_t h = 0x9e3779b97f4a7c15ULL;
      for (std::size_t i = 0; i < pool->words_; ++i) {
        h ^= s[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }
  };
  struct Equal {
    const StatePool* pool;
    bool operator()(std::size_t a, std::size_t b) const {
      return std::equal(pool->state(a), pool->state(a) + pool->words_, pool->state(b));
    }
  };

  // Appends a candidate; the caller either keeps it or calls discard_last().
  std::size_t push(const std::vector<Word>& bits, std::size_t parent, Move move) {
    bits_.insert(bits_.end(), bits.begin(), bits.end());
    parent_.push_back(parent);
    move_.push_back(move);
    return parent_.size() - 1;
  }
  void discard_last() {
    bits_.resize(bits_.size() - words_);
    parent_.pop_back();
    move_.pop_back();
  }

  std::size_t parent(std::size_t id) const { return parent_[id]; }
  Move move(std::size_t id) const { return move_[id]; }

 private:
  std::size_t words_;
  std::vector<Word> bits_;
  std::vector<std::size_t> parent_;
  std::vector<Move> move_;
};

bool test(const std::vector<Word>& bits, VertexId v) { return (bits[v / 64] >> (v % 64)) & 1U; }
void flip(std::vector<Word>& bits, VertexId v) { bits[v / 64] ^= Word{1} << (v % 64); }

MoveSequence trace(const StatePool& pool, std::size_t id) {
  MoveSequence seq;
  while (id != 0) {
    seq.push_back(pool.move(id));
    id = pool.parent(id);
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace

std::optional<Discovery> discover_min_moves(const DiscoveryInstance& inst, const OracleOptions& options) {
  require_solvable(inst);
  const Graph& g = inst.graph;
  const std::size_t n = g.order();
  const std::size_t words = std::max<std::size_t>(1, (n + 63) / 64);

  std::vector<char> in_set(n, 0);
  auto is_goal = [&](const std::vector<Word>& bits) {
    for (VertexId v = 0; v < n; ++v) in_set[v] = test(bits, v) ? 1 : 0;
    return check_solution_mask(g, inst.problem, in_set);
  };

  std::vector<Word> bits(words, 0);
  for (VertexId v : inst.start) flip(bits, v);
  if (is_goal(bits)) return Discovery{0, {}};

  StatePool pool(words);
  std::unordered_set<std::size_t, StatePool::Hash, StatePool::Equal> visited(
      1024, StatePool::Hash{&pool}, StatePool::Equal{&pool});
  visited.insert(pool.push(bits, 0, Move{0, 0}));

  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  for (int depth = 1; depth <= inst.budget && level_begin < level_end; ++depth) {
    for (std::size_t id = level_begin; id < level_end; ++id) {
      bits.assign(pool.state(id), pool.state(id) + words);
      for (VertexId from = 0; from < n; ++from) {
        if (!test(bits, from)) continue;
        for (VertexId to : g.neighbors(from)) {
          if (test(bits, to)) continue;
          flip(bits, from);
          flip(bits, to);
          std::size_t cand = pool.push(bits, id, Move{from, to});
          if (visited.insert(cand).second) {
            if (is_goal(bits)) {
              return Discovery{depth, trace(pool, cand)};
            }
            if (pool.size() > options.state_cap) {
              throw StateCapExceeded("configuration space exceeds the cap of " +
                                     std::to_string(options.state_cap) + " states");
            }
          } else {
            pool.discard_last();
          }
          flip(bits, from);
          flip(bits, to);
        }
      }
    }
    level_begin = level_end;
    level_end = pool.size();
  }
  return std::nullopt;
}

bool decide(const DiscoveryInstance& inst, const OracleOptions& options) {
  return discover_min_moves(inst, options).has_value();
}

}  // namespace tokslide
