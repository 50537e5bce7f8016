#include "tokslide/cw_vc_dp.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <tuple>

#include "tokslide/error.hpp"

namespace tokslide {

bool is_valid_tuple(const NodeContext& ctx, const DpTuple& s) {
  const std::size_t w = ctx.label_sizes.size();
  if (s.tokens.size() != w || s.absorb.size() != w || s.project.size() != w) return false;
  if (!s.direct.empty() && s.direct.size() != w) return false;
  if (ctx.initial_tokens.size() != w) return false;
  if (s.moves < 0 || s.moves > ctx.budget) return false;  // (c)
  long long total = 0;
  for (std::size_t z = 0; z < w; ++z) {
    const int direct = s.direct.empty() ? 0 : s.direct[z];
    if (s.tokens[z] < 0 || s.absorb[z] < 0 || s.project[z] < 0) return false;
    if (s.absorb[z] > ctx.budget || s.project[z] > ctx.budget) return false;
    if (ctx.label_sizes[z] == 0 &&
        (s.tokens[z] != 0 || s.absorb[z] != 0 || s.project[z] != 0 || direct != 0)) {
      return false;  // (b)
    }
    if (ctx.initial_tokens[z] + s.absorb[z] - s.project[z] + direct != s.tokens[z]) return false;  // (d)
    if (s.tokens[z] > ctx.label_sizes[z]) return false;
    total += s.tokens[z];
  }
  return total <= ctx.tokens;  // (a)
}

namespace {

__extension__ typedef unsigned __int128 Key;

// Packs (moves, K, A, P) into one 128-bit key, `bits` bits per field. Every
// field value stays <= max(k, b) < 2^bits, so field-wise sums of two keys
// whose sums are known to respect those bounds can be added as integers.
class Packer {
 public:
  Packer(int width, int k, int b) : width_(width) {
    bits_ = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(std::max(k, b)))));
    if ((1 + 3 * width_) * bits_ > 128) {
      throw UnsupportedInstance("expression width " + std::to_string(width_) +
                                " is too large for this token count and budget");
    }
    mask_ = (Key{1} << bits_) - 1;
  }

  int width() const { return width_; }

  int get(Key key, int field) const { return static_cast<int>((key >> (field * bits_)) & mask_); }
  Key put(Key key, int field, int value) const {
    key &= ~(mask_ << (field * bits_));
    return key | (static_cast<Key>(value) << (field * bits_));
  }

  static constexpr int kMoves = 0;
  int tokens_field(int z) const { return 1 + z; }
  int absorb_field(int z) const { return 1 + width_ + z; }
  int project_field(int z) const { return 1 + 2 * width_ + z; }

  int moves(Key key) const { return get(key, kMoves); }
  int tokens(Key key, int z) const { return get(key, tokens_field(z)); }
  int absorb(Key key, int z) const { return get(key, absorb_field(z)); }
  int project(Key key, int z) const { return get(key, project_field(z)); }

  struct Sums {
    int moves, tokens, absorb, project;
    auto operator<=>(const Sums&) const = default;
  };
  Sums sums(Key key) const {
    Sums s{moves(key), 0, 0, 0};
    for (int z = 0; z < width_; ++z) {
      s.tokens += tokens(key, z);
      s.absorb += absorb(key, z);
      s.project += project(key, z);
    }
    return s;
  }

  DpTuple decode(Key key, const NodeContext& ctx) const {
    DpTuple t;
    t.moves = moves(key);
    t.tokens.resize(width_);
    t.absorb.resize(width_);
    t.project.resize(width_);
    t.direct.resize(width_);
    for (int z = 0; z < width_; ++z) {
      t.tokens[z] = tokens(key, z);
      t.absorb[z] = absorb(key, z);
      t.project[z] = project(key, z);
      t.direct[z] = t.tokens[z] - ctx.initial_tokens[z] - t.absorb[z] + t.project[z];
    }
    return t;
  }

 private:
  int width_;
  int bits_ = 1;
  Key mask_ = 1;
};

struct Engine {
  const WExpression& expr;
  Packer pack;
  int k;
  int b;
  std::vector<char> leaf_has_token;  // by leaf index

  // Every pending absorption or projection needs one more move at some join
  // above, so moves + max(sum A, sum P) must stay within the budget.
  bool within_budget(const Packer::Sums& s) const { return s.moves + std::max(s.absorb, s.project) <= b; }

  NodeContext context(const ExprNode& nd, const std::vector<int>& labels) const {
    NodeContext ctx;
    ctx.label_sizes.assign(pack.width(), 0);
    ctx.initial_tokens.assign(pack.width(), 0);
    ctx.tokens = k;
    ctx.budget = b;
    for (std::size_t v = nd.leaf_begin; v < nd.leaf_end; ++v) {
      ++ctx.label_sizes[labels[v] - 1];
      if (leaf_has_token[v]) ++ctx.initial_tokens[labels[v] - 1];
    }
    return ctx;
  }

  std::vector<Key> introduce(const ExprNode& nd) const {
    const int z = nd.label - 1;
    const int s = leaf_has_token[nd.leaf_begin] ? 1 : 0;
    std::vector<Key> out;
    for (int tokens = 0; tokens <= std::min(1, k); ++tokens) {
      for (int project = 0; project <= b; ++project) {
        const int absorb = project + tokens - s;
        if (absorb < 0 || absorb > b) continue;
        Key key = 0;
        key = pack.put(key, pack.tokens_field(z), tokens);
        key = pack.put(key, pack.absorb_field(z), absorb);
        key = pack.put(key, pack.project_field(z), project);
        out.push_back(key);
      }
    }
    return out;
  }

  std::vector<Key> unite(const std::vector<Key>& left, const std::vector<Key>& right) const {
    std::map<Packer::Sums, std::vector<Key>> buckets;
    for (Key key : right) buckets[pack.sums(key)].push_back(key);
    std::vector<Key> out;
    for (Key a : left) {
      const auto sa = pack.sums(a);
      for (const auto& [sb, keys] : buckets) {
        Packer::Sums s{sa.moves + sb.moves, sa.tokens + sb.tokens, sa.absorb + sb.absorb,
                       sa.project + sb.project};
        if (s.tokens > k || !within_budget(s)) continue;
        for (Key c : keys) out.push_back(a + c);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Key> relabel(const ExprNode& nd, const std::vector<Key>& child) const {
    const int i = nd.first - 1;
    const int j = nd.second - 1;
    std::vector<Key> out;
    out.reserve(child.size());
    for (Key key : child) {
      Key r = key;
      r = pack.put(r, pack.tokens_field(j), pack.tokens(key, i) + pack.tokens(key, j));
      r = pack.put(r, pack.absorb_field(j), pack.absorb(key, i) + pack.absorb(key, j));
      r = pack.put(r, pack.project_field(j), pack.project(key, i) + pack.project(key, j));
      r = pack.put(r, pack.tokens_field(i), 0);
      r = pack.put(r, pack.absorb_field(i), 0);
      r = pack.put(r, pack.project_field(i), 0);
      out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Key> join(const ExprNode& nd, const NodeContext& ctx, const std::vector<Key>& child) const {
    const int i = nd.first - 1;
    const int j = nd.second - 1;
    std::vector<Key> out;
    for (Key key : child) {
      // Every i-j pair is an edge now; one side must be fully occupied.
      if (pack.tokens(key, i) < ctx.label_sizes[i] && pack.tokens(key, j) < ctx.label_sizes[j]) continue;
      const int moves = pack.moves(key);
      const int ai = pack.absorb(key, i), aj = pack.absorb(key, j);
      const int pi = pack.project(key, i), pj = pack.project(key, j);
      // f tokens went i -> v* -> j and g went j -> v* -> i; each now takes a
      // direct edge, costing one move inside G_t.
      for (int f = 0; f <= std::min(pi, aj); ++f) {
        for (int g = 0; g <= std::min(ai, pj) && moves + f + g <= b; ++g) {
          Key r = key;
          r = pack.put(r, Packer::kMoves, moves + f + g);
          r = pack.put(r, pack.absorb_field(i), ai - g);
          r = pack.put(r, pack.absorb_field(j), aj - f);
          r = pack.put(r, pack.project_field(i), pi - f);
          r = pack.put(r, pack.project_field(j), pj - g);
          out.push_back(r);
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  template <typename OnNode>
  std::vector<Key> run(OnNode&& on_node) const {
    const auto& nodes = expr.nodes();
    std::vector<int> labels(expr.vertices().size(), 0);
    std::vector<std::vector<Key>> tables(nodes.size());
    for (std::size_t t = 0; t < nodes.size(); ++t) {
      const ExprNode& nd = nodes[t];
      switch (nd.kind) {
        case ExprNode::Kind::Introduce:
          labels[nd.leaf_begin] = nd.label;
          tables[t] = introduce(nd);
          break;
        case ExprNode::Kind::Union:
          tables[t] = unite(tables[nd.left], tables[nd.right]);
          std::vector<Key>().swap(tables[nd.left]);
          std::vector<Key>().swap(tables[nd.right]);
          break;
        case ExprNode::Kind::Relabel:
          for (std::size_t v = nd.leaf_begin; v < nd.leaf_end; ++v) {
            if (labels[v] == nd.first) labels[v] = nd.second;
          }
          tables[t] = relabel(nd, tables[nd.left]);
          std::vector<Key>().swap(tables[nd.left]);
          break;
        case ExprNode::Kind::Join: {
          NodeContext ctx = context(nd, labels);
          tables[t] = join(nd, ctx, tables[nd.left]);
          std::vector<Key>().swap(tables[nd.left]);
          break;
        }
      }
      on_node(t, context(nd, labels), tables[t]);
    }
    return std::move(tables.back());
  }
};

Engine make_engine(const WExpression& expr, const DiscoveryInstance& inst) {
  if (inst.problem != Problem::VertexCover) {
    throw UnsupportedInstance("the clique-width solver handles vertex cover discovery only");
  }
  require_solvable(inst);
  if (!check_matches(expr, inst.graph)) throw InputError("expression does not denote the instance graph");
  auto report = check_irredundant(expr);
  if (!report.irredundant()) throw InputError("redundant expression: " + report.violations.front().message);

  const int k = static_cast<int>(inst.start.size());
  const long long cap = static_cast<long long>(k) * diameter(inst.graph);
  const int b = static_cast<int>(std::min<long long>(inst.budget, cap));

  std::vector<char> has_token(expr.vertices().size(), 0);
  const auto occupied = membership(inst.graph.order(), inst.start);
  for (std::size_t v = 0; v < expr.vertices().size(); ++v) {
    has_token[v] = occupied[inst.graph.index(expr.vertices()[v])];
  }
  return Engine{expr, Packer(expr.width(), k, b), k, b, std::move(has_token)};
}

}  // namespace

std::vector<NodeTable> compute_all_tables(const WExpression& expr, const DiscoveryInstance& inst) {
  Engine engine = make_engine(expr, inst);
  std::vector<NodeTable> out;
  out.reserve(expr.nodes().size());
  engine.run([&](std::size_t, NodeContext ctx, const std::vector<Key>& keys) {
    NodeTable table;
    for (Key key : keys) table.tuples.push_back(engine.pack.decode(key, ctx));
    std::sort(table.tuples.begin(), table.tuples.end());
    table.context = std::move(ctx);
    out.push_back(std::move(table));
  });
  return out;
}

NodeTable compute_tables(const WExpression& expr, const DiscoveryInstance& inst) {
  Engine engine = make_engine(expr, inst);
  NodeTable table;
  engine.run([&](std::size_t t, NodeContext ctx, const std::vector<Key>& keys) {
    if (t != expr.root()) return;
    for (Key key : keys) table.tuples.push_back(engine.pack.decode(key, ctx));
    std::sort(table.tuples.begin(), table.tuples.end());
    table.context = std::move(ctx);
  });
  return table;
}

CwResult solve_vcd_cw(const WExpression& expr, const DiscoveryInstance& inst) {
  Engine engine = make_engine(expr, inst);
  std::vector<Key> root = engine.run([](std::size_t, const NodeContext&, const std::vector<Key>&) {});
  CwResult result;
  for (Key key : root) {
    bool settled = true;
    for (int z = 0; z < engine.pack.width() && settled; ++z) {
      settled = engine.pack.absorb(key, z) == 0 && engine.pack.project(key, z) == 0;
    }
    if (!settled) continue;
    const int moves = engine.pack.moves(key);
    if (!result.min_moves || moves < *result.min_moves) result.min_moves = moves;
  }
  result.yes = result.min_moves.has_value();
  return result;
}

}  // namespace tokslide
