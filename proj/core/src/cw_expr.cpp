#include "tokslide/cw_expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <set>
#include <unordered_set>

#include "tokslide/error.hpp"

namespace tokslide {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  // "(" , ")" , an atom, or "" at end of input.
  std::string_view next() {
    skip_space();
    if (pos_ >= text_.size()) return {};
    char c = text_[pos_];
    if (c == '(' || c == ')') return text_.substr(pos_++, 1);
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  std::string_view peek() {
    std::size_t save = pos_;
    auto tok = next();
    pos_ = save;
    return tok;
  }

  std::size_t offset() const { return pos_; }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string WExpression::describe(std::size_t node) const {
  const ExprNode& nd = nodes_.at(node);
  switch (nd.kind) {
    case ExprNode::Kind::Introduce:
      return "(i " + nd.vertex + " " + std::to_string(nd.label) + ")";
    case ExprNode::Kind::Union:
      return "(u ...)";
    case ExprNode::Kind::Relabel:
      return "(r " + std::to_string(nd.first) + " " + std::to_string(nd.second) + " ...)";
    case ExprNode::Kind::Join:
      return "(j " + std::to_string(nd.first) + " " + std::to_string(nd.second) + " ...)";
  }
  return "?";
}

WExpression parse_expression(std::string_view text) {
  WExpression expr;
  Lexer lex(text);
  std::unordered_set<std::string> seen;

  auto fail = [&](const std::string& msg) -> void {
    throw InputError("expression: " + msg + " (near offset " + std::to_string(lex.offset()) + ")");
  };
  auto expect = [&](std::string_view want) {
    auto tok = lex.next();
    if (tok != want) fail("expected '" + std::string(want) + "', got '" + std::string(tok) + "'");
  };
  auto label = [&]() {
    auto tok = lex.next();
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail("label must be an integer, got '" + std::string(tok) + "'");
    }
    if (value < 1) fail("labels start at 1, got " + std::to_string(value));
    expr.width_ = std::max(expr.width_, value);
    return value;
  };

  std::function<std::size_t()> node = [&]() -> std::size_t {
    expect("(");
    auto op = lex.next();
    ExprNode nd;
    if (op == "i") {
      nd.kind = ExprNode::Kind::Introduce;
      auto name = lex.next();
      if (name.empty() || name == "(" || name == ")") fail("introduce needs a vertex name");
      nd.vertex = std::string(name);
      if (!seen.insert(nd.vertex).second) fail("vertex '" + nd.vertex + "' introduced twice");
      nd.label = label();
      nd.leaf_begin = expr.vertices_.size();
      expr.vertices_.push_back(nd.vertex);
      nd.leaf_end = expr.vertices_.size();
    } else if (op == "u") {
      nd.kind = ExprNode::Kind::Union;
      nd.left = node();
      nd.right = node();
      nd.leaf_begin = expr.nodes_[nd.left].leaf_begin;
      nd.leaf_end = expr.nodes_[nd.right].leaf_end;
    } else if (op == "r" || op == "j") {
      nd.kind = op == "r" ? ExprNode::Kind::Relabel : ExprNode::Kind::Join;
      nd.first = label();
      nd.second = label();
      if (nd.first == nd.second) {
        fail(std::string(op == "r" ? "relabel" : "join") + " needs two distinct labels");
      }
      nd.left = node();
      nd.leaf_begin = expr.nodes_[nd.left].leaf_begin;
      nd.leaf_end = expr.nodes_[nd.left].leaf_end;
    } else {
      fail("unknown operation '" + std::string(op) + "'");
    }
    expect(")");
    expr.nodes_.push_back(std::move(nd));
    return expr.nodes_.size() - 1;
  };

  if (lex.peek().empty()) fail("empty expression");
  node();
  if (!lex.peek().empty()) fail("trailing input after expression");
  return expr;
}

std::vector<VertexSet> LabeledGraph::label_sets(int width) const {
  std::vector<VertexSet> sets(static_cast<std::size_t>(std::max(width, 0)));
  for (VertexId v = 0; v < label_of.size(); ++v) {
    sets.at(static_cast<std::size_t>(label_of[v] - 1)).push_back(v);
  }
  return sets;
}

namespace {

// Bottom-up evaluation shared by evaluate(), evaluate_nodes() and
// check_irredundant(). Leaf indices double as vertex ids.
class Evaluator {
 public:
  explicit Evaluator(const WExpression& expr)
      : expr_(expr), labels_(expr.vertices().size(), 0) {}

  template <typename OnNode>
  void run(OnNode&& on_node) {
    const auto& nodes = expr_.nodes();
    for (std::size_t t = 0; t < nodes.size(); ++t) {
      const ExprNode& nd = nodes[t];
      switch (nd.kind) {
        case ExprNode::Kind::Introduce:
          labels_[nd.leaf_begin] = nd.label;
          break;
        case ExprNode::Kind::Union:
          break;
        case ExprNode::Kind::Relabel:
          for (std::size_t v = nd.leaf_begin; v < nd.leaf_end; ++v) {
            if (labels_[v] == nd.first) labels_[v] = nd.second;
          }
          break;
        case ExprNode::Kind::Join:
          join(t, nd);
          break;
      }
      on_node(t);
    }
  }

  const std::vector<int>& labels() const { return labels_; }
  const std::set<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
  IrredundancyReport& report() { return report_; }

  LabeledGraph snapshot(std::size_t begin, std::size_t end) const {
    std::vector<std::string> names(expr_.vertices().begin() + static_cast<std::ptrdiff_t>(begin),
                                   expr_.vertices().begin() + static_cast<std::ptrdiff_t>(end));
    std::vector<std::pair<VertexId, VertexId>> es;
    for (auto [a, b] : edges_) {
      if (a >= begin && b < end) es.emplace_back(a - begin, b - begin);
    }
    LabeledGraph lg;
    lg.graph = Graph::from_indices(std::move(names), es);
    lg.label_of.assign(labels_.begin() + static_cast<std::ptrdiff_t>(begin),
                       labels_.begin() + static_cast<std::ptrdiff_t>(end));
    return lg;
  }

 private:
  void join(std::size_t t, const ExprNode& nd) {
    std::size_t touched = 0;
    for (std::size_t a = nd.leaf_begin; a < nd.leaf_end; ++a) {
      if (labels_[a] != nd.first) continue;
      for (std::size_t b = nd.leaf_begin; b < nd.leaf_end; ++b) {
        if (labels_[b] != nd.second) continue;
        ++touched;
        auto lo = static_cast<VertexId>(std::min(a, b));
        auto hi = static_cast<VertexId>(std::max(a, b));
        if (!edges_.insert({lo, hi}).second) {
          report_.violations.push_back(
              {t, "node " + std::to_string(t) + " " + expr_.describe(t) + " re-adds edge " +
                      expr_.vertices()[a] + "-" + expr_.vertices()[b]});
        }
      }
    }
    if (touched == 0) {
      report_.warnings.push_back({t, "node " + std::to_string(t) + " " + expr_.describe(t) + " adds no edge"});
    }
  }

  const WExpression& expr_;
  std::vector<int> labels_;
  std::set<std::pair<VertexId, VertexId>> edges_;
  IrredundancyReport report_;
};

}  // namespace

LabeledGraph evaluate(const WExpression& expr) {
  Evaluator ev(expr);
  ev.run([](std::size_t) {});
  return ev.snapshot(0, expr.vertices().size());
}

std::vector<LabeledGraph> evaluate_nodes(const WExpression& expr) {
  Evaluator ev(expr);
  std::vector<LabeledGraph> out;
  out.reserve(expr.nodes().size());
  ev.run([&](std::size_t t) {
    const ExprNode& nd = expr.nodes()[t];
    out.push_back(ev.snapshot(nd.leaf_begin, nd.leaf_end));
  });
  return out;
}

IrredundancyReport check_irredundant(const WExpression& expr) {
  Evaluator ev(expr);
  ev.run([](std::size_t) {});
  return std::move(ev.report());
}

bool check_matches(const WExpression& expr, const Graph& g) {
  if (expr.vertices().size() != g.order()) return false;
  LabeledGraph lg = evaluate(expr);
  std::vector<VertexId> to_g(lg.graph.order());
  for (VertexId v = 0; v < lg.graph.order(); ++v) {
    auto w = g.find(lg.graph.name(v));
    if (!w) return false;
    to_g[v] = *w;
  }
  if (lg.graph.size() != g.size()) return false;
  return std::all_of(lg.graph.edges().begin(), lg.graph.edges().end(),
                     [&](const Edge& e) { return g.adjacent(to_g[e.u], to_g[e.v]); });
}

}  // namespace tokslide
