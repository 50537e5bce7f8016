#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tokslide/graph.hpp"

namespace tokslide {

/// One operation of a w-expression. Children always precede their parent in
/// WExpression::nodes(), so a forward pass is a bottom-up evaluation.
struct ExprNode {
  enum class Kind { Introduce, Union, Relabel, Join };

  Kind kind = Kind::Introduce;
  std::string vertex;     // Introduce
  int label = 0;          // Introduce
  int first = 0;          // Relabel: from-label; Join: first label
  int second = 0;         // Relabel: to-label; Join: second label
  std::size_t left = 0;   // Union/Relabel/Join child
  std::size_t right = 0;  // Union second child
  // Leaves of this subtree are exactly [leaf_begin, leaf_end) in leaf order.
  std::size_t leaf_begin = 0;
  std::size_t leaf_end = 0;
};

/// Parsed w-expression tree. The width is the largest label mentioned.
///
/// Text format (whitespace-insensitive s-expressions):
///   (i <name> <label>)   introduce
///   (u <e1> <e2>)        disjoint union
///   (r <i> <j> <e>)      relabel i -> j
///   (j <i> <j> <e>)      join labels i and j
class WExpression {
 public:
  const std::vector<ExprNode>& nodes() const { return nodes_; }
  std::size_t root() const { return nodes_.size() - 1; }
  int width() const { return width_; }
  /// Introduced vertex names in left-to-right leaf order.
  const std::vector<std::string>& vertices() const { return vertices_; }

  /// Short description of one node such as "(j 1 2 ...)".
  std::string describe(std::size_t node) const;

 private:
  friend WExpression parse_expression(std::string_view text);

  std::vector<ExprNode> nodes_;
  std::vector<std::string> vertices_;
  int width_ = 0;
};

/// Throws InputError on syntax errors, labels < 1, relabel/join with equal
/// labels, and duplicate vertex names.
WExpression parse_expression(std::string_view text);

struct LabeledGraph {
  Graph graph;
  std::vector<int> label_of;  // per graph vertex, labels are 1-based

  /// U_1 ... U_width; entry z-1 holds the z-labeled vertices.
  std::vector<VertexSet> label_sets(int width) const;
};

/// Graph denoted by the whole expression; vertices in leaf order.
LabeledGraph evaluate(const WExpression& expr);

/// Snapshot of the labeled graph at every node, indexed like nodes().
std::vector<LabeledGraph> evaluate_nodes(const WExpression& expr);

struct JoinDiagnostic {
  std::size_t node;
  std::string message;
};

struct IrredundancyReport {
  // Join nodes re-adding an existing edge.
  std::vector<JoinDiagnostic> violations;
  // Join nodes that add no edge at all (harmless).
  std::vector<JoinDiagnostic> warnings;

  bool irredundant() const { return violations.empty(); }
};

IrredundancyReport check_irredundant(const WExpression& expr);

/// Same vertex names and same edge set (vertex order may differ).
bool check_matches(const WExpression& expr, const Graph& g);

}  // namespace tokslide
