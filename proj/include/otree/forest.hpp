#ifndef OTREE_FOREST_HPP
#define OTREE_FOREST_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "otree/color.hpp"

namespace otree {

// One node of a forest in preorder. `size` is the node count of the subtree
// rooted here (including the node itself).
struct Node {
  ColorId color = 0;
  std::uint32_t size = 1;

  friend bool operator==(const Node&, const Node&) = default;
  friend auto operator<=>(const Node&, const Node&) = default;
};

using NodeSpan = std::span<const Node>;

class Tree;

// An ordered forest of ordered colored rooted trees, stored as a flat
// preorder node sequence. The empty forest is the unit of concatenation.
//
// Ordering (operator<=>) is the canonical total order: trees compare by
// (order, color token, children lexicographically), forests compare
// lexicographically over their trees.
class Forest {
 public:
  Forest() = default;
  Forest(const Tree& tree);  // NOLINT: a tree is a one-letter word

  // Throws std::invalid_argument if the sizes do not describe a forest.
  static Forest from_nodes(std::vector<Node> nodes);
  static Forest from_trees(std::span<const Tree> trees);

  NodeSpan nodes() const { return nodes_; }
  bool empty() const { return nodes_.empty(); }
  std::size_t order() const { return nodes_.size(); }
  std::size_t degree() const;

  // The trees of the forest, in order.
  std::vector<Tree> trees() const;
  std::vector<NodeSpan> tree_spans() const;

  friend bool operator==(const Forest&, const Forest&) = default;
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b);

 private:
  explicit Forest(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}
  friend class ForestBuilder;
  std::vector<Node> nodes_;
};

// A forest with exactly one tree.
class Tree {
 public:
  // The single-node tree of the default color.
  Tree();
  // Throws std::invalid_argument unless `f` has exactly one tree.
  explicit Tree(Forest f);

  Color color() const { return Color::from_id(forest_.nodes()[0].color); }
  Forest children() const;
  std::size_t order() const { return forest_.order(); }
  NodeSpan nodes() const { return forest_.nodes(); }
  const Forest& as_forest() const { return forest_; }

  friend bool operator==(const Tree&, const Tree&) = default;
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    return a.forest_ <=> b.forest_;
  }

 private:
  Forest forest_;
};

// Incremental construction of forests without per-tree allocation.
class ForestBuilder {
 public:
  ForestBuilder() = default;
  explicit ForestBuilder(std::size_t reserve) { nodes_.reserve(reserve); }

  void append(NodeSpan nodes) { nodes_.insert(nodes_.end(), nodes.begin(), nodes.end()); }
  void append(const Forest& f) { append(f.nodes()); }
  // Appends B+_c(children).
  void append_tree(ColorId color, NodeSpan children);
  std::vector<Node>& raw() { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

  Forest build() && { return Forest(std::move(nodes_)); }
  Forest build() const& { return Forest(nodes_); }

 private:
  std::vector<Node> nodes_;
};

// Raw-span helpers shared by the algebra modules.
int compare_tree_spans(NodeSpan a, NodeSpan b);
int compare_forest_spans(NodeSpan a, NodeSpan b);
std::vector<NodeSpan> split_trees(NodeSpan forest);
inline NodeSpan children_of(NodeSpan tree) { return tree.subspan(1, tree[0].size - 1); }

Forest concat(const Forest& a, const Forest& b);
Tree b_plus(const Forest& f, Color c = Color());
// Removes every root: each tree is replaced by the forest of its children.
Forest b_minus(const Forest& f);

inline std::size_t order(const Forest& f) { return f.order(); }
inline std::size_t degree(const Forest& f) { return f.degree(); }

// Number of children of the node at preorder index `i`.
std::size_t child_count(NodeSpan forest, std::size_t i);
// Height of the tallest tree (a single node has height 0; empty forest -1).
int height(const Forest& f);

}  // namespace otree

#endif
