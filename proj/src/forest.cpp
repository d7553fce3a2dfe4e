#include "otree/forest.hpp"

#include <algorithm>
#include <stdexcept>

namespace otree {
namespace {

bool well_formed(NodeSpan nodes) {
  // Every subtree must fit inside its parent's extent.
  std::vector<std::size_t> ends;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    while (!ends.empty() && ends.back() <= i) ends.pop_back();
    if (nodes[i].size == 0) return false;
    std::size_t end = i + nodes[i].size;
    if (end > nodes.size()) return false;
    if (!ends.empty() && end > ends.back()) return false;
    ends.push_back(end);
  }
  // Sizes must be exact: size = 1 + sum of child sizes.
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::size_t total = 1;
    for (std::size_t j = i + 1; j < i + nodes[i].size; j += nodes[j].size) total += nodes[j].size;
    if (total != nodes[i].size) return false;
  }
  return true;
}

}  // namespace

Forest::Forest(const Tree& tree) : nodes_(tree.nodes().begin(), tree.nodes().end()) {}

Forest Forest::from_nodes(std::vector<Node> nodes) {
  if (!well_formed(nodes)) throw std::invalid_argument("node sizes do not describe a forest");
  return Forest(std::move(nodes));
}

Forest Forest::from_trees(std::span<const Tree> trees) {
  ForestBuilder b;
  for (const auto& t : trees) b.append(t.nodes());
  return std::move(b).build();
}

std::size_t Forest::degree() const {
  std::size_t k = 0;
  for (std::size_t i = 0; i < nodes_.size(); i += nodes_[i].size) ++k;
  return k;
}

std::vector<NodeSpan> split_trees(NodeSpan forest) {
  std::vector<NodeSpan> out;
  for (std::size_t i = 0; i < forest.size(); i += forest[i].size) out.push_back(forest.subspan(i, forest[i].size));
  return out;
}

std::vector<NodeSpan> Forest::tree_spans() const { return split_trees(nodes_); }

std::vector<Tree> Forest::trees() const {
  std::vector<Tree> out;
  for (NodeSpan s : tree_spans()) out.emplace_back(Forest(std::vector<Node>(s.begin(), s.end())));
  return out;
}

int compare_tree_spans(NodeSpan a, NodeSpan b) {
  if (a[0].size != b[0].size) return a[0].size < b[0].size ? -1 : 1;
  if (int c = compare_colors(a[0].color, b[0].color)) return c;
  return compare_forest_spans(children_of(a), children_of(b));
}

int compare_forest_spans(NodeSpan a, NodeSpan b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    NodeSpan ta = a.subspan(i, a[i].size);
    NodeSpan tb = b.subspan(j, b[j].size);
    if (int c = compare_tree_spans(ta, tb)) return c;
    i += ta.size();
    j += tb.size();
  }
  bool more_a = i < a.size(), more_b = j < b.size();
  return more_a == more_b ? 0 : (more_a ? 1 : -1);
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
  int c = compare_forest_spans(a.nodes_, b.nodes_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Tree::Tree() : forest_(Forest::from_nodes({Node{0, 1}})) {}

Tree::Tree(Forest f) : forest_(std::move(f)) {
  if (forest_.degree() != 1) throw std::invalid_argument("a tree must have exactly one root");
}

Forest Tree::children() const {
  NodeSpan c = children_of(forest_.nodes());
  return Forest::from_nodes(std::vector<Node>(c.begin(), c.end()));
}

void ForestBuilder::append_tree(ColorId color, NodeSpan children) {
  nodes_.push_back(Node{color, static_cast<std::uint32_t>(children.size() + 1)});
  append(children);
}

Forest concat(const Forest& a, const Forest& b) {
  ForestBuilder out(a.order() + b.order());
  out.append(a);
  out.append(b);
  return std::move(out).build();
}

Tree b_plus(const Forest& f, Color c) {
  ForestBuilder out(f.order() + 1);
  out.append_tree(c.id(), f.nodes());
  return Tree(std::move(out).build());
}

Forest b_minus(const Forest& f) {
  ForestBuilder out(f.order());
  for (NodeSpan t : f.tree_spans()) out.append(children_of(t));
  return std::move(out).build();
}

std::size_t child_count(NodeSpan forest, std::size_t i) {
  std::size_t k = 0;
  for (std::size_t j = i + 1; j < i + forest[i].size; j += forest[j].size) ++k;
  return k;
}

int height(const Forest& f) {
  NodeSpan n = f.nodes();
  int best = -1;
  // depth of each node via an explicit stack of subtree ends
  std::vector<std::size_t> ends;
  for (std::size_t i = 0; i < n.size(); ++i) {
    while (!ends.empty() && ends.back() <= i) ends.pop_back();
    best = std::max(best, static_cast<int>(ends.size()));
    ends.push_back(i + n[i].size);
  }
  return best;
}

}  // namespace otree
