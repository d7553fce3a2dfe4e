#include "otree/grafting.hpp"

#include <map>

namespace otree {
namespace {

Forest forest_of(NodeSpan nodes) {
  ForestBuilder b(nodes.size());
  b.append(nodes);
  return std::move(b).build();
}

class Grafter {
 public:
  // t[w] for a single tree t and a forest w.
  LinComb tree_onto_forest(NodeSpan tree, NodeSpan target) {
    LinComb out;
    if (target.empty()) return out;
    NodeSpan first = target.subspan(0, target[0].size);
    NodeSpan rest = target.subspan(first.size());
    // t[first] rest
    for (const auto& [f, c] : tree_onto_tree(tree, first)) {
      ForestBuilder b(f.order() + rest.size());
      b.append(f);
      b.append(rest);
      out.add(std::move(b).build(), c);
    }
    // first t[rest]
    for (const auto& [f, c] : tree_onto_forest(tree, rest)) {
      ForestBuilder b(first.size() + f.order());
      b.append(first);
      b.append(f);
      out.add(std::move(b).build(), c);
    }
    return out;
  }

  // t[B+_i(w)] = B+_i(t[w]) + B+_i(t w)
  LinComb tree_onto_tree(NodeSpan tree, NodeSpan target) {
    LinComb out;
    ColorId root = target[0].color;
    NodeSpan kids = children_of(target);
    for (const auto& [f, c] : tree_onto_forest(tree, kids)) {
      ForestBuilder b(f.order() + 1);
      b.append_tree(root, f.nodes());
      out.add(std::move(b).build(), c);
    }
    std::vector<Node> tw(tree.begin(), tree.end());
    tw.insert(tw.end(), kids.begin(), kids.end());
    ForestBuilder b(tw.size() + 1);
    b.append_tree(root, tw);
    out.add(std::move(b).build(), 1);
    return out;
  }

  // w[target] for forests w and target.
  const LinComb& forest_onto_forest(const Forest& w, const Forest& target) {
    auto key = std::make_pair(w, target);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    LinComb out;
    if (w.empty()) {
      out = LinComb(target);
    } else {
      // (t v)[a] = t[v[a]] - (t[v])[a]
      NodeSpan t = w.nodes().subspan(0, w.nodes()[0].size);
      Forest v = forest_of(w.nodes().subspan(t.size()));
      LinComb inner_graft = forest_onto_forest(v, target);
      for (const auto& [f, c] : inner_graft) out.add(tree_onto_forest(t, f.nodes()), c);
      for (const auto& [f, c] : tree_onto_forest(t, v.nodes())) out.add(forest_onto_forest(f, target), -c);
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

 private:
  std::map<std::pair<Forest, Forest>, LinComb> memo_;
};

// Prepends the chosen trees (in word order) as first children of their
// assigned nodes and emits the resulting forest.
Forest attach(const Forest& target, const std::vector<NodeSpan>& trees, const std::vector<std::size_t>& node_of) {
  NodeSpan t = target.nodes();
  // new children per target node, in word order
  std::vector<std::vector<std::size_t>> incoming(t.size());
  for (std::size_t j = 0; j < trees.size(); ++j) incoming[node_of[j]].push_back(j);
  std::vector<std::size_t> extra(t.size(), 0);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j : incoming[i]) extra[i] += trees[j].size();
  // subtree growth = own extra + extra of all descendants
  std::vector<std::size_t> grow(t.size(), 0);
  for (std::size_t i = t.size(); i-- > 0;) {
    grow[i] = extra[i];
    for (std::size_t c = i + 1; c < i + t[i].size; c += t[c].size) grow[i] += grow[c];
  }
  std::vector<Node> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    out.push_back(Node{t[i].color, static_cast<std::uint32_t>(t[i].size + grow[i])});
    for (std::size_t j : incoming[i]) out.insert(out.end(), trees[j].begin(), trees[j].end());
  }
  ForestBuilder b;
  b.raw() = std::move(out);
  return std::move(b).build();
}

}  // namespace

LinComb graft(const Forest& a, const Forest& b) {
  Grafter g;
  return g.forest_onto_forest(a, b);
}

LinComb graft(const LinComb& a, const LinComb& b) {
  Grafter g;
  LinComb out;
  for (const auto& [fa, ca] : a)
    for (const auto& [fb, cb] : b) out.add(g.forest_onto_forest(fa, fb), ca * cb);
  return out;
}

GraftResult graft_direct(const Forest& w, const Forest& target) {
  GraftResult r;
  std::vector<NodeSpan> trees = w.tree_spans();
  std::size_t k = trees.size(), n = target.order();
  if (k == 0) {
    r.value = LinComb(target);
    r.term_count = 1;
    return r;
  }
  if (n == 0) return r;
  // every assignment of the k trees to target nodes
  std::vector<std::size_t> node_of(k, 0);
  while (true) {
    r.value.add(attach(target, trees, node_of), 1);
    ++r.term_count;
    std::size_t j = 0;
    for (; j < k; ++j) {
      if (++node_of[j] < n) break;
      node_of[j] = 0;
    }
    if (j == k) break;
  }
  return r;
}

LinComb gl_product(const Forest& a, const Forest& b) {
  Forest rooted = b_plus(b, Color::reserved_root());
  LinComb out;
  for (const auto& [f, c] : graft(a, rooted)) out.add(b_minus(f), c);
  return out;
}

LinComb gl_product(const LinComb& a, const LinComb& b) {
  LinComb out;
  for (const auto& [fa, ca] : a)
    for (const auto& [fb, cb] : b) out.add(gl_product(fa, fb), ca * cb);
  return out;
}

}  // namespace otree
