#include "otree/symmetry.hpp"

#include <algorithm>
#include <set>

namespace otree {
namespace {

void canonicalize_into(NodeSpan forest, std::vector<Node>& out) {
  std::vector<std::vector<Node>> trees;
  for (NodeSpan t : split_trees(forest)) {
    std::vector<Node> ct;
    ct.push_back(t[0]);
    canonicalize_into(children_of(t), ct);
    trees.push_back(std::move(ct));
  }
  std::sort(trees.begin(), trees.end(),
            [](const std::vector<Node>& a, const std::vector<Node>& b) { return compare_tree_spans(a, b) < 0; });
  for (const auto& t : trees) out.insert(out.end(), t.begin(), t.end());
}

// Groups equal canonical trees; returns the multiplicities.
std::vector<unsigned> multiplicities(const std::vector<NodeSpan>& canonical_trees) {
  std::vector<unsigned> mult;
  for (std::size_t i = 0; i < canonical_trees.size();) {
    std::size_t j = i + 1;
    while (j < canonical_trees.size() && compare_tree_spans(canonical_trees[i], canonical_trees[j]) == 0) ++j;
    mult.push_back(static_cast<unsigned>(j - i));
    i = j;
  }
  return mult;
}

mpz_class sigma_canonical(NodeSpan forest) {
  auto trees = split_trees(forest);
  mpz_class s = 1;
  for (NodeSpan t : trees) s *= sigma_canonical(children_of(t));
  for (unsigned m : multiplicities(trees)) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m);
    s *= f;
  }
  return s;
}

mpz_class pi_of(NodeSpan forest) {
  auto trees = split_trees(forest);
  mpz_class p;
  mpz_fac_ui(p.get_mpz_t(), trees.size());
  for (NodeSpan t : trees) p *= pi_of(children_of(t));
  return p;
}

std::set<std::vector<Node>> orbit_of(NodeSpan forest);

std::set<std::vector<Node>> tree_orbit(NodeSpan tree) {
  std::set<std::vector<Node>> out;
  for (const auto& kids : orbit_of(children_of(tree))) {
    std::vector<Node> t;
    t.push_back(tree[0]);
    t.insert(t.end(), kids.begin(), kids.end());
    out.insert(std::move(t));
  }
  return out;
}

std::set<std::vector<Node>> orbit_of(NodeSpan forest) {
  // distinct arrangements of the tree classes, each filled with every
  // ordered representative of its class
  Forest canon = canonical_form(Forest::from_nodes(std::vector<Node>(forest.begin(), forest.end())));
  auto trees = split_trees(canon.nodes());
  std::vector<std::vector<std::vector<Node>>> reps;
  std::vector<std::size_t> cls;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (i > 0 && compare_tree_spans(trees[i - 1], trees[i]) == 0) {
      cls.push_back(cls.back());
      continue;
    }
    auto o = tree_orbit(trees[i]);
    reps.emplace_back(o.begin(), o.end());
    cls.push_back(reps.size() - 1);
  }
  std::set<std::vector<Node>> out;
  std::vector<std::size_t> arrangement = cls;  // sorted ascending already
  do {
    std::vector<std::size_t> pick(arrangement.size(), 0);
    while (true) {
      std::vector<Node> f;
      for (std::size_t i = 0; i < arrangement.size(); ++i) {
        const auto& t = reps[arrangement[i]][pick[i]];
        f.insert(f.end(), t.begin(), t.end());
      }
      out.insert(std::move(f));
      std::size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < reps[arrangement[i]].size()) break;
        pick[i] = 0;
      }
      if (i == pick.size()) break;
    }
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return out;
}

}  // namespace

Forest canonical_form(const Forest& f) {
  std::vector<Node> out;
  out.reserve(f.order());
  canonicalize_into(f.nodes(), out);
  ForestBuilder b;
  b.raw() = std::move(out);
  return std::move(b).build();
}

UForest::UForest(const Forest& f) : rep_(canonical_form(f)) {}

UForest forget(const Forest& f) { return UForest(f); }

bool equivalent(const Forest& a, const Forest& b) {
  if (a.order() != b.order() || a.degree() != b.degree()) return false;
  return canonical_form(a) == canonical_form(b);
}

mpz_class sigma(const Forest& f) { return sigma_canonical(canonical_form(f).nodes()); }

mpz_class pi(const Forest& f) { return pi_of(f.nodes()); }

std::vector<Forest> orbit(const Forest& f) {
  std::vector<Forest> out;
  for (auto& nodes : orbit_of(f.nodes())) {
    ForestBuilder b;
    b.raw() = nodes;
    out.push_back(std::move(b).build());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace otree
