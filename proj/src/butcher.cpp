#include "otree/butcher.hpp"

#include <map>

#include "otree/hopf.hpp"

namespace otree {
namespace {

Forest forest_of(NodeSpan nodes) {
  ForestBuilder b(nodes.size());
  b.append(nodes);
  return std::move(b).build();
}

class CoproductC {
 public:
  const UTensorComb& operator()(const UForest& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    UTensorComb out;
    const Forest& rep = w.representative();
    auto trees = rep.tree_spans();
    if (trees.empty()) {
      out.add(UForestPair(UForest(), UForest()), 1);
    } else if (trees.size() == 1) {
      NodeSpan t = trees[0];
      out.add(UForestPair(w, UForest()), 1);
      for (const auto& [p, c] : (*this)(UForest(forest_of(children_of(t))))) {
        ForestBuilder b;
        b.append_tree(t[0].color, p.second.representative().nodes());
        out.add(UForestPair(p.first, UForest(std::move(b).build())), c);
      }
    } else {
      // multiplicative over the trees
      Forest head = forest_of(rep.nodes().subspan(0, rep.order() - trees.back().size()));
      const UTensorComb left = (*this)(UForest(head));
      const UTensorComb& right = (*this)(UForest(forest_of(trees.back())));
      for (const auto& [p, c] : left)
        for (const auto& [q, d] : right)
          out.add(UForestPair(product_C(p.first, q.first), product_C(p.second, q.second)), c * d);
    }
    return memo_.emplace(w, std::move(out)).first->second;
  }

 private:
  std::map<UForest, UTensorComb> memo_;
};

class AntipodeC {
 public:
  const ULinComb& operator()(const UForest& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    ULinComb out;
    if (w.empty()) {
      out.add(UForest(), 1);
    } else {
      for (const auto& [p, c] : delta_(w)) {
        if (p.second.empty()) continue;
        for (const auto& [s, d] : (*this)(p.first)) out.add(product_C(s, p.second), -c * d);
      }
    }
    return memo_.emplace(w, std::move(out)).first->second;
  }

 private:
  CoproductC delta_;
  std::map<UForest, ULinComb> memo_;
};

}  // namespace

ULinComb to_unordered(const LinComb& a) {
  ULinComb out;
  for (const auto& [f, c] : a) out.add(UForest(f), c);
  return out;
}

UForest product_C(const UForest& a, const UForest& b) {
  return UForest(concat(a.representative(), b.representative()));
}

ULinComb product_C(const ULinComb& a, const ULinComb& b) {
  ULinComb out;
  for (const auto& [fa, ca] : a)
    for (const auto& [fb, cb] : b) out.add(product_C(fa, fb), ca * cb);
  return out;
}

UTensorComb coproduct_C(const UForest& w) {
  CoproductC d;
  return d(w);
}

UTensorComb coproduct_C(const ULinComb& a) {
  CoproductC d;
  UTensorComb out;
  for (const auto& [w, c] : a) out.add(d(w), c);
  return out;
}

UTensorComb coproduct_C_via_omega(const UForest& w) { return omega_inv(coproduct_N(omega(w))); }

Rational counit_C(const ULinComb& a) { return a.coeff(UForest()); }

ULinComb antipode_C(const UForest& w) {
  AntipodeC s;
  return s(w);
}

ULinComb antipode_C(const ULinComb& a) {
  AntipodeC s;
  ULinComb out;
  for (const auto& [w, c] : a) out.add(s(w), c);
  return out;
}

ULinComb antipode_C_via_omega(const UForest& w) { return omega_inv(antipode_N(omega(w))); }

LinComb omega(const Forest& f) {
  LinComb acc = unit_element();
  for (NodeSpan t : f.tree_spans()) {
    LinComb tree_sym;
    for (const auto& [k, c] : omega(forest_of(children_of(t)))) {
      ForestBuilder b(k.order() + 1);
      b.append_tree(t[0].color, k.nodes());
      tree_sym.add(std::move(b).build(), c);
    }
    acc = shuffle(acc, tree_sym);
  }
  return acc;
}

LinComb omega(const LinComb& a) {
  LinComb out;
  for (const auto& [f, c] : a) out.add(omega(f), c);
  return out;
}

LinComb omega(const UForest& w) { return omega(w.representative()); }

LinComb omega(const ULinComb& a) {
  LinComb out;
  for (const auto& [w, c] : a) out.add(omega(w), c);
  return out;
}

LinComb omega_by_orbit(const UForest& w) {
  Rational s(sigma(w.representative()));
  LinComb out;
  for (const Forest& f : orbit(w.representative())) out.add(f, s);
  return out;
}

ULinComb omega_inv(const LinComb& a) {
  ULinComb out;
  for (const auto& [f, c] : a) out.add(UForest(f), c / Rational(pi(f)));
  return out;
}

UTensorComb omega_inv(const TensorComb& x) {
  UTensorComb out;
  for (const auto& [p, c] : x)
    out.add(UForestPair(UForest(p.first), UForest(p.second)), c / (Rational(pi(p.first)) * Rational(pi(p.second))));
  return out;
}

TensorComb omega(const UTensorComb& x) {
  TensorComb out;
  for (const auto& [p, c] : x) out.add(tensor(omega(p.first), omega(p.second)), c);
  return out;
}

}  // namespace otree
