#include "otree/hopf.hpp"

#include <map>

#include "otree/cuts.hpp"

namespace otree {
namespace {

Forest rest_of(const Forest& f, std::size_t drop_last_tree_size) {
  NodeSpan n = f.nodes();
  ForestBuilder b;
  b.append(n.subspan(0, n.size() - drop_last_tree_size));
  return std::move(b).build();
}

// Splits w t into (w, t) where t is the last tree.
std::pair<Forest, NodeSpan> split_last(const Forest& f) {
  auto trees = f.tree_spans();
  NodeSpan last = trees.back();
  return {rest_of(f, last.size()), last};
}

class RecursiveCoproduct {
 public:
  const TensorComb& operator()(const Forest& f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    TensorComb out;
    if (f.empty()) {
      out = tensor(Forest(), Forest());
    } else {
      auto [w, t] = split_last(f);
      ColorId root = t[0].color;
      ForestBuilder kb;
      kb.append(children_of(t));
      Forest kids = std::move(kb).build();
      // (I (x) B+_i) Delta_N(B-(t))
      TensorComb grown;
      for (const auto& [p, c] : (*this)(kids)) {
        ForestBuilder rb;
        rb.append_tree(root, p.second.nodes());
        grown.add(ForestPair(p.first, std::move(rb).build()), c);
      }
      out = sqcup_cdot((*this)(w), grown);
      out.add(ForestPair(f, Forest()), 1);
    }
    return memo_.emplace(f, std::move(out)).first->second;
  }

 private:
  std::map<Forest, TensorComb> memo_;
};

class RecursiveAntipode {
 public:
  const LinComb& operator()(const Forest& f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    LinComb out;
    if (f.empty()) {
      out = unit_element();
    } else {
      for (const auto& [p, c] : delta_(f)) {
        if (p.second.empty()) continue;  // the w (x) 1 term
        out.add(shuffle((*this)(p.first), LinComb(p.second)), -c);
      }
    }
    return memo_.emplace(f, std::move(out)).first->second;
  }

 private:
  RecursiveCoproduct delta_;
  std::map<Forest, LinComb> memo_;
};

class CutRecursiveAntipode {
 public:
  const LinComb& operator()(const Forest& f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    LinComb out;
    if (f.empty()) {
      out = unit_element();
    } else {
      for (const auto& r : cut_results(f, CutFamily::full_admissible, f.order())) {
        if (r.remainder.empty()) continue;  // cut everything
        LinComb sp;
        for (const auto& [p, c] : r.cut_part) sp.add((*this)(p), c);
        out.add(shuffle(sp, LinComb(r.remainder)), -1);
      }
    }
    return memo_.emplace(f, std::move(out)).first->second;
  }

 private:
  std::map<Forest, LinComb> memo_;
};

}  // namespace

LinComb apply(const Endomap& m, const LinComb& a) {
  LinComb out;
  for (const auto& [f, c] : a) out.add(m(f), c);
  return out;
}

TensorComb apply_tensor(const Endomap& left, const Endomap& right, const TensorComb& x) {
  return apply_each(x, left, right);
}

Rational counit(const LinComb& a) { return a.coeff(Forest()); }

LinComb unit(const Rational& r) { return r * unit_element(); }

TensorComb coproduct_N(const Forest& f) {
  TensorComb out;
  for (const auto& r : cut_results(f, CutFamily::full_admissible, f.order()))
    for (const auto& [p, c] : r.cut_part) out.add(ForestPair(p, r.remainder), c);
  return out;
}

TensorComb coproduct_N(const LinComb& a) {
  TensorComb out;
  for (const auto& [f, c] : a) out.add(coproduct_N(f), c);
  return out;
}

TensorComb coproduct_N_recursive(const Forest& f) {
  RecursiveCoproduct d;
  return d(f);
}

TensorComb coproduct_N_recursive(const LinComb& a) {
  RecursiveCoproduct d;
  TensorComb out;
  for (const auto& [f, c] : a) out.add(d(f), c);
  return out;
}

LinComb antipode_N(const Forest& f) {
  LinComb sum;
  for (const auto& r : cut_results(f, CutFamily::left, f.order()))
    sum.add(shuffle(r.cut_part, LinComb(r.remainder)));
  return reversal_SF(sum);
}

LinComb antipode_N(const LinComb& a) {
  LinComb out;
  for (const auto& [f, c] : a) out.add(antipode_N(f), c);
  return out;
}

LinComb antipode_N_recursive(const Forest& f) {
  RecursiveAntipode s;
  return s(f);
}

LinComb antipode_N_recursive(const LinComb& a) {
  RecursiveAntipode s;
  LinComb out;
  for (const auto& [f, c] : a) out.add(s(f), c);
  return out;
}

LinComb antipode_N_cut_recursive(const Forest& f) {
  CutRecursiveAntipode s;
  return s(f);
}

LinComb reversal_SF(const Forest& f) {
  auto trees = f.tree_spans();
  ForestBuilder b(f.order());
  for (auto it = trees.rbegin(); it != trees.rend(); ++it) b.append(*it);
  return LinComb{{std::move(b).build(), trees.size() % 2 == 0 ? Rational(1) : Rational(-1)}};
}

LinComb reversal_SF(const LinComb& a) {
  LinComb out;
  for (const auto& [f, c] : a) out.add(reversal_SF(f), c);
  return out;
}

TensorComb coproduct_F(const Forest& f) {
  TensorComb out;
  NodeSpan n = f.nodes();
  std::size_t i = 0;
  while (true) {
    ForestBuilder l, r;
    l.append(n.subspan(0, i));
    r.append(n.subspan(i));
    out.add(ForestPair(std::move(l).build(), std::move(r).build()), 1);
    if (i == n.size()) break;
    i += n[i].size;
  }
  return out;
}

TensorComb coproduct_F(const LinComb& a) {
  TensorComb out;
  for (const auto& [f, c] : a) out.add(coproduct_F(f), c);
  return out;
}

LinComb convolution(const Endomap& A, const Endomap& B, const LinComb& a, HopfStructure which) {
  TensorComb d = which == HopfStructure::N ? coproduct_N(a) : coproduct_F(a);
  return shuffle_slots(apply_each(d, A, B));
}

Endomap identity_map() {
  return [](const Forest& f) { return LinComb(f); };
}

Endomap unit_counit_map() {
  return [](const Forest& f) { return f.empty() ? unit_element() : LinComb(); };
}

Endomap antipode_N_map() {
  return [](const Forest& f) { return antipode_N(f); };
}

Endomap reversal_SF_map() {
  return [](const Forest& f) { return reversal_SF(f); };
}

Tensor3 coproduct_N_left_twice(const LinComb& a) {
  Tensor3 out;
  for (const auto& [p, c] : coproduct_N(a))
    for (const auto& [q, d] : coproduct_N(p.first)) out.add(ForestTriple(q.first, q.second, p.second), c * d);
  return out;
}

Tensor3 coproduct_N_right_twice(const LinComb& a) {
  Tensor3 out;
  for (const auto& [p, c] : coproduct_N(a))
    for (const auto& [q, d] : coproduct_N(p.second)) out.add(ForestTriple(p.first, q.first, q.second), c * d);
  return out;
}

}  // namespace otree
