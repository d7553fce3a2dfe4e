#include "otree/lincomb.hpp"

namespace otree {
namespace {

// Emits every interleaving of the tree sequences `a` and `b` into `out`.
void interleave(const std::vector<NodeSpan>& a, std::size_t i, const std::vector<NodeSpan>& b, std::size_t j,
                std::vector<Node>& buf, const Rational& c, LinComb& out) {
  if (i == a.size() || j == b.size()) {
    std::size_t mark = buf.size();
    for (; i < a.size(); ++i) buf.insert(buf.end(), a[i].begin(), a[i].end());
    for (; j < b.size(); ++j) buf.insert(buf.end(), b[j].begin(), b[j].end());
    ForestBuilder fb;
    fb.raw() = buf;
    out.add(std::move(fb).build(), c);
    buf.resize(mark);
    return;
  }
  std::size_t mark = buf.size();
  buf.insert(buf.end(), a[i].begin(), a[i].end());
  interleave(a, i + 1, b, j, buf, c, out);
  buf.resize(mark);
  buf.insert(buf.end(), b[j].begin(), b[j].end());
  interleave(a, i, b, j + 1, buf, c, out);
  buf.resize(mark);
}

void shuffle_into(const Forest& a, const Forest& b, const Rational& c, LinComb& out) {
  std::vector<Node> buf;
  buf.reserve(a.order() + b.order());
  interleave(a.tree_spans(), 0, b.tree_spans(), 0, buf, c, out);
}

}  // namespace

TensorComb tensor(const LinComb& a, const LinComb& b) {
  TensorComb out;
  for (const auto& [fa, ca] : a)
    for (const auto& [fb, cb] : b) out.add(ForestPair(fa, fb), ca * cb);
  return out;
}

Rational inner(const LinComb& a, const LinComb& b) {
  const LinComb& small = a.size() <= b.size() ? a : b;
  const LinComb& large = a.size() <= b.size() ? b : a;
  Rational s = 0;
  for (const auto& [f, c] : small) s += c * large.coeff(f);
  return s;
}

Rational inner(const TensorComb& a, const TensorComb& b) {
  Rational s = 0;
  for (const auto& [f, c] : a) s += c * b.coeff(f);
  return s;
}

LinComb concat(const LinComb& a, const LinComb& b) {
  LinComb out;
  for (const auto& [fa, ca] : a)
    for (const auto& [fb, cb] : b) out.add(concat(fa, fb), ca * cb);
  return out;
}

LinComb shuffle(const Forest& a, const Forest& b) {
  LinComb out;
  shuffle_into(a, b, 1, out);
  return out;
}

LinComb shuffle(const LinComb& a, const LinComb& b) {
  LinComb out;
  for (const auto& [fa, ca] : a)
    for (const auto& [fb, cb] : b) shuffle_into(fa, fb, ca * cb, out);
  return out;
}

LinComb shuffle_all(std::span<const Forest> words) {
  LinComb acc = unit_element();
  for (const Forest& w : words) acc = shuffle(acc, LinComb(w));
  return acc;
}

TensorComb sqcup_cdot(const TensorComb& x, const TensorComb& y) {
  TensorComb out;
  for (const auto& [px, cx] : x) {
    for (const auto& [py, cy] : y) {
      Forest right = concat(px.second, py.second);
      LinComb left;
      shuffle_into(px.first, py.first, cx * cy, left);
      for (const auto& [l, c] : left) out.add(ForestPair(l, right), c);
    }
  }
  return out;
}

TensorComb spr(const TensorComb& x, const TensorComb& y) {
  TensorComb out;
  for (const auto& [px, cx] : x) {
    for (const auto& [py, cy] : y) {
      LinComb left = shuffle(px.first, py.first);
      LinComb right = shuffle(px.second, py.second);
      for (const auto& [l, cl] : left)
        for (const auto& [r, cr] : right) out.add(ForestPair(l, r), cx * cy * cl * cr);
    }
  }
  return out;
}

TensorComb twist(const TensorComb& x) {
  TensorComb out;
  for (const auto& [p, c] : x) out.add(ForestPair(p.second, p.first), c);
  return out;
}

TensorComb apply_each(const TensorComb& x, const std::function<LinComb(const Forest&)>& left,
                      const std::function<LinComb(const Forest&)>& right) {
  TensorComb out;
  for (const auto& [p, c] : x) out.add(tensor(left(p.first), right(p.second)), c);
  return out;
}

LinComb shuffle_slots(const TensorComb& x) {
  LinComb out;
  for (const auto& [p, c] : x) shuffle_into(p.first, p.second, c, out);
  return out;
}

LinComb truncate(const LinComb& a, std::size_t max_order) {
  LinComb out;
  for (const auto& [f, c] : a)
    if (f.order() <= max_order) out.add(f, c);
  return out;
}

LinComb homogeneous_part(const LinComb& a, std::size_t order) {
  LinComb out;
  for (const auto& [f, c] : a)
    if (f.order() == order) out.add(f, c);
  return out;
}

}  // namespace otree
