#ifndef OTREE_GRAFTING_HPP
#define OTREE_GRAFTING_HPP

#include <cstddef>

#include "otree/lincomb.hpp"

namespace otree {

// Left grafting a[b], the bilinear extension of the recursions
//   t[1] = 0,  t[w v] = t[w] v + w t[v],  t[B+_i(w)] = B+_i(t[w]) + B+_i(t w),
//   1[a] = a,  (t w)[a] = t[w[a]] - (t[w])[a].
// A grafted tree always becomes the new first child of its target node.
LinComb graft(const LinComb& a, const LinComb& b);
LinComb graft(const Forest& a, const Forest& b);

struct GraftResult {
  LinComb value;
  // Number of words produced before like terms were collected.
  std::size_t term_count = 0;
};

// Grafting by direct attachment: for w = t1...tk, attach t_k, then t_{k-1},
// ..., then t_1 each to the left side of any node of the original target.
// Produces |target|^k words.
GraftResult graft_direct(const Forest& w, const Forest& target);

// Grossman-Larson product: a o b = B-(a[B+(b)]) with an invisible root.
LinComb gl_product(const LinComb& a, const LinComb& b);
LinComb gl_product(const Forest& a, const Forest& b);

}  // namespace otree

#endif
