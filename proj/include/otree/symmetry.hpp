#ifndef OTREE_SYMMETRY_HPP
#define OTREE_SYMMETRY_HPP

#include <compare>
#include <vector>

#include "otree/forest.hpp"
#include "otree/rational.hpp"

namespace otree {

// Unordered forest: the equivalence class of ordered forests under
// permutation of trees and of the branches of every node, represented by
// its minimal element in the canonical order.
class UForest {
 public:
  UForest() = default;
  // Canonicalizes `f`.
  explicit UForest(const Forest& f);

  const Forest& representative() const { return rep_; }
  std::size_t order() const { return rep_.order(); }
  std::size_t degree() const { return rep_.degree(); }
  bool empty() const { return rep_.empty(); }

  friend bool operator==(const UForest&, const UForest&) = default;
  friend std::strong_ordering operator<=>(const UForest& a, const UForest& b) { return a.rep_ <=> b.rep_; }

 private:
  Forest rep_;
};

// Minimal element of the class of `f`: children sorted recursively, then
// trees sorted.
Forest canonical_form(const Forest& f);
UForest forget(const Forest& f);
bool equivalent(const Forest& a, const Forest& b);

// Symmetry coefficient: size of the stabilizer of `f` under all tree and
// branch permutations.
mpz_class sigma(const Forest& f);
// Order of the full permutation group acting on `f`, i.e. |orbit| * sigma.
mpz_class pi(const Forest& f);

// Every ordered forest equivalent to `f`, in canonical order.
std::vector<Forest> orbit(const Forest& f);

}  // namespace otree

#endif
