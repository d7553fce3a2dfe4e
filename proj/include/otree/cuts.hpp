#ifndef OTREE_CUTS_HPP
#define OTREE_CUTS_HPP

#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

#include "otree/enumerate.hpp"
#include "otree/lincomb.hpp"

namespace otree {

// Structural path of a node: {tree index, child index, child index, ...}.
// The empty path addresses the invisible root placed below the forest,
// whose children are the trees of the forest.
using NodeAddress = std::vector<std::uint32_t>;

// Severs the `count` leftmost children of `node`.
struct NodalCut {
  NodeAddress node;
  std::uint32_t count = 1;

  friend bool operator==(const NodalCut&, const NodalCut&) = default;
  friend auto operator<=>(const NodalCut&, const NodalCut&) = default;
};

struct Cut {
  std::vector<NodalCut> nodal_cuts;  // sorted by address, distinct nodes
  bool is_admissible = true;         // no root path is severed twice
  bool is_full = false;              // uses the invisible root
  bool is_word = true;               // uses only the invisible root

  bool empty() const { return nodal_cuts.empty(); }
  friend bool operator==(const Cut& a, const Cut& b) { return a.nodal_cuts == b.nodal_cuts; }
};

enum class CutFamily {
  nodal,            // NLC: a single nodal cut
  left,             // LC
  admissible,       // ALC
  full_admissible,  // FALC: ALC of B+(w) with the root removed again
  word,             // WC: splits the word into a prefix and a suffix
};

CutFamily parse_cut_family(std::string_view name);
std::string_view cut_family_name(CutFamily family);
bool in_family(const Cut& c, CutFamily family);

struct CutResult {
  LinComb cut_part;            // P: shuffle of the cut-off forests
  Forest remainder;            // R: nodes still connected to the roots
  std::vector<Forest> pieces;  // the cut-off forests themselves
};

// Exhaustive, duplicate-free, ordered lexicographically by
// (node address, count) sequences. Throws BoundExceeded if |f| > bound.
std::vector<Cut> cuts(const Forest& f, CutFamily family, std::size_t bound = kDefaultMaxOrder);
std::vector<Cut> nodal_left_cuts(const Forest& f);
std::vector<Cut> left_cuts(const Forest& f);
std::vector<Cut> admissible_left_cuts(const Forest& f);
std::vector<Cut> full_admissible_left_cuts(const Forest& f);
std::vector<Cut> word_cuts(const Forest& f);

// Throws std::invalid_argument if an address or count does not fit `f`.
CutResult apply_cut(const Forest& f, const Cut& c);

// Results of every cut of a family (order unspecified), without building
// the public Cut descriptions.
std::vector<CutResult> cut_results(const Forest& f, CutFamily family, std::size_t bound = kDefaultMaxOrder);

std::string format_address(const NodeAddress& a);
std::string format_cut(const Cut& c);

}  // namespace otree

#endif
