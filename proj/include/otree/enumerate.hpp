#ifndef OTREE_ENUMERATE_HPP
#define OTREE_ENUMERATE_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "otree/forest.hpp"

namespace otree {

enum class ForestFilter {
  all,
  trees,  // degree-1 forests
  tall,   // every node has at most one child
  bushy,  // every tree has height at most 1
};

ForestFilter parse_forest_filter(std::string_view name);

inline constexpr std::size_t kDefaultMaxOrder = 10;

class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(std::size_t requested, std::size_t bound);
};

// Visits every forest with exactly n nodes over `colors` in canonical order
// without materializing the whole set. `colors` may be given in any order.
void for_each_forest(std::size_t n, const std::vector<Color>& colors, ForestFilter filter,
                     const std::function<void(NodeSpan)>& visit, std::size_t bound = kDefaultMaxOrder);

// All forests with exactly n nodes, canonical order.
std::vector<Forest> enumerate_forests(std::size_t n, const std::vector<Color>& colors = {Color()},
                                      ForestFilter filter = ForestFilter::all, std::size_t bound = kDefaultMaxOrder);

// All forests with 0..max_order nodes, by increasing order then canonical order.
std::vector<Forest> enumerate_forests_upto(std::size_t max_order, const std::vector<Color>& colors = {Color()},
                                           ForestFilter filter = ForestFilter::all,
                                           std::size_t bound = kDefaultMaxOrder);

std::size_t count_forests(std::size_t n, const std::vector<Color>& colors = {Color()},
                          ForestFilter filter = ForestFilter::all, std::size_t bound = kDefaultMaxOrder);

bool passes_filter(NodeSpan forest, ForestFilter filter);

// Sort key used for listings that group by order first.
struct ByOrderThenCanonical {
  bool operator()(const Forest& a, const Forest& b) const {
    if (a.order() != b.order()) return a.order() < b.order();
    return a < b;
  }
};

}  // namespace otree

#endif
