#ifndef OTREE_TABLES_HPP
#define OTREE_TABLES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "otree/format.hpp"

namespace otree {

struct ProductRow {
  Forest left, right;
  LinComb graft, gl;
};

struct ShuffleRow {
  Forest left, right;
  LinComb shuffle;
};

struct CoproductRow {
  Forest forest;
  TensorComb coproduct;
};

struct AntipodeRow {
  Forest forest;
  LinComb antipode;
};

// Monochrome reference tables. Forests are listed by order, then
// canonically; pairs by the first slot, then the second.
// Grafting and GL products of all nonempty pairs with total order <= n.
std::vector<ProductRow> product_table(std::size_t max_order);
// Shuffles of nonempty pairs w1 <= w2 with total order <= n.
std::vector<ShuffleRow> shuffle_table(std::size_t max_order);
// Delta_N and S_N of every forest (including 1) up to order n.
std::vector<CoproductRow> coproduct_table(std::size_t max_order);
std::vector<AntipodeRow> antipode_table(std::size_t max_order);

// All four tables in one document.
std::string render_tables(std::size_t max_order, OutputFormat format);

}  // namespace otree

#endif
