#ifndef OTREE_PARSE_HPP
#define OTREE_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "otree/forest.hpp"

namespace otree {

// Syntax error with the byte offset of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar:
//   forest := ws (tree ws)*
//   tree   := color? '(' forest ')'
//   color  := [A-Za-z0-9_]+      (omitted means "0")
Forest parse_forest(std::string_view text);

enum class PrintStyle { canonical, latex };

// Canonical style: no whitespace, default colors omitted. The empty forest
// prints as "". Latex style uses nested brackets with color subscripts and
// \mathbb{1} for the empty forest.
std::string print_forest(const Forest& f, PrintStyle style = PrintStyle::canonical);

inline std::string to_string(const Forest& f) { return print_forest(f); }

}  // namespace otree

#endif
