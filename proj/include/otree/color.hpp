#ifndef OTREE_COLOR_HPP
#define OTREE_COLOR_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace otree {

using ColorId = std::uint32_t;

// Node color. Tokens are interned process-wide; a Color is a cheap handle.
// The default color is the token "0".
class Color {
 public:
  Color() = default;
  explicit Color(std::string_view token);

  static Color from_id(ColorId id) { return Color(id, 0); }
  // Color of the invisible root used by GL products and full cuts. Its
  // token is not a valid grammar token, so it never collides with input.
  static Color reserved_root();

  ColorId id() const { return id_; }
  std::string_view token() const;
  bool is_default() const { return id_ == 0; }
  bool is_reserved() const;

  friend bool operator==(Color a, Color b) { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(Color a, Color b);

 private:
  Color(ColorId id, int) : id_(id) {}
  ColorId id_ = 0;
};

bool is_valid_color_token(std::string_view token);

// Compares two interned colors by token.
int compare_colors(ColorId a, ColorId b);

std::string_view color_token(ColorId id);

}  // namespace otree

#endif
