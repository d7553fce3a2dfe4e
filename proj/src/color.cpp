#include "otree/color.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace otree {
namespace {

constexpr std::string_view kReservedRootToken = "#";

class ColorTable {
 public:
  ColorTable() {
    intern("0");
    intern(kReservedRootToken);
  }

  ColorId intern(std::string_view token) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = ids_.find(std::string(token)); it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = ids_.try_emplace(std::string(token), static_cast<ColorId>(tokens_.size()));
    if (inserted) tokens_.emplace_back(token);
    return it->second;
  }

  std::string_view token(ColorId id) const {
    std::shared_lock lock(mutex_);
    if (id >= tokens_.size()) throw std::out_of_range("unknown color id");
    // deque never relocates existing elements on push_back
    return tokens_[id];
  }

 private:
  mutable std::shared_mutex mutex_;
  std::deque<std::string> tokens_;
  std::unordered_map<std::string, ColorId> ids_;
};

ColorTable& table() {
  static ColorTable t;
  return t;
}

}  // namespace

bool is_valid_color_token(std::string_view token) {
  if (token.empty()) return false;
  for (char ch : token) {
    bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '_';
    if (!ok) return false;
  }
  return true;
}

Color::Color(std::string_view token) {
  if (!is_valid_color_token(token))
    throw std::invalid_argument("invalid color token '" + std::string(token) + "'");
  id_ = table().intern(token);
}

Color Color::reserved_root() {
  static const ColorId id = table().intern(kReservedRootToken);
  return Color(id, 0);
}

bool Color::is_reserved() const { return *this == reserved_root(); }

std::string_view Color::token() const { return table().token(id_); }

std::string_view color_token(ColorId id) { return table().token(id); }

int compare_colors(ColorId a, ColorId b) {
  if (a == b) return 0;
  int c = table().token(a).compare(table().token(b));
  return c < 0 ? -1 : 1;
}

std::strong_ordering operator<=>(Color a, Color b) {
  int c = compare_colors(a.id_, b.id_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace otree
