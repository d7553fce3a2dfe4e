#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "oracles.hpp"
#include "otree/format.hpp"

namespace testing {

inline otree::Forest F(std::string_view s) { return s == "1" ? otree::Forest() : otree::parse_forest(s); }
inline otree::LinComb L(std::string_view s) { return otree::parse_lincomb(s); }
inline otree::TensorComb T(std::string_view s) { return otree::parse_tensorcomb(s); }

inline std::string key(const otree::Forest& f) { return f.empty() ? "1" : otree::print_forest(f); }

inline long long integer(const otree::Rational& c) {
  if (c.get_den() != 1 || !c.get_num().fits_slong_p()) throw std::runtime_error("non-integer coefficient");
  return c.get_num().get_si();
}

inline oracle::Comb to_oracle(const otree::LinComb& a) {
  oracle::Comb out;
  for (const auto& [f, c] : a) out[key(f)] = integer(c);
  return out;
}

inline oracle::TComb to_oracle(const otree::TensorComb& a) {
  oracle::TComb out;
  for (const auto& [p, c] : a) out[{key(p.first), key(p.second)}] = integer(c);
  return out;
}

inline oracle::F to_oracle(const otree::Forest& f) { return oracle::parse(key(f)); }

}  // namespace testing
