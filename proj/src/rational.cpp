#include "otree/rational.hpp"

#include <stdexcept>

namespace otree {

std::string to_string(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("invalid rational '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  std::size_t slash = std::string_view::npos;
  bool digits = false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] == '/') {
      if (slash != std::string_view::npos || !digits) throw bad();
      slash = j;
      digits = false;
    } else if (text[j] >= '0' && text[j] <= '9') {
      digits = true;
    } else {
      throw bad();
    }
  }
  if (!digits) throw bad();
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational r;
  if (r.set_str(s, 10) != 0) throw bad();
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

}  // namespace otree
