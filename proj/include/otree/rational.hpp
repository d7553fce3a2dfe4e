#ifndef OTREE_RATIONAL_HPP
#define OTREE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace otree {

// Exact scalar. Always kept canonical (reduced, positive denominator).
using Rational = mpq_class;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
// Accepts "p" or "p/q" with optional sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Rational factorial(unsigned n);

}  // namespace otree

#endif
