#ifndef OTREE_FORMAT_HPP
#define OTREE_FORMAT_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "otree/lincomb.hpp"
#include "otree/parse.hpp"

namespace otree {

enum class OutputFormat { text, json, latex };

OutputFormat parse_output_format(std::string_view name);

// Text form: terms in canonical order joined by " + " (" - " for negative
// coefficients), coefficients other than 1 as "p/q·" prefixes, the empty
// forest as "1", tensor slots joined by "⊗". The zero element prints "0".
std::string format_text(const LinComb& a);
std::string format_text(const TensorComb& a);
std::string format_latex(const LinComb& a);
std::string format_latex(const TensorComb& a);

// Parses the text form back into a linear combination. Accepts "*" as well
// as "·" between coefficient and forest. Errors carry byte offsets.
LinComb parse_lincomb(std::string_view text);
// Same grammar with "L⊗R" bodies; either slot may be "1".
TensorComb parse_tensorcomb(std::string_view text);

// JSON: [{"coeff": "p/q", "forest": "..."}] in canonical order;
// tensors use "left"/"right" instead of "forest".
nlohmann::json to_json(const LinComb& a);
nlohmann::json to_json(const TensorComb& a);
LinComb lincomb_from_json(const nlohmann::json& j);
TensorComb tensorcomb_from_json(const nlohmann::json& j);

}  // namespace otree

#endif
