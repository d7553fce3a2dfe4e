#include "otree/format.hpp"

#include <stdexcept>
#include <type_traits>

namespace otree {
namespace {

constexpr std::string_view kDot = "\xC2\xB7";      // U+00B7 MIDDLE DOT
constexpr std::string_view kTensor = "\xE2\x8A\x97";  // U+2297 CIRCLED TIMES

std::string body_text(const Forest& f) { return f.empty() ? "1" : print_forest(f); }

std::string body_text(const ForestPair& p) {
  return body_text(p.first) + std::string(kTensor) + body_text(p.second);
}

std::string body_latex(const Forest& f) { return print_forest(f, PrintStyle::latex); }

std::string body_latex(const ForestPair& p) {
  return body_latex(p.first) + " \\otimes " + body_latex(p.second);
}

bool is_unit_body(const Forest& f) { return f.empty(); }
bool is_unit_body(const ForestPair&) { return false; }

template <class Key>
std::string text_of(const Combination<Key>& a) {
  if (a.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : a) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (is_unit_body(k)) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) {
      out += to_string(mag);
      out += kDot;
    }
    out += body_text(k);
  }
  return out;
}

std::string latex_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

template <class Key>
std::string latex_of(const Combination<Key>& a) {
  if (a.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : a) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += latex_rational(mag) + "\\,";
    out += body_latex(k);
  }
  return out;
}

bool is_rational_literal(std::string_view s) {
  if (s.empty()) return false;
  bool digit = false;
  for (char ch : s) {
    if (ch >= '0' && ch <= '9') {
      digit = true;
    } else if (ch != '/') {
      return false;
    }
  }
  return digit;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Forest parse_forest_at(std::string_view text, std::size_t offset) {
  try {
    return parse_forest(text);
  } catch (const ParseError& e) {
    // rebase the offset onto the whole expression
    std::string msg = e.what();
    msg = msg.substr(0, msg.rfind(" at byte "));
    throw ParseError(msg, offset + e.offset());
  }
}

Forest parse_slot(std::string_view text, std::size_t offset) {
  if (text == "1") return Forest();
  if (text.empty()) throw ParseError("missing forest", offset);
  return parse_forest_at(text, offset);
}

template <class Key>
Key parse_key(std::string_view text, std::size_t offset);

template <>
Forest parse_key<Forest>(std::string_view text, std::size_t offset) {
  return parse_slot(text, offset);
}

template <>
ForestPair parse_key<ForestPair>(std::string_view text, std::size_t offset) {
  std::size_t sep = text.find(kTensor);
  if (sep == std::string_view::npos) throw ParseError("expected a tensor product", offset);
  std::size_t loff = offset;
  std::string_view left = trim(text.substr(0, sep), loff);
  std::size_t roff = offset + sep + kTensor.size();
  std::string_view right = trim(text.substr(sep + kTensor.size()), roff);
  return {parse_slot(left, loff), parse_slot(right, roff)};
}

template <class Key>
Combination<Key> parse_terms(std::string_view text) {
  Combination<Key> out;
  std::size_t pos = 0;
  bool expect_term = true;
  bool seen_term = false;
  bool sign_given = false;
  int sign = 1;
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  if (pos == text.size()) throw ParseError("empty expression", pos);
  {
    std::size_t off = pos;
    if (trim(text.substr(pos), off) == "0") return out;
  }
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t') {
      ++pos;
      continue;
    }
    if (text[pos] == '+' || text[pos] == '-') {
      // a sign is allowed between terms and once before the first term
      if (!expect_term || (!seen_term && !sign_given)) {
        sign = text[pos] == '-' ? -1 : 1;
        sign_given = true;
        expect_term = true;
        ++pos;
        continue;
      }
      throw ParseError("unexpected sign", pos);
    }
    if (!expect_term) throw ParseError("expected '+' or '-'", pos);
    // the term runs to the next '+' or '-'
    std::size_t end = pos;
    while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
    std::size_t offset = pos;
    std::string_view term = trim(text.substr(pos, end - pos), offset);

    Rational coeff = 1;
    std::string_view body = term;
    std::size_t body_offset = offset;
    std::size_t sep = term.find(kDot);
    std::size_t sep_len = kDot.size();
    if (std::size_t star = term.find('*'); star != std::string_view::npos && (sep == std::string_view::npos || star < sep)) {
      sep = star;
      sep_len = 1;
    }
    Key key{};
    if (sep != std::string_view::npos) {
      std::size_t coff = offset;
      std::string_view ctext = trim(term.substr(0, sep), coff);
      if (!is_rational_literal(ctext)) throw ParseError("invalid coefficient", offset);
      try {
        coeff = parse_rational(ctext);
      } catch (const std::invalid_argument&) {
        throw ParseError("invalid coefficient", offset);
      }
      body_offset = offset + sep + sep_len;
      body = trim(term.substr(sep + sep_len), body_offset);
      key = parse_key<Key>(body, body_offset);
    } else if (std::is_same_v<Key, Forest> && is_rational_literal(term)) {
      try {
        coeff = parse_rational(term);
      } catch (const std::invalid_argument&) {
        throw ParseError("invalid coefficient", offset);
      }
    } else {
      key = parse_key<Key>(body, body_offset);
    }
    out.add(std::move(key), coeff * sign);
    sign = 1;
    sign_given = false;
    expect_term = false;
    seen_term = true;
    pos = end;
  }
  if (expect_term) throw ParseError("expression ends with a sign", text.size());
  return out;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "latex") return OutputFormat::latex;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string format_text(const LinComb& a) { return text_of(a); }
std::string format_text(const TensorComb& a) { return text_of(a); }
std::string format_latex(const LinComb& a) { return latex_of(a); }
std::string format_latex(const TensorComb& a) { return latex_of(a); }

LinComb parse_lincomb(std::string_view text) { return parse_terms<Forest>(text); }

TensorComb parse_tensorcomb(std::string_view text) { return parse_terms<ForestPair>(text); }

nlohmann::json to_json(const LinComb& a) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [f, c] : a) arr.push_back({{"coeff", to_string(c)}, {"forest", print_forest(f)}});
  return arr;
}

nlohmann::json to_json(const TensorComb& a) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [p, c] : a)
    arr.push_back({{"coeff", to_string(c)}, {"left", print_forest(p.first)}, {"right", print_forest(p.second)}});
  return arr;
}

LinComb lincomb_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("linear combination JSON must be an array");
  LinComb out;
  for (const auto& term : j) {
    out.add(parse_forest(term.at("forest").get<std::string>()), parse_rational(term.at("coeff").get<std::string>()));
  }
  return out;
}

TensorComb tensorcomb_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("tensor JSON must be an array");
  TensorComb out;
  for (const auto& term : j) {
    out.add(ForestPair(parse_forest(term.at("left").get<std::string>()), parse_forest(term.at("right").get<std::string>())),
            parse_rational(term.at("coeff").get<std::string>()));
  }
  return out;
}

}  // namespace otree
