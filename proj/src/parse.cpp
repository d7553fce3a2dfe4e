#include "otree/parse.hpp"

#include <vector>

namespace otree {
namespace {

bool is_color_char(char ch) {
  return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '_';
}

class ForestParser {
 public:
  explicit ForestParser(std::string_view text) : text_(text) {}

  Forest run() {
    parse_forest_body();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return Forest::from_nodes(std::move(nodes_));
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  void parse_forest_body() {
    skip_ws();
    while (pos_ < text_.size() && (text_[pos_] == '(' || is_color_char(text_[pos_]))) {
      parse_tree();
      skip_ws();
    }
  }

  void parse_tree() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_color_char(text_[pos_])) ++pos_;
    ColorId color = 0;
    if (pos_ > start) color = Color(text_.substr(start, pos_ - start)).id();
    if (pos_ >= text_.size() || text_[pos_] != '(') {
      if (pos_ > start) throw ParseError("color token must be followed by '('", pos_);
      throw ParseError("expected '('", pos_);
    }
    std::size_t open = pos_++;
    std::size_t root = nodes_.size();
    nodes_.push_back(Node{color, 1});
    parse_forest_body();
    if (pos_ >= text_.size()) throw ParseError("unbalanced '('", open);
    if (text_[pos_] != ')') throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    ++pos_;
    nodes_[root].size = static_cast<std::uint32_t>(nodes_.size() - root);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Node> nodes_;
};

void print_canonical(NodeSpan forest, std::string& out) {
  for (NodeSpan t : split_trees(forest)) {
    if (t[0].color != 0) out += color_token(t[0].color);
    out += '(';
    print_canonical(children_of(t), out);
    out += ')';
  }
}

void print_latex(NodeSpan forest, std::string& out) {
  for (NodeSpan t : split_trees(forest)) {
    out += "[";
    print_latex(children_of(t), out);
    out += "]";
    if (t[0].color != 0) {
      out += "_{";
      out += color_token(t[0].color);
      out += "}";
    }
  }
}

}  // namespace

Forest parse_forest(std::string_view text) { return ForestParser(text).run(); }

std::string print_forest(const Forest& f, PrintStyle style) {
  std::string out;
  if (style == PrintStyle::latex) {
    if (f.empty()) return "\\mathbb{1}";
    print_latex(f.nodes(), out);
  } else {
    print_canonical(f.nodes(), out);
  }
  return out;
}

}  // namespace otree
