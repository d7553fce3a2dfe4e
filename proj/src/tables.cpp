#include "otree/tables.hpp"

#include "otree/enumerate.hpp"
#include "otree/grafting.hpp"
#include "otree/hopf.hpp"

namespace otree {
namespace {

std::vector<Forest> nonempty_upto(std::size_t n) {
  auto all = enumerate_forests_upto(n);
  all.erase(all.begin());
  return all;
}

std::string slot(const Forest& f) { return f.empty() ? "1" : print_forest(f); }

std::string latex_slot(const Forest& f) { return print_forest(f, PrintStyle::latex); }

}  // namespace

std::vector<ProductRow> product_table(std::size_t max_order) {
  std::vector<ProductRow> out;
  auto all = nonempty_upto(max_order);
  for (const Forest& a : all) {
    for (const Forest& b : all) {
      if (a.order() + b.order() > max_order) continue;
      out.push_back({a, b, graft(a, b), gl_product(a, b)});
    }
  }
  return out;
}

std::vector<ShuffleRow> shuffle_table(std::size_t max_order) {
  std::vector<ShuffleRow> out;
  auto all = nonempty_upto(max_order);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) {
      if (all[i].order() + all[j].order() > max_order) continue;
      out.push_back({all[i], all[j], shuffle(all[i], all[j])});
    }
  }
  return out;
}

std::vector<CoproductRow> coproduct_table(std::size_t max_order) {
  std::vector<CoproductRow> out;
  for (const Forest& f : enumerate_forests_upto(max_order)) out.push_back({f, coproduct_N(f)});
  return out;
}

std::vector<AntipodeRow> antipode_table(std::size_t max_order) {
  std::vector<AntipodeRow> out;
  for (const Forest& f : enumerate_forests_upto(max_order)) out.push_back({f, antipode_N(f)});
  return out;
}

std::string render_tables(std::size_t max_order, OutputFormat format) {
  auto products = product_table(max_order);
  auto shuffles = shuffle_table(max_order);
  auto coproducts = coproduct_table(max_order);
  auto antipodes = antipode_table(max_order);

  if (format == OutputFormat::json) {
    nlohmann::json j;
    j["max_order"] = max_order;
    j["grafting"] = nlohmann::json::array();
    for (const auto& r : products) {
      j["grafting"].push_back(
          {{"left", slot(r.left)}, {"right", slot(r.right)}, {"graft", to_json(r.graft)}, {"gl", to_json(r.gl)}});
    }
    j["shuffle"] = nlohmann::json::array();
    for (const auto& r : shuffles) {
      j["shuffle"].push_back({{"left", slot(r.left)}, {"right", slot(r.right)}, {"shuffle", to_json(r.shuffle)}});
    }
    j["coproduct"] = nlohmann::json::array();
    for (const auto& r : coproducts) {
      j["coproduct"].push_back({{"forest", slot(r.forest)}, {"value", to_json(r.coproduct)}});
    }
    j["antipode"] = nlohmann::json::array();
    for (const auto& r : antipodes) {
      j["antipode"].push_back({{"forest", slot(r.forest)}, {"value", to_json(r.antipode)}});
    }
    return j.dump(2) + "\n";
  }

  std::string out;
  if (format == OutputFormat::latex) {
    out += "\\begin{array}{l|l|l}\n\\omega_1 \\otimes \\omega_2 & \\omega_1[\\omega_2] & \\omega_1 \\circ \\omega_2 \\\\\n\\hline\n";
    for (const auto& r : products) {
      out += latex_slot(r.left) + " \\otimes " + latex_slot(r.right) + " & " + format_latex(r.graft) + " & " +
             format_latex(r.gl) + " \\\\\n";
    }
    out += "\\end{array}\n\n\\begin{array}{l|l}\n\\omega_1 \\otimes \\omega_2 & \\omega_1 \\shuffle \\omega_2 \\\\\n\\hline\n";
    for (const auto& r : shuffles) {
      out += latex_slot(r.left) + " \\otimes " + latex_slot(r.right) + " & " + format_latex(r.shuffle) + " \\\\\n";
    }
    out += "\\end{array}\n\n\\begin{array}{l|l}\n\\omega & \\Delta_N(\\omega) \\\\\n\\hline\n";
    for (const auto& r : coproducts) out += latex_slot(r.forest) + " & " + format_latex(r.coproduct) + " \\\\\n";
    out += "\\end{array}\n\n\\begin{array}{l|l}\n\\omega & S_N(\\omega) \\\\\n\\hline\n";
    for (const auto& r : antipodes) out += latex_slot(r.forest) + " & " + format_latex(r.antipode) + " \\\\\n";
    out += "\\end{array}\n";
    return out;
  }

  out += "# grafting and GL products: w1 | w2 | w1[w2] | w1 o w2\n";
  for (const auto& r : products) {
    out += slot(r.left) + " | " + slot(r.right) + " | " + format_text(r.graft) + " | " + format_text(r.gl) + "\n";
  }
  out += "\n# shuffle products: w1 | w2 | w1 sh w2\n";
  for (const auto& r : shuffles) {
    out += slot(r.left) + " | " + slot(r.right) + " | " + format_text(r.shuffle) + "\n";
  }
  out += "\n# coproduct: w | Delta_N(w)\n";
  for (const auto& r : coproducts) out += slot(r.forest) + " | " + format_text(r.coproduct) + "\n";
  out += "\n# antipode: w | S_N(w)\n";
  for (const auto& r : antipodes) out += slot(r.forest) + " | " + format_text(r.antipode) + "\n";
  return out;
}

}  // namespace otree
