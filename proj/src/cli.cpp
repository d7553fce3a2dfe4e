#include "otree/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "otree/butcher.hpp"
#include "otree/cuts.hpp"
#include "otree/enumerate.hpp"
#include "otree/format.hpp"
#include "otree/grafting.hpp"
#include "otree/hopf.hpp"
#include "otree/laws.hpp"
#include "otree/series.hpp"
#include "otree/symmetry.hpp"
#include "otree/tables.hpp"

namespace otree::cli {
namespace {

// Raised for malformed arguments that CLI11 cannot see (bad forests, bad
// environment values); mapped to the usage exit code.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Input {
 public:
  explicit Input(std::istream& in) : in_(in) {}

  std::string line(const std::string& arg) {
    if (arg != "-") return arg;
    std::string s;
    while (std::getline(in_, s)) {
      if (s.find_first_not_of(" \t\r") != std::string::npos) {
        if (!s.empty() && s.back() == '\r') s.pop_back();
        return s;
      }
    }
    throw UsageError("expected another line on standard input");
  }

  std::string document(const std::string& arg) {
    if (arg == "-") {
      std::stringstream ss;
      ss << in_.rdbuf();
      return ss.str();
    }
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
    std::ifstream file(arg);
    if (!file) throw UsageError("cannot read '" + arg + "'");
    std::stringstream ss;
    ss << file.rdbuf();
    return ss.str();
  }

 private:
  std::istream& in_;
};

std::size_t order_bound() {
  const char* env = std::getenv("OTREE_MAX_ORDER");
  if (env == nullptr || *env == '\0') return kDefaultMaxOrder;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || env[0] == '-') throw UsageError(std::string("OTREE_MAX_ORDER must be a nonnegative integer, got '") + env + "'");
  return v;
}

LinComb expression(Input& input, const std::string& arg, const std::string& what) {
  std::string text = input.line(arg);
  try {
    return parse_lincomb(text);
  } catch (const ParseError& e) {
    throw UsageError("invalid " + what + " '" + text + "': " + e.what());
  }
}

Forest forest_arg(Input& input, const std::string& arg, const std::string& what) {
  std::string text = input.line(arg);
  try {
    return parse_forest(text);
  } catch (const ParseError& e) {
    throw UsageError("invalid " + what + " '" + text + "': " + e.what());
  }
}

Series series_arg(Input& input, const std::string& arg) {
  std::string doc = input.document(arg);
  try {
    return series_from_json(nlohmann::json::parse(doc));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("invalid series JSON: " + std::string(e.what()));
  } catch (const ParseError& e) {
    throw UsageError("invalid series JSON: " + std::string(e.what()));
  } catch (const std::invalid_argument& e) {
    throw UsageError("invalid series JSON: " + std::string(e.what()));
  }
}

std::string slot(const Forest& f) { return f.empty() ? "1" : print_forest(f); }

void emit(std::ostream& out, const LinComb& a, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::text: out << format_text(a) << "\n"; break;
    case OutputFormat::json: out << to_json(a).dump() << "\n"; break;
    case OutputFormat::latex: out << format_latex(a) << "\n"; break;
  }
}

void emit(std::ostream& out, const TensorComb& a, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::text: out << format_text(a) << "\n"; break;
    case OutputFormat::json: out << to_json(a).dump() << "\n"; break;
    case OutputFormat::latex: out << format_latex(a) << "\n"; break;
  }
}

void emit(std::ostream& out, const Series& s, OutputFormat fmt) {
  LinComb terms;
  for (const auto& [f, c] : s.terms()) terms.add(f, c);
  switch (fmt) {
    case OutputFormat::text: out << "cutoff " << s.cutoff() << ": " << format_text(terms) << "\n"; break;
    case OutputFormat::json: out << to_json(s).dump() << "\n"; break;
    case OutputFormat::latex: out << format_latex(terms) << "\n"; break;
  }
}

void emit_integer(std::ostream& out, const mpz_class& v, OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    out << nlohmann::json::parse(v.get_str()).dump() << "\n";
  } else {
    out << v.get_str() << "\n";
  }
}

// Display width of UTF-8 text, one column per code point.
std::size_t width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char ch : s) {
    if ((ch & 0xC0) != 0x80) ++w;
  }
  return w;
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, width(s)), ' '); }

void emit_cuts(std::ostream& out, const Forest& f, const std::vector<Cut>& list, OutputFormat fmt) {
  static constexpr CutFamily kFamilies[] = {CutFamily::nodal, CutFamily::left, CutFamily::admissible,
                                            CutFamily::full_admissible, CutFamily::word};
  if (fmt == OutputFormat::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Cut& c = list[i];
      CutResult r = apply_cut(f, c);
      nlohmann::json fams = nlohmann::json::array();
      for (CutFamily fam : kFamilies) {
        if (in_family(c, fam)) fams.push_back(cut_family_name(fam));
      }
      nlohmann::json nodal = nlohmann::json::array();
      for (const NodalCut& n : c.nodal_cuts) nodal.push_back({{"node", format_address(n.node)}, {"count", n.count}});
      arr.push_back({{"index", i},
                     {"families", fams},
                     {"cut", nodal},
                     {"cut_part", to_json(r.cut_part)},
                     {"remainder", slot(r.remainder)}});
    }
    out << arr.dump() << "\n";
    return;
  }

  std::vector<std::array<std::string, 5>> rows;
  rows.push_back({"#", "families", "cut", "P", "R"});
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Cut& c = list[i];
    CutResult r = apply_cut(f, c);
    std::string fams;
    for (CutFamily fam : kFamilies) {
      if (!in_family(c, fam)) continue;
      if (!fams.empty()) fams += ",";
      fams += cut_family_name(fam);
    }
    bool latex = fmt == OutputFormat::latex;
    rows.push_back({std::to_string(i), fams, format_cut(c), latex ? format_latex(r.cut_part) : format_text(r.cut_part),
                    latex ? print_forest(r.remainder, PrintStyle::latex) : slot(r.remainder)});
  }
  if (fmt == OutputFormat::latex) {
    for (const auto& row : rows) out << row[0] << " & " << row[1] << " & " << row[2] << " & " << row[3] << " & " << row[4] << " \\\\\n";
    return;
  }
  std::array<std::size_t, 5> w{};
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < 5; ++k) w[k] = std::max(w[k], width(row[k]));
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t k = 0; k < 5; ++k) line += (k + 1 < 5 ? pad(row[k], w[k]) + "  " : row[k]);
    out << line << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Ordered rooted forests: grafting, shuffles, cuts, Hopf structure and series", "otree"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string format_name = "text";
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();

  Input input(in);
  std::map<CLI::App*, std::function<void(OutputFormat)>> handlers;
  auto binary = [&](const std::string& name, const std::string& help,
                    std::function<LinComb(const LinComb&, const LinComb&)> op) {
    auto* sub = app.add_subcommand(name, help);
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    sub->add_option("left", *a, "first operand (\"-\" reads a line from stdin)")->required();
    sub->add_option("right", *b, "second operand")->required();
    handlers[sub] = [&, a, b, op](OutputFormat fmt) {
      LinComb x = expression(input, *a, "left operand");
      LinComb y = expression(input, *b, "right operand");
      emit(out, op(x, y), fmt);
    };
  };
  binary("graft", "left grafting a[b]", [](const LinComb& a, const LinComb& b) { return graft(a, b); });
  binary("gl", "Grossman-Larson product a o b", [](const LinComb& a, const LinComb& b) { return gl_product(a, b); });
  binary("shuffle", "shuffle product", [](const LinComb& a, const LinComb& b) { return shuffle(a, b); });
  binary("concat", "concatenation product", [](const LinComb& a, const LinComb& b) { return concat(a, b); });

  std::size_t enum_order = 0;
  std::vector<std::string> colors{"0"};
  std::string filter_name = "all";
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "list the forests with N nodes");
  enumerate->add_option("N", enum_order, "number of nodes")->required();
  enumerate->add_option("--colors", colors, "comma-separated color tokens")->delimiter(',')->capture_default_str();
  enumerate->add_option("--filter", filter_name, "all, trees, tall or bushy")
      ->check(CLI::IsMember({"all", "trees", "tall", "bushy"}))
      ->capture_default_str();
  enumerate->add_flag("--count", count_only, "print only the number of forests");
  handlers[enumerate] = [&](OutputFormat fmt) {
    std::vector<Color> palette;
    for (const std::string& c : colors) {
      if (!is_valid_color_token(c)) throw UsageError("--colors: invalid color token '" + c + "'");
      palette.emplace_back(c);
    }
    ForestFilter filter = parse_forest_filter(filter_name);
    std::size_t bound = order_bound();
    if (count_only) {
      std::size_t n = count_forests(enum_order, palette, filter, bound);
      out << (fmt == OutputFormat::json ? nlohmann::json(n).dump() : std::to_string(n)) << "\n";
      return;
    }
    auto list = enumerate_forests(enum_order, palette, filter, bound);
    if (fmt == OutputFormat::json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const Forest& f : list) arr.push_back(slot(f));
      out << arr.dump() << "\n";
      return;
    }
    for (const Forest& f : list) out << (fmt == OutputFormat::latex ? print_forest(f, PrintStyle::latex) : slot(f)) << "\n";
  };

  std::string unary_arg;
  bool recursive = false;
  auto* coproduct = app.add_subcommand("coproduct", "coproduct Delta_N");
  coproduct->add_option("expr", unary_arg, "forest or linear combination")->required();
  coproduct->add_flag("--recursive", recursive, "use the recursive definition instead of cuts");
  handlers[coproduct] = [&](OutputFormat fmt) {
    LinComb a = expression(input, unary_arg, "expression");
    emit(out, recursive ? coproduct_N_recursive(a) : coproduct_N(a), fmt);
  };
  auto* antipode = app.add_subcommand("antipode", "antipode S_N");
  antipode->add_option("expr", unary_arg, "forest or linear combination")->required();
  antipode->add_flag("--recursive", recursive, "use the recursive definition instead of cuts");
  handlers[antipode] = [&](OutputFormat fmt) {
    LinComb a = expression(input, unary_arg, "expression");
    emit(out, recursive ? antipode_N_recursive(a) : antipode_N(a), fmt);
  };

  std::string family_name = "all";
  auto* cuts_cmd = app.add_subcommand("cuts", "list the left cuts of a forest");
  cuts_cmd->add_option("forest", unary_arg, "forest")->required();
  cuts_cmd->add_option("--family", family_name, "all, nlc, lc, alc, falc or wc")
      ->check(CLI::IsMember({"all", "nlc", "lc", "alc", "falc", "wc"}))
      ->capture_default_str();
  handlers[cuts_cmd] = [&](OutputFormat fmt) {
    Forest f = forest_arg(input, unary_arg, "forest");
    std::size_t bound = order_bound();
    std::vector<Cut> list;
    if (family_name == "all") {
      list = cuts(f, CutFamily::left, bound);
      for (Cut& c : cuts(f, CutFamily::full_admissible, bound)) {
        if (c.is_full) list.push_back(std::move(c));
      }
      std::sort(list.begin(), list.end(),
                [](const Cut& a, const Cut& b) { return a.nodal_cuts < b.nodal_cuts; });
    } else {
      list = cuts(f, parse_cut_family(family_name), bound);
    }
    emit_cuts(out, f, list, fmt);
  };

  auto* symmetrize = app.add_subcommand("symmetrize", "symmetrization Omega");
  symmetrize->add_option("expr", unary_arg, "forest or linear combination")->required();
  handlers[symmetrize] = [&](OutputFormat fmt) { emit(out, omega(expression(input, unary_arg, "expression")), fmt); };

  auto* sigma_cmd = app.add_subcommand("sigma", "symmetry coefficient");
  sigma_cmd->add_option("forest", unary_arg, "forest")->required();
  handlers[sigma_cmd] = [&](OutputFormat fmt) { emit_integer(out, sigma(forest_arg(input, unary_arg, "forest")), fmt); };

  auto* pi_cmd = app.add_subcommand("pi", "number of orderings times the symmetry coefficient");
  pi_cmd->add_option("forest", unary_arg, "forest")->required();
  handlers[pi_cmd] = [&](OutputFormat fmt) { emit_integer(out, pi(forest_arg(input, unary_arg, "forest")), fmt); };

  auto* forget_cmd = app.add_subcommand("forget", "canonical representative of the unordered class");
  forget_cmd->add_option("expr", unary_arg, "forest or linear combination")->required();
  handlers[forget_cmd] = [&](OutputFormat fmt) {
    LinComb reps;
    for (const auto& [u, c] : to_unordered(expression(input, unary_arg, "expression"))) reps.add(u.representative(), c);
    emit(out, reps, fmt);
  };

  std::string series_a, series_b;
  auto* compose = app.add_subcommand("series-compose", "GL composition of two series");
  compose->add_option("alpha", series_a, "series JSON, file name or \"-\"")->required();
  compose->add_option("beta", series_b, "series JSON, file name or \"-\"")->required();
  handlers[compose] = [&](OutputFormat fmt) {
    Series a = series_arg(input, series_a);
    Series b = series_arg(input, series_b);
    emit(out, compose_gl(a, b), fmt);
  };
  auto* sexp = app.add_subcommand("series-exp", "exponential of a logarithmic series");
  sexp->add_option("alpha", series_a, "series JSON, file name or \"-\"")->required();
  handlers[sexp] = [&](OutputFormat fmt) { emit(out, exp_gl(series_arg(input, series_a)), fmt); };
  auto* slog = app.add_subcommand("series-log", "logarithm of an exponential series");
  slog->add_option("beta", series_a, "series JSON, file name or \"-\"")->required();
  handlers[slog] = [&](OutputFormat fmt) { emit(out, log_gl(series_arg(input, series_a)), fmt); };
  auto* scheck = app.add_subcommand("series-check", "test the logarithmic and exponential criteria");
  scheck->add_option("alpha", series_a, "series JSON, file name or \"-\"")->required();
  handlers[scheck] = [&](OutputFormat fmt) {
    Series a = series_arg(input, series_a);
    bool l = is_logarithmic(a);
    bool e = is_exponential(a);
    if (fmt == OutputFormat::json) {
      out << nlohmann::json{{"logarithmic", l}, {"exponential", e}}.dump() << "\n";
    } else {
      out << "logarithmic: " << (l ? "yes" : "no") << "\nexponential: " << (e ? "yes" : "no") << "\n";
    }
  };

  std::size_t tables_order = 4;
  auto* tables = app.add_subcommand("tables", "reference tables of products, coproducts and antipodes");
  tables->add_option("--max-order", tables_order, "largest total order")->capture_default_str();
  handlers[tables] = [&](OutputFormat fmt) {
    std::size_t bound = order_bound();
    if (tables_order > bound) throw BoundExceeded(tables_order, bound);
    out << render_tables(tables_order, fmt);
  };

  std::size_t verify_order = 5;
  bool failed = false;
  auto* verify = app.add_subcommand("verify", "check the algebraic laws exhaustively");
  verify->add_option("--max-order", verify_order, "largest order checked")->capture_default_str();
  handlers[verify] = [&](OutputFormat fmt) {
    std::size_t bound = order_bound();
    if (verify_order + 1 > bound) throw BoundExceeded(verify_order + 1, bound);
    nlohmann::json arr = nlohmann::json::array();
    verify_all(verify_order, [&](const LawCheck& c) {
      failed = failed || !c.ok();
      if (fmt == OutputFormat::json) {
        arr.push_back({{"law", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"first_failure", c.first_failure}});
        return;
      }
      out << (c.ok() ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
      if (!c.ok()) out << ": " << c.failures << " failures, first at " << c.first_failure;
      out << "\n";
    });
    if (fmt == OutputFormat::json) out << arr.dump(2) << "\n";
  };

  std::vector<std::string> argv_store{"otree"};
  for (const std::string& a : args) {
    // a negative expression such as "-()" is an operand, not a flag
    bool operand = a.size() > 1 && a[0] == '-' && a[1] != '-' &&
                   (a.find('(') != std::string::npos || std::isdigit(static_cast<unsigned char>(a[1])));
    argv_store.push_back(operand ? " " + a : a);
  }
  std::vector<const char*> argv;
  for (const std::string& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return usage_error;
  }

  try {
    OutputFormat fmt = parse_output_format(format_name);
    CLI::App* chosen = app.get_subcommands().front();
    handlers.at(chosen)(fmt);
    out.flush();
    return failed ? domain_error : ok;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << " (raise it with OTREE_MAX_ORDER)\n";
    return domain_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return domain_error;
  }
}

}  // namespace otree::cli
