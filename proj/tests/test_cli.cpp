#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "golden_tables.hpp"
#include "otree/cli.hpp"
#include "otree/tables.hpp"
#include "support.hpp"

using testing::F;
using testing::L;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  int code = otree::cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("products") {
  CHECK(run({"gl", "()", "()"}).out == "()() + (())\n");
  CHECK(run({"graft", "()", "(())"}).out == "(()()) + ((()))\n");
  CHECK(run({"shuffle", "()", "()"}).out == "2·()()\n");
  CHECK(run({"concat", "() + (())", "()"}).out == "()() + (())()\n");
  CHECK(run({"gl", "-", "-"}, "()\n\n(())\n").out == "()(()) + (()()) + ((()))\n");
}

TEST_CASE("antipode and coproduct") {
  Run r = run({"antipode", "(())", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out) ==
        nlohmann::json::parse(R"j([{"coeff":"2","forest":"()()"},{"coeff":"-1","forest":"(())"}])j"));
  CHECK(run({"antipode", "--recursive", "((()))"}).out == "-6·()()() + 2·()(()) + 2·(())() - ((()))\n");
  CHECK(run({"antipode", "-()"}).out == "()\n");
  CHECK(run({"coproduct", "(())"}).out == "1⊗(()) + ()⊗() + (())⊗1\n");
  CHECK(run({"coproduct", "(())", "--recursive", "--format", "latex"}).code == 0);
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "3", "--count"}).out == "5\n");
  CHECK(run({"enumerate", "2"}).out == "()()\n(())\n");
  CHECK(run({"enumerate", "2", "--colors", "a,b", "--count"}).out == "8\n");
  CHECK(run({"enumerate", "4", "--filter", "tall", "--count"}).out == "8\n");
  CHECK(run({"enumerate", "1", "--format", "json"}).out == "[\"()\"]\n");
  Run r = run({"enumerate", "11", "--count"});
  CHECK(r.code == 1);
  CHECK(r.err.find("OTREE_MAX_ORDER") != std::string::npos);
}

TEST_CASE("order bound from the environment") {
  setenv("OTREE_MAX_ORDER", "12", 1);
  CHECK(run({"enumerate", "11", "--count"}).out == "58786\n");
  setenv("OTREE_MAX_ORDER", "2", 1);
  CHECK(run({"enumerate", "3", "--count"}).code == 1);
  setenv("OTREE_MAX_ORDER", "many", 1);
  CHECK(run({"enumerate", "3", "--count"}).code == 2);
  unsetenv("OTREE_MAX_ORDER");
}

TEST_CASE("cuts table") {
  Run r = run({"cuts", "()((()))"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) ++n;
  CHECK(n == 9);
  Run j = run({"cuts", "()((()))", "--family", "falc", "--format", "json"});
  auto arr = nlohmann::json::parse(j.out);
  CHECK(arr.size() == 7);
  CHECK(arr[0]["remainder"] == "()((()))");
  Run w = run({"cuts", "()((()))", "--family", "wc", "--format", "json"});
  CHECK(nlohmann::json::parse(w.out).size() == 3);
}

TEST_CASE("symmetry commands") {
  CHECK(run({"sigma", "(()())"}).out == "2\n");
  CHECK(run({"pi", "()(())"}).out == "2\n");
  CHECK(run({"forget", "((())())"}).out == "(()(()))\n");
  CHECK(run({"symmetrize", "()(())"}).out == "()(()) + (())()\n");
  CHECK(run({"sigma", "()()", "--format", "json"}).out == "2\n");
}

TEST_CASE("series commands") {
  std::string alpha = R"j({"cutoff":3,"terms":[{"coeff":"1","forest":"()"}]})j";
  Run e = run({"series-exp", alpha, "--format", "json"});
  REQUIRE(e.code == 0);
  Run l = run({"series-log", "-"}, e.out);
  CHECK(l.out == "cutoff 3: ()\n");
  Run c = run({"series-check", "-", "--format", "json"}, e.out);
  CHECK(nlohmann::json::parse(c.out) == nlohmann::json::parse(R"j({"logarithmic":false,"exponential":true})j"));
  Run comp = run({"series-compose", e.out, e.out});
  CHECK(comp.code == 0);
  CHECK(comp.out.rfind("cutoff 3: 1 + 2·()", 0) == 0);
  CHECK(run({"series-log", alpha}).code == 1);
  CHECK(run({"series-exp", "{\"cutoff\":"}).code == 2);
  CHECK(run({"series-exp", "/nonexistent/file.json"}).code == 2);
}

TEST_CASE("usage errors") {
  Run r = run({"gl", "()"});
  CHECK(r.code == 2);
  Run bad_flag = run({"gl", "()", "()", "--frobnicate"});
  CHECK(bad_flag.code == 2);
  CHECK(bad_flag.err.find("--frobnicate") != std::string::npos);
  Run bad_format = run({"gl", "()", "()", "--format", "xml"});
  CHECK(bad_format.code == 2);
  CHECK(bad_format.err.find("--format") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"transmogrify"}).code == 2);
  Run parse = run({"gl", "()", "(()"});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("at byte 0") != std::string::npos);
  CHECK(run({"gl", "-", "-"}, "()\n").code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("tables") {
  Run a = run({"tables", "--max-order", "4"});
  Run b = run({"tables", "--max-order", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(run({"tables", "--format", "json"}).out);
  CHECK(j["grafting"].size() == 19);
  CHECK(j["shuffle"].size() == 11);
  CHECK(j["coproduct"].size() == 23);
  CHECK(j["antipode"].size() == 23);
  CHECK(run({"tables", "--format", "latex"}).code == 0);
  CHECK(run({"tables", "--max-order", "11"}).code == 1);
}

TEST_CASE("table rows agree with the reference data") {
  auto products = otree::product_table(4);
  REQUIRE(products.size() == golden::grafting.size());
  for (const auto& row : golden::grafting) {
    auto it = std::find_if(products.begin(), products.end(),
                           [&](const auto& p) { return p.left == F(row.left) && p.right == F(row.right); });
    REQUIRE(it != products.end());
    CHECK(it->graft == L(row.graft));
    CHECK(it->gl == L(row.gl));
  }
  auto shuffles = otree::shuffle_table(4);
  REQUIRE(shuffles.size() == golden::shuffles.size());
  for (const auto& row : golden::shuffles) {
    auto it = std::find_if(shuffles.begin(), shuffles.end(),
                           [&](const auto& p) { return p.left == F(row.left) && p.right == F(row.right); });
    REQUIRE(it != shuffles.end());
    CHECK(it->shuffle == L(row.shuffle));
  }
  CHECK(otree::coproduct_table(4).size() == 23);
  CHECK(otree::antipode_table(4).front().antipode == otree::unit_element());
}

TEST_CASE("verify") {
  Run r = run({"verify", "--max-order", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
  auto j = nlohmann::json::parse(run({"verify", "--max-order", "2", "--format", "json"}).out);
  CHECK(j.size() > 40);
}
