#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "golden_tables.hpp"
#include "otree/enumerate.hpp"
#include "otree/grafting.hpp"
#include "otree/laws.hpp"
#include "support.hpp"

using namespace otree;
using testing::F;
using testing::L;

TEST_CASE("reference grafting and GL rows") {
  for (const auto& row : golden::grafting) {
    CAPTURE(row.left);
    CAPTURE(row.right);
    CHECK(graft(F(row.left), F(row.right)) == L(row.graft));
    CHECK(gl_product(F(row.left), F(row.right)) == L(row.gl));
  }
}

TEST_CASE("grafted trees become first children") {
  CHECK(graft(F("()"), F("(())")) == L("(()()) + ((()))"));
  CHECK(graft(F("a()"), F("b(c())")) == L("b(a()c()) + b(c(a()))"));
  CHECK(graft(F("a()b()"), F("()")) == L("(a()b())"));
}

TEST_CASE("units and zeros") {
  CHECK(graft(Forest(), F("(())")) == L("(())"));
  CHECK(graft(F("()"), Forest()).is_zero());
  CHECK(gl_product(Forest(), F("()()")) == L("()()"));
  CHECK(gl_product(F("()()"), Forest()) == L("()()"));
  CHECK(gl_product(L("2·() + 1"), L("()")) == L("2·()() + 2·(()) + ()"));
}

TEST_CASE("grafting matches the brute-force attachment oracle") {
  auto all = enumerate_forests_upto(5);
  for (const Forest& a : all) {
    for (const Forest& b : all) {
      if (a.order() + b.order() > 5) continue;
      CAPTURE(testing::key(a));
      CAPTURE(testing::key(b));
      oracle::F oa = testing::to_oracle(a), ob = testing::to_oracle(b);
      CHECK(testing::to_oracle(graft(a, b)) == oracle::graft(oa, ob));
      CHECK(testing::to_oracle(gl_product(a, b)) == oracle::gl(oa, ob));
    }
  }
  auto colored = enumerate_forests_upto(3, {Color("x"), Color("y")});
  for (const Forest& a : colored) {
    for (const Forest& b : colored) {
      oracle::F oa = testing::to_oracle(a), ob = testing::to_oracle(b);
      CHECK(testing::to_oracle(gl_product(a, b)) == oracle::gl(oa, ob));
    }
  }
}

TEST_CASE("direct grafting enumerates every attachment") {
  GraftResult r = graft_direct(F("()()"), F("(())"));
  CHECK(r.term_count == 4);
  CHECK(r.value == graft(F("()()"), F("(())")));
  auto all = enumerate_forests_upto(5);
  for (const Forest& a : all) {
    for (const Forest& b : all) {
      if (a.order() + b.order() > 5) continue;
      GraftResult d = graft_direct(a, b);
      CHECK(d.value == graft(a, b));
      std::size_t expected = b.empty() ? (a.empty() ? 1 : 0) : 1;
      for (std::size_t i = 0; i < a.degree(); ++i) expected *= b.order();
      CHECK(d.term_count == expected);
    }
  }
}

TEST_CASE("grafting laws") {
  for (const LawCheck& c : check_grafting_laws(5)) {
    CAPTURE(c.name);
    CAPTURE(c.first_failure);
    CHECK(c.ok());
    CHECK(c.cases > 0);
  }
}
