#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "golden_tables.hpp"
#include "otree/enumerate.hpp"
#include "otree/hopf.hpp"
#include "otree/laws.hpp"
#include "support.hpp"

using namespace otree;
using testing::F;
using testing::L;
using testing::T;

TEST_CASE("reference coproduct rows") {
  for (const auto& row : golden::coproducts) {
    CAPTURE(row.forest);
    Forest f = F(row.forest.empty() ? "1" : row.forest);
    CHECK(coproduct_N(f) == T(row.value));
    CHECK(coproduct_N_recursive(f) == T(row.value));
  }
}

TEST_CASE("reference antipode rows") {
  for (const auto& row : golden::antipodes) {
    CAPTURE(row.forest);
    Forest f = F(row.forest.empty() ? "1" : row.forest);
    CHECK(antipode_N(f) == L(row.value));
    CHECK(antipode_N_recursive(f) == L(row.value));
    CHECK(antipode_N_cut_recursive(f) == L(row.value));
  }
}

TEST_CASE("coproduct and antipode against the duality oracle") {
  std::map<std::string, oracle::Comb> memo;
  for (const Forest& f : enumerate_forests_upto(5)) {
    CAPTURE(testing::key(f));
    oracle::F of = testing::to_oracle(f);
    CHECK(testing::to_oracle(coproduct_N(f)) == oracle::coproduct(of));
    CHECK(testing::to_oracle(antipode_N(f)) == oracle::antipode(of, memo));
  }
  for (const Forest& f : enumerate_forests_upto(3, {Color("u"), Color("v")})) {
    CAPTURE(testing::key(f));
    CHECK(testing::to_oracle(coproduct_N(f)) == oracle::coproduct(testing::to_oracle(f), {"u", "v"}));
  }
}

TEST_CASE("recursive and cut-based forms agree through order 6") {
  for (const Forest& f : enumerate_forests_upto(6)) {
    CAPTURE(testing::key(f));
    CHECK(coproduct_N(f) == coproduct_N_recursive(f));
    LinComb s = antipode_N(f);
    CHECK(s == antipode_N_recursive(f));
    CHECK(s == antipode_N_cut_recursive(f));
  }
}

TEST_CASE("free associative structure") {
  CHECK(coproduct_F(F("()(())")) == T("()(())⊗1 + ()⊗(()) + 1⊗()(())"));
  CHECK(reversal_SF(F("()(())")) == L("(())()"));
  CHECK(reversal_SF(F("()(())()")) == L("-()(())()"));
  CHECK(reversal_SF(Forest()) == unit_element());
  for (const Forest& f : enumerate_forests_upto(4)) {
    oracle::F of = testing::to_oracle(f);
    oracle::TComb expected;
    for (std::size_t k = 0; k <= of.size(); ++k) {
      oracle::F left(of.begin(), of.begin() + static_cast<long>(k));
      oracle::F right(of.begin() + static_cast<long>(k), of.end());
      oracle::add(expected, {oracle::key(left), oracle::key(right)}, 1);
    }
    CHECK(testing::to_oracle(coproduct_F(f)) == expected);
  }
}

TEST_CASE("unit, counit and convolution") {
  CHECK(counit(L("3 + ()")) == 3);
  CHECK(unit(Rational(2)) == L("2"));
  CHECK(otree::apply(antipode_N_map(), L("() + (())")) == L("-() + 2·()() - (())"));
  CHECK(apply_tensor(identity_map(), antipode_N_map(), T("()⊗()")) == T("-()⊗()"));
  // I * I doubles primitive elements
  CHECK(convolution(identity_map(), identity_map(), L("()"), HopfStructure::N) == L("2·()"));
  CHECK(coproduct_N_left_twice(L("()")) == coproduct_N_right_twice(L("()")));
  CHECK(coproduct_N_left_twice(L("()")).size() == 3);
}

TEST_CASE("Hopf laws") {
  for (const LawCheck& c : check_hopf_laws(5)) {
    CAPTURE(c.name);
    CAPTURE(c.first_failure);
    CHECK(c.ok());
  }
}
