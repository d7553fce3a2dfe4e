#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "otree/butcher.hpp"
#include "otree/enumerate.hpp"
#include "otree/hopf.hpp"
#include "otree/laws.hpp"
#include "support.hpp"

using namespace otree;
using testing::F;
using testing::L;

namespace {

UForest U(std::string_view s) { return UForest(F(s)); }

ULinComb UL(std::initializer_list<std::pair<std::string_view, Rational>> terms) {
  ULinComb out;
  for (const auto& [s, c] : terms) out.add(U(s), c);
  return out;
}

UTensorComb UT(std::initializer_list<std::tuple<std::string_view, std::string_view, Rational>> terms) {
  UTensorComb out;
  for (const auto& [a, b, c] : terms) out.add(UForestPair(U(a), U(b)), c);
  return out;
}

}  // namespace

TEST_CASE("symmetrization against the orbit oracle") {
  for (const Forest& f : enumerate_forests_upto(5)) {
    CAPTURE(testing::key(f));
    CHECK(testing::to_oracle(omega(f)) == oracle::omega(testing::to_oracle(f)));
  }
  for (const Forest& f : enumerate_forests_upto(3, {Color("p"), Color("q")})) {
    CHECK(testing::to_oracle(omega(f)) == oracle::omega(testing::to_oracle(f)));
  }
  CHECK(omega(F("()()")) == L("2·()()"));
  CHECK(omega(F("()(())")) == L("()(()) + (())()"));
  CHECK(omega(F("(()())")) == L("2·(()())"));
  CHECK(omega(Forest()) == unit_element());
}

TEST_CASE("inverse symmetrization divides by pi") {
  CHECK(omega_inv(L("()()")) == UL({{"()()", Rational(1, 2)}}));
  CHECK(omega_inv(L("()(()) + (())()")) == UL({{"()(())", 1}}));
  CHECK(omega_inv(omega(U("((())())"))) == UL({{"((())())", 1}}));
}

TEST_CASE("unordered coproduct") {
  CHECK(coproduct_C(U("()")) == UT({{"()", "1", 1}, {"1", "()", 1}}));
  CHECK(coproduct_C(U("(()())")) ==
        UT({{"(()())", "1", 1}, {"()", "(())", 2}, {"()()", "()", 1}, {"1", "(()())", 1}}));
  CHECK(coproduct_C(U("((()))")) ==
        UT({{"((()))", "1", 1}, {"()", "(())", 1}, {"(())", "()", 1}, {"1", "((()))", 1}}));
  CHECK(coproduct_C(U("()()")) == UT({{"()()", "1", 1}, {"()", "()", 2}, {"1", "()()", 1}}));
  for (const Forest& f : enumerate_forests_upto(5)) {
    UForest u(f);
    CHECK(coproduct_C(u) == coproduct_C_via_omega(u));
  }
}

TEST_CASE("unordered antipode") {
  CHECK(antipode_C(U("()")) == UL({{"()", -1}}));
  CHECK(antipode_C(U("(())")) == UL({{"(())", -1}, {"()()", 1}}));
  CHECK(antipode_C(U("(()())")) == UL({{"(()())", -1}, {"()(())", 2}, {"()()()", -1}}));
  for (const Forest& f : enumerate_forests_upto(5)) {
    UForest u(f);
    CHECK(antipode_C(u) == antipode_C_via_omega(u));
    CHECK(antipode_C(antipode_C(ULinComb(u))) == ULinComb(u));
  }
}

TEST_CASE("commutative product") {
  CHECK(product_C(U("(())"), U("()")) == U("()(())"));
  CHECK(product_C(UL({{"()", 1}, {"(())", 2}}), UL({{"()", 1}})) == UL({{"()()", 1}, {"()(())", 2}}));
  CHECK(counit_C(UL({{"1", 4}, {"()", 1}})) == 4);
  CHECK(to_unordered(L("()(()) + (())()")) == UL({{"()(())", 2}}));
}

TEST_CASE("symmetrization is a Hopf homomorphism") {
  for (const LawCheck& c : check_butcher_laws(5)) {
    CAPTURE(c.name);
    CAPTURE(c.first_failure);
    CHECK(c.ok());
  }
}

TEST_CASE("images of distinct classes are distinct") {
  std::set<LinComb::map_type> images;
  std::set<UForest> classes;
  for (const Forest& f : enumerate_forests_upto(5)) {
    if (classes.insert(UForest(f)).second) CHECK(images.insert(omega(f).terms()).second);
  }
  CHECK(classes.size() == 1 + 1 + 2 + 4 + 9 + 20);
}
