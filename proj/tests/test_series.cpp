#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "golden_tables.hpp"
#include "otree/enumerate.hpp"
#include "otree/grafting.hpp"
#include "otree/laws.hpp"
#include "otree/series.hpp"
#include "otree/symmetry.hpp"
#include "support.hpp"

using namespace otree;
using testing::F;
using testing::L;

namespace {

// Tree factorial of the nested oracle type: gamma(t) = |t| prod gamma(children).
long long gamma(const oracle::T& t) {
  long long g = static_cast<long long>(oracle::size(t));
  for (const oracle::T& k : t.kids) g *= gamma(k);
  return g;
}

}  // namespace

TEST_CASE("series basics") {
  Series s(3);
  s.set(F("()"), 2);
  s.set(F("(())"), Rational(1, 2));
  CHECK(s(F("()")) == 2);
  CHECK(s(F("()()")) == 0);
  CHECK(s(L("3·() + 2·(())")) == 7);
  CHECK_THROWS_AS(s.set(F("()()()()"), 1), std::out_of_range);
  CHECK_THROWS_AS(s(F("((())())")), std::out_of_range);
  s.set(F("()"), 0);
  CHECK(s.terms().size() == 1);
  CHECK(counit_series(2)(Forest()) == 1);
  CHECK(truncate(s, 1).terms().empty());
  CHECK(from_lincomb(L("() + 2·(())"), 2)(F("(())")) == 2);
  CHECK_THROWS_AS(compose_gl(Series(2), Series(3)), CutoffMismatch);
  CHECK_THROWS_AS(Series(2) + Series(3), CutoffMismatch);
}

TEST_CASE("composition of point masses reproduces the GL rows") {
  for (const auto& row : golden::grafting) {
    Series a = delta_series(F(row.left), 4);
    Series b = delta_series(F(row.right), 4);
    CHECK(compose_gl(a, b) == from_lincomb(L(row.gl), 4));
  }
}

TEST_CASE("worked composition at ()(())") {
  // (a o b)(()(())) = a(()(()))b(1) + 2a(()())b(()) + a(())b((())) + a(())b(()()) + a(1)b(()(()))
  std::map<std::pair<std::string, std::string>, int> expected = {
      {{"()(())", "1"}, 1}, {{"()()", "()"}, 2}, {{"()", "(())"}, 1}, {{"()", "()()"}, 1}, {{"1", "()(())"}, 1}};
  Forest target = F("()(())");
  auto all = enumerate_forests_upto(3);
  for (const Forest& a : all) {
    for (const Forest& b : all) {
      if (a.order() + b.order() != 3) continue;
      Rational got = compose_gl(delta_series(a, 3), delta_series(b, 3))(target);
      auto it = expected.find({testing::key(a), testing::key(b)});
      CHECK(got == (it == expected.end() ? 0 : it->second));
    }
  }
}

TEST_CASE("inverse and domain errors") {
  Series a = counit_series(3);
  a.set(F("()"), 5);
  CHECK_THROWS_AS(inverse(Series(3)), SeriesDomainError);
  CHECK_THROWS_AS(exp_gl(a), SeriesDomainError);
  CHECK_THROWS_AS(log_gl(delta_series(F("()"), 3)), SeriesDomainError);
  Series flow = exp_gl(Rational(5) * delta_series(F("()"), 3));
  Series inv = inverse(flow);
  CHECK(compose_gl(flow, inv) == counit_series(3));
  CHECK(compose_gl(inv, flow) == counit_series(3));
}

TEST_CASE("exponential of the single node is the exact flow") {
  Series flow = exp_gl(delta_series(F("()"), 4));
  CHECK(is_exponential(flow));
  CHECK(flow(F("(())")) == Rational(1, 2));
  CHECK(flow(F("(()())")) == Rational(1, 6));
  // summed over classes, the coefficients become 1 / gamma
  USeries b = omega_star(flow);
  std::set<UForest> classes;
  for (const Forest& f : enumerate_forests_upto(4)) {
    UForest u(f);
    if (!classes.insert(u).second) continue;
    long long g = 1;
    for (const oracle::T& t : testing::to_oracle(u.representative())) g *= gamma(t);
    CAPTURE(testing::key(u.representative()));
    CHECK(b(u) == Rational(mpz_class(1), mpz_class(static_cast<long>(g))));
  }
}

TEST_CASE("logarithmic and exponential criteria") {
  Series lie = from_lincomb(L("()(()) - (())()"), 3);
  CHECK(is_logarithmic(lie));
  CHECK_FALSE(is_logarithmic(from_lincomb(L("()()"), 3)));
  CHECK_FALSE(is_exponential(lie));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 5; ++i) {
    Series a = random_logarithmic_series(4, rng);
    CHECK(is_logarithmic(a));
    Series e = exp_gl(a);
    CHECK(is_exponential(e));
    CHECK(log_gl(e) == a);
  }
}

TEST_CASE("JSON round trip") {
  std::mt19937_64 rng(11);
  Series a = exp_gl(random_logarithmic_series(3, rng));
  nlohmann::json j = to_json(a);
  CHECK(j["cutoff"] == 3);
  CHECK(series_from_json(j) == a);
  CHECK(series_from_json(nlohmann::json::parse(R"j({"cutoff":2,"terms":[{"coeff":"1/2","forest":"()()"}]})j"))(F("()()")) ==
        Rational(1, 2));
}

TEST_CASE("series laws") {
  for (const LawCheck& c : check_series_laws(4, 99, 4)) {
    CAPTURE(c.name);
    CAPTURE(c.first_failure);
    CHECK(c.ok());
  }
}
