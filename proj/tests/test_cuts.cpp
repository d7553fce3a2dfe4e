#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "otree/cuts.hpp"
#include "otree/enumerate.hpp"
#include "otree/laws.hpp"
#include "support.hpp"

using namespace otree;
using testing::F;
using testing::L;

namespace {

struct ExpectedCut {
  std::vector<std::string_view> pieces;
  std::string_view remainder;
  std::set<CutFamily> families;
};

constexpr auto NLC = CutFamily::nodal;
constexpr auto LC = CutFamily::left;
constexpr auto ALC = CutFamily::admissible;
constexpr auto FALC = CutFamily::full_admissible;
constexpr auto WC = CutFamily::word;

using Signature = std::tuple<oracle::Comb, std::string, std::set<CutFamily>>;

Signature expected_signature(const ExpectedCut& e) {
  oracle::Comb p{{"1", 1}};
  for (std::string_view piece : e.pieces) p = oracle::shuffle(p, oracle::Comb{{std::string(piece), 1}});
  return {p, std::string(e.remainder), e.families};
}

std::multiset<Signature> library_signatures(const Forest& f) {
  std::vector<Cut> all = left_cuts(f);
  for (const Cut& c : full_admissible_left_cuts(f)) {
    if (c.is_full) all.push_back(c);
  }
  std::multiset<Signature> out;
  for (const Cut& c : all) {
    CutResult r = apply_cut(f, c);
    std::set<CutFamily> fams;
    for (CutFamily fam : {NLC, LC, ALC, FALC, WC}) {
      if (in_family(c, fam)) fams.insert(fam);
    }
    out.insert({testing::to_oracle(r.cut_part), testing::key(r.remainder), fams});
  }
  return out;
}

// Brute-force cut counts on the nested tree type. A cut chooses, for every
// node, how many leftmost children to sever; it is admissible when no
// severing happens inside an already severed subtree.
struct CutCounts {
  std::size_t nodal = 0, left = 0, admissible = 0;
};

void choices(const oracle::F& f, std::vector<const oracle::T*>& nodes) {
  for (const oracle::T& t : f) {
    nodes.push_back(&t);
    choices(t.kids, nodes);
  }
}

bool any_cut_inside(const oracle::T& t, const std::map<const oracle::T*, std::size_t>& count) {
  for (const oracle::T& k : t.kids) {
    if (count.at(&k) > 0 || any_cut_inside(k, count)) return true;
  }
  return false;
}

CutCounts brute_counts(const oracle::F& f) {
  std::vector<const oracle::T*> nodes;
  choices(f, nodes);
  CutCounts out;
  for (const oracle::T* n : nodes) out.nodal += n->kids.size();
  std::vector<std::size_t> pick(nodes.size(), 0);
  while (true) {
    std::map<const oracle::T*, std::size_t> count;
    for (std::size_t i = 0; i < nodes.size(); ++i) count[nodes[i]] = pick[i];
    ++out.left;
    bool admissible = true;
    for (std::size_t i = 0; i < nodes.size() && admissible; ++i) {
      for (std::size_t c = 0; c < pick[i]; ++c) {
        if (count.at(&nodes[i]->kids[c]) > 0 || any_cut_inside(nodes[i]->kids[c], count)) admissible = false;
      }
    }
    if (admissible) ++out.admissible;
    std::size_t i = 0;
    while (i < nodes.size() && ++pick[i] > nodes[i]->kids.size()) pick[i++] = 0;
    if (i == nodes.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("cuts of the example word ()((()))") {
  Forest w = F("()((()))");
  CHECK(nodal_left_cuts(w).size() == 2);
  CHECK(left_cuts(w).size() == 4);
  CHECK(admissible_left_cuts(w).size() == 3);
  CHECK(full_admissible_left_cuts(w).size() == 7);
  CHECK(word_cuts(w).size() == 3);

  std::vector<ExpectedCut> rows = {
      {{}, "()((()))", {LC, ALC, FALC, WC}},
      {{"()"}, "()(())", {NLC, LC, ALC, FALC}},
      {{"(())"}, "()()", {NLC, LC, ALC, FALC}},
      {{"()", "()"}, "()()", {LC}},
      {{"()"}, "((()))", {FALC, WC}},
      {{"()", "()"}, "(())", {FALC}},
      {{"()", "(())"}, "()", {FALC}},
      {{"()((()))"}, "1", {FALC, WC}},
  };
  std::multiset<Signature> expected;
  for (const auto& r : rows) expected.insert(expected_signature(r));
  CHECK(library_signatures(w) == expected);
}

TEST_CASE("cuts of the example tree ((()(())))") {
  Forest t = F("((()(())))");
  CHECK(nodal_left_cuts(t).size() == 4);
  CHECK(left_cuts(t).size() == 12);
  CHECK(admissible_left_cuts(t).size() == 6);
  CHECK(full_admissible_left_cuts(t).size() == 7);
  CHECK(word_cuts(t).size() == 2);

  std::vector<ExpectedCut> rows = {
      {{}, "((()(())))", {LC, ALC, FALC, WC}},
      {{"()"}, "((()()))", {NLC, LC, ALC, FALC}},
      {{"()"}, "(((())))", {NLC, LC, ALC, FALC}},
      {{"()(())"}, "(())", {NLC, LC, ALC, FALC}},
      {{"(()(()))"}, "()", {NLC, LC, ALC, FALC}},
      {{"()", "()"}, "((()))", {LC, ALC, FALC}},
      {{"()()", "()"}, "(())", {LC}},
      {{"(()())", "()"}, "()", {LC}},
      {{"((()))", "()"}, "()", {LC}},
      {{"()", "()(())"}, "()", {LC}},
      {{"(())", "()", "()"}, "()", {LC}},
      {{"()", "()()", "()"}, "()", {LC}},
      {{"((()(())))"}, "1", {FALC, WC}},
  };
  std::multiset<Signature> expected;
  for (const auto& r : rows) expected.insert(expected_signature(r));
  CHECK(library_signatures(t) == expected);
}

TEST_CASE("cut counts against brute force") {
  for (const Forest& f : enumerate_forests_upto(6)) {
    CAPTURE(testing::key(f));
    oracle::F of = testing::to_oracle(f);
    CutCounts c = brute_counts(of);
    CutCounts rooted = brute_counts(oracle::F{oracle::T{"@", of}});
    CHECK(nodal_left_cuts(f).size() == c.nodal);
    CHECK(left_cuts(f).size() == c.left);
    CHECK(admissible_left_cuts(f).size() == c.admissible);
    CHECK(full_admissible_left_cuts(f).size() == rooted.admissible);
    CHECK(word_cuts(f).size() == f.degree() + 1);
  }
}

TEST_CASE("cut lists are ordered and duplicate free") {
  for (const Forest& f : enumerate_forests_upto(5)) {
    for (CutFamily fam : {NLC, LC, ALC, FALC, WC}) {
      auto list = cuts(f, fam);
      for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1].nodal_cuts < list[i].nodal_cuts);
      for (const Cut& c : list) CHECK(in_family(c, fam));
      std::multiset<std::pair<oracle::Comb, std::string>> a, b;
      for (const Cut& c : list) {
        CutResult r = apply_cut(f, c);
        a.insert({testing::to_oracle(r.cut_part), testing::key(r.remainder)});
      }
      for (const CutResult& r : cut_results(f, fam)) b.insert({testing::to_oracle(r.cut_part), testing::key(r.remainder)});
      CHECK(a == b);
    }
  }
}

TEST_CASE("cut descriptions") {
  Forest w = F("()((()))");
  Cut c;
  c.nodal_cuts = {NodalCut{{}, 1}, NodalCut{{1, 0}, 1}};
  c.is_full = true;
  c.is_word = false;
  CHECK(format_cut(c) == "{root:1, 1.0:1}");
  CHECK(format_address({}) == "root");
  CutResult r = apply_cut(w, c);
  CHECK(r.cut_part == L("2·()()"));
  CHECK(r.remainder == F("(())"));
  CHECK(r.pieces.size() == 2);

  Cut bad;
  bad.nodal_cuts = {NodalCut{{3}, 1}};
  CHECK_THROWS_AS(apply_cut(w, bad), std::invalid_argument);
  bad.nodal_cuts = {NodalCut{{1}, 2}};
  CHECK_THROWS_AS(apply_cut(w, bad), std::invalid_argument);
  CHECK_THROWS_AS(cuts(F("()()()"), LC, 2), BoundExceeded);
  CHECK(parse_cut_family("falc") == FALC);
  CHECK(cut_family_name(WC) == "WC");
  CHECK_THROWS_AS(parse_cut_family("rc"), std::invalid_argument);
}

TEST_CASE("empty forest") {
  CHECK(left_cuts(Forest()).size() == 1);
  CHECK(full_admissible_left_cuts(Forest()).size() == 1);
  CHECK(nodal_left_cuts(Forest()).empty());
}

TEST_CASE("cut laws") {
  for (const LawCheck& c : check_cut_laws(5)) {
    CAPTURE(c.name);
    CAPTURE(c.first_failure);
    CHECK(c.ok());
  }
}
