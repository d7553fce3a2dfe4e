#include "otree/laws.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "otree/butcher.hpp"
#include "otree/cuts.hpp"
#include "otree/enumerate.hpp"
#include "otree/format.hpp"
#include "otree/grafting.hpp"
#include "otree/hopf.hpp"
#include "otree/symmetry.hpp"

namespace otree {
namespace {

class Law {
 public:
  explicit Law(std::string name) { result_.name = std::move(name); }

  void expect(bool holds, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (holds) return;
    if (result_.failures++ == 0) result_.first_failure = describe();
  }

  LawCheck done() && { return std::move(result_); }

 private:
  LawCheck result_;
};

std::string str(const Forest& f) { return f.empty() ? "1" : print_forest(f); }
std::string str(const UForest& f) { return str(f.representative()); }

std::vector<Forest> forests_upto(std::size_t n) { return enumerate_forests_upto(n); }

std::vector<Tree> trees_upto(std::size_t n) {
  std::vector<Tree> out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (const Forest& f : enumerate_forests(k, {Color()}, ForestFilter::trees)) out.emplace_back(f);
  }
  return out;
}

std::vector<UForest> classes_upto(std::size_t n) {
  std::set<UForest> seen;
  std::vector<UForest> out;
  for (const Forest& f : forests_upto(n)) {
    UForest u(f);
    if (seen.insert(u).second) out.push_back(u);
  }
  return out;
}

template <class F>
void for_pairs(const std::vector<Forest>& all, std::size_t max_total, F&& f) {
  for (const Forest& a : all) {
    for (const Forest& b : all) {
      if (a.order() + b.order() <= max_total) f(a, b);
    }
  }
}

template <class F>
void for_triples(const std::vector<Forest>& all, std::size_t max_total, F&& f) {
  for (const Forest& a : all) {
    for (const Forest& b : all) {
      if (a.order() + b.order() > max_total) continue;
      for (const Forest& c : all) {
        if (a.order() + b.order() + c.order() <= max_total) f(a, b, c);
      }
    }
  }
}

std::string pair_str(const Forest& a, const Forest& b) { return str(a) + " , " + str(b); }
std::string triple_str(const Forest& a, const Forest& b, const Forest& c) {
  return str(a) + " , " + str(b) + " , " + str(c);
}

bool all_of_order(const LinComb& a, std::size_t n) {
  return std::all_of(a.begin(), a.end(), [&](const auto& t) { return t.first.order() == n; });
}

// Lie bracket under concatenation.
LinComb bracket(const LinComb& a, const LinComb& b) { return concat(a, b) - concat(b, a); }

}  // namespace

std::vector<LawCheck> check_forest_laws(std::size_t max_order) {
  std::vector<LawCheck> out;
  auto all = forests_upto(max_order);

  Law roundtrip("parse/print round trip");
  for (const Forest& f : all) {
    roundtrip.expect(parse_forest(print_forest(f)) == f, [&] { return str(f); });
  }
  out.push_back(std::move(roundtrip).done());

  Law bminus("b_minus after b_plus is the identity");
  Law grading("order and degree of b_plus and concatenation");
  for (const Forest& f : all) {
    Tree t = b_plus(f);
    bminus.expect(b_minus(t.as_forest()) == f, [&] { return str(f); });
    grading.expect(t.order() == f.order() + 1 && t.as_forest().degree() == 1, [&] { return str(f); });
  }
  for_pairs(all, max_order, [&](const Forest& a, const Forest& b) {
    Forest ab = concat(a, b);
    grading.expect(ab.order() == a.order() + b.order() && ab.degree() == a.degree() + b.degree(),
                   [&] { return pair_str(a, b); });
  });
  out.push_back(std::move(bminus).done());
  out.push_back(std::move(grading).done());

  Law orbits("pi equals orbit size times sigma");
  for (const Forest& f : all) {
    orbits.expect(pi(f) == sigma(f) * static_cast<unsigned long>(orbit(f).size()), [&] { return str(f); });
  }
  out.push_back(std::move(orbits).done());
  return out;
}

std::vector<LawCheck> check_lincomb_laws(std::size_t max_order) {
  std::vector<LawCheck> out;
  auto all = forests_upto(max_order);

  Law comm("shuffle is commutative");
  for_pairs(all, max_order, [&](const Forest& a, const Forest& b) {
    comm.expect(shuffle(a, b) == shuffle(b, a), [&] { return pair_str(a, b); });
  });
  out.push_back(std::move(comm).done());

  Law assoc("shuffle is associative");
  Law cassoc("concatenation is associative");
  Law dist("concatenation distributes over addition");
  for_triples(all, max_order, [&](const Forest& a, const Forest& b, const Forest& c) {
    assoc.expect(shuffle(shuffle(a, b), LinComb(c)) == shuffle(LinComb(a), shuffle(b, c)),
                 [&] { return triple_str(a, b, c); });
    cassoc.expect(concat(concat(a, b), c) == concat(a, concat(b, c)), [&] { return triple_str(a, b, c); });
    LinComb sum = LinComb(b) + LinComb(c);
    dist.expect(concat(LinComb(a), sum) == concat(LinComb(a), LinComb(b)) + concat(LinComb(a), LinComb(c)),
                [&] { return triple_str(a, b, c); });
  });
  out.push_back(std::move(assoc).done());
  out.push_back(std::move(cassoc).done());
  out.push_back(std::move(dist).done());

  Law unit("concatenation and shuffle units");
  for (const Forest& a : all) {
    LinComb la(a);
    unit.expect(concat(la, unit_element()) == la && concat(unit_element(), la) == la &&
                    shuffle(la, unit_element()) == la,
                [&] { return str(a); });
  }
  out.push_back(std::move(unit).done());

  Law ortho("forests are orthonormal");
  for_pairs(all, max_order, [&](const Forest& a, const Forest& b) {
    Rational expected = a == b ? 1 : 0;
    ortho.expect(inner(LinComb(a), LinComb(b)) == expected, [&] { return pair_str(a, b); });
  });
  out.push_back(std::move(ortho).done());

  Law symm("inner product is symmetric and bilinear");
  for_triples(all, max_order, [&](const Forest& a, const Forest& b, const Forest& c) {
    LinComb x = LinComb(a) + Rational(2) * LinComb(b);
    LinComb y = shuffle(b, c) - LinComb(a);
    bool ok = inner(x, y) == inner(y, x) &&
              inner(x, y) == inner(LinComb(a), y) + Rational(2) * inner(LinComb(b), y);
    symm.expect(ok, [&] { return triple_str(a, b, c); });
  });
  out.push_back(std::move(symm).done());
  return out;
}

std::vector<LawCheck> check_grafting_laws(std::size_t max_order) {
  std::vector<LawCheck> out;
  auto all = forests_upto(max_order);
  auto trees = trees_upto(max_order);

  Law leibniz("Leibniz rule d[ab] = d[a]b + a d[b]");
  Law composition("composition rule d[a[b]] = (da)[b] + (d[a])[b]");
  for (const Tree& d : trees) {
    const Forest& df = d.as_forest();
    for_pairs(all, max_order - d.order(), [&](const Forest& a, const Forest& b) {
      LinComb lhs = graft(df, concat(a, b));
      LinComb rhs = concat(graft(df, a), LinComb(b)) + concat(LinComb(a), graft(df, b));
      leibniz.expect(lhs == rhs, [&] { return triple_str(df, a, b); });

      LinComb lhs2 = graft(LinComb(df), graft(a, b));
      LinComb rhs2 = graft(LinComb(concat(df, a)), LinComb(b)) + graft(graft(df, a), LinComb(b));
      composition.expect(lhs2 == rhs2, [&] { return triple_str(df, a, b); });
    });
  }
  out.push_back(std::move(leibniz).done());
  out.push_back(std::move(composition).done());

  std::size_t gl_range = std::min<std::size_t>(max_order, 4);
  Law assoc("GL product is associative");
  Law compat("(a o b)[c] = a[b[c]]");
  for_triples(all, gl_range, [&](const Forest& a, const Forest& b, const Forest& c) {
    assoc.expect(gl_product(gl_product(a, b), LinComb(c)) == gl_product(LinComb(a), gl_product(b, c)),
                 [&] { return triple_str(a, b, c); });
    compat.expect(graft(gl_product(a, b), LinComb(c)) == graft(LinComb(a), graft(b, c)),
                  [&] { return triple_str(a, b, c); });
  });
  out.push_back(std::move(assoc).done());
  out.push_back(std::move(compat).done());

  Law direct("recursive grafting equals direct grafting");
  Law grading("grafting and GL products are graded");
  for_pairs(all, max_order, [&](const Forest& a, const Forest& b) {
    LinComb g = graft(a, b);
    direct.expect(g == graft_direct(a, b).value, [&] { return pair_str(a, b); });
    LinComb p = gl_product(a, b);
    bool degrees = std::all_of(p.begin(), p.end(), [&](const auto& t) {
      return t.first.degree() >= b.degree() && t.first.degree() <= a.degree() + b.degree();
    });
    grading.expect(all_of_order(g, a.order() + b.order()) && all_of_order(p, a.order() + b.order()) && degrees,
                   [&] { return pair_str(a, b); });
  });
  out.push_back(std::move(direct).done());
  out.push_back(std::move(grading).done());
  return out;
}

std::vector<LawCheck> check_cut_laws(std::size_t max_order) {
  std::vector<LawCheck> out;
  auto all = forests_upto(max_order);

  Law rooted("FALC(w) equals ALC(B+(w)) with the root removed");
  Law conservation("cuts conserve order");
  Law words("word cuts are full admissible left cuts");
  Law split("FALC splits into a word cut and an ALC of the rest");
  for (const Forest& f : all) {
    auto falc = full_admissible_left_cuts(f);
    Forest lifted = b_plus(f).as_forest();
    auto alc = admissible_left_cuts(lifted);
    bool same = falc.size() == alc.size();
    for (std::size_t i = 0; same && i < falc.size(); ++i) {
      const auto& x = falc[i].nodal_cuts;
      const auto& y = alc[i].nodal_cuts;
      same = x.size() == y.size();
      for (std::size_t j = 0; same && j < x.size(); ++j) {
        NodeAddress a{0};
        a.insert(a.end(), x[j].node.begin(), x[j].node.end());
        same = y[j].node == a && y[j].count == x[j].count;
      }
      if (same) {
        CutResult rx = apply_cut(f, falc[i]);
        CutResult ry = apply_cut(lifted, alc[i]);
        same = rx.cut_part == ry.cut_part && b_plus(rx.remainder).as_forest() == ry.remainder;
      }
    }
    rooted.expect(same, [&] { return str(f); });

    for (const Cut& c : left_cuts(f)) {
      CutResult r = apply_cut(f, c);
      conservation.expect(all_of_order(r.cut_part, f.order() - r.remainder.order()),
                          [&] { return str(f) + " " + format_cut(c); });
    }
    for (const Cut& c : full_admissible_left_cuts(f)) {
      CutResult r = apply_cut(f, c);
      conservation.expect(all_of_order(r.cut_part, f.order() - r.remainder.order()),
                          [&] { return str(f) + " " + format_cut(c); });
    }

    bool contained = true;
    for (const Cut& w : word_cuts(f)) {
      contained = contained && std::find(falc.begin(), falc.end(), w) != falc.end();
    }
    words.expect(contained, [&] { return str(f); });

    // prefix of k trees cut off at the invisible root, then an ALC of the suffix
    auto ts = f.trees();
    TensorComb composed;
    std::size_t count = 0;
    for (std::size_t k = 0; k <= ts.size(); ++k) {
      Forest prefix = Forest::from_trees(std::span<const Tree>(ts).first(k));
      Forest suffix = Forest::from_trees(std::span<const Tree>(ts).subspan(k));
      for (const Cut& c : admissible_left_cuts(suffix)) {
        CutResult r = apply_cut(suffix, c);
        composed.add(tensor(shuffle(LinComb(prefix), r.cut_part), LinComb(r.remainder)));
        ++count;
      }
    }
    TensorComb direct;
    for (const Cut& c : falc) {
      CutResult r = apply_cut(f, c);
      direct.add(tensor(r.cut_part, LinComb(r.remainder)));
    }
    split.expect(count == falc.size() && composed == direct, [&] { return str(f); });
  }
  out.push_back(std::move(rooted).done());
  out.push_back(std::move(conservation).done());
  out.push_back(std::move(words).done());
  out.push_back(std::move(split).done());
  return out;
}

std::vector<LawCheck> check_hopf_laws(std::size_t max_order) {
  std::vector<LawCheck> out;
  auto all = forests_upto(max_order);
  Endomap S = antipode_N_map();
  Endomap I = identity_map();
  Endomap ue = unit_counit_map();

  std::map<Forest, TensorComb> delta;
  for (const Forest& f : all) delta.emplace(f, coproduct_N(f));

  Law coassoc("coassociativity of Delta_N");
  Law grading("Delta_N is graded");
  Law counit("counit laws of Delta_N");
  for (const Forest& f : all) {
    coassoc.expect(coproduct_N_left_twice(LinComb(f)) == coproduct_N_right_twice(LinComb(f)),
                   [&] { return str(f); });
    const TensorComb& d = delta.at(f);
    bool graded = std::all_of(d.begin(), d.end(), [&](const auto& t) {
      return t.first.first.order() + t.first.second.order() == f.order();
    });
    grading.expect(graded, [&] { return str(f); });
    LinComb left, right;
    for (const auto& [p, c] : d) {
      if (p.second.empty()) left.add(p.first, c);
      if (p.first.empty()) right.add(p.second, c);
    }
    counit.expect(left == LinComb(f) && right == LinComb(f), [&] { return str(f); });
  }
  out.push_back(std::move(coassoc).done());
  out.push_back(std::move(grading).done());
  out.push_back(std::move(counit).done());

  Law bialgebra("Delta_N(a shuffle b) = Delta_N(a) spr Delta_N(b)");
  Law mult("S_N(a shuffle b) = S_N(a) shuffle S_N(b)");
  for_pairs(all, max_order, [&](const Forest& a, const Forest& b) {
    bialgebra.expect(coproduct_N(shuffle(a, b)) == spr(delta.at(a), delta.at(b)), [&] { return pair_str(a, b); });
    mult.expect(antipode_N(shuffle(a, b)) == shuffle(antipode_N(a), antipode_N(b)), [&] { return pair_str(a, b); });
  });
  out.push_back(std::move(bialgebra).done());
  out.push_back(std::move(mult).done());

  Law antipode("S_N * I = I * S_N = u e");
  Law involution("S_N o S_N = I");
  Law twisted("(S_N (x) S_N) Delta_N = twist Delta_N S_N");
  Law free_antipode("S_F * I = I * S_F = u e for deconcatenation");
  for (const Forest& f : all) {
    LinComb e = ue(f);
    antipode.expect(convolution(S, I, LinComb(f), HopfStructure::N) == e &&
                        convolution(I, S, LinComb(f), HopfStructure::N) == e,
                    [&] { return str(f); });
    LinComb s = antipode_N(f);
    involution.expect(antipode_N(s) == LinComb(f), [&] { return str(f); });
    twisted.expect(apply_tensor(S, S, delta.at(f)) == twist(coproduct_N(s)), [&] { return str(f); });
    Endomap SF = reversal_SF_map();
    free_antipode.expect(convolution(SF, I, LinComb(f), HopfStructure::F) == e &&
                             convolution(I, SF, LinComb(f), HopfStructure::F) == e,
                         [&] { return str(f); });
  }
  out.push_back(std::move(antipode).done());
  out.push_back(std::move(involution).done());
  out.push_back(std::move(twisted).done());
  out.push_back(std::move(free_antipode).done());

  Law duality("<a o b, w> = <a (x) b, Delta_N(w)>");
  for_pairs(all, max_order, [&](const Forest& a, const Forest& b) {
    LinComb p = gl_product(a, b);
    std::size_t n = a.order() + b.order();
    for (const Forest& w : all) {
      if (w.order() != n) continue;
      duality.expect(p.coeff(w) == delta.at(w).coeff({a, b}), [&] { return pair_str(a, b) + " ; " + str(w); });
    }
  });
  out.push_back(std::move(duality).done());

  Law oracle_delta("cut-based and recursive Delta_N agree");
  Law oracle_s("closed-form, recursive and cut-recursive S_N agree");
  for (const Forest& f : forests_upto(max_order + 1)) {
    oracle_delta.expect(coproduct_N(f) == coproduct_N_recursive(f), [&] { return str(f); });
    LinComb s = antipode_N(f);
    oracle_s.expect(s == antipode_N_recursive(f) && s == antipode_N_cut_recursive(f), [&] { return str(f); });
  }
  out.push_back(std::move(oracle_delta).done());
  out.push_back(std::move(oracle_s).done());
  return out;
}

std::vector<LawCheck> check_butcher_laws(std::size_t max_order) {
  std::vector<LawCheck> out;
  auto classes = classes_upto(max_order);

  Law mult("Omega is multiplicative");
  for (const UForest& a : classes) {
    for (const UForest& b : classes) {
      if (a.order() + b.order() > max_order) continue;
      mult.expect(omega(product_C(a, b)) == shuffle(omega(a), omega(b)),
                  [&] { return str(a) + " , " + str(b); });
    }
  }
  out.push_back(std::move(mult).done());

  Law coproduct("Delta_N o Omega = (Omega (x) Omega) o Delta_C");
  Law delta_routes("Delta_C recursion equals Omega conjugation");
  Law antipode("S_N o Omega = Omega o S_C");
  Law antipode_routes("S_C convolution inverse equals Omega conjugation");
  Law inverse("Omega^-1 o Omega = I");
  Law square("Omega o Omega = pi Omega");
  Law orbit_form("Omega equals sigma times the orbit sum");
  Law stabilizer("pi equals orbit size times sigma");
  std::set<LinComb::map_type> images;
  bool distinct = true;
  for (const UForest& w : classes) {
    LinComb ow = omega(w);
    UTensorComb dc = coproduct_C(w);
    coproduct.expect(coproduct_N(ow) == omega(dc), [&] { return str(w); });
    delta_routes.expect(dc == coproduct_C_via_omega(w), [&] { return str(w); });
    ULinComb sc = antipode_C(w);
    antipode.expect(antipode_N(ow) == omega(sc), [&] { return str(w); });
    antipode_routes.expect(sc == antipode_C_via_omega(w), [&] { return str(w); });
    inverse.expect(omega_inv(ow) == ULinComb(w), [&] { return str(w); });
    Rational p(pi(w.representative()));
    square.expect(omega(ow) == p * ow, [&] { return str(w); });
    orbit_form.expect(ow == omega_by_orbit(w), [&] { return str(w); });
    stabilizer.expect(pi(w.representative()) ==
                          sigma(w.representative()) * static_cast<unsigned long>(orbit(w.representative()).size()),
                      [&] { return str(w); });
    distinct = images.insert(ow.terms()).second && distinct;
  }
  out.push_back(std::move(coproduct).done());
  out.push_back(std::move(delta_routes).done());
  out.push_back(std::move(antipode).done());
  out.push_back(std::move(antipode_routes).done());
  out.push_back(std::move(inverse).done());
  out.push_back(std::move(square).done());
  out.push_back(std::move(orbit_form).done());
  out.push_back(std::move(stabilizer).done());

  Law injective("Omega is injective on classes");
  injective.expect(distinct, [] { return std::string("two classes share an image"); });
  out.push_back(std::move(injective).done());
  return out;
}

Series random_logarithmic_series(std::size_t cutoff, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Tree> trees = trees_upto(cutoff);
  LinComb lie;
  // nested commutators [t1, [t2, ... [tk-1, tk]]] of total order <= cutoff
  std::function<void(const LinComb&, std::size_t, std::size_t)> grow = [&](const LinComb& inner_term,
                                                                         std::size_t order, std::size_t depth) {
    lie.add(inner_term, coeff(rng));
    if (depth >= 3) return;
    for (const Tree& t : trees) {
      if (order + t.order() > cutoff) continue;
      grow(bracket(LinComb(t.as_forest()), inner_term), order + t.order(), depth + 1);
    }
  };
  for (const Tree& t : trees) grow(LinComb(t.as_forest()), t.order(), 1);
  return from_lincomb(lie, cutoff);
}

std::vector<LawCheck> check_series_laws(std::size_t cutoff, std::uint64_t seed, std::size_t samples) {
  std::vector<LawCheck> out;
  std::mt19937_64 rng(seed);
  std::vector<Series> logs, exps;
  for (std::size_t i = 0; i < samples; ++i) {
    logs.push_back(random_logarithmic_series(cutoff, rng));
    exps.push_back(exp_gl(logs.back()));
  }
  Series eps = counit_series(cutoff);
  auto name = [](std::size_t i) { return "sample " + std::to_string(i); };

  Law logarithmic("generated series are logarithmic");
  Law exponential("exp_gl yields exponential series");
  Law roundtrip("log_gl(exp_gl(a)) = a");
  Law group_inverse("b o b^-1 = b^-1 o b = epsilon");
  Law group_unit("epsilon is a two-sided unit");
  for (std::size_t i = 0; i < samples; ++i) {
    logarithmic.expect(is_logarithmic(logs[i]), [&] { return name(i); });
    exponential.expect(is_exponential(exps[i]), [&] { return name(i); });
    roundtrip.expect(log_gl(exps[i]) == logs[i], [&] { return name(i); });
    Series inv = inverse(exps[i]);
    group_inverse.expect(compose_gl(exps[i], inv) == eps && compose_gl(inv, exps[i]) == eps,
                         [&] { return name(i); });
    group_unit.expect(compose_gl(exps[i], eps) == exps[i] && compose_gl(eps, exps[i]) == exps[i],
                      [&] { return name(i); });
  }
  out.push_back(std::move(logarithmic).done());
  out.push_back(std::move(exponential).done());
  out.push_back(std::move(roundtrip).done());
  out.push_back(std::move(group_inverse).done());
  out.push_back(std::move(group_unit).done());

  Law assoc("GL composition is associative");
  Law closed("exponential series are closed under composition");
  Law trunc("composition commutes with truncation");
  for (std::size_t i = 0; i + 2 < samples; ++i) {
    const Series &a = exps[i], &b = exps[i + 1], &c = exps[i + 2];
    Series ab = compose_gl(a, b);
    assoc.expect(compose_gl(ab, c) == compose_gl(a, compose_gl(b, c)), [&] { return name(i); });
    closed.expect(is_exponential(ab), [&] { return name(i); });
    for (std::size_t k = 0; k < cutoff; ++k) {
      trunc.expect(truncate(ab, k) == compose_gl(truncate(a, k), truncate(b, k)),
                   [&] { return name(i) + " at " + std::to_string(k); });
    }
  }
  out.push_back(std::move(assoc).done());
  out.push_back(std::move(closed).done());
  out.push_back(std::move(trunc).done());

  Law pairing("composition of point masses is the GL product");
  auto all = forests_upto(cutoff);
  for_pairs(all, cutoff, [&](const Forest& a, const Forest& b) {
    Series composed = compose_gl(delta_series(a, cutoff), delta_series(b, cutoff));
    pairing.expect(composed == from_lincomb(gl_product(a, b), cutoff), [&] { return pair_str(a, b); });
  });
  out.push_back(std::move(pairing).done());

  Law image_log("Omega* of a logarithmic series lives on trees");
  Law image_exp("Omega* of an exponential series is multiplicative");
  auto classes = classes_upto(cutoff);
  for (std::size_t i = 0; i < samples; ++i) {
    USeries l = omega_star(logs[i]);
    bool trees_only = std::all_of(l.terms().begin(), l.terms().end(),
                                  [](const auto& t) { return t.first.degree() == 1; });
    image_log.expect(trees_only, [&] { return name(i); });
    USeries e = omega_star(exps[i]);
    for (const UForest& a : classes) {
      for (const UForest& b : classes) {
        if (a.order() + b.order() > cutoff) continue;
        image_exp.expect(e(product_C(a, b)) == e(a) * e(b),
                         [&] { return name(i) + ": " + str(a) + " , " + str(b); });
      }
    }
  }
  out.push_back(std::move(image_log).done());
  out.push_back(std::move(image_exp).done());
  return out;
}

std::vector<LawCheck> verify_all(std::size_t max_order, const std::function<void(const LawCheck&)>& progress) {
  std::vector<LawCheck> out;
  auto take = [&](std::vector<LawCheck> batch) {
    for (LawCheck& c : batch) {
      if (progress) progress(c);
      out.push_back(std::move(c));
    }
  };
  take(check_forest_laws(max_order));
  take(check_lincomb_laws(max_order));
  take(check_grafting_laws(max_order));
  take(check_cut_laws(max_order));
  take(check_hopf_laws(max_order));
  take(check_butcher_laws(max_order));
  take(check_series_laws(std::min<std::size_t>(max_order, 4), 20240601));
  return out;
}

}  // namespace otree
