#include "otree/series.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "otree/butcher.hpp"
#include "otree/enumerate.hpp"
#include "otree/format.hpp"
#include "otree/hopf.hpp"
#include "otree/parse.hpp"

namespace otree {
namespace {

void require_same_cutoff(const Series& a, const Series& b) {
  if (a.cutoff() != b.cutoff()) throw CutoffMismatch(a.cutoff(), b.cutoff());
}

std::vector<Color> merged_alphabet(const Series& a, const Series& b) {
  std::vector<Color> c = a.alphabet();
  auto d = b.alphabet();
  c.insert(c.end(), d.begin(), d.end());
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

// Every forest up to the cutoff over the alphabet. Forests with other
// colors cannot carry nonzero coefficients in any result computed here.
std::vector<Forest> domain(std::size_t cutoff, const std::vector<Color>& colors) {
  return enumerate_forests_upto(cutoff, colors, ForestFilter::all, std::max(cutoff, kDefaultMaxOrder));
}

}  // namespace

CutoffMismatch::CutoffMismatch(std::size_t a, std::size_t b)
    : std::invalid_argument("series cutoffs differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}

void Series::set(const Forest& f, const Rational& c) {
  if (f.order() > cutoff_)
    throw std::out_of_range("forest " + print_forest(f) + " exceeds the series cutoff " + std::to_string(cutoff_));
  if (c == 0) {
    coeffs_.erase(f);
  } else {
    coeffs_[f] = c;
  }
}

Rational Series::operator()(const Forest& f) const {
  if (f.order() > cutoff_)
    throw std::out_of_range("forest " + print_forest(f) + " exceeds the series cutoff " + std::to_string(cutoff_));
  auto it = coeffs_.find(f);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational Series::operator()(const LinComb& a) const {
  Rational s = 0;
  for (const auto& [f, c] : a) s += c * (*this)(f);
  return s;
}

std::vector<Color> Series::alphabet() const {
  std::set<ColorId> ids;
  for (const auto& [f, c] : coeffs_)
    for (const Node& n : f.nodes()) ids.insert(n.color);
  std::vector<Color> out;
  for (ColorId id : ids) out.push_back(Color::from_id(id));
  std::sort(out.begin(), out.end());
  return out;
}

Series counit_series(std::size_t cutoff) {
  Series s(cutoff);
  s.set(Forest(), 1);
  return s;
}

Series delta_series(const Forest& f, std::size_t cutoff) {
  Series s(cutoff);
  s.set(f, 1);
  return s;
}

Series from_lincomb(const LinComb& a, std::size_t cutoff) {
  Series s(cutoff);
  for (const auto& [f, c] : a) s.set(f, c);
  return s;
}

Series truncate(const Series& s, std::size_t cutoff) {
  Series out(cutoff);
  for (const auto& [f, c] : s.terms())
    if (f.order() <= cutoff) out.set(f, c);
  return out;
}

Series operator+(const Series& a, const Series& b) {
  require_same_cutoff(a, b);
  Series out = a;
  for (const auto& [f, c] : b.terms()) out.set(f, out(f) + c);
  return out;
}

Series operator-(const Series& a, const Series& b) { return a + Rational(-1) * b; }

Series operator*(const Rational& r, const Series& a) {
  Series out(a.cutoff());
  for (const auto& [f, c] : a.terms()) out.set(f, r * c);
  return out;
}

Series compose_gl(const Series& alpha, const Series& beta) {
  require_same_cutoff(alpha, beta);
  Series out(alpha.cutoff());
  for (const Forest& w : domain(alpha.cutoff(), merged_alphabet(alpha, beta))) {
    Rational v = 0;
    for (const auto& [p, c] : coproduct_N(w)) {
      Rational a = alpha(p.first);
      if (a == 0) continue;
      v += c * a * beta(p.second);
    }
    out.set(w, v);
  }
  return out;
}

Series inverse(const Series& alpha) {
  if (alpha(Forest()) != 1) throw SeriesDomainError("inverse requires alpha(1) = 1");
  Series out(alpha.cutoff());
  for (const Forest& w : domain(alpha.cutoff(), alpha.alphabet())) out.set(w, alpha(antipode_N(w)));
  return out;
}

namespace {

template <class Check>
bool for_all_shuffle_pairs(const Series& alpha, Check&& check) {
  auto forests = domain(alpha.cutoff(), alpha.alphabet());
  for (const Forest& a : forests) {
    if (a.empty()) continue;
    for (const Forest& b : forests) {
      if (b.empty() || a.order() + b.order() > alpha.cutoff()) continue;
      if (!check(a, b)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_logarithmic(const Series& alpha) {
  if (alpha(Forest()) != 0) return false;
  return for_all_shuffle_pairs(alpha, [&](const Forest& a, const Forest& b) { return alpha(shuffle(a, b)) == 0; });
}

bool is_exponential(const Series& alpha) {
  if (alpha(Forest()) != 1) return false;
  return for_all_shuffle_pairs(
      alpha, [&](const Forest& a, const Forest& b) { return alpha(shuffle(a, b)) == alpha(a) * alpha(b); });
}

Series exp_gl(const Series& alpha) {
  if (!is_logarithmic(alpha)) throw SeriesDomainError("exp_gl requires a logarithmic series");
  Series out = counit_series(alpha.cutoff());
  Series power = counit_series(alpha.cutoff());
  for (std::size_t j = 1; j <= alpha.cutoff(); ++j) {
    power = compose_gl(power, alpha);
    out = out + (Rational(1) / factorial(static_cast<unsigned>(j))) * power;
  }
  return out;
}

Series log_gl(const Series& beta) {
  if (!is_exponential(beta)) throw SeriesDomainError("log_gl requires an exponential series");
  Series x = beta - counit_series(beta.cutoff());
  Series out(beta.cutoff());
  Series power = counit_series(beta.cutoff());
  // x vanishes on the empty forest, so x^{o k} vanishes below order k
  for (std::size_t k = 1; k <= beta.cutoff(); ++k) {
    power = compose_gl(power, x);
    Rational c = Rational(k % 2 == 1 ? 1 : -1) / Rational(static_cast<unsigned long>(k));
    out = out + c * power;
  }
  return out;
}

void USeries::set(const UForest& w, const Rational& c) {
  if (w.order() > cutoff_) throw std::out_of_range("unordered forest exceeds the series cutoff");
  if (c == 0) {
    coeffs_.erase(w);
  } else {
    coeffs_[w] = c;
  }
}

Rational USeries::operator()(const UForest& w) const {
  if (w.order() > cutoff_) throw std::out_of_range("unordered forest exceeds the series cutoff");
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

USeries omega_star(const Series& alpha) {
  USeries out(alpha.cutoff());
  std::set<UForest> classes;
  for (const Forest& f : domain(alpha.cutoff(), alpha.alphabet())) classes.insert(UForest(f));
  for (const UForest& w : classes) {
    Rational sum = 0;
    for (const Forest& f : orbit(w.representative())) sum += alpha(f);
    out.set(w, Rational(sigma(w.representative())) * sum);
  }
  return out;
}

nlohmann::json to_json(const Series& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [f, c] : s.terms()) terms.push_back({{"coeff", to_string(c)}, {"forest", print_forest(f)}});
  return {{"cutoff", s.cutoff()}, {"terms", terms}};
}

Series series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("cutoff") || !j.contains("terms"))
    throw std::invalid_argument("series JSON needs \"cutoff\" and \"terms\"");
  Series s(j.at("cutoff").get<std::size_t>());
  for (const auto& t : j.at("terms")) {
    Forest f = parse_forest(t.at("forest").get<std::string>());
    s.set(f, s(f) + parse_rational(t.at("coeff").get<std::string>()));
  }
  return s;
}

nlohmann::json to_json(const USeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : s.terms())
    terms.push_back({{"coeff", to_string(c)}, {"forest", print_forest(w.representative())}});
  return {{"cutoff", s.cutoff()}, {"terms", terms}};
}

}  // namespace otree
