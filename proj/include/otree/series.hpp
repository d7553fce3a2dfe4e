#ifndef OTREE_SERIES_HPP
#define OTREE_SERIES_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "otree/lincomb.hpp"
#include "otree/symmetry.hpp"

namespace otree {

class CutoffMismatch : public std::invalid_argument {
 public:
  CutoffMismatch(std::size_t a, std::size_t b);
};

// Truncated element of the dual space N*: a coefficient for every forest of
// order <= cutoff (absent forests have coefficient 0). The coefficient of a
// forest w implicitly carries h^|w|.
class Series {
 public:
  Series() = default;
  explicit Series(std::size_t cutoff) : cutoff_(cutoff) {}

  std::size_t cutoff() const { return cutoff_; }
  // Throws std::out_of_range if the forest is above the cutoff.
  void set(const Forest& f, const Rational& c);
  Rational operator()(const Forest& f) const;
  // Pairing <alpha, a>; terms of `a` above the cutoff are rejected.
  Rational operator()(const LinComb& a) const;

  const std::map<Forest, Rational>& terms() const { return coeffs_; }
  // Colors appearing in any nonzero coefficient.
  std::vector<Color> alphabet() const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::size_t cutoff_ = 0;
  std::map<Forest, Rational> coeffs_;
};

// epsilon: 1 on the empty forest, 0 elsewhere.
Series counit_series(std::size_t cutoff);
// The series with coefficient 1 on `f` only.
Series delta_series(const Forest& f, std::size_t cutoff);
Series from_lincomb(const LinComb& a, std::size_t cutoff);
Series truncate(const Series& s, std::size_t cutoff);
Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Rational& r, const Series& a);

// (alpha o beta)(w) = sum over Delta_N(w) of alpha(w1) beta(w2).
Series compose_gl(const Series& alpha, const Series& beta);

// alpha^{-1}(w) = alpha(S_N(w)). Requires alpha(1) = 1.
Series inverse(const Series& alpha);

// Shuffle criteria over all pairs with |w1| + |w2| <= cutoff.
bool is_logarithmic(const Series& alpha);
bool is_exponential(const Series& alpha);

// sum_{j <= cutoff} alpha^{o j} / j!; requires a logarithmic argument.
Series exp_gl(const Series& alpha);
// sum_{k >= 1} (-1)^{k+1} (beta - epsilon)^{o k} / k; requires an
// exponential argument.
Series log_gl(const Series& beta);

class SeriesDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Series over unordered forests (S-series coefficients).
class USeries {
 public:
  USeries() = default;
  explicit USeries(std::size_t cutoff) : cutoff_(cutoff) {}
  std::size_t cutoff() const { return cutoff_; }
  void set(const UForest& w, const Rational& c);
  Rational operator()(const UForest& w) const;
  const std::map<UForest, Rational>& terms() const { return coeffs_; }
  friend bool operator==(const USeries&, const USeries&) = default;

 private:
  std::size_t cutoff_ = 0;
  std::map<UForest, Rational> coeffs_;
};

// beta(w) = <alpha, Omega(w)> = sigma(w) * sum over the class of w of alpha.
USeries omega_star(const Series& alpha);

// JSON: {"cutoff": n, "terms": [{"coeff": "p/q", "forest": "..."}]}
nlohmann::json to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);
nlohmann::json to_json(const USeries& s);

}  // namespace otree

#endif
