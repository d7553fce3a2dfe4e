#ifndef OTREE_LINCOMB_HPP
#define OTREE_LINCOMB_HPP

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <utility>

#include "otree/forest.hpp"
#include "otree/rational.hpp"

namespace otree {

// Finite formal linear combination with exact rational coefficients.
// Zero coefficients are never stored; terms iterate in key order.
template <class Key>
class Combination {
 public:
  using map_type = std::map<Key, Rational>;
  using const_iterator = typename map_type::const_iterator;

  Combination() = default;
  Combination(const Key& k) { add(k, 1); }  // NOLINT: a basis element is a combination
  Combination(std::initializer_list<std::pair<const Key, Rational>> terms) {
    for (const auto& [k, c] : terms) add(k, c);
  }

  void add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (inserted) {
      it->second.canonicalize();
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add(Key&& k, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), c).first->second.canonicalize();
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add(const Combination& other, const Rational& scale = 1) {
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  Combination& operator+=(const Combination& o) { add(o); return *this; }
  Combination& operator-=(const Combination& o) { add(o, -1); return *this; }
  Combination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator-(Combination a) { return a *= Rational(-1); }
  friend Combination operator*(const Rational& s, Combination a) { return a *= s; }
  friend Combination operator*(Combination a, const Rational& s) { return a *= s; }
  friend bool operator==(const Combination&, const Combination&) = default;

  // Linear extension of a basis map Key -> Combination<Out>.
  template <class Out, class F>
  Combination<Out> map_linear(F&& f) const {
    Combination<Out> out;
    for (const auto& [k, c] : terms_) out.add(f(k), c);
    return out;
  }

 private:
  map_type terms_;
};

using ForestPair = std::pair<Forest, Forest>;

// Element of N: finite combination of ordered forests.
using LinComb = Combination<Forest>;
// Element of N (x) N.
using TensorComb = Combination<ForestPair>;

inline LinComb unit_element() { return LinComb(Forest()); }
inline TensorComb tensor(const Forest& a, const Forest& b) { return TensorComb(ForestPair(a, b)); }
TensorComb tensor(const LinComb& a, const LinComb& b);

// <a, b> = sum_w a(w) b(w); forests are orthonormal.
Rational inner(const LinComb& a, const LinComb& b);
Rational inner(const TensorComb& a, const TensorComb& b);

// Bilinear extension of word concatenation.
LinComb concat(const LinComb& a, const LinComb& b);

// Shuffle of two forests (sum over interleavings of their trees).
LinComb shuffle(const Forest& a, const Forest& b);
LinComb shuffle(const LinComb& a, const LinComb& b);
LinComb shuffle_all(std::span<const Forest> words);

// (w1 (x) t1) sqcup. (w2 (x) t2) = (w1 shuffle w2) (x) (t1 t2)
TensorComb sqcup_cdot(const TensorComb& x, const TensorComb& y);
// (w1 (x) t1) spr (w2 (x) t2) = (w1 shuffle w2) (x) (t1 shuffle t2)
TensorComb spr(const TensorComb& x, const TensorComb& y);
// Swaps the two tensor slots.
TensorComb twist(const TensorComb& x);

// Applies linear maps to each slot: (A (x) B) x.
TensorComb apply_each(const TensorComb& x, const std::function<LinComb(const Forest&)>& left,
                      const std::function<LinComb(const Forest&)>& right);
// mu_N: multiplies the two slots with the shuffle product.
LinComb shuffle_slots(const TensorComb& x);

// Keeps only terms of order <= max_order.
LinComb truncate(const LinComb& a, std::size_t max_order);
// Homogeneous component of exactly `order` nodes.
LinComb homogeneous_part(const LinComb& a, std::size_t order);

}  // namespace otree

#endif
