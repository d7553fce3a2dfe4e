#ifndef OTREE_BUTCHER_HPP
#define OTREE_BUTCHER_HPP

#include <utility>

#include "otree/lincomb.hpp"
#include "otree/symmetry.hpp"

namespace otree {

// Elements of the unordered (Butcher-Connes-Kreimer) Hopf algebra H_C.
using ULinComb = Combination<UForest>;
using UForestPair = std::pair<UForest, UForest>;
using UTensorComb = Combination<UForestPair>;

ULinComb to_unordered(const LinComb& a);  // forget, termwise

// Commutative concatenation.
UForest product_C(const UForest& a, const UForest& b);
ULinComb product_C(const ULinComb& a, const ULinComb& b);

// Delta_C(1) = 1 (x) 1, Delta_C(t) = t (x) 1 + (I (x) B+_i) Delta_C(B-(t)),
// Delta_C(w t) = Delta_C(w) Delta_C(t).
UTensorComb coproduct_C(const UForest& w);
UTensorComb coproduct_C(const ULinComb& a);
// (Omega^-1 (x) Omega^-1) Delta_N(Omega(w)).
UTensorComb coproduct_C_via_omega(const UForest& w);

Rational counit_C(const ULinComb& a);

// Convolution inverse of the identity: S_C(w) = -sum' S_C(w1) w2 over the
// terms of Delta_C(w) other than w (x) 1.
ULinComb antipode_C(const UForest& w);
ULinComb antipode_C(const ULinComb& a);
// Omega^-1(S_N(Omega(w))).
ULinComb antipode_C_via_omega(const UForest& w);

// Symmetrization: Omega(1) = 1, Omega(w t) = Omega(w) shuffle Omega(t),
// Omega(B+_i(w)) = B+_i(Omega(w)).
LinComb omega(const Forest& f);
LinComb omega(const LinComb& a);
LinComb omega(const UForest& w);
LinComb omega(const ULinComb& a);
// sigma(w) times the sum over the equivalence class of w.
LinComb omega_by_orbit(const UForest& w);

// Omega^-1(a) = sum a(w) / pi(w) forget(w).
ULinComb omega_inv(const LinComb& a);

UTensorComb omega_inv(const TensorComb& x);
TensorComb omega(const UTensorComb& x);

}  // namespace otree

#endif
