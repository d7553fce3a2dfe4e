#ifndef OTREE_HOPF_HPP
#define OTREE_HOPF_HPP

#include <functional>
#include <tuple>

#include "otree/lincomb.hpp"

namespace otree {

// Linear endomap given on basis forests, extended by linearity.
using Endomap = std::function<LinComb(const Forest&)>;

LinComb apply(const Endomap& m, const LinComb& a);
TensorComb apply_tensor(const Endomap& left, const Endomap& right, const TensorComb& x);

Rational counit(const LinComb& a);
LinComb unit(const Rational& r);

// Delta_N(w) = sum over full admissible left cuts of P (x) R.
TensorComb coproduct_N(const Forest& f);
TensorComb coproduct_N(const LinComb& a);

// Delta_N(1) = 1 (x) 1,
// Delta_N(w t) = w t (x) 1 + Delta_N(w) sqcup. (I (x) B+_i) Delta_N(B-(t)).
TensorComb coproduct_N_recursive(const Forest& f);
TensorComb coproduct_N_recursive(const LinComb& a);

// S_N(w) = S_F(sum over left cuts of P shuffle R).
LinComb antipode_N(const Forest& f);
LinComb antipode_N(const LinComb& a);

// S_N(1) = 1, S_N(w) = -mu_N((S_N (x) I)(Delta_N(w) - w (x) 1)), with the
// recursive coproduct.
LinComb antipode_N_recursive(const Forest& f);
LinComb antipode_N_recursive(const LinComb& a);

// S_N(w) = -sum over FALC minus cut-everything of S_N(P) shuffle R.
LinComb antipode_N_cut_recursive(const Forest& f);

// Reversal antipode of the free associative algebra:
// t1...tj -> (-1)^j tj...t1.
LinComb reversal_SF(const Forest& f);
LinComb reversal_SF(const LinComb& a);

// Deconcatenation over word cuts.
TensorComb coproduct_F(const Forest& f);
TensorComb coproduct_F(const LinComb& a);

enum class HopfStructure { N, F };

// (A * B)(a) = mu((A (x) B) Delta(a)); mu is the shuffle in both structures.
LinComb convolution(const Endomap& A, const Endomap& B, const LinComb& a, HopfStructure which);

Endomap identity_map();
Endomap unit_counit_map();
Endomap antipode_N_map();
Endomap reversal_SF_map();

using ForestTriple = std::tuple<Forest, Forest, Forest>;
using Tensor3 = Combination<ForestTriple>;

// (Delta_N (x) I) Delta_N(a) and (I (x) Delta_N) Delta_N(a).
Tensor3 coproduct_N_left_twice(const LinComb& a);
Tensor3 coproduct_N_right_twice(const LinComb& a);

}  // namespace otree

#endif
