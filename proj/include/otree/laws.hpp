#ifndef OTREE_LAWS_HPP
#define OTREE_LAWS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "otree/series.hpp"

namespace otree {

// Outcome of one algebraic law checked over a finite range of inputs.
struct LawCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
};

// Each battery runs exhaustively over monochrome forests whose (total)
// order is at most max_order.
std::vector<LawCheck> check_forest_laws(std::size_t max_order);
std::vector<LawCheck> check_lincomb_laws(std::size_t max_order);
std::vector<LawCheck> check_grafting_laws(std::size_t max_order);
std::vector<LawCheck> check_cut_laws(std::size_t max_order);
// The two-implementation comparisons run one order higher.
std::vector<LawCheck> check_hopf_laws(std::size_t max_order);
std::vector<LawCheck> check_butcher_laws(std::size_t max_order);
// Random series at the given cutoff, reproducible from the seed.
std::vector<LawCheck> check_series_laws(std::size_t cutoff, std::uint64_t seed, std::size_t samples = 5);

// All batteries in turn; series laws use cutoff min(max_order, 4).
// `progress` is called after every finished check.
std::vector<LawCheck> verify_all(std::size_t max_order, const std::function<void(const LawCheck&)>& progress = {});

// A random element of the free Lie algebra over the monochrome trees,
// paired against forests: combinations of trees and nested commutators of
// trees with integer coefficients in [-3, 3]. Such series are exactly the
// logarithmic ones.
Series random_logarithmic_series(std::size_t cutoff, std::mt19937_64& rng);

}  // namespace otree

#endif
