#pragma once

#include <random>
#include <vector>

#include "chiy/builders.hpp"
#include "chiy/fixed_point_model.hpp"

namespace chiy {

using Rng = std::mt19937_64;

/// `count` distinct integers drawn uniformly from [lo, hi].
std::vector<long> random_distinct(Rng& rng, std::size_t count, long lo, long hi);

/// Cocharacter in [-bound, bound]^dim pairing nontrivially with every dual
/// basis vector of the fan.
std::vector<long> random_generic_cocharacter(Rng& rng, const Fan& fan, long bound);

/// Nonempty multiset with weights 0 < |w| <= max_abs, multiplicities in
/// [1, max_mult].
WeightMultiset random_weight_multiset(Rng& rng, long max_abs, long max_mult, std::size_t max_distinct);

/// A builder model with a random generic linearization: P^n, G(2,4),
/// G(2,5), a toric surface or a product, chosen by `family % 6`.
VarietyModel random_builder_model(Rng& rng, unsigned family);

}  // namespace chiy
