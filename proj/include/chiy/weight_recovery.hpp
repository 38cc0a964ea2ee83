#pragma once

#include <map>
#include <vector>

#include "chiy/fixed_point_model.hpp"
#include "chiy/localized_class.hpp"

namespace chiy {

/// Delta(n) = prod_w ((theta^w + y) / (theta^w - 1))^{n_w}, the degree-zero
/// part of the localized normal contribution. Empty input gives 1.
LocalizedClass delta_from_weights(const WeightMultiset& ws);

/// Pole orders of Delta|_{y=0} at primitive k-th roots of unity (k -> A_k,
/// positive entries only).
struct PoleProfile {
  std::map<long, long> orders;
  long w_max = 0;
};

/// Coefficients B_1..B_{w_max} of theta^k in d/dy Delta at y = -1.
struct SeriesProfile {
  std::vector<Rational> coeffs;
};

PoleProfile pole_profile(const LocalizedClass& d);
SeriesProfile series_profile(const LocalizedClass& d, long w_max);

/// Inverts delta_from_weights. Pole orders give s_k = n_k + n_{-k} by a
/// descending divisor recursion; series coefficients give
/// d_k = n_{-k} - n_k by Moebius inversion. The answer is only returned after
/// delta_from_weights(answer) reproduces the input exactly; any inconsistency
/// raises InconsistentDelta.
WeightMultiset recover_weights(const LocalizedClass& d);

/// prod_{w > 0, k | w} (-y)^{n_w}: the cell factor of the fixed locus of the
/// order-k subgroup. Not additive in Delta (see kontr_relation_check).
YPolynomial subgroup_cell_factor(const WeightMultiset& ws, long k);

struct KontrTerm {
  long coefficient;
  WeightMultiset weights;
  YPolynomial image;
};

struct KontrReport {
  std::vector<KontrTerm> terms;
  LocalizedClass combination;
  bool combination_is_zero = false;
  YPolynomial image_combination;
  bool image_nonzero = false;
};

/// Delta(1,4) - Delta(1,3) + Delta(2,2) + Delta(3,4) - 2 Delta(2,4) vanishes,
/// while the same combination of k = 2 cell factors does not, so the cell
/// factor cannot be extended linearly to localized classes.
KontrReport kontr_relation_check();

}  // namespace chiy
