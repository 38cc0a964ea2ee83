#include "chiy/weight_recovery.hpp"

#include "chiy/error.hpp"
#include "chiy/number_theory.hpp"

namespace chiy {

namespace {

[[noreturn]] void inconsistent(const std::string& stage, const std::string& detail) {
  throw Error(ErrorKind::InconsistentDelta, stage + ": " + detail);
}

}  // namespace

LocalizedClass delta_from_weights(const WeightMultiset& ws) {
  ThetaPolynomial numerator(YPolynomial(1));
  std::vector<DenominatorFactor> factors;
  long shift = 0;
  const YPolynomial y = YPolynomial::x();
  for (const auto& [w, n] : ws.entries()) {
    if (w == 0) throw Error(ErrorKind::ZeroWeight, "Delta is undefined for weight 0");
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "weight " + std::to_string(w) + " has multiplicity " + std::to_string(n));
    const long a = w > 0 ? w : -w;
    // w > 0: theta^w + y;  w < 0: theta^w + y = theta^w (1 + y theta^a)
    const ThetaPolynomial factor = w > 0 ? ThetaPolynomial::monomial(YPolynomial(1), static_cast<std::size_t>(a)) + ThetaPolynomial(y)
                                         : ThetaPolynomial(YPolynomial(1)) + ThetaPolynomial::monomial(y, static_cast<std::size_t>(a));
    for (long i = 0; i < n; ++i) numerator = numerator * factor;
    if (w < 0) shift -= a * n;
    factors.push_back({w, n});
  }
  return LocalizedClass::from_factors(std::move(numerator), shift, factors);
}

PoleProfile pole_profile(const LocalizedClass& d) {
  // canonical form of Delta|_{y=0}: the numerator is already coprime to every
  // Phi_k of the denominator, so the exponent of Phi_k is the pole order
  const LocalizedClass at_zero = substitute_y(d, Rational(0));
  PoleProfile p;
  for (const auto& [k, e] : at_zero.cyclotomic_exponents()) {
    if (e <= 0) continue;
    p.orders[k] = e;
    p.w_max = std::max(p.w_max, k);
  }
  return p;
}

SeriesProfile series_profile(const LocalizedClass& d, long w_max) {
  if (w_max < 1) throw Error(ErrorKind::InvalidArgument, "series_profile needs w_max >= 1");
  const LocalizedClass log_derivative = substitute_y(derivative_y(d), Rational(-1));
  const PowerSeries series = expand_series(log_derivative, static_cast<std::size_t>(w_max));
  SeriesProfile s;
  s.coeffs.assign(series.coefficients.begin() + 1, series.coefficients.end());
  return s;
}

WeightMultiset recover_weights(const LocalizedClass& d) {
  const PoleProfile poles = pole_profile(d);
  if (poles.orders.empty()) {
    if (d == LocalizedClass(YPolynomial(1))) return {};
    inconsistent("pole profile", "no poles but the class is not the constant 1");
  }
  const long w_max = poles.w_max;
  const SeriesProfile series = series_profile(d, w_max);

  auto at = [](const std::map<long, long>& m, long k) {
    auto it = m.find(k);
    return it == m.end() ? 0L : it->second;
  };

  // s_k = n_k + n_{-k}: A_k = sum over multiples m of k of s_m
  std::vector<long> s(static_cast<std::size_t>(w_max) + 1, 0);
  for (long k = w_max; k >= 1; --k) {
    long v = at(poles.orders, k);
    for (long j = 2; j * k <= w_max; ++j) v -= s[static_cast<std::size_t>(j * k)];
    if (v < 0) inconsistent("pole recursion", "s_" + std::to_string(k) + " = " + std::to_string(v) + " < 0");
    s[static_cast<std::size_t>(k)] = v;
  }

  std::vector<long> b(static_cast<std::size_t>(w_max) + 1, 0);
  for (long k = 1; k <= w_max; ++k) {
    const Rational& coef = series.coeffs[static_cast<std::size_t>(k - 1)];
    if (!coef.is_integer()) inconsistent("series profile", "B_" + std::to_string(k) + " = " + coef.str() + " is not an integer");
    b[static_cast<std::size_t>(k)] = coef.to_long();
  }

  WeightMultiset out;
  for (long k = 1; k <= w_max; ++k) {
    // d_k = n_{-k} - n_k: B_k = sum over divisors w of k of d_w
    long diff = 0;
    for (long dv : divisors(k)) diff += mobius(k / dv) * b[static_cast<std::size_t>(dv)];
    const long sk = s[static_cast<std::size_t>(k)];
    if ((sk - diff) % 2 != 0) inconsistent("parity", "s_" + std::to_string(k) + " and d_" + std::to_string(k) + " differ in parity");
    const long pos = (sk - diff) / 2;
    const long negw = (sk + diff) / 2;
    if (pos < 0 || negw < 0) inconsistent("multiplicity", "negative multiplicity at |w| = " + std::to_string(k));
    if (pos > 0) out.add(k, pos);
    if (negw > 0) out.add(-k, negw);
  }

  if (!(delta_from_weights(out) == d)) inconsistent("round trip", "Delta" + out.str() + " differs from the input");
  return out;
}

YPolynomial subgroup_cell_factor(const WeightMultiset& ws, long k) {
  return neg_y_power(static_cast<unsigned>(subgroup_restrict(ws, k).n_plus()));
}

KontrReport kontr_relation_check() {
  KontrReport r;
  r.terms = {
      {1, WeightMultiset::of({1, 4}), {}},
      {-1, WeightMultiset::of({1, 3}), {}},
      {1, WeightMultiset::of({2, 2}), {}},
      {1, WeightMultiset::of({3, 4}), {}},
      {-2, WeightMultiset::of({2, 4}), {}},
  };
  std::vector<LocalizedClass> scaled;
  for (auto& t : r.terms) {
    t.image = subgroup_cell_factor(t.weights, 2);
    scaled.push_back(delta_from_weights(t.weights) * LocalizedClass(YPolynomial(Rational(t.coefficient))));
    r.image_combination += t.image * Rational(t.coefficient);
  }
  r.combination = sum(scaled);
  r.combination_is_zero = r.combination.is_zero();
  r.image_nonzero = !r.image_combination.is_zero();
  return r;
}

}  // namespace chiy
