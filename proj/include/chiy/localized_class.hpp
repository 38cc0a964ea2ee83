#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chiy/number_theory.hpp"
#include "chiy/polynomial.hpp"
#include "chiy/theta_polynomial.hpp"

namespace chiy {

/// One factor (theta^w - 1)^multiplicity of a structured denominator.
struct DenominatorFactor {
  long w = 1;
  long multiplicity = 1;
  friend bool operator==(const DenominatorFactor&, const DenominatorFactor&) = default;
};

/// The denominator regrouped into (theta^w - 1) blocks, plus any cyclotomic
/// factors that do not assemble into a full block.
struct DenominatorView {
  std::vector<DenominatorFactor> factors;
  std::map<long, long> leftover_cyclotomics;
};

enum class LimitDirection { to_zero, to_infinity };

/// Truncated Taylor expansion at theta = 0: coefficients of theta^0..theta^K.
struct PowerSeries {
  std::vector<Rational> coefficients;
  std::size_t order() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

/// A rational function of theta with polynomial-in-y coefficients, kept as
///
///     theta^shift * numerator(theta, y) / prod_k Phi_k(theta)^{e_k}
///
/// Every denominator the engine builds is a product of factors theta^w - 1,
/// and each of those splits into cyclotomic polynomials, so the denominator is
/// stored by its cyclotomic exponents. Negative-weight factors are folded in at
/// construction: theta^{-m} - 1 = -theta^{-m} (theta^m - 1).
///
/// Canonical form: the numerator is zero or has nonzero constant term in
/// theta, and no Phi_k with e_k > 0 divides it. Because the Phi_k are
/// irreducible over Q(y) and the denominator is monic, equal values have
/// identical canonical forms. Arithmetic always returns canonical values;
/// only `unreduced` produces non-canonical ones.
class LocalizedClass {
 public:
  /// Zero.
  LocalizedClass() = default;
  LocalizedClass(YPolynomial constant);  // NOLINT(google-explicit-constructor)

  /// theta^shift * numerator / prod (theta^w - 1)^m, canonicalized. w != 0.
  static LocalizedClass from_factors(ThetaPolynomial numerator, long theta_shift,
                                     std::span<const DenominatorFactor> factors);
  /// theta^shift * numerator / prod Phi_k^{e_k}, canonicalized. e_k >= 0.
  static LocalizedClass from_cyclotomic(ThetaPolynomial numerator, long theta_shift,
                                        std::map<long, long> exponents);
  /// As from_factors but without cancelling common cyclotomic factors.
  static LocalizedClass unreduced(ThetaPolynomial numerator, long theta_shift,
                                  std::span<const DenominatorFactor> factors);

  const ThetaPolynomial& numerator() const noexcept { return numerator_; }
  long theta_shift() const noexcept { return shift_; }
  const std::map<long, long>& cyclotomic_exponents() const noexcept { return exponents_; }
  DenominatorView denominator_view() const;
  /// The denominator multiplied out.
  ThetaPolynomial expanded_denominator() const;

  bool is_canonical() const noexcept { return canonical_; }
  bool is_zero() const { return numerator_.is_zero(); }
  int y_degree() const noexcept { return numerator_.y_degree(); }

  LocalizedClass& operator+=(const LocalizedClass& rhs);
  LocalizedClass& operator-=(const LocalizedClass& rhs);
  LocalizedClass& operator*=(const LocalizedClass& rhs);

  friend LocalizedClass operator+(LocalizedClass lhs, const LocalizedClass& rhs) { return lhs += rhs; }
  friend LocalizedClass operator-(LocalizedClass lhs, const LocalizedClass& rhs) { return lhs -= rhs; }
  friend LocalizedClass operator*(LocalizedClass lhs, const LocalizedClass& rhs) { return lhs *= rhs; }
  friend LocalizedClass operator-(const LocalizedClass& c);

  /// Value equality (compares canonical forms).
  friend bool operator==(const LocalizedClass& lhs, const LocalizedClass& rhs);

  /// Factored rendering "numerator / (theta^w - 1)^m..." with any theta power.
  std::string str() const;

 private:
  friend LocalizedClass canonicalize(const LocalizedClass& c);
  friend LocalizedClass sum(std::span<const LocalizedClass> terms);

  ThetaPolynomial numerator_;
  long shift_ = 0;
  std::map<long, long> exponents_;
  bool canonical_ = true;
};

LocalizedClass canonicalize(const LocalizedClass& c);

LocalizedClass add(const LocalizedClass& a, const LocalizedClass& b);
LocalizedClass mul(const LocalizedClass& a, const LocalizedClass& b);
LocalizedClass neg(const LocalizedClass& a);

/// Exact sum over one common structured denominator, reduced once at the end.
LocalizedClass sum(std::span<const LocalizedClass> terms);

/// Partial derivative in y. The denominator is y-free, so only the numerator
/// is differentiated.
LocalizedClass derivative_y(const LocalizedClass& c);
LocalizedClass substitute_y(const LocalizedClass& c, const Rational& y0);

/// Exact value at a rational theta. Throws PoleAtTheta or ZeroTheta.
YPolynomial evaluate_theta(const LocalizedClass& c, const Rational& theta0);

/// Limit as theta -> 0 or theta -> infinity. Throws DivergesAtLimit.
YPolynomial limit_theta(const LocalizedClass& c, LimitDirection direction);

/// Taylor coefficients of degrees 0..order at theta = 0 for a y-free class.
/// Throws PoleAtZero for a negative valuation, InvalidArgument if y occurs.
PowerSeries expand_series(const LocalizedClass& c, std::size_t order);

/// The value if the class does not depend on theta.
std::optional<YPolynomial> is_theta_constant(const LocalizedClass& c);

}  // namespace chiy
