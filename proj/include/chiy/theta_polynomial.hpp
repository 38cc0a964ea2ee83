#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chiy/number_theory.hpp"
#include "chiy/polynomial.hpp"

namespace chiy {

/// Polynomial in theta whose coefficients are polynomials in y, i.e. an
/// element of Q[y][theta]. Stored densely in theta, lowest degree first, with
/// no trailing zero coefficient.
class ThetaPolynomial {
 public:
  ThetaPolynomial() = default;
  ThetaPolynomial(YPolynomial constant);  // NOLINT(google-explicit-constructor)
  explicit ThetaPolynomial(std::vector<YPolynomial> coefficients);
  static ThetaPolynomial monomial(YPolynomial coefficient, std::size_t degree);
  static ThetaPolynomial from_integers(std::span<const long long> coefficients);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<YPolynomial>& coefficients() const noexcept { return coeffs_; }
  YPolynomial coefficient(std::size_t i) const;
  YPolynomial leading() const;
  /// Largest y-degree among the coefficients, -1 for zero.
  int y_degree() const noexcept;
  /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  std::size_t valuation() const noexcept;

  /// Multiply by theta^n.
  ThetaPolynomial shifted_up(std::size_t n) const;
  /// Divide by theta^n; the low coefficients must be zero.
  ThetaPolynomial shifted_down(std::size_t n) const;

  ThetaPolynomial times_integer_poly(std::span<const long long> factor) const;
  /// Exact quotient by a monic integer polynomial, or nothing if the
  /// remainder is nonzero.
  std::optional<ThetaPolynomial> divide_exact(std::span<const long long> monic) const;

  YPolynomial evaluate_theta(const Rational& theta) const;
  ThetaPolynomial map_coefficients(const std::function<YPolynomial(const YPolynomial&)>& f) const;

  ThetaPolynomial& operator+=(const ThetaPolynomial& rhs);
  ThetaPolynomial& operator-=(const ThetaPolynomial& rhs);
  ThetaPolynomial& operator*=(const YPolynomial& scalar);

  friend ThetaPolynomial operator+(ThetaPolynomial lhs, const ThetaPolynomial& rhs) { return lhs += rhs; }
  friend ThetaPolynomial operator-(ThetaPolynomial lhs, const ThetaPolynomial& rhs) { return lhs -= rhs; }
  friend ThetaPolynomial operator*(const ThetaPolynomial& lhs, const ThetaPolynomial& rhs);
  friend ThetaPolynomial operator*(ThetaPolynomial lhs, const YPolynomial& rhs) { return lhs *= rhs; }
  friend ThetaPolynomial operator-(const ThetaPolynomial& p);

  friend bool operator==(const ThetaPolynomial&, const ThetaPolynomial&) = default;

  /// Human form in theta with parenthesized y-coefficients, e.g. "y + θ".
  std::string str() const;

 private:
  void trim();
  std::vector<YPolynomial> coeffs_;
};

/// Phi_k as an element of Q[y][theta] (integer coefficients, no y).
ThetaPolynomial cyclotomic(long k);

}  // namespace chiy
