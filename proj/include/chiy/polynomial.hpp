#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "chiy/rational.hpp"

namespace chiy {

/// Dense univariate polynomial with exact rational coefficients, lowest degree
/// first. The coefficient vector never carries trailing zeros, so structural
/// equality is value equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Polynomial(I constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial monomial(Rational coefficient, std::size_t degree);
  /// The variable itself.
  static Polynomial x() { return monomial(Rational(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// Zero beyond the degree.
  Rational coefficient(std::size_t i) const;
  Rational leading() const;

  Rational operator()(const Rational& at) const;
  Polynomial derivative() const;
  /// p(inner(x)).
  Polynomial compose(const Polynomial& inner) const;
  Polynomial pow(unsigned exponent) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);
  /// this += factor * src, without temporaries.
  Polynomial& add_scaled(const Polynomial& src, long factor);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator-(const Polynomial& p);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human form such as "1 - y + 2y^2", lowest degree first.
  std::string str(std::string_view var = "y") const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Polynomials in y carry chi_y-genera and their limits.
using YPolynomial = Polynomial;

/// (-y)^n.
YPolynomial neg_y_power(unsigned n);

}  // namespace chiy
