#include "chiy/theta_polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "chiy/error.hpp"

namespace chiy {

ThetaPolynomial::ThetaPolynomial(YPolynomial constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

ThetaPolynomial::ThetaPolynomial(std::vector<YPolynomial> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

ThetaPolynomial ThetaPolynomial::monomial(YPolynomial coefficient, std::size_t degree) {
  if (coefficient.is_zero()) return {};
  std::vector<YPolynomial> c(degree + 1);
  c[degree] = std::move(coefficient);
  return ThetaPolynomial(std::move(c));
}

ThetaPolynomial ThetaPolynomial::from_integers(std::span<const long long> coefficients) {
  std::vector<YPolynomial> c;
  c.reserve(coefficients.size());
  for (long long v : coefficients) c.emplace_back(Rational(static_cast<long>(v)));
  return ThetaPolynomial(std::move(c));
}

YPolynomial ThetaPolynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : YPolynomial(); }

YPolynomial ThetaPolynomial::leading() const { return coeffs_.empty() ? YPolynomial() : coeffs_.back(); }

int ThetaPolynomial::y_degree() const noexcept {
  int d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.degree());
  return d;
}

std::size_t ThetaPolynomial::valuation() const noexcept {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return i;
  }
  return 0;
}

ThetaPolynomial ThetaPolynomial::shifted_up(std::size_t n) const {
  if (is_zero() || n == 0) return *this;
  std::vector<YPolynomial> c(n);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return ThetaPolynomial(std::move(c));
}

ThetaPolynomial ThetaPolynomial::shifted_down(std::size_t n) const {
  if (is_zero() || n == 0) return *this;
  for (std::size_t i = 0; i < std::min(n, coeffs_.size()); ++i) {
    if (!coeffs_[i].is_zero()) throw Error(ErrorKind::InvalidArgument, "shifted_down would drop a nonzero coefficient");
  }
  if (n >= coeffs_.size()) return {};
  return ThetaPolynomial(std::vector<YPolynomial>(coeffs_.begin() + static_cast<std::ptrdiff_t>(n), coeffs_.end()));
}

ThetaPolynomial ThetaPolynomial::times_integer_poly(std::span<const long long> factor) const {
  if (is_zero() || factor.empty()) return {};
  std::vector<YPolynomial> out(coeffs_.size() + factor.size() - 1);
  for (std::size_t j = 0; j < factor.size(); ++j) {
    if (factor[j] == 0) continue;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + j].add_scaled(coeffs_[i], static_cast<long>(factor[j]));
  }
  return ThetaPolynomial(std::move(out));
}

std::optional<ThetaPolynomial> ThetaPolynomial::divide_exact(std::span<const long long> monic) const {
  if (monic.empty() || monic.back() != 1) throw Error(ErrorKind::InvalidArgument, "divide_exact needs a monic divisor");
  if (is_zero()) return ThetaPolynomial();
  const std::size_t m = monic.size() - 1;
  if (coeffs_.size() <= m) return m == 0 ? std::optional<ThetaPolynomial>(*this) : std::nullopt;
  std::vector<YPolynomial> rem = coeffs_;
  std::vector<YPolynomial> quot(coeffs_.size() - m);
  for (std::size_t i = quot.size(); i-- > 0;) {
    if (rem[i + m].is_zero()) continue;
    quot[i] = rem[i + m];
    for (std::size_t j = 0; j < m; ++j) {
      if (monic[j] != 0) rem[i + j].add_scaled(quot[i], -static_cast<long>(monic[j]));
    }
    rem[i + m] = YPolynomial();
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!rem[i].is_zero()) return std::nullopt;
  }
  return ThetaPolynomial(std::move(quot));
}

YPolynomial ThetaPolynomial::evaluate_theta(const Rational& theta) const {
  YPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= theta;
    acc += *it;
  }
  return acc;
}

ThetaPolynomial ThetaPolynomial::map_coefficients(const std::function<YPolynomial(const YPolynomial&)>& f) const {
  std::vector<YPolynomial> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(f(c));
  return ThetaPolynomial(std::move(out));
}

ThetaPolynomial& ThetaPolynomial::operator+=(const ThetaPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

ThetaPolynomial& ThetaPolynomial::operator-=(const ThetaPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

ThetaPolynomial& ThetaPolynomial::operator*=(const YPolynomial& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

ThetaPolynomial operator*(const ThetaPolynomial& lhs, const ThetaPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<YPolynomial> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return ThetaPolynomial(std::move(out));
}

ThetaPolynomial operator-(const ThetaPolynomial& p) {
  ThetaPolynomial r = p;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

void ThetaPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

namespace {

bool is_monomial(const YPolynomial& p) {
  return std::count_if(p.coefficients().begin(), p.coefficients().end(), [](const Rational& c) { return !c.is_zero(); }) == 1;
}

}  // namespace

std::string ThetaPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const YPolynomial& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string body;
    bool negative = false;
    if (is_monomial(c)) {
      negative = c.coefficients()[static_cast<std::size_t>(c.degree())].sign() < 0;
      body = (negative ? -c : c).str();
      if (i > 0 && body == "1") body.clear();
    } else {
      body = "(" + c.str() + ")";
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << body;
    if (i > 0) os << "θ";
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

ThetaPolynomial cyclotomic(long k) { return ThetaPolynomial::from_integers(cyclotomic_coefficients(k)); }

}  // namespace chiy
