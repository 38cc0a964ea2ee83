#include "chiy/localized_class.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "chiy/error.hpp"

namespace chiy {

namespace {

void add_block(std::map<long, long>& exponents, long w, long multiplicity) {
  for (long d : divisors(w)) exponents[d] += multiplicity;
}

void reduce(ThetaPolynomial& numerator, long& shift, std::map<long, long>& exponents) {
  if (numerator.is_zero()) {
    shift = 0;
    exponents.clear();
    return;
  }
  const std::size_t v = numerator.valuation();
  if (v > 0) {
    numerator = numerator.shifted_down(v);
    shift += static_cast<long>(v);
  }
  for (auto it = exponents.begin(); it != exponents.end();) {
    const IntPolynomial& phi = cyclotomic_coefficients(it->first);
    while (it->second > 0) {
      auto quotient = numerator.divide_exact(phi);
      if (!quotient) break;
      numerator = std::move(*quotient);
      --it->second;
    }
    it = it->second == 0 ? exponents.erase(it) : std::next(it);
  }
}

ThetaPolynomial times_cyclotomic_power(ThetaPolynomial p, long k, long e) {
  const IntPolynomial& phi = cyclotomic_coefficients(k);
  for (long i = 0; i < e; ++i) p = p.times_integer_poly(phi);
  return p;
}

Rational power_of(const Rational& base, long e) { return base.pow(e); }

}  // namespace

LocalizedClass::LocalizedClass(YPolynomial constant) : numerator_(std::move(constant)) {}

LocalizedClass LocalizedClass::unreduced(ThetaPolynomial numerator, long theta_shift,
                                         std::span<const DenominatorFactor> factors) {
  LocalizedClass c;
  c.shift_ = theta_shift;
  bool negate = false;
  for (const auto& f : factors) {
    if (f.w == 0) throw Error(ErrorKind::ZeroWeight, "denominator factor theta^0 - 1 vanishes identically");
    if (f.multiplicity < 0) throw Error(ErrorKind::InvalidArgument, "negative denominator multiplicity");
    if (f.multiplicity == 0) continue;
    const long a = f.w > 0 ? f.w : -f.w;
    if (f.w < 0) {
      // 1/(theta^-a - 1)^m = (-1)^m theta^(a m) / (theta^a - 1)^m
      if (f.multiplicity % 2 == 1) negate = !negate;
      c.shift_ += a * f.multiplicity;
    }
    add_block(c.exponents_, a, f.multiplicity);
  }
  c.numerator_ = negate ? -numerator : std::move(numerator);
  c.canonical_ = c.numerator_.is_zero() && c.exponents_.empty() && c.shift_ == 0;
  return c;
}

LocalizedClass LocalizedClass::from_factors(ThetaPolynomial numerator, long theta_shift,
                                            std::span<const DenominatorFactor> factors) {
  return canonicalize(unreduced(std::move(numerator), theta_shift, factors));
}

LocalizedClass LocalizedClass::from_cyclotomic(ThetaPolynomial numerator, long theta_shift,
                                               std::map<long, long> exponents) {
  LocalizedClass c;
  c.numerator_ = std::move(numerator);
  c.shift_ = theta_shift;
  for (const auto& [k, e] : exponents) {
    if (k < 1 || e < 0) throw Error(ErrorKind::InvalidArgument, "bad cyclotomic exponent entry");
    if (e > 0) c.exponents_[k] = e;
  }
  reduce(c.numerator_, c.shift_, c.exponents_);
  return c;
}

LocalizedClass canonicalize(const LocalizedClass& c) {
  if (c.canonical_) return c;
  LocalizedClass r = c;
  reduce(r.numerator_, r.shift_, r.exponents_);
  r.canonical_ = true;
  return r;
}

DenominatorView LocalizedClass::denominator_view() const {
  DenominatorView view;
  std::map<long, long> rest = exponents_;
  std::map<long, long> blocks;
  for (;;) {
    long best = 0;
    for (auto it = rest.rbegin(); it != rest.rend() && best == 0; ++it) {
      const long w = it->first;
      const auto ds = divisors(w);
      if (std::all_of(ds.begin(), ds.end(), [&](long d) {
            auto f = rest.find(d);
            return f != rest.end() && f->second > 0;
          })) {
        best = w;
      }
    }
    if (best == 0) break;
    for (long d : divisors(best)) {
      if (--rest[d] == 0) rest.erase(d);
    }
    ++blocks[best];
  }
  for (const auto& [w, m] : blocks) view.factors.push_back({w, m});
  view.leftover_cyclotomics = std::move(rest);
  return view;
}

ThetaPolynomial LocalizedClass::expanded_denominator() const {
  ThetaPolynomial d(YPolynomial(1));
  for (const auto& [k, e] : exponents_) d = times_cyclotomic_power(std::move(d), k, e);
  return d;
}

LocalizedClass sum(std::span<const LocalizedClass> terms) {
  std::vector<const LocalizedClass*> live;
  for (const auto& t : terms) {
    if (!t.is_zero()) live.push_back(&t);
  }
  if (live.empty()) return {};
  if (live.size() == 1) return canonicalize(*live.front());

  LocalizedClass out;
  out.shift_ = std::numeric_limits<long>::max();
  for (const auto* t : live) {
    out.shift_ = std::min(out.shift_, t->shift_);
    for (const auto& [k, e] : t->exponents_) out.exponents_[k] = std::max(out.exponents_[k], e);
  }
  for (const auto* t : live) {
    ThetaPolynomial n = t->numerator_.shifted_up(static_cast<std::size_t>(t->shift_ - out.shift_));
    for (const auto& [k, e] : out.exponents_) {
      auto own = t->exponents_.find(k);
      const long missing = e - (own == t->exponents_.end() ? 0 : own->second);
      if (missing > 0) n = times_cyclotomic_power(std::move(n), k, missing);
    }
    out.numerator_ += n;
  }
  reduce(out.numerator_, out.shift_, out.exponents_);
  out.canonical_ = true;
  return out;
}

LocalizedClass& LocalizedClass::operator+=(const LocalizedClass& rhs) {
  const LocalizedClass terms[] = {*this, rhs};
  return *this = sum(terms);
}

LocalizedClass& LocalizedClass::operator-=(const LocalizedClass& rhs) { return *this += -rhs; }

LocalizedClass& LocalizedClass::operator*=(const LocalizedClass& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = LocalizedClass();
  numerator_ = numerator_ * rhs.numerator_;
  shift_ += rhs.shift_;
  for (const auto& [k, e] : rhs.exponents_) exponents_[k] += e;
  reduce(numerator_, shift_, exponents_);
  canonical_ = true;
  return *this;
}

LocalizedClass operator-(const LocalizedClass& c) {
  LocalizedClass r = c;
  r.numerator_ = -r.numerator_;
  return r;
}

bool operator==(const LocalizedClass& lhs, const LocalizedClass& rhs) {
  if (!lhs.canonical_ || !rhs.canonical_) return canonicalize(lhs) == canonicalize(rhs);
  return lhs.shift_ == rhs.shift_ && lhs.exponents_ == rhs.exponents_ && lhs.numerator_ == rhs.numerator_;
}

std::string LocalizedClass::str() const {
  const LocalizedClass c = canonicalize(*this);
  if (c.is_zero()) return "0";
  std::ostringstream os;
  const std::string num = c.numerator_.degree() == 0 ? c.numerator_.coefficient(0).str() : c.numerator_.str();
  const bool compound = num.find(' ') != std::string::npos;
  const bool has_den = !c.exponents_.empty();
  if (c.shift_ != 0) os << "θ^" << c.shift_ << "·";
  if (compound && (has_den || c.shift_ != 0)) {
    os << '(' << num << ')';
  } else {
    os << num;
  }
  if (!has_den) return os.str();
  os << " / ";
  const DenominatorView view = c.denominator_view();
  for (const auto& f : view.factors) {
    os << "(θ";
    if (f.w > 1) os << '^' << f.w;
    os << " - 1)";
    if (f.multiplicity > 1) os << '^' << f.multiplicity;
  }
  for (const auto& [k, e] : view.leftover_cyclotomics) {
    os << "Φ" << k << "(θ)";
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

LocalizedClass add(const LocalizedClass& a, const LocalizedClass& b) { return a + b; }
LocalizedClass mul(const LocalizedClass& a, const LocalizedClass& b) { return a * b; }
LocalizedClass neg(const LocalizedClass& a) { return canonicalize(-a); }

LocalizedClass derivative_y(const LocalizedClass& c) {
  const LocalizedClass base = canonicalize(c);
  return LocalizedClass::from_cyclotomic(
      base.numerator().map_coefficients([](const YPolynomial& p) { return p.derivative(); }), base.theta_shift(),
      base.cyclotomic_exponents());
}

LocalizedClass substitute_y(const LocalizedClass& c, const Rational& y0) {
  const LocalizedClass base = canonicalize(c);
  return LocalizedClass::from_cyclotomic(
      base.numerator().map_coefficients([&](const YPolynomial& p) { return YPolynomial(p(y0)); }), base.theta_shift(),
      base.cyclotomic_exponents());
}

YPolynomial evaluate_theta(const LocalizedClass& c, const Rational& theta0) {
  const LocalizedClass base = canonicalize(c);
  if (theta0.is_zero() && base.theta_shift() < 0) {
    throw Error(ErrorKind::ZeroTheta, "theta = 0 meets a negative power of theta");
  }
  Rational denominator(1);
  for (const auto& [k, e] : base.cyclotomic_exponents()) {
    const Rational phi = ThetaPolynomial::from_integers(cyclotomic_coefficients(k)).evaluate_theta(theta0).coefficient(0);
    if (phi.is_zero()) {
      throw Error(ErrorKind::PoleAtTheta, "Phi_" + std::to_string(k) + " vanishes at theta = " + theta0.str());
    }
    denominator *= power_of(phi, e);
  }
  YPolynomial value = base.numerator().evaluate_theta(theta0);
  if (base.theta_shift() != 0) value *= power_of(theta0, base.theta_shift());
  return value * (Rational(1) / denominator);
}

YPolynomial limit_theta(const LocalizedClass& c, LimitDirection direction) {
  const LocalizedClass base = canonicalize(c);
  if (base.is_zero()) return {};
  if (direction == LimitDirection::to_zero) {
    if (base.theta_shift() < 0) throw Error(ErrorKind::DivergesAtLimit, "pole at theta = 0");
    if (base.theta_shift() > 0) return {};
    // Phi_1(0) = -1 and Phi_k(0) = 1 for k >= 2
    const auto phi1 = base.cyclotomic_exponents().find(1);
    const bool odd = phi1 != base.cyclotomic_exponents().end() && phi1->second % 2 == 1;
    YPolynomial value = base.numerator().coefficient(0);
    return odd ? -value : value;
  }
  long den_degree = 0;
  for (const auto& [k, e] : base.cyclotomic_exponents()) den_degree += euler_totient(k) * e;
  const long num_degree = base.numerator().degree() + base.theta_shift();
  if (num_degree > den_degree) throw Error(ErrorKind::DivergesAtLimit, "pole at theta = infinity");
  if (num_degree < den_degree) return {};
  return base.numerator().leading();
}

PowerSeries expand_series(const LocalizedClass& c, std::size_t order) {
  const LocalizedClass base = canonicalize(c);
  if (base.y_degree() > 0) throw Error(ErrorKind::InvalidArgument, "expand_series needs a y-free class");
  if (base.theta_shift() < 0) throw Error(ErrorKind::PoleAtZero, "negative valuation at theta = 0");
  PowerSeries out;
  out.coefficients.assign(order + 1, Rational());
  const auto& num = base.numerator().coefficients();
  const auto shift = static_cast<std::size_t>(base.theta_shift());
  for (std::size_t i = 0; i < num.size() && i + shift <= order; ++i) out.coefficients[i + shift] = num[i].coefficient(0);
  // divide by each Phi_k in turn; Phi_k(0) = +-1 so the recursion is exact
  for (const auto& [k, e] : base.cyclotomic_exponents()) {
    const IntPolynomial& phi = cyclotomic_coefficients(k);
    const Rational lead(static_cast<long>(phi[0]));
    for (long rep = 0; rep < e; ++rep) {
      auto& s = out.coefficients;
      for (std::size_t i = 0; i <= order; ++i) {
        Rational acc = s[i];
        for (std::size_t j = 1; j < phi.size() && j <= i; ++j) {
          if (phi[j] != 0) acc -= Rational(static_cast<long>(phi[j])) * s[i - j];
        }
        s[i] = acc / lead;
      }
    }
  }
  return out;
}

std::optional<YPolynomial> is_theta_constant(const LocalizedClass& c) {
  const LocalizedClass base = canonicalize(c);
  if (!base.cyclotomic_exponents().empty() || base.theta_shift() != 0 || base.numerator().degree() > 0) {
    return std::nullopt;
  }
  return base.numerator().coefficient(0);
}

}  // namespace chiy
