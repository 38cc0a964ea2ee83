#include "chiy/localization.hpp"

#include "chiy/error.hpp"
#include "chiy/weight_recovery.hpp"

namespace chiy {

LocalizedClass contribution(const FixedComponent& f) {
  return delta_from_weights(f.normal_weights) * LocalizedClass(f.chi_y);
}

LocalizedClass abbv_sum(const VarietyModel& m) {
  std::vector<LocalizedClass> terms;
  terms.reserve(m.components.size());
  for (const auto& f : m.components) terms.push_back(contribution(f));
  return sum(terms);
}

YPolynomial abbv_genus(const VarietyModel& m) {
  for (const auto& f : m.components) {
    if (f.dim_f != 0) throw Error(ErrorKind::NotIsolated, "component '" + f.id + "' has dimension " + std::to_string(f.dim_f));
  }
  const LocalizedClass total = abbv_sum(m);
  auto value = is_theta_constant(total);
  if (!value) throw Error(ErrorKind::NonConstantSum, "localization sum " + total.str() + " depends on theta");
  return *value;
}

YPolynomial bb_genus(const VarietyModel& m) {
  YPolynomial g;
  for (const auto& f : m.components) g += f.chi_y * neg_y_power(static_cast<unsigned>(f.normal_weights.n_plus()));
  return g;
}

YPolynomial minus_genus(const VarietyModel& m) {
  YPolynomial g;
  for (const auto& f : m.components) g += f.chi_y * neg_y_power(static_cast<unsigned>(f.normal_weights.n_minus()));
  return g;
}

std::vector<ContributionReport> limits_report(const VarietyModel& m, bool allow_components) {
  std::vector<ContributionReport> out;
  for (const auto& f : m.components) {
    if (!allow_components && f.dim_f != 0) throw Error(ErrorKind::NotIsolated, "component '" + f.id + "' is not a point");
    ContributionReport r;
    r.component_id = f.id;
    r.n_plus = f.normal_weights.n_plus();
    r.n_minus = f.normal_weights.n_minus();
    r.contribution = contribution(f);
    r.limit_minus_infinity = limit_theta(r.contribution, LimitDirection::to_zero);
    r.limit_plus_infinity = limit_theta(r.contribution, LimitDirection::to_infinity);
    r.matches = r.limit_minus_infinity == f.chi_y * neg_y_power(static_cast<unsigned>(r.n_plus)) &&
                r.limit_plus_infinity == f.chi_y * neg_y_power(static_cast<unsigned>(r.n_minus));
    out.push_back(std::move(r));
  }
  return out;
}

bool MainTheoremReport::passed() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return false;
  }
  return true;
}

MainTheoremReport verify_main_theorem(const VarietyModel& m) {
  MainTheoremReport report;
  report.bb = bb_genus(m);

  CheckResult a{"abbv = bb", CheckStatus::Skipped, "positive-dimensional components"};
  if (m.is_isolated()) {
    try {
      report.abbv = abbv_genus(m);
      const bool same = *report.abbv == report.bb;
      a.status = same ? CheckStatus::Pass : CheckStatus::Fail;
      a.detail = same ? report.bb.str() : "abbv " + report.abbv->str() + " vs bb " + report.bb.str();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonConstantSum) throw;
      a.status = CheckStatus::Fail;
      a.detail = e.what();
    }
  }
  report.checks.push_back(std::move(a));

  const auto rows = limits_report(m);
  YPolynomial zero_sum;
  YPolynomial inf_sum;
  for (const auto& r : rows) {
    zero_sum += r.limit_minus_infinity;
    inf_sum += r.limit_plus_infinity;
  }
  const bool b_ok = zero_sum == report.bb;
  report.checks.push_back({"sum of theta->0 limits = bb", b_ok ? CheckStatus::Pass : CheckStatus::Fail,
                           b_ok ? zero_sum.str() : zero_sum.str() + " vs " + report.bb.str()});
  const YPolynomial minus = minus_genus(m);
  const bool c_ok = inf_sum == minus;
  report.checks.push_back({"sum of theta->inf limits = minus genus", c_ok ? CheckStatus::Pass : CheckStatus::Fail,
                           c_ok ? inf_sum.str() : inf_sum.str() + " vs " + minus.str()});
  return report;
}

Polynomial poincare_polynomial(const VarietyModel& m) {
  Polynomial p;
  for (const auto& f : m.components) {
    std::optional<Polynomial> pf = f.poincare;
    if (!pf && f.dim_f == 0) pf = Polynomial(1);
    if (!pf) throw Error(ErrorKind::MissingPoincare, "component '" + f.id + "' has no Poincare polynomial");
    p += Polynomial::monomial(Rational(1), static_cast<std::size_t>(2 * f.normal_weights.n_plus())) * *pf;
  }
  if (m.is_isolated()) {
    const Polynomial minus_t_squared = Polynomial::monomial(Rational(-1), 2);
    if (bb_genus(m).compose(minus_t_squared) != p) {
      throw Error(ErrorKind::ValidationError, "Poincare polynomial disagrees with chi_y at y = -t^2");
    }
  }
  return p;
}

YPolynomial subgroup_genus(const VarietyModel& m, long k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "subgroup order must be positive");
  YPolynomial g;
  for (const auto& f : m.components) {
    g += f.chi_y * neg_y_power(static_cast<unsigned>(subgroup_restrict(f.normal_weights, k).n_plus()));
  }
  return g;
}

Rational euler_characteristic(const VarietyModel& m) { return bb_genus(m)(Rational(-1)); }

Rational signature(const VarietyModel& m) { return bb_genus(m)(Rational(1)); }

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIP";
  }
  return "?";
}

}  // namespace chiy
