#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chiy/fixed_point_model.hpp"
#include "chiy/localized_class.hpp"

namespace chiy {

/// chi_y(F) * Delta(normal weights of F). For an isolated point this is the
/// full localization term td_y|_p / eu(T_p X); for a positive-dimensional
/// component it is the degree-zero part in H^*(F), integrated against F.
LocalizedClass contribution(const FixedComponent& f);

/// Sum of contributions over all components, without any constancy check.
LocalizedClass abbv_sum(const VarietyModel& m);

/// chi_y(X) by localization. Requires isolated fixed points (NotIsolated)
/// and a theta-free sum (NonConstantSum otherwise: the data cannot come from
/// a smooth complete variety).
YPolynomial abbv_genus(const VarietyModel& m);

/// chi_y(X) = sum_F chi_y(F) (-y)^{n+(F)} from the plus-decomposition.
YPolynomial bb_genus(const VarietyModel& m);

/// sum_F chi_y(F) (-y)^{n-(F)} from the minus-decomposition.
YPolynomial minus_genus(const VarietyModel& m);

struct ContributionReport {
  std::string component_id;
  long n_plus = 0;
  long n_minus = 0;
  LocalizedClass contribution;
  YPolynomial limit_minus_infinity;  // theta -> 0
  YPolynomial limit_plus_infinity;   // theta -> infinity
  /// Both limits equal chi_y(F) (-y)^{n+} and chi_y(F) (-y)^{n-}.
  bool matches = false;
};

/// Per-component limits of the localized contribution. With
/// `allow_components` false a positive-dimensional component raises
/// NotIsolated.
std::vector<ContributionReport> limits_report(const VarietyModel& m, bool allow_components = true);

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct MainTheoremReport {
  YPolynomial bb;
  std::optional<YPolynomial> abbv;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// (a) abbv_genus = bb_genus, (b) sum of theta -> 0 limits = bb_genus,
/// (c) sum of theta -> infinity limits = minus_genus.
MainTheoremReport verify_main_theorem(const VarietyModel& m);

/// P_X(t) = sum_F t^{2 n+(F)} P_F(t). Throws MissingPoincare. For isolated
/// models the result is checked against bb_genus at y = -t^2.
Polynomial poincare_polynomial(const VarietyModel& m);

/// chi_y of the fixed locus of the order-k subgroup.
YPolynomial subgroup_genus(const VarietyModel& m, long k);

/// bb_genus at y = -1 and y = +1 (algebraic sign convention).
Rational euler_characteristic(const VarietyModel& m);
Rational signature(const VarietyModel& m);

std::string_view to_string(CheckStatus s) noexcept;

}  // namespace chiy
