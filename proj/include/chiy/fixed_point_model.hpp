#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chiy/polynomial.hpp"

namespace chiy {

/// Multiset of tangent (or normal) weights, w -> n_w.
///
/// Entries are stored as given; the invariants (no weight 0, multiplicities
/// positive) are checked by `validate` and by every consumer that would
/// divide by theta^0 - 1.
class WeightMultiset {
 public:
  WeightMultiset() = default;
  explicit WeightMultiset(std::map<long, long> entries);
  /// Each listed weight counted once.
  static WeightMultiset of(std::initializer_list<long> weights);

  void add(long w, long multiplicity = 1);

  const std::map<long, long>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  long multiplicity(long w) const;
  long total() const;
  long n_plus() const;
  long n_minus() const;

  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

  /// "{-1:1, 2:3}".
  std::string str() const;

 private:
  std::map<long, long> entries_;
};

long n_plus(const WeightMultiset& ws);
long n_minus(const WeightMultiset& ws);

/// Entries whose weight is divisible by k; these are the normal directions
/// that survive in the fixed locus of the order-k subgroup.
WeightMultiset subgroup_restrict(const WeightMultiset& ws, long k);

/// Every weight negated (the opposite cocharacter).
WeightMultiset negated(const WeightMultiset& ws);

/// Multiset union.
WeightMultiset operator+(const WeightMultiset& a, const WeightMultiset& b);

struct FixedComponent {
  std::string id;
  long dim_f = 0;
  YPolynomial chi_y{1};
  /// Poincare polynomial in t with non-negative integer coefficients.
  std::optional<Polynomial> poincare;
  WeightMultiset normal_weights;
};

/// An isolated fixed point with the given tangent weights.
FixedComponent fixed_point(std::string id, WeightMultiset weights);

struct VarietyModel {
  std::string name;
  long ambient_dim = 0;
  std::vector<FixedComponent> components;

  bool is_isolated() const;
  const FixedComponent* find(const std::string& id) const;
};

enum class ViolationKind {
  EmptyModel,
  BadAmbientDimension,
  DuplicateId,
  ZeroWeight,
  NonPositiveMultiplicity,
  NegativeDimension,
  DimensionMismatch,
  ChiYDegree,
  PointChiY,
  PointPoincare,
  PoincareDegree,
  PoincareCoefficients,
};

std::string_view to_string(ViolationKind kind) noexcept;

struct Violation {
  std::string component_id;  // empty for model-level violations
  ViolationKind kind;
  std::string message;
};

/// Empty iff all model invariants hold.
std::vector<Violation> validate(const VarietyModel& m);

/// Throws ValidationError describing the first violations, if any.
void require_valid(const VarietyModel& m);

/// Fixed points of a rank-r torus with their multi-weights, plus the
/// cocharacter used to restrict to a one-dimensional torus.
struct GKMPoint {
  std::string id;
  std::vector<std::vector<long>> multiweights;
};

struct GKMPointSet {
  long rank = 0;
  std::vector<GKMPoint> points;
  std::vector<long> cocharacter;
};

/// Pairs every multi-weight with the cocharacter. Throws
/// NonGenericCocharacter when a pairing vanishes.
VarietyModel reduce_gkm(const GKMPointSet& g, const std::string& name = "gkm");

/// Same fixed locus with the opposite cocharacter.
VarietyModel opposite(const VarietyModel& m);

}  // namespace chiy
