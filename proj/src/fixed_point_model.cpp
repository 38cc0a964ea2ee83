#include "chiy/fixed_point_model.hpp"

#include <set>
#include <sstream>

#include "chiy/error.hpp"

namespace chiy {

WeightMultiset::WeightMultiset(std::map<long, long> entries) : entries_(std::move(entries)) {}

WeightMultiset WeightMultiset::of(std::initializer_list<long> weights) {
  WeightMultiset ws;
  for (long w : weights) ws.add(w);
  return ws;
}

void WeightMultiset::add(long w, long multiplicity) {
  if (multiplicity == 0) return;
  entries_[w] += multiplicity;
}

long WeightMultiset::multiplicity(long w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? 0 : it->second;
}

long WeightMultiset::total() const {
  long t = 0;
  for (const auto& [w, n] : entries_) t += n;
  return t;
}

long WeightMultiset::n_plus() const {
  long t = 0;
  for (const auto& [w, n] : entries_) {
    if (w > 0) t += n;
  }
  return t;
}

long WeightMultiset::n_minus() const {
  long t = 0;
  for (const auto& [w, n] : entries_) {
    if (w < 0) t += n;
  }
  return t;
}

std::string WeightMultiset::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [w, n] : entries_) {
    if (!first) os << ", ";
    first = false;
    os << w << ':' << n;
  }
  os << '}';
  return os.str();
}

long n_plus(const WeightMultiset& ws) { return ws.n_plus(); }
long n_minus(const WeightMultiset& ws) { return ws.n_minus(); }

WeightMultiset subgroup_restrict(const WeightMultiset& ws, long k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "subgroup order must be positive");
  if (k == 1) return ws;
  WeightMultiset out;
  for (const auto& [w, n] : ws.entries()) {
    if (w % k == 0) out.add(w, n);
  }
  return out;
}

WeightMultiset negated(const WeightMultiset& ws) {
  WeightMultiset out;
  for (const auto& [w, n] : ws.entries()) out.add(-w, n);
  return out;
}

WeightMultiset operator+(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset out = a;
  for (const auto& [w, n] : b.entries()) out.add(w, n);
  return out;
}

FixedComponent fixed_point(std::string id, WeightMultiset weights) {
  FixedComponent f;
  f.id = std::move(id);
  f.dim_f = 0;
  f.chi_y = YPolynomial(1);
  f.poincare = Polynomial(1);
  f.normal_weights = std::move(weights);
  return f;
}

bool VarietyModel::is_isolated() const {
  for (const auto& c : components) {
    if (c.dim_f != 0) return false;
  }
  return true;
}

const FixedComponent* VarietyModel::find(const std::string& id) const {
  for (const auto& c : components) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::EmptyModel: return "EmptyModel";
    case ViolationKind::BadAmbientDimension: return "BadAmbientDimension";
    case ViolationKind::DuplicateId: return "DuplicateId";
    case ViolationKind::ZeroWeight: return "ZeroWeight";
    case ViolationKind::NonPositiveMultiplicity: return "NonPositiveMultiplicity";
    case ViolationKind::NegativeDimension: return "NegativeDimension";
    case ViolationKind::DimensionMismatch: return "DimensionMismatch";
    case ViolationKind::ChiYDegree: return "ChiYDegree";
    case ViolationKind::PointChiY: return "PointChiY";
    case ViolationKind::PointPoincare: return "PointPoincare";
    case ViolationKind::PoincareDegree: return "PoincareDegree";
    case ViolationKind::PoincareCoefficients: return "PoincareCoefficients";
  }
  return "Unknown";
}

std::vector<Violation> validate(const VarietyModel& m) {
  std::vector<Violation> out;
  auto report = [&](const std::string& id, ViolationKind kind, std::string message) {
    out.push_back({id, kind, std::move(message)});
  };
  if (m.components.empty()) report("", ViolationKind::EmptyModel, "model has no fixed components");
  if (m.ambient_dim < 1) report("", ViolationKind::BadAmbientDimension, "ambient_dim must be positive");

  std::set<std::string> seen;
  for (const auto& c : m.components) {
    if (!seen.insert(c.id).second) report(c.id, ViolationKind::DuplicateId, "component id '" + c.id + "' repeated");
    for (const auto& [w, n] : c.normal_weights.entries()) {
      if (w == 0) report(c.id, ViolationKind::ZeroWeight, "normal weight 0 (component is not a full fixed component)");
      if (n < 1) report(c.id, ViolationKind::NonPositiveMultiplicity, "weight " + std::to_string(w) + " has multiplicity " + std::to_string(n));
    }
    if (c.dim_f < 0) report(c.id, ViolationKind::NegativeDimension, "dim_f is negative");
    if (c.dim_f + c.normal_weights.total() != m.ambient_dim) {
      report(c.id, ViolationKind::DimensionMismatch,
             "dim_f + rank(normal) = " + std::to_string(c.dim_f + c.normal_weights.total()) + " but ambient_dim = " + std::to_string(m.ambient_dim));
    }
    if (c.chi_y.degree() > c.dim_f) report(c.id, ViolationKind::ChiYDegree, "deg chi_y exceeds dim_f");
    if (c.dim_f == 0 && c.chi_y != YPolynomial(1)) report(c.id, ViolationKind::PointChiY, "a point must have chi_y = 1");
    if (c.poincare) {
      const Polynomial& p = *c.poincare;
      if (c.dim_f == 0 && p != Polynomial(1)) report(c.id, ViolationKind::PointPoincare, "a point must have Poincare polynomial 1");
      if (p.degree() > 2 * c.dim_f) report(c.id, ViolationKind::PoincareDegree, "deg P_F exceeds 2 dim_f");
      for (const auto& coef : p.coefficients()) {
        if (!coef.is_integer() || coef.sign() < 0) {
          report(c.id, ViolationKind::PoincareCoefficients, "Poincare coefficients must be non-negative integers");
          break;
        }
      }
    }
  }
  return out;
}

void require_valid(const VarietyModel& m) {
  const auto violations = validate(m);
  if (violations.empty()) return;
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    if (i > 0) os << "; ";
    os << to_string(v.kind);
    if (!v.component_id.empty()) os << " at component '" << v.component_id << "'";
    os << " (" << v.message << ")";
  }
  throw Error(ErrorKind::ValidationError, os.str());
}

VarietyModel reduce_gkm(const GKMPointSet& g, const std::string& name) {
  if (g.rank < 1) throw Error(ErrorKind::SchemaError, "GKM rank must be positive");
  if (static_cast<long>(g.cocharacter.size()) != g.rank) throw Error(ErrorKind::SchemaError, "cocharacter length differs from rank");
  if (g.points.empty()) throw Error(ErrorKind::SchemaError, "GKM data has no points");

  VarietyModel m;
  m.name = name;
  m.ambient_dim = static_cast<long>(g.points.front().multiweights.size());
  for (const auto& p : g.points) {
    if (static_cast<long>(p.multiweights.size()) != m.ambient_dim) {
      throw Error(ErrorKind::SchemaError, "point '" + p.id + "' has a different number of multiweights");
    }
    WeightMultiset ws;
    for (const auto& mw : p.multiweights) {
      if (static_cast<long>(mw.size()) != g.rank) throw Error(ErrorKind::SchemaError, "multiweight of wrong length at '" + p.id + "'");
      bool nonzero = false;
      long pairing = 0;
      std::ostringstream text;
      text << '(';
      for (std::size_t i = 0; i < mw.size(); ++i) {
        nonzero = nonzero || mw[i] != 0;
        pairing += mw[i] * g.cocharacter[i];
        text << (i ? "," : "") << mw[i];
      }
      text << ')';
      if (!nonzero) throw Error(ErrorKind::SchemaError, "zero multiweight at '" + p.id + "'");
      if (pairing == 0) throw Error(ErrorKind::NonGenericCocharacter, "point '" + p.id + "', multiweight " + text.str());
      ws.add(pairing);
    }
    m.components.push_back(fixed_point(p.id, std::move(ws)));
  }
  if (m.ambient_dim < 1) throw Error(ErrorKind::SchemaError, "GKM points carry no multiweights");
  return m;
}

VarietyModel opposite(const VarietyModel& m) {
  VarietyModel out = m;
  for (auto& c : out.components) c.normal_weights = negated(c.normal_weights);
  return out;
}

}  // namespace chiy
