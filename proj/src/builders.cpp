#include "chiy/builders.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "chiy/error.hpp"
#include "chiy/rational.hpp"

namespace chiy {

namespace {

void require_distinct(std::span<const long> a) {
  std::set<long> seen(a.begin(), a.end());
  if (seen.size() != a.size()) throw Error(ErrorKind::DuplicateWeights, "linearization weights must be distinct");
}

struct DualBasis {
  Rational determinant;
  std::vector<std::vector<Rational>> rows;  // rows[i] pairs to delta_ij with ray j
};

// Gauss-Jordan on the matrix whose columns are the cone's rays.
DualBasis invert_columns(const std::vector<std::vector<long>>& columns) {
  const std::size_t d = columns.size();
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(2 * d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) a[r][c] = Rational(columns[c][r]);
    a[r][d + r] = Rational(1);
  }
  Rational det(1);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && a[pivot][col].is_zero()) ++pivot;
    if (pivot == d) return {Rational(0), {}};
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    const Rational p = a[col][col];
    det *= p;
    for (auto& x : a[col]) x /= p;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * d; ++c) a[r][c] -= f * a[col][c];
    }
  }
  DualBasis out{det, {}};
  for (std::size_t r = 0; r < d; ++r) out.rows.emplace_back(a[r].begin() + static_cast<std::ptrdiff_t>(d), a[r].end());
  return out;
}

std::string subset_id(const std::vector<long>& subset) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < subset.size(); ++i) os << (i ? "," : "") << subset[i];
  os << '}';
  return os.str();
}

void check_complete(const Fan& fan) {
  const long d = fan.dim();
  if (static_cast<long>(fan.cones.size()) < d + 1) {
    throw Error(ErrorKind::IncompleteFan, "a complete fan in dimension " + std::to_string(d) + " needs at least " + std::to_string(d + 1) + " maximal cones");
  }
  std::map<std::vector<long>, int> facets;
  for (const auto& cone : fan.cones) {
    std::vector<long> sorted = cone;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t skip = 0; skip < sorted.size(); ++skip) {
      std::vector<long> facet;
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i != skip) facet.push_back(sorted[i]);
      }
      ++facets[facet];
    }
  }
  for (const auto& [facet, count] : facets) {
    if (count != 2) throw Error(ErrorKind::IncompleteFan, "facet " + subset_id(facet) + " lies in " + std::to_string(count) + " maximal cones");
  }
}

}  // namespace

VarietyModel projective_space(long n, std::span<const long> a) {
  if (n < 1) throw Error(ErrorKind::BadRange, "projective space dimension must be positive");
  if (static_cast<long>(a.size()) != n + 1) throw Error(ErrorKind::BadRange, "P^n needs n+1 linearization weights");
  require_distinct(a);
  VarietyModel m;
  m.name = "P" + std::to_string(n);
  m.ambient_dim = n;
  for (std::size_t i = 0; i < a.size(); ++i) {
    WeightMultiset ws;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j != i) ws.add(a[j] - a[i]);
    }
    m.components.push_back(fixed_point("p" + std::to_string(i), std::move(ws)));
  }
  return m;
}

VarietyModel grassmannian(long k, long n, std::span<const long> a) {
  if (n < 2 || k < 1 || k > n - 1) throw Error(ErrorKind::BadRange, "G(k,n) needs 1 <= k <= n-1");
  if (static_cast<long>(a.size()) != n) throw Error(ErrorKind::BadRange, "G(k,n) needs n linearization weights");
  require_distinct(a);
  VarietyModel m;
  m.name = "G(" + std::to_string(k) + "," + std::to_string(n) + ")";
  m.ambient_dim = k * (n - k);
  // lexicographic k-subsets via a selection mask
  std::vector<bool> chosen(static_cast<std::size_t>(n), false);
  std::fill(chosen.begin(), chosen.begin() + k, true);
  do {
    std::vector<long> subset;
    for (long i = 0; i < n; ++i) {
      if (chosen[static_cast<std::size_t>(i)]) subset.push_back(i + 1);
    }
    WeightMultiset ws;
    for (long i = 0; i < n; ++i) {
      if (!chosen[static_cast<std::size_t>(i)]) continue;
      for (long j = 0; j < n; ++j) {
        if (!chosen[static_cast<std::size_t>(j)]) ws.add(a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(i)]);
      }
    }
    m.components.push_back(fixed_point(subset_id(subset), std::move(ws)));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return m;
}

VarietyModel toric_from_fan(const Fan& fan, std::span<const long> cocharacter) {
  const long d = fan.dim();
  if (d < 1) throw Error(ErrorKind::BadRange, "fan has no rays");
  for (const auto& r : fan.rays) {
    if (static_cast<long>(r.size()) != d) throw Error(ErrorKind::BadRange, "rays of differing dimension");
  }
  if (static_cast<long>(cocharacter.size()) != d) throw Error(ErrorKind::BadRange, "cocharacter dimension differs from the fan");
  for (const auto& cone : fan.cones) {
    std::set<long> distinct(cone.begin(), cone.end());
    if (static_cast<long>(cone.size()) != d || static_cast<long>(distinct.size()) != d) {
      throw Error(ErrorKind::BadRange, "maximal cones must list dim distinct rays");
    }
    for (long idx : cone) {
      if (idx < 0 || idx >= static_cast<long>(fan.rays.size())) throw Error(ErrorKind::BadRange, "ray index out of range");
    }
  }
  check_complete(fan);

  VarietyModel m;
  m.name = "toric";
  m.ambient_dim = d;
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    const auto& cone = fan.cones[c];
    std::vector<std::vector<long>> columns;
    for (long idx : cone) columns.push_back(fan.rays[static_cast<std::size_t>(idx)]);
    const DualBasis dual = invert_columns(columns);
    if (dual.determinant.abs() != Rational(1)) {
      throw Error(ErrorKind::NonSmoothCone, "cone " + subset_id(cone) + " has determinant " + dual.determinant.str());
    }
    WeightMultiset ws;
    for (const auto& u : dual.rows) {
      Rational pairing;
      for (long i = 0; i < d; ++i) pairing += u[static_cast<std::size_t>(i)] * Rational(cocharacter[static_cast<std::size_t>(i)]);
      if (pairing.is_zero()) throw Error(ErrorKind::NonGenericCocharacter, "cone " + subset_id(cone) + " has a dual vector orthogonal to the cocharacter");
      ws.add(pairing.to_long());
    }
    m.components.push_back(fixed_point("cone" + std::to_string(c), std::move(ws)));
  }
  return m;
}

VarietyModel product(const VarietyModel& m1, const VarietyModel& m2) {
  VarietyModel m;
  m.name = m1.name + " x " + m2.name;
  m.ambient_dim = m1.ambient_dim + m2.ambient_dim;
  for (const auto& f1 : m1.components) {
    for (const auto& f2 : m2.components) {
      FixedComponent f;
      f.id = "(" + f1.id + "," + f2.id + ")";
      f.dim_f = f1.dim_f + f2.dim_f;
      f.chi_y = f1.chi_y * f2.chi_y;
      if (f1.poincare && f2.poincare) f.poincare = *f1.poincare * *f2.poincare;
      f.normal_weights = f1.normal_weights + f2.normal_weights;
      m.components.push_back(std::move(f));
    }
  }
  return m;
}

VarietyModel point_model() {
  VarietyModel m;
  m.name = "pt";
  m.ambient_dim = 0;
  m.components.push_back(fixed_point("pt", {}));
  return m;
}

Fan projective_line_fan() { return Fan{{{1}, {-1}}, {{0}, {1}}}; }

Fan projective_plane_fan() { return Fan{{{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}}; }

Fan hirzebruch_fan(long r) { return Fan{{{1, 0}, {0, 1}, {-1, 0}, {r, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}; }

}  // namespace chiy
