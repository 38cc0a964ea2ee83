#include "chiy/random_models.hpp"

#include <algorithm>
#include <set>

#include "chiy/error.hpp"

namespace chiy {

std::vector<long> random_distinct(Rng& rng, std::size_t count, long lo, long hi) {
  if (hi - lo + 1 < static_cast<long>(count)) throw Error(ErrorKind::InvalidArgument, "range too small for distinct draw");
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<long> out;
  std::set<long> seen;
  while (out.size() < count) {
    const long v = dist(rng);
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

std::vector<long> random_generic_cocharacter(Rng& rng, const Fan& fan, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<long> c(static_cast<std::size_t>(fan.dim()));
    for (auto& v : c) v = dist(rng);
    try {
      (void)toric_from_fan(fan, c);
      return c;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonGenericCocharacter) throw;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "no generic cocharacter found");
}

WeightMultiset random_weight_multiset(Rng& rng, long max_abs, long max_mult, std::size_t max_distinct) {
  std::uniform_int_distribution<std::size_t> how_many(1, max_distinct);
  std::uniform_int_distribution<long> mult(1, max_mult);
  std::uniform_int_distribution<long> weight(1, max_abs);
  std::bernoulli_distribution negative(0.5);
  WeightMultiset ws;
  const std::size_t n = how_many(rng);
  while (ws.entries().size() < n) {
    const long w = negative(rng) ? -weight(rng) : weight(rng);
    if (ws.multiplicity(w) == 0) ws.add(w, mult(rng));
  }
  return ws;
}

VarietyModel random_builder_model(Rng& rng, unsigned family) {
  switch (family % 6) {
    case 0: {
      const long n = std::uniform_int_distribution<long>(1, 4)(rng);
      const auto a = random_distinct(rng, static_cast<std::size_t>(n + 1), -6, 6);
      return projective_space(n, a);
    }
    case 1: {
      const auto a = random_distinct(rng, 4, -5, 5);
      return grassmannian(2, 4, a);
    }
    case 2: {
      const auto a = random_distinct(rng, 5, -4, 4);
      return grassmannian(2, 5, a);
    }
    case 3: {
      const Fan fan = hirzebruch_fan(std::uniform_int_distribution<long>(0, 2)(rng));
      auto m = toric_from_fan(fan, random_generic_cocharacter(rng, fan, 4));
      m.name = "hirzebruch";
      return m;
    }
    case 4: {
      const Fan fan = projective_plane_fan();
      auto m = toric_from_fan(fan, random_generic_cocharacter(rng, fan, 5));
      m.name = "P2 fan";
      return m;
    }
    default: {
      const auto a = random_distinct(rng, 2, -5, 5);
      const auto b = random_distinct(rng, 3, -5, 5);
      return product(projective_space(1, a), projective_space(2, b));
    }
  }
}

}  // namespace chiy
