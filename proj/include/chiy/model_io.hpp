#pragma once

#include <string>
#include <string_view>

#include "chiy/builders.hpp"
#include "chiy/fixed_point_model.hpp"

namespace chiy {

/// Model JSON:
///   {"name", "ambient_dim", "components": [{"id", "dim_f", "chi_y": ["p/q", ...],
///    "poincare"?: [ints], "normal_weights": {"w": n_w}}]}
/// Unknown fields are rejected. Throws ParseError (with line and column),
/// SchemaError (with the offending field path) or ValidationError.
VarietyModel load_model(std::string_view json_text);

/// GKM JSON: {"rank", "cocharacter": [ints], "points": [{"id", "multiweights": [[ints]]}]}.
GKMPointSet load_gkm(std::string_view json_text);

/// Fan JSON: {"rays": [[ints]], "cones": [[ints]], "cocharacter"?: [ints]}.
struct FanSpec {
  Fan fan;
  std::vector<long> cocharacter;  // empty when absent
};
FanSpec load_fan(std::string_view json_text);

/// Weight multiset JSON: {"w": n_w, ...}.
WeightMultiset load_weights(std::string_view json_text);

/// Deterministic serialization (2-space indent, trailing newline). Weights
/// are emitted in increasing numeric order; coefficients as exact strings.
std::string dump_model(const VarietyModel& m);
std::string dump_weights(const WeightMultiset& ws);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace chiy
