#include "chiy/model_io.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "chiy/error.hpp"

namespace chiy {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // byte is 1-based, pointing just past the failure
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
  }
}

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::SchemaError, path + ": " + what);
}

void only_fields(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) schema(path, "expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (!ok.count(key)) schema(path + "." + key, "unknown field");
  }
}

const json& field(const json& obj, const std::string& path, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) schema(path + "." + name, "missing field");
  return *it;
}

long as_long(const json& v, const std::string& path) {
  if (!v.is_number_integer()) schema(path, "expected an integer");
  return v.get<long>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) schema(path, "expected a string");
  return v.get<std::string>();
}

std::vector<long> as_long_array(const json& v, const std::string& path) {
  if (!v.is_array()) schema(path, "expected an array of integers");
  std::vector<long> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_long(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Rational as_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) schema(path, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const Error& e) {
    schema(path, e.detail());
  }
}

long parse_weight_key(const std::string& key, const std::string& path) {
  std::size_t i = (!key.empty() && (key[0] == '-' || key[0] == '+')) ? 1 : 0;
  if (i >= key.size()) schema(path, "weight key '" + key + "' is not an integer");
  for (std::size_t j = i; j < key.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(key[j]))) schema(path, "weight key '" + key + "' is not an integer");
  }
  try {
    return std::stol(key);
  } catch (const std::exception&) {
    schema(path, "weight key '" + key + "' out of range");
  }
}

WeightMultiset weights_from(const json& v, const std::string& path) {
  if (!v.is_object()) schema(path, "expected an object of weight -> multiplicity");
  WeightMultiset ws;
  std::map<long, long> entries;
  for (const auto& [key, mult] : v.items()) {
    const std::string p = path + "." + key;
    const long w = parse_weight_key(key, p);
    if (entries.count(w)) schema(p, "weight listed twice");
    entries[w] = as_long(mult, p);
  }
  return WeightMultiset(std::move(entries));
}

ordered_json polynomial_json(const Polynomial& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  return arr;
}

ordered_json weights_json(const WeightMultiset& ws) {
  ordered_json obj = ordered_json::object();
  for (const auto& [w, n] : ws.entries()) obj[std::to_string(w)] = n;
  return obj;
}

}  // namespace

VarietyModel load_model(std::string_view json_text) {
  const json root = parse_json(json_text);
  only_fields(root, "$", {"name", "ambient_dim", "components"});
  VarietyModel m;
  m.name = as_string(field(root, "$", "name"), "$.name");
  m.ambient_dim = as_long(field(root, "$", "ambient_dim"), "$.ambient_dim");
  const json& comps = field(root, "$", "components");
  if (!comps.is_array()) schema("$.components", "expected an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string path = "$.components[" + std::to_string(i) + "]";
    const json& c = comps[i];
    only_fields(c, path, {"id", "dim_f", "chi_y", "poincare", "normal_weights"});
    FixedComponent f;
    f.id = as_string(field(c, path, "id"), path + ".id");
    f.dim_f = as_long(field(c, path, "dim_f"), path + ".dim_f");
    const json& chi = field(c, path, "chi_y");
    if (!chi.is_array()) schema(path + ".chi_y", "expected an array of rational strings");
    std::vector<Rational> coeffs;
    for (std::size_t j = 0; j < chi.size(); ++j) coeffs.push_back(as_rational(chi[j], path + ".chi_y[" + std::to_string(j) + "]"));
    f.chi_y = YPolynomial(std::move(coeffs));
    if (auto it = c.find("poincare"); it != c.end()) {
      std::vector<Rational> pc;
      for (long v : as_long_array(*it, path + ".poincare")) pc.emplace_back(v);
      f.poincare = Polynomial(std::move(pc));
    } else if (f.dim_f == 0) {
      f.poincare = Polynomial(1);
    }
    f.normal_weights = weights_from(field(c, path, "normal_weights"), path + ".normal_weights");
    m.components.push_back(std::move(f));
  }
  require_valid(m);
  return m;
}

GKMPointSet load_gkm(std::string_view json_text) {
  const json root = parse_json(json_text);
  only_fields(root, "$", {"rank", "cocharacter", "points"});
  GKMPointSet g;
  g.rank = as_long(field(root, "$", "rank"), "$.rank");
  g.cocharacter = as_long_array(field(root, "$", "cocharacter"), "$.cocharacter");
  const json& pts = field(root, "$", "points");
  if (!pts.is_array()) schema("$.points", "expected an array");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string path = "$.points[" + std::to_string(i) + "]";
    only_fields(pts[i], path, {"id", "multiweights"});
    GKMPoint p;
    p.id = as_string(field(pts[i], path, "id"), path + ".id");
    const json& mws = field(pts[i], path, "multiweights");
    if (!mws.is_array()) schema(path + ".multiweights", "expected an array");
    for (std::size_t j = 0; j < mws.size(); ++j) {
      p.multiweights.push_back(as_long_array(mws[j], path + ".multiweights[" + std::to_string(j) + "]"));
    }
    g.points.push_back(std::move(p));
  }
  return g;
}

FanSpec load_fan(std::string_view json_text) {
  const json root = parse_json(json_text);
  only_fields(root, "$", {"rays", "cones", "cocharacter"});
  FanSpec spec;
  const json& rays = field(root, "$", "rays");
  const json& cones = field(root, "$", "cones");
  if (!rays.is_array()) schema("$.rays", "expected an array");
  if (!cones.is_array()) schema("$.cones", "expected an array");
  for (std::size_t i = 0; i < rays.size(); ++i) spec.fan.rays.push_back(as_long_array(rays[i], "$.rays[" + std::to_string(i) + "]"));
  for (std::size_t i = 0; i < cones.size(); ++i) spec.fan.cones.push_back(as_long_array(cones[i], "$.cones[" + std::to_string(i) + "]"));
  if (auto it = root.find("cocharacter"); it != root.end()) spec.cocharacter = as_long_array(*it, "$.cocharacter");
  return spec;
}

WeightMultiset load_weights(std::string_view json_text) { return weights_from(parse_json(json_text), "$"); }

std::string dump_model(const VarietyModel& m) {
  ordered_json root;
  root["name"] = m.name;
  root["ambient_dim"] = m.ambient_dim;
  ordered_json comps = ordered_json::array();
  for (const auto& f : m.components) {
    ordered_json c;
    c["id"] = f.id;
    c["dim_f"] = f.dim_f;
    c["chi_y"] = polynomial_json(f.chi_y);
    if (f.poincare) {
      ordered_json p = ordered_json::array();
      for (const auto& coef : f.poincare->coefficients()) p.push_back(coef.to_long());
      c["poincare"] = p;
    }
    c["normal_weights"] = weights_json(f.normal_weights);
    comps.push_back(std::move(c));
  }
  root["components"] = std::move(comps);
  return root.dump(2) + "\n";
}

std::string dump_weights(const WeightMultiset& ws) { return weights_json(ws).dump() + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace chiy
