#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <future>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <thread>

#include "chiy/builders.hpp"
#include "chiy/error.hpp"
#include "chiy/localization.hpp"
#include "chiy/model_io.hpp"
#include "chiy/random_models.hpp"
#include "chiy/weight_recovery.hpp"

namespace chiy::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  // build
  std::string preset;
  long n = -1;
  long k = -1;
  std::vector<long> weights;
  std::vector<long> cochar;
  std::string fan;
  std::string gkm;
  std::string left;
  std::string right;
  std::string name;
  std::string output;
  // queries
  std::string model;
  std::string method = "both";
  bool json = false;
  long subgroup_k = 0;
  // recover
  std::string delta;
  std::string from_model;
  std::string component;
  // verify
  std::vector<std::string> models;
  bool kontr = false;
  long random = 0;
  std::uint64_t seed = 0;
};

[[noreturn]] void usage(const std::string& message) { throw Error(ErrorKind::InvalidArgument, message); }

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonConstantSum:
    case ErrorKind::DivergesAtLimit:
    case ErrorKind::InconsistentDelta:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

Json poly_json(const Polynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.str());
  return a;
}

Json weights_json(const WeightMultiset& ws) {
  Json o = Json::object();
  for (const auto& [w, n] : ws.entries()) o[std::to_string(w)] = n;
  return o;
}

Json class_json(const LocalizedClass& c) {
  Json numerator = Json::array();
  for (const auto& coeff : c.numerator().coefficients()) numerator.push_back(poly_json(coeff));
  Json exps = Json::object();
  for (const auto& [k, e] : c.cyclotomic_exponents()) exps[std::to_string(k)] = e;
  return Json{{"text", c.str()}, {"theta_shift", c.theta_shift()}, {"numerator", numerator}, {"cyclotomic_exponents", exps}};
}

// Columns are padded by code points so that theta renders aligned.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) { return (static_cast<unsigned char>(ch) & 0xC0) != 0x80; }));
}

void print_table(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = display_width(header[i]);
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], display_width(r[i]));
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      text += cells[i];
      if (i + 1 < cells.size()) text += std::string(width[i] - display_width(cells[i]) + 2, ' ');
    }
    out << text << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

VarietyModel load_model_file(const std::string& path) { return load_model(read_file(path)); }

std::vector<long> iota_weights(long count, long start) {
  std::vector<long> a(static_cast<std::size_t>(std::max(count, 0L)));
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = start + static_cast<long>(i);
  return a;
}

int cmd_build(const Options& o, std::ostream& out) {
  VarietyModel m;
  if (o.preset == "pn") {
    if (o.n < 0) usage("build pn needs --n");
    m = projective_space(o.n, o.weights.empty() ? iota_weights(o.n + 1, 0) : o.weights);
  } else if (o.preset == "grassmannian") {
    if (o.n < 0 || o.k < 0) usage("build grassmannian needs --k and --n");
    m = grassmannian(o.k, o.n, o.weights.empty() ? iota_weights(o.n, 1) : o.weights);
  } else if (o.preset == "toric") {
    if (o.fan.empty()) usage("build toric needs --fan");
    const FanSpec spec = load_fan(read_file(o.fan));
    const std::vector<long>& c = o.cochar.empty() ? spec.cocharacter : o.cochar;
    if (c.empty()) usage("build toric needs --cochar or a cocharacter in the fan file");
    m = toric_from_fan(spec.fan, c);
  } else if (o.preset == "product") {
    if (o.left.empty() || o.right.empty()) usage("build product needs --left and --right");
    m = product(load_model_file(o.left), load_model_file(o.right));
  } else if (o.preset == "gkm") {
    if (o.gkm.empty()) usage("build gkm needs --gkm");
    m = reduce_gkm(load_gkm(read_file(o.gkm)));
  } else {
    usage("unknown preset '" + o.preset + "'");
  }
  if (!o.name.empty()) m.name = o.name;
  require_valid(m);
  const std::string text = dump_model(m);
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
  }
  return kExitOk;
}

int cmd_genus(const Options& o, std::ostream& out) {
  const VarietyModel m = load_model_file(o.model);
  if (o.method == "abbv" || o.method == "bb") {
    const YPolynomial g = o.method == "abbv" ? abbv_genus(m) : bb_genus(m);
    if (o.json) {
      out << Json{{"method", o.method}, {"chi_y", poly_json(g)}}.dump(2) << '\n';
    } else {
      out << g.str() << '\n';
    }
    return kExitOk;
  }

  const YPolynomial bb = bb_genus(m);
  std::optional<YPolynomial> abbv;
  if (m.is_isolated()) abbv = abbv_genus(m);
  const bool equal = abbv && *abbv == bb;
  if (o.json) {
    Json j{{"method", "both"}, {"chi_y", poly_json(bb)}};
    j["abbv"] = abbv ? poly_json(*abbv) : Json(nullptr);
    j["bb"] = poly_json(bb);
    j["equal"] = abbv ? Json(equal) : Json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "abbv: " << (abbv ? abbv->str() : std::string("n/a (positive-dimensional components)")) << '\n';
    out << "bb:   " << bb.str() << '\n';
    out << (abbv ? (equal ? "EQUAL" : "DIFFER") : "SKIP") << '\n';
  }
  return abbv && !equal ? kExitFailure : kExitOk;
}

int cmd_limits(const Options& o, std::ostream& out) {
  const VarietyModel m = load_model_file(o.model);
  const auto rows = limits_report(m);
  const bool all_match = std::all_of(rows.begin(), rows.end(), [](const ContributionReport& r) { return r.matches; });
  if (o.json) {
    Json comps = Json::array();
    for (const auto& r : rows) {
      comps.push_back(Json{{"id", r.component_id},
                           {"n_plus", r.n_plus},
                           {"n_minus", r.n_minus},
                           {"contribution", class_json(r.contribution)},
                           {"limit_theta_to_zero", poly_json(r.limit_minus_infinity)},
                           {"limit_theta_to_infinity", poly_json(r.limit_plus_infinity)},
                           {"matches", r.matches}});
    }
    out << Json{{"model", m.name}, {"components", comps}}.dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> table;
    for (const auto& r : rows) {
      table.push_back({r.component_id, std::to_string(r.n_plus), std::to_string(r.n_minus), r.contribution.str(),
                       r.limit_minus_infinity.str(), r.limit_plus_infinity.str(), r.matches ? "ok" : "MISMATCH"});
    }
    print_table(out, {"id", "n+", "n-", "contribution", "θ→0", "θ→∞", "check"}, table);
  }
  return all_match ? kExitOk : kExitFailure;
}

int cmd_subgroup(const Options& o, std::ostream& out) {
  const VarietyModel m = load_model_file(o.model);
  const YPolynomial g = subgroup_genus(m, o.subgroup_k);
  if (o.json) {
    out << Json{{"k", o.subgroup_k}, {"chi_y", poly_json(g)}}.dump(2) << '\n';
  } else {
    out << g.str() << '\n';
  }
  return kExitOk;
}

int cmd_poincare(const Options& o, std::ostream& out) {
  const Polynomial p = poincare_polynomial(load_model_file(o.model));
  if (o.json) {
    out << Json{{"poincare", poly_json(p)}}.dump(2) << '\n';
  } else {
    out << p.str("t") << '\n';
  }
  return kExitOk;
}

int cmd_special(const Options& o, std::ostream& out) {
  const VarietyModel m = load_model_file(o.model);
  const Rational euler = euler_characteristic(m);
  const Rational sig = signature(m);
  if (o.json) {
    out << Json{{"euler", euler.str()}, {"signature", sig.str()}}.dump(2) << '\n';
  } else {
    out << "euler: " << euler << '\n' << "signature: " << sig << '\n';
  }
  return kExitOk;
}

int cmd_recover(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.delta.empty() == o.from_model.empty()) usage("recover needs exactly one of --delta and --from-model");
  WeightMultiset input;
  if (!o.delta.empty()) {
    input = load_weights(read_file(o.delta));
  } else {
    if (o.component.empty()) usage("--from-model needs --component");
    const VarietyModel m = load_model_file(o.from_model);
    const FixedComponent* f = m.find(o.component);
    if (f == nullptr) usage("no component '" + o.component + "' in " + o.from_model);
    input = f->normal_weights;
  }
  const LocalizedClass d = delta_from_weights(input);

  std::optional<WeightMultiset> recovered;
  std::string failure;
  try {
    recovered = recover_weights(d);
    if (!(*recovered == input)) failure = "recovered " + recovered->str() + " differs from " + input.str();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InconsistentDelta) throw;
    failure = e.what();
  }
  const bool ok = failure.empty();

  if (o.json) {
    Json j{{"input", weights_json(input)}, {"delta", class_json(d)}};
    j["recovered"] = recovered ? weights_json(*recovered) : Json(nullptr);
    j["roundtrip"] = ok;
    if (!ok) j["error"] = failure;
    out << j.dump(2) << '\n';
  } else {
    out << "input:     " << input.str() << '\n';
    out << "delta:     " << d.str() << '\n';
    out << "recovered: " << (recovered ? recovered->str() : std::string("-")) << '\n';
    out << (ok ? "ROUNDTRIP OK" : "ROUNDTRIP FAIL") << '\n';
  }
  if (!ok) err << "error: " << failure << '\n';
  return ok ? kExitOk : kExitFailure;
}

struct VerifyRow {
  std::string subject;
  std::string check;
  CheckStatus status;
  std::string detail;
};

// One seeded case: a weight round trip plus a full check on a random model.
std::optional<std::string> random_case(std::uint64_t seed, unsigned index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(index)};
  Rng rng(seq);
  try {
    const WeightMultiset ws = random_weight_multiset(rng, 12, 4, 4);
    const WeightMultiset back = recover_weights(delta_from_weights(ws));
    if (!(back == ws)) return "round trip of " + ws.str() + " gave " + back.str();
    const VarietyModel m = random_builder_model(rng, index);
    const MainTheoremReport report = verify_main_theorem(m);
    for (const auto& c : report.checks) {
      if (c.status != CheckStatus::Pass) return m.name + ": " + c.name + " " + std::string(to_string(c.status)) + " (" + c.detail + ")";
    }
  } catch (const Error& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

std::vector<std::optional<std::string>> run_random_cases(std::uint64_t seed, long count) {
  std::vector<std::optional<std::string>> results(static_cast<std::size_t>(count));
  const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  for (long start = 0; start < count; start += workers) {
    const long stop = std::min(count, start + static_cast<long>(workers));
    std::vector<std::future<std::optional<std::string>>> batch;
    for (long i = start; i < stop; ++i) batch.push_back(std::async(std::launch::async, random_case, seed, static_cast<unsigned>(i)));
    for (long i = start; i < stop; ++i) results[static_cast<std::size_t>(i)] = batch[static_cast<std::size_t>(i - start)].get();
  }
  return results;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.models.empty() && !o.kontr && o.random <= 0) usage("verify needs model files, --kontr or --random N");
  std::vector<VerifyRow> rows;

  for (const auto& path : o.models) {
    const VarietyModel m = load_model_file(path);
    try {
      const MainTheoremReport report = verify_main_theorem(m);
      for (const auto& c : report.checks) rows.push_back({path, c.name, c.status, c.detail});
    } catch (const Error& e) {
      rows.push_back({path, "main theorem", CheckStatus::Fail, e.what()});
    }
  }

  if (o.kontr) {
    const KontrReport r = kontr_relation_check();
    rows.push_back({"kontr", "combination is the zero class", r.combination_is_zero ? CheckStatus::Pass : CheckStatus::Fail, r.combination.str()});
    rows.push_back({"kontr", "k=2 image combination nonzero", r.image_nonzero ? CheckStatus::Pass : CheckStatus::Fail, r.image_combination.str()});
  }

  if (o.random > 0) {
    const auto results = run_random_cases(o.seed, o.random);
    long passed = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (!results[i]) {
        ++passed;
      } else {
        rows.push_back({"random", "case " + std::to_string(i), CheckStatus::Fail, *results[i]});
      }
    }
    rows.push_back({"random", std::to_string(o.random) + " cases, seed " + std::to_string(o.seed),
                    passed == o.random ? CheckStatus::Pass : CheckStatus::Fail,
                    std::to_string(passed) + "/" + std::to_string(o.random) + " pass"});
  }

  std::vector<std::vector<std::string>> table;
  long pass = 0;
  long fail = 0;
  long skip = 0;
  for (const auto& r : rows) {
    table.push_back({r.subject, r.check, std::string(to_string(r.status)), r.detail});
    if (r.status == CheckStatus::Pass) ++pass;
    if (r.status == CheckStatus::Fail) ++fail;
    if (r.status == CheckStatus::Skipped) ++skip;
  }
  print_table(out, {"subject", "check", "status", "detail"}, table);
  out << "summary: " << rows.size() << " checks, " << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
  for (const auto& r : rows) {
    if (r.status == CheckStatus::Fail) err << "FAIL: " << r.subject << ": " << r.check << ": " << r.detail << '\n';
  }
  return fail == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact chi_y genera of torus-equivariant fixed-point data"};
  app.name("chiy");
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "Build a model JSON from a preset");
  build->add_option("preset", o.preset, "pn, grassmannian, toric, product or gkm")
      ->required()
      ->check(CLI::IsMember({"pn", "grassmannian", "toric", "product", "gkm"}));
  build->add_option("--n", o.n, "P^n dimension, or n for G(k, n)");
  build->add_option("--k", o.k, "k for G(k, n)");
  build->add_option("--weights", o.weights, "Linearization weights a0,a1,...")->delimiter(',');
  build->add_option("--cochar", o.cochar, "Cocharacter c1,... for toric models")->delimiter(',');
  build->add_option("--fan", o.fan, "Fan JSON file");
  build->add_option("--gkm", o.gkm, "GKM point-set JSON file");
  build->add_option("--left", o.left, "Left factor model file");
  build->add_option("--right", o.right, "Right factor model file");
  build->add_option("--name", o.name, "Override the model name");
  build->add_option("-o,--output", o.output, "Output file (stdout if omitted)");

  auto* genus = app.add_subcommand("genus", "chi_y by localization and by the plus-decomposition");
  genus->add_option("model", o.model, "Model JSON file")->required();
  genus->add_option("--method", o.method, "abbv, bb or both")->check(CLI::IsMember({"abbv", "bb", "both"}));
  genus->add_flag("--json", o.json, "Machine-readable output");

  auto* limits = app.add_subcommand("limits", "Per-component contributions and their theta limits");
  limits->add_option("model", o.model, "Model JSON file")->required();
  limits->add_flag("--json", o.json, "Machine-readable output");

  auto* subgroup = app.add_subcommand("subgroup", "chi_y of the fixed locus of the order-k subgroup");
  subgroup->add_option("model", o.model, "Model JSON file")->required();
  subgroup->add_option("--k", o.subgroup_k, "Subgroup order")->required();
  subgroup->add_flag("--json", o.json, "Machine-readable output");

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial");
  poincare->add_option("model", o.model, "Model JSON file")->required();
  poincare->add_flag("--json", o.json, "Machine-readable output");

  auto* special = app.add_subcommand("special", "Euler characteristic and signature");
  special->add_option("model", o.model, "Model JSON file")->required();
  special->add_flag("--json", o.json, "Machine-readable output");

  auto* recover = app.add_subcommand("recover", "Recover a weight multiset from its Delta class");
  recover->add_option("--delta", o.delta, "Weight multiset JSON file");
  recover->add_option("--from-model", o.from_model, "Model JSON file");
  recover->add_option("--component", o.component, "Component id within --from-model");
  recover->add_flag("--json", o.json, "Machine-readable output");

  auto* verify = app.add_subcommand("verify", "Run the verification checks");
  verify->add_option("models", o.models, "Model JSON files");
  verify->add_flag("--kontr", o.kontr, "Check the five-term Delta relation");
  verify->add_option("--random", o.random, "Number of seeded random cases")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", o.seed, "Seed for --random");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return cmd_build(o, out);
    if (*genus) return cmd_genus(o, out);
    if (*limits) return cmd_limits(o, out);
    if (*subgroup) return cmd_subgroup(o, out);
    if (*poincare) return cmd_poincare(o, out);
    if (*special) return cmd_special(o, out);
    if (*recover) return cmd_recover(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}

}  // namespace chiy::cli
