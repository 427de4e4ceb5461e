// ringdef: emit and lift formulas, evaluate them on finite models, run the
// check suites. Exit codes: 0 success, 1 property failure, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ringdef/chunks.hpp"
#include "ringdef/eval.hpp"
#include "ringdef/germs.hpp"
#include "ringdef/schemas.hpp"
#include "ringdef/suites.hpp"

using namespace ringdef;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Rational rational_of(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw UsageError("expected an integer or a rational string, got " + j.dump());
}

ordered_json stats_json(const Formula& f) {
  auto s = stats(f);
  return {{"nodes", s.nodes},
          {"quantifiers", s.quantifiers},
          {"quantifier_depth", s.quantifier_depth},
          {"atoms", s.atoms},
          {"language", language_name(language_of(f))}};
}

std::string stats_line(const Formula& f) {
  auto s = stats(f);
  return "nodes=" + std::to_string(s.nodes) + " quantifiers=" + std::to_string(s.quantifiers) +
         " quantifier_depth=" + std::to_string(s.quantifier_depth) + " language=" + language_name(language_of(f));
}

void print_formula_result(const Formula& f, const std::string& format, const std::string& out,
                          const ordered_json& extra = {}) {
  if (format == "json") {
    ordered_json j = extra.is_null() ? ordered_json::object() : extra;
    j["formula"] = print_formula(f);
    j["stats"] = stats_json(f);
    write_output(out, j.dump(2) + "\n");
  } else {
    write_output(out, print_formula(f) + "\n");
    std::cerr << stats_line(f) << "\n";
  }
}

// {"host": "ordered-q", "points": ["x1", ...] or 3, "elements": {"f": [0, "1/2", 1]}}
// {"kind": "scalar", "host": ..., "elements": {"y": "2"}}
struct LoadedModel {
  std::unique_ptr<Model> model;
  Env env;
};

LoadedModel load_model(const std::string& path, const std::string& host_flag) {
  json j;
  try {
    j = json::parse(read_input(path));
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("model file: ") + e.what());
  }
  HostField host = HostField::parse(host_flag.empty() ? j.value("host", std::string("ordered-q")) : host_flag);
  std::string kind = j.value("kind", std::string("finite"));
  LoadedModel out;
  const json elements = j.value("elements", json::object());
  if (kind == "scalar") {
    out.model = std::make_unique<ScalarModel>(host);
    for (const auto& [name, v] : elements.items()) out.env[name] = Value{rational_of(v)};
    return out;
  }
  if (kind != "finite") throw UsageError("unknown model kind " + kind);
  if (!j.contains("points")) throw UsageError("finite model needs \"points\"");
  const json& pts = j["points"];
  PointSetX x = pts.is_number_integer() ? PointSetX::numbered(pts.get<std::size_t>())
                                        : PointSetX(pts.get<std::vector<std::string>>());
  auto m = std::make_unique<FiniteRingModel>(x, host);
  for (const auto& [name, v] : elements.items()) {
    if (!v.is_array() || v.size() != x.size())
      throw UsageError("value of " + name + " needs one entry per point");
    std::vector<Rational> vals;
    for (const auto& e : v) vals.push_back(rational_of(e));
    out.env[name] = m->element(std::move(vals));
  }
  out.model = std::move(m);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringdef: formulas over rings of definable functions"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  std::string host_flag;
  int depth = 1;
  std::uint64_t seed = 1;
  bool timings = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", out_path, "Write the result to this file");
  };

  auto* emit = app.add_subcommand("emit", "Print a named schema");
  std::string schema_name;
  std::vector<int> schema_args;
  emit->add_option("name", schema_name, "Schema name")->required();
  emit->add_option("args", schema_args, "Integer parameters, e.g. n for jac");
  add_common(emit);

  auto* lift_cmd = app.add_subcommand("lift", "Lift an L_ring+O formula to L_ring+B");
  std::string lift_file;
  std::string s_name = "s";
  lift_cmd->add_option("file", lift_file, "Formula file, - for stdin")->required();
  lift_cmd->add_option("--var", s_name, "Name of the added parameter");
  add_common(lift_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula on a model file");
  std::string eval_file, model_file;
  bool no_macros = false;
  eval_cmd->add_option("file", eval_file, "Formula file, - for stdin")->required();
  eval_cmd->add_option("--model", model_file, "Model description (JSON)")->required();
  eval_cmd->add_option("--host", host_flag, "ordered-q or padic-q:<p>, overrides the model file");
  eval_cmd->add_option("--depth", depth, "Rounds of sums and products over the witness pool")
      ->check(CLI::Range(0, 8));
  eval_cmd->add_flag("--no-macros", no_macros, "Evaluate schema instances structurally");
  std::size_t budget = EvalOptions{}.block_budget;
  eval_cmd->add_option("--budget", budget, "Tuples tried per quantifier block")->check(CLI::Range(1, 10000000));
  add_common(eval_cmd);

  auto* suite_cmd = app.add_subcommand("suite", "Run a check suite");
  std::string suite_name;
  suite_cmd->add_option("name", suite_name, "Suite name or all")->required();
  suite_cmd->add_option("--depth", depth, "Pool depth for bounded evaluation")->check(CLI::Range(0, 8));
  suite_cmd->add_option("--seed", seed, "Seed of the random cases");
  suite_cmd->add_flag("--timings", timings, "Record per-case milliseconds (reports stop being reproducible)");
  add_common(suite_cmd);

  auto* chunk_cmd = app.add_subcommand("classify-chunk", "Check whether a finite set is a chunk");
  std::string group_name = "integers";
  std::string tau_text = "1";
  std::vector<std::string> elements;
  chunk_cmd->add_option("elements", elements, "Elements of T")->required();
  chunk_cmd->add_option("--group", group_name, "integers, rationals or multiplicative")
      ->check(CLI::IsMember({"integers", "rationals", "multiplicative"}));
  chunk_cmd->add_option("--tau", tau_text, "The element tau");
  chunk_cmd->add_option("--host", host_flag, "Host for the multiplicative group");
  add_common(chunk_cmd);

  auto* germs_cmd = app.add_subcommand("germs", "Build a germ witness and check separation");
  std::string construction;
  std::size_t k = 2;
  int sample_depth = 12;
  std::string variant = "bounded";
  germs_cmd->add_option("construction", construction, "affine, congruence or congruence-global")
      ->required()
      ->check(CLI::IsMember({"affine", "congruence", "congruence-global"}));
  germs_cmd->add_option("--k", k, "Number of germs")->check(CLI::Range(1, 64));
  germs_cmd->add_option("--host", host_flag, "ordered-q or padic-q:<p>");
  germs_cmd->add_option("--depth", sample_depth, "Sampling depth")->check(CLI::Range(1, 40));
  germs_cmd->add_option("--variant", variant, "Affine quotient: bounded or as-printed")
      ->check(CLI::IsMember({"bounded", "as-printed"}));
  add_common(germs_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*emit) {
      Schema s = schema_by_name(schema_name, schema_args);
      ordered_json extra{{"schema", s.name}, {"params", s.params}};
      print_formula_result(s.body, format, out_path, extra);
      return kOk;
    }
    if (*lift_cmd) {
      Formula phi = parse_formula(read_input(lift_file), Language::RingO);
      print_formula_result(lift(phi, s_name), format, out_path);
      return kOk;
    }
    if (*eval_cmd) {
      Formula f = parse_formula(read_input(eval_file));
      LoadedModel lm = load_model(model_file, host_flag);
      EvalOptions o;
      o.depth = depth;
      o.macros = !no_macros;
      o.block_budget = budget;
      Verdict v = eval_bounded(f, *lm.model, lm.env, o);
      if (format == "json") {
        ordered_json j{{"formula", print_formula(f)},
                       {"model", lm.model->describe()},
                       {"verdict", verdict_name(v.value)},
                       {"reason", v.reason}};
        if (!v.witness.empty()) j["witness"] = v.witness;
        if (!v.counterexample.empty()) j["counterexample"] = v.counterexample;
        j["witnesses_tried"] = v.witnesses_tried;
        j["depth"] = v.depth;
        write_output(out_path, j.dump(2) + "\n");
      } else {
        std::ostringstream s;
        s << verdict_name(v.value);
        for (const auto& [n, val] : v.witness) s << " " << n << "=" << val;
        for (const auto& [n, val] : v.counterexample) s << " " << n << "=" << val;
        s << "\n";
        write_output(out_path, s.str());
        std::cerr << v.reason << ", tried " << v.witnesses_tried << "\n";
      }
      return kOk;
    }
    if (*suite_cmd) {
      Report r = run_suite(suite_name, {depth, seed, timings});
      write_output(out_path, format == "text" ? to_text(r) : to_json(r));
      if (format == "json") {
        std::string t = to_text(r);
        auto pos = t.rfind('\n', t.size() - 2);
        std::cerr << t.substr(pos == std::string::npos ? 0 : pos + 1);
      }
      return r.ok() ? kOk : kFailure;
    }
    if (*chunk_cmd) {
      PreorderedGroup g = group_name == "integers"   ? PreorderedGroup::integers()
                          : group_name == "rationals" ? PreorderedGroup::rationals()
                                                      : PreorderedGroup::multiplicative(HostField::parse(
                                                            host_flag.empty() ? "padic-q:3" : host_flag));
      std::vector<Rational> T;
      for (const auto& e : elements) T.push_back(parse_rational(e));
      auto c = make_candidate(T, parse_rational(tau_text));
      auto chk = is_chunk(c, g);
      auto n = classify_finite_chunk(c, g);
      if (format == "json") {
        ordered_json j{{"T", to_string(c)}, {"group", g.name()}, {"chunk", chk.ok}};
        if (!chk.ok) j["clause"] = chk.clause;
        if (!chk.detail.empty()) j["detail"] = chk.detail;
        if (n) j["symmetric_k"] = *n;
        write_output(out_path, j.dump(2) + "\n");
      } else {
        std::string line = to_string(c) + " in " + g.name() + ": ";
        line += chk.ok ? "chunk, symmetric interval k=" + std::to_string(*n)
                       : "not a chunk (clause " + std::to_string(chk.clause) + ": " + chk.detail + ")";
        write_output(out_path, line + "\n");
      }
      return kOk;
    }
    if (*germs_cmd) {
      HostField host = HostField::parse(host_flag.empty() ? (construction == "affine" ? "ordered-q" : "padic-q:3")
                                                          : host_flag);
      GermWitness w;
      if (construction == "affine")
        w = germs_open_affine(k, {0, 0}, host, variant == "bounded" ? AffineVariant::Bounded : AffineVariant::AsPrinted);
      else if (construction == "congruence")
        w = germs_valued_congruence(k, 0, host);
      else
        w = globalize(germs_valued_congruence(k, 0, host), Rational(host.prime() * host.prime()), 1);
      auto rep = check_separated(w, make_sample_plan(w, sample_depth));
      if (format == "json") {
        ordered_json j{{"witness", ordered_json::parse(to_json(w))}, {"separation", ordered_json::parse(to_json(rep))}};
        write_output(out_path, j.dump(2) + "\n");
      } else {
        std::ostringstream s;
        s << construction << " k=" << k << " on " << host.name() << ": S1 " << rep.s1 << " S2 " << rep.s2 << " S3 "
          << rep.s3 << " S4 " << rep.s4 << " (" << rep.samples << " samples)\n";
        for (const auto& f : rep.failures) s << "  " << f << "\n";
        write_output(out_path, s.str());
      }
      return rep.all() ? kOk : kFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownPredicate& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
