// hamcert: spectral Hamiltonicity criteria, closures, exact oracles and
// validation runs from the command line.
//
// Exit codes: 0 success, 1 validation found violations, 2 input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamcert/hamcert.hpp"
#include "hamcert/json.hpp"

namespace {

using namespace hamcert;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitInputError = 2;

struct InputOptions {
  std::string graph6;
  std::string file;
  std::string family;
  FamilyParams params;
};

struct OutputOptions {
  std::string format = "json";
  std::string output;
};

struct NamedGraph {
  std::string label;
  Graph graph;
};

void add_family_params(CLI::App* cmd, FamilyParams& p) {
  cmd->add_option("--n", p.n, "Family order");
  cmd->add_option("--s", p.s, "Family parameter s");
  cmd->add_option("--r", p.r, "Family parameter r");
  cmd->add_option("--a", p.a, "First part size (complete-bipartite)");
  cmd->add_option("--b", p.b, "Second part size (complete-bipartite)");
  cmd->add_option("--connections", p.connections, "Circulant connection set")->delimiter(',');
}

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--graph6", in.graph6, "Graph in graph6 format");
  cmd->add_option("--file", in.file, "Newline-delimited graph6 file");
  cmd->add_option("--family", in.family, "Named family (kebab-case), with --n/--s/--r/...");
  add_family_params(cmd, in.params);
}

void add_output(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--output,-o", out.output, "Write to this path instead of standard output");
}

std::vector<NamedGraph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::vector<NamedGraph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back({line, parse_graph6(line)});
    } catch (const ParseError& e) {
      throw InputError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<NamedGraph> load_input(const InputOptions& in) {
  const int sources = !in.graph6.empty() + !in.file.empty() + !in.family.empty();
  if (sources != 1)
    throw InputError("exactly one of --graph6, --file, --family is required");
  if (!in.graph6.empty()) return {{in.graph6, parse_graph6(in.graph6)}};
  if (!in.file.empty()) return read_graph6_file(in.file);
  const Graph g = construct(family_from_name(in.family, in.params));
  return {{write_graph6(g), g}};
}

// Flattens JSON into "path = value" lines.
void write_text(std::ostream& os, const Json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      write_text(os, value, prefix.empty() ? key : prefix + "." + key);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i)
      write_text(os, j[i], prefix + "[" + std::to_string(i) + "]");
  } else {
    os << prefix << " = " << j.dump() << '\n';
  }
}

void emit(const Json& j, const OutputOptions& out) {
  std::ostringstream buf;
  if (out.format == "text") {
    write_text(buf, j, "");
  } else {
    buf << j.dump(2) << '\n';
  }
  if (out.output.empty()) {
    std::cout << buf.str();
    return;
  }
  std::ofstream file(out.output);
  if (!file) throw InputError("cannot write '" + out.output + "'");
  file << buf.str();
}

Json single_or_array(std::vector<Json> items) {
  if (items.size() == 1) return std::move(items.front());
  return Json(std::move(items));
}

Json analyze_one(const NamedGraph& ng, int oracle_cap) {
  const Graph& g = ng.graph;
  Json bounds = Json::array();
  for (const auto& b : bound_suite(g)) bounds.push_back(to_json(b));
  Json verdicts = Json::array();
  Json skipped = Json::array();
  for (CriterionId c : kAllCriteria) {
    if (g.order() < minimum_order(c)) {
      skipped.push_back({{"criterion", to_string(c)},
                         {"reason", "requires n >= " + std::to_string(minimum_order(c))}});
      continue;
    }
    verdicts.push_back(to_json(apply_criterion(g, c)));
  }
  Json exceptions = Json::array();
  for (FamilyTag t : recognize_exception(g)) exceptions.push_back(to_string(t));
  Json out{{"graph6", write_graph6(g)},
           {"n", g.order()},
           {"summary", to_json(spectral_summary(g))},
           {"bounds", bounds},
           {"verdicts", verdicts},
           {"skipped_criteria", skipped},
           {"exceptions", exceptions},
           {"oracle", nullptr}};
  if (g.order() <= oracle_cap) out["oracle"] = to_json(hamilton_profile(g, oracle_cap));
  return out;
}

std::vector<int> parse_orders(const std::vector<int>& orders) {
  if (orders.empty()) throw InputError("--orders needs at least one order");
  return orders;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral Hamiltonicity criteria, closures, exact oracles and validation"};
  app.require_subcommand(1);
  int oracle_cap = oracle_cap_from_env();
  app.add_option("--oracle-cap", oracle_cap,
                 "Largest order handed to the exact oracle (default 20, or HAMCERT_ORACLE_CAP)")
      ->check(CLI::Range(1, kMaxOracleCap));

  InputOptions analyze_in, closure_in, oracle_in;
  OutputOptions analyze_out, closure_out, oracle_out, generate_out, validate_out, remark_out;

  auto* analyze = app.add_subcommand("analyze", "Spectral summary, bounds, criteria, oracle");
  add_input(analyze, analyze_in);
  add_output(analyze, analyze_out);

  int closure_k = -1;
  auto* closure = app.add_subcommand("closure", "k-closure with the list of added edges");
  add_input(closure, closure_in);
  add_output(closure, closure_out);
  closure->add_option("--k", closure_k, "Degree-sum threshold")->required();

  auto* oracle = app.add_subcommand("oracle", "Exact Hamiltonian path/cycle/connectedness");
  add_input(oracle, oracle_in);
  add_output(oracle, oracle_out);

  std::string gen_family;
  FamilyParams gen_params;
  generate_out.format = "text";
  auto* generate = app.add_subcommand("generate", "Print the graph6 string of a named family");
  generate->add_option("--family", gen_family, "Family name")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(family_names().begin(), family_names().end())));
  add_family_params(generate, gen_params);
  add_output(generate, generate_out);

  std::string criterion_name;
  std::vector<int> orders;
  std::string mode_name = "exhaustive";
  std::string corpus_file;
  ValidationBudget budget;
  double fault_shift = 0.0;
  auto* validate_cmd = app.add_subcommand("validate", "Check a criterion against the oracle");
  validate_cmd->add_option("--criterion", criterion_name, "T31..T34, T41, T42, or closure")
      ->required();
  validate_cmd->add_option("--orders", orders, "Orders to test")->delimiter(',');
  validate_cmd->add_option("--mode", mode_name, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}))
      ->capture_default_str();
  validate_cmd->add_option("--file", corpus_file, "Validate the graphs of a graph6 file instead");
  validate_cmd->add_option("--samples", budget.samples, "Random graphs per order")
      ->capture_default_str();
  validate_cmd->add_option("--p", budget.edge_probability, "Edge probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  validate_cmd->add_option("--seed", budget.seed, "Random seed")->capture_default_str();
  validate_cmd->add_option("--workers", budget.workers, "Worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  validate_cmd->add_option("--fault-threshold-shift", fault_shift,
                           "Testing only: add this amount to the criterion threshold");
  add_output(validate_cmd, validate_out);

  int r_min = 2, r_max = 4;
  auto* remark = app.add_subcommand("remark", "Scan the (K_r + K_r) join K_s family");
  remark->add_option("--r-min", r_min, "Smallest r (>= 2)")->capture_default_str();
  remark->add_option("--r-max", r_max, "Largest r")->capture_default_str();
  add_output(remark, remark_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*analyze) {
      std::vector<Json> items;
      for (const auto& ng : load_input(analyze_in)) items.push_back(analyze_one(ng, oracle_cap));
      emit(single_or_array(std::move(items)), analyze_out);
    } else if (*closure) {
      std::vector<Json> items;
      for (const auto& ng : load_input(closure_in)) {
        Json j = to_json(k_closure(ng.graph, closure_k));
        j["input"] = ng.label;
        items.push_back(std::move(j));
      }
      emit(single_or_array(std::move(items)), closure_out);
    } else if (*oracle) {
      std::vector<Json> items;
      for (const auto& ng : load_input(oracle_in)) {
        Json j = to_json(hamilton_profile(ng.graph, oracle_cap));
        j["graph6"] = write_graph6(ng.graph);
        items.push_back(std::move(j));
      }
      emit(single_or_array(std::move(items)), oracle_out);
    } else if (*generate) {
      const Graph g = construct(family_from_name(gen_family, gen_params));
      if (generate_out.format == "text") {
        if (generate_out.output.empty()) {
          std::cout << write_graph6(g) << '\n';
        } else {
          std::ofstream(generate_out.output) << write_graph6(g) << '\n';
        }
      } else {
        emit(Json{{"family", gen_family},
                  {"graph6", write_graph6(g)},
                  {"n", g.order()},
                  {"edge_count", g.edge_count()}},
             generate_out);
      }
    } else if (*validate_cmd) {
      budget.oracle_cap = oracle_cap;
      const ValidationMode mode =
          mode_name == "random" ? ValidationMode::RandomSample : ValidationMode::ExhaustiveLabeled;
      ValidationReport report;
      if (criterion_name == "closure") {
        if (!corpus_file.empty()) throw InputError("closure validation does not take --file");
        report = validate_closure_equivalence(parse_orders(orders), mode, budget);
      } else {
        const CriterionId c = criterion_from_string(criterion_name);
        CriterionOptions opts;
        opts.threshold_shift = fault_shift;
        if (!corpus_file.empty()) {
          std::vector<Graph> graphs;
          for (auto& ng : read_graph6_file(corpus_file)) graphs.push_back(ng.graph);
          report = validate_corpus(c, std::move(graphs), budget, opts);
        } else {
          report = validate(c, parse_orders(orders), mode, budget, opts);
        }
      }
      emit(to_json(report), validate_out);
      return report.passed() ? kExitOk : kExitViolations;
    } else if (*remark) {
      emit(to_json(remark_scan(r_min, r_max, oracle_cap)), remark_out);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}
