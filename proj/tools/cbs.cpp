// Command-line front end: labeling, benchmarks, references, the exhaustive
// oracle and format conversion.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cbs/bench.hpp"
#include "cbs/errors.hpp"
#include "cbs/generators.hpp"
#include "cbs/io.hpp"
#include "cbs/merge.hpp"
#include "cbs/reference.hpp"

namespace {

using namespace cbs;
namespace fs = std::filesystem;

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kFormat = 3, kDomain = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Instance {
  std::string name;
  Graph graph;
  std::vector<std::string> ids;  // empty for generated graphs
  std::optional<GeneratorSpec> spec;
};

const std::vector<std::string_view> kRandomFamilies{"er", "ba", "ws", "sbm"};

bool is_random(const GeneratorSpec& spec) {
  return std::find(kRandomFamilies.begin(), kRandomFamilies.end(), spec.family) !=
         kRandomFamilies.end();
}

// Splits positional arguments into inputs. "family=..." opens an inline
// generator spec that absorbs the key=value tokens after it; anything else is a
// file path.
std::vector<std::string> group_inputs(const std::vector<std::string>& args) {
  std::vector<std::string> inputs;
  bool in_spec = false;
  for (const auto& a : args) {
    if (a.rfind("family=", 0) == 0) {
      inputs.push_back(a);
      in_spec = true;
    } else if (in_spec && a.find('=') != std::string::npos) {
      inputs.back() += " " + a;
    } else {
      inputs.push_back(a);
      in_spec = false;
    }
  }
  return inputs;
}

bool is_matrix_market(const fs::path& path) {
  auto ext = path.extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext == ".mtx";
}

// Parses an inline spec and pins the seed of random families to `seed`
// unless the spec sets one.
GeneratorSpec parse_spec(const std::string& text, std::uint64_t seed) {
  auto spec = GeneratorSpec::parse(text);
  if (is_random(spec) && !spec.values.contains("seed")) spec.values["seed"] = std::to_string(seed);
  return spec;
}

Instance load(const std::string& input, bool weighted, std::uint64_t seed) {
  if (input.rfind("family=", 0) == 0) {
    auto spec = parse_spec(input, seed);
    Graph g = build(spec);
    return {spec.format(), std::move(g), {}, spec};
  }
  const fs::path path(input);
  if (is_matrix_market(path)) {
    if (weighted) throw UsageError("--weighted is not available for Matrix Market input");
    return {path.filename().string(), read_matrix_market(path), {}, std::nullopt};
  }
  auto loaded = read_edge_list(path, weighted);
  return {path.filename().string(), std::move(loaded.graph), std::move(loaded.ids), std::nullopt};
}

std::vector<Instance> load_all(const std::vector<std::string>& args, bool weighted,
                               std::uint64_t seed) {
  std::vector<Instance> out;
  for (const auto& input : group_inputs(args)) out.push_back(load(input, weighted, seed));
  if (out.empty()) throw UsageError("no input given");
  return out;
}

Instance load_one(const std::vector<std::string>& args, bool weighted, std::uint64_t seed) {
  auto all = load_all(args, weighted, seed);
  if (all.size() != 1) throw UsageError("exactly one input expected");
  return std::move(all.front());
}

// "instances=N" in a spec expands into N specs seeded seed, seed+1, ...
std::vector<Instance> load_instance_set(const std::vector<std::string>& args, bool weighted,
                                        std::uint64_t seed) {
  std::vector<Instance> out;
  for (auto input : group_inputs(args)) {
    std::size_t count = 1;
    if (input.rfind("family=", 0) == 0) {
      std::istringstream tokens(input);
      std::string kept, token;
      for (bool first = true; tokens >> token; first = false) {
        if (token.rfind("instances=", 0) == 0) {
          const auto value = token.substr(10);
          const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), count);
          if (ec != std::errc{} || end != value.data() + value.size() || count == 0)
            throw UsageError("instances must be a positive integer");
          continue;
        }
        kept += (first ? "" : " ") + token;
      }
      input = kept;
    }
    if (count == 1) {
      out.push_back(load(input, weighted, seed));
      continue;
    }
    const auto base = parse_spec(input, seed);
    if (!is_random(base)) throw UsageError("instances= only applies to random families");
    for (std::size_t i = 0; i < count; ++i) {
      auto spec = base;
      spec.values["seed"] = std::to_string(base.seed() + i);
      out.push_back({spec.format(), build(spec), {}, spec});
    }
  }
  if (out.empty()) throw UsageError("no input given");
  return out;
}

std::optional<ReferenceValue> reference_of(const Instance& inst) {
  if (!inst.spec) return std::nullopt;
  try {
    return reference_for(*inst.spec);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

std::string number(double x) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

void write_graph(const fs::path& path, const Instance& inst) {
  std::ostringstream out;
  if (is_matrix_market(path))
    write_matrix_market(out, inst.graph);
  else
    write_edge_list(out, inst.graph, inst.ids);
  write_file(path, out.str());
}

std::vector<std::size_t> parse_k_list(const std::string& text) {
  std::vector<std::size_t> ks;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t k = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), k);
    if (ec != std::errc{} || end != item.data() + item.size() || k == 0)
      throw UsageError("--k expects positive integers separated by commas, got '" + text + "'");
    ks.push_back(k);
  }
  if (ks.empty()) throw UsageError("--k is empty");
  return ks;
}

int run(int argc, char** argv) {
  CLI::App app{"Cyclic bandwidth sum labeling"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  std::uint64_t seed = kDefaultSeed;
  bool weighted = false;
  std::string output, dot, csv, out_path, k_list = "10,20,50";
  std::size_t reps = 30;
  unsigned jobs = default_jobs();

  const auto add_inputs = [&](CLI::App* cmd, const char* what) {
    cmd->add_option("inputs", inputs, what)->required();
    cmd->add_option("--seed", seed, "Seed for random families and repetitions")->capture_default_str();
  };

  auto* label = app.add_subcommand("label", "Label one graph and report its CBS");
  add_inputs(label, "Graph file or inline spec (family=...)");
  label->add_flag("--weighted", weighted, "Read edge weights and minimize the weighted sum");
  label->add_option("--output,-o", output, "Write 'id label' lines here");
  label->add_option("--dot", dot, "Write a DOT drawing here");

  auto* bench = app.add_subcommand("bench", "Repeated randomized runs with summary statistics");
  add_inputs(bench, "Graph files or specs; instances=N expands a random family");
  bench->add_flag("--weighted", weighted, "Read edge weights");
  bench->add_option("--reps", reps, "Repetitions per instance")->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--csv", csv, "Write the CSV table here instead of standard output");
  bench->add_option("--jobs,-j", jobs, "Worker threads (default $CBS_JOBS or all cores)")->check(CLI::PositiveNumber);

  auto* robust = app.add_subcommand("robustness", "Best-of-k protocol");
  add_inputs(robust, "Graph files or specs; instances=N expands a random family");
  robust->add_flag("--weighted", weighted, "Read edge weights");
  robust->add_option("--k", k_list, "Comma-separated k values")->capture_default_str();
  robust->add_option("--reps", reps, "Outer repetitions")->capture_default_str()->check(CLI::PositiveNumber);
  robust->add_option("--jobs,-j", jobs, "Worker threads (default $CBS_JOBS or all cores)")->check(CLI::PositiveNumber);

  auto* generate = app.add_subcommand("generate", "Write a generated graph");
  add_inputs(generate, "Inline spec (family=...)");
  generate->add_option("--out", out_path, "Target file (.mtx for Matrix Market); standard output if absent");

  auto* reference = app.add_subcommand("reference", "Known optimum or upper bound of a family instance");
  add_inputs(reference, "Inline spec (family=...)");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum for graphs with at most 9 vertices");
  add_inputs(oracle, "Graph file or inline spec");

  auto* convert = app.add_subcommand("convert", "Convert between edge list and Matrix Market");
  convert->add_option("inputs", inputs, "Input and output paths")->required()->expected(2);
  convert->add_flag("--weighted", weighted, "Read edge weights");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*label) {
    auto inst = load_one(inputs, weighted, seed);
    const auto labeling = label_graph(inst.graph);
    std::cout << "# seed=" << seed << '\n'
              << "instance=" << inst.name << '\n'
              << "n=" << inst.graph.vertex_count() << '\n'
              << "m=" << inst.graph.edge_count() << '\n'
              << "CBS=" << number(cyclic_bandwidth_sum(inst.graph, labeling)) << '\n';
    if (!output.empty()) {
      std::ostringstream out;
      write_labeling(out, labeling, inst.ids);
      write_file(output, out.str());
    }
    if (!dot.empty()) {
      std::ostringstream out;
      write_dot(out, inst.graph, labeling, inst.ids);
      write_file(dot, out.str());
    }
  } else if (*bench) {
    std::vector<RunStats> rows;
    for (const auto& inst : load_instance_set(inputs, weighted, seed))
      rows.push_back(run_instance(inst.graph, inst.name, {reps, seed, jobs}, reference_of(inst)));
    std::ostringstream table;
    write_csv_stats(table, rows);
    if (csv.empty()) {
      std::cout << "# seed=" << seed << '\n' << table.str();
    } else {
      write_file(csv, table.str());
      std::cout << "# seed=" << seed << "\nwrote " << rows.size() << " rows to " << csv << '\n';
    }
  } else if (*robust) {
    const auto ks = parse_k_list(k_list);
    std::cout << "# seed=" << seed << '\n' << "instance,k,median,mad,rd,overall_min\n";
    for (const auto& inst : load_instance_set(inputs, weighted, seed)) {
      const auto stats = run_robustness(inst.graph, inst.name, ks, {reps, seed, jobs});
      for (const auto& row : stats.rows) {
        char rd[32] = "";
        if (row.rd) std::snprintf(rd, sizeof rd, "%.2f", *row.rd);
        std::cout << '"' << inst.name << "\"," << row.k << ',' << number(row.median) << ','
                  << number(row.mad) << ',' << rd << ',' << number(stats.overall_min) << '\n';
      }
    }
  } else if (*generate) {
    const auto inst = load_one(inputs, false, seed);
    if (!inst.spec) throw UsageError("generate expects an inline spec (family=...)");
    if (out_path.empty())
      write_edge_list(std::cout, inst.graph);
    else
      write_graph(out_path, inst);
  } else if (*reference) {
    const auto grouped = group_inputs(inputs);
    if (grouped.size() != 1 || grouped.front().rfind("family=", 0) != 0)
      throw UsageError("reference expects one inline spec (family=...)");
    const auto ref = reference_for(parse_spec(grouped.front(), seed));
    if (ref)
      std::cout << to_string(ref->kind) << ' ' << ref->value << '\n';
    else
      std::cout << "none\n";
  } else if (*oracle) {
    const auto inst = load_one(inputs, false, seed);
    const auto result = brute_force_optimum(inst.graph);
    std::cout << "optimum " << result.optimum << '\n' << "witness\n";
    write_labeling(std::cout, result.witness, inst.ids);
  } else if (*convert) {
    const auto inst = load(inputs.at(0), weighted, seed);
    write_graph(inputs.at(1), inst);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kFormat;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const ContractError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
