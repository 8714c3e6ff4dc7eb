// netspread: topology classification, SIR spread and percolation-cluster
// immunization on social graphs.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 runtime error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "netspread/classifier.hpp"
#include "netspread/epidemic.hpp"
#include "netspread/experiment.hpp"
#include "netspread/generators.hpp"
#include "netspread/graph.hpp"
#include "netspread/percolation.hpp"
#include "netspread/random.hpp"

namespace fs = std::filesystem;
using namespace netspread;

namespace {

constexpr int kUsageError = 1;
constexpr int kRuntimeError = 2;

struct CommonOptions {
  std::uint64_t seed = 0;
  std::string output_dir;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--seed", common.seed, "Master seed for every random stream");
  cmd->add_option("--output-dir", common.output_dir,
                  "Write result files here instead of printing to stdout");
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "json-like"}));
}

// Writes to output_dir/name, or stdout when no directory was given.
void deliver(const CommonOptions& common, const std::string& name, const std::string& content) {
  if (common.output_dir.empty()) {
    std::cout << content;
    return;
  }
  fs::create_directories(common.output_dir);
  write_text_file(fs::path(common.output_dir) / name, content);
  std::cerr << "wrote " << (fs::path(common.output_dir) / name).string() << "\n";
}

ExperimentConfig base_config(const CommonOptions& common) {
  ExperimentConfig c;
  c.master_seed = common.seed;
  c.format = parse_output_format(common.format);
  c.actions = {Action::histogram};
  return c;
}

void run_single_action(const std::string& graph_path, ExperimentConfig config, Action action,
                       const CommonOptions& common) {
  config.actions = {action};
  config.input = InputKind::file;
  config.input_path = graph_path;
  config.validate();
  const Graph g = read_edge_list(graph_path);
  const auto out = run_action(g, config, action);
  deliver(common, out.file_name, out.content);
  std::cerr << out.summary << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Social-graph topology classification, SIR misinformation spread and "
               "percolation-cluster immunization"};
  app.require_subcommand(1);

  // generate
  CommonOptions gen_common;
  std::string gen_kind;
  GeneratorParams gen;
  std::optional<double> mean_degree;
  std::string gen_out;
  auto* generate_cmd = app.add_subcommand("generate", "Write a generated graph as an edge list");
  generate_cmd->add_option("--kind", gen_kind, "erdos-renyi | watts-strogatz | barabasi-albert")
      ->required();
  generate_cmd->add_option("-n,--nodes", gen.n, "Node count")->required();
  generate_cmd->add_option("-p", gen.p, "ER edge probability or WS rewiring probability");
  generate_cmd->add_option("--mean-degree", mean_degree, "ER mean degree (sets p = <k>/(n-1))");
  generate_cmd->add_option("-k", gen.k, "WS ring degree (even)");
  generate_cmd->add_option("-m", gen.m, "BA edges per new node");
  generate_cmd->add_option("-o,--output", gen_out, "Edge-list file (default: stdout)");
  add_common(generate_cmd, gen_common);

  // classify / histogram
  CommonOptions cls_common;
  std::string cls_graph;
  ExperimentConfig cls_config;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a graph's topology");
  classify_cmd->add_option("graph", cls_graph, "Edge-list file")->required();
  classify_cmd->add_option("--k-min", cls_config.power_k_min, "Smallest degree in the power-law fit");
  classify_cmd->add_option("--ratio-threshold", cls_config.ratio_threshold,
                           "Clustering ratio separating small-world from random");
  classify_cmd->add_option("--delta-ceiling", cls_config.delta_ceiling,
                           "Largest KS distance a fit may have to count");
  add_common(classify_cmd, cls_common);

  CommonOptions hist_common;
  std::string hist_graph;
  auto* histogram_cmd = app.add_subcommand("histogram", "Degree histogram as k,count");
  histogram_cmd->add_option("graph", hist_graph, "Edge-list file")->required();
  add_common(histogram_cmd, hist_common);

  // simulate
  CommonOptions sim_common;
  std::string sim_graph;
  double sim_beta = 0.1, sim_gamma = 0.2;
  std::size_t sim_steps = 1000, sim_runs = 1;
  std::vector<std::string> sim_infected, sim_immunized;
  std::string sim_infections_out;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run SIR spread (one trace, or an ensemble)");
  simulate_cmd->add_option("graph", sim_graph, "Edge-list file")->required();
  simulate_cmd->add_option("--beta", sim_beta, "Transmission probability per edge and step")
      ->check(CLI::Range(0.0, 1.0));
  simulate_cmd->add_option("--gamma", sim_gamma, "Recovery probability per step")
      ->check(CLI::Range(0.0, 1.0));
  simulate_cmd->add_option("--max-steps", sim_steps, "Step limit");
  simulate_cmd->add_option("--infected", sim_infected, "Initial spreader labels (default: one random node)");
  simulate_cmd->add_option("--immunize", sim_immunized, "Node labels immune from t=0");
  simulate_cmd->add_option("--runs", sim_runs, "Ensemble size; >1 prints a summary instead of a trace")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--infections", sim_infections_out, "Write the t,infector,infectee log here");
  add_common(simulate_cmd, sim_common);

  // percolate
  CommonOptions perc_common;
  std::string perc_graph;
  std::optional<double> perc_theta;
  std::vector<double> perc_sweep;
  double perc_cut = 0.01;
  auto* percolate_cmd = app.add_subcommand("percolate", "High-clustering cluster search");
  percolate_cmd->add_option("graph", perc_graph, "Edge-list file")->required();
  percolate_cmd->add_option("--theta", perc_theta, "Print the percolation cluster at this threshold")
      ->check(CLI::Range(0.0, 1.0));
  percolate_cmd->add_option("--sweep", perc_sweep, "Ascending thresholds (default 0,0.1,...,1)");
  percolate_cmd->add_option("--cut", perc_cut, "Giant fraction below which the sweep reports a threshold");
  add_common(percolate_cmd, perc_common);

  // compare-immunization
  CommonOptions cmp_common;
  std::string cmp_graph;
  ExperimentConfig cmp_config;
  auto* compare_cmd = app.add_subcommand(
      "compare-immunization", "Compare percolation-cluster, random and no immunization");
  compare_cmd->add_option("graph", cmp_graph, "Edge-list file")->required();
  compare_cmd->add_option("--beta", cmp_config.beta, "Transmission probability")->check(CLI::Range(0.0, 1.0));
  compare_cmd->add_option("--gamma", cmp_config.gamma, "Recovery probability")->check(CLI::Range(0.0, 1.0));
  compare_cmd->add_option("--max-steps", cmp_config.max_steps, "Step limit");
  compare_cmd->add_option("--runs", cmp_config.runs, "Runs per strategy")->check(CLI::PositiveNumber);
  compare_cmd->add_option("--infected", cmp_config.initial_infected, "Initial spreader labels");
  compare_cmd->add_option("--initial-random", cmp_config.initial_random,
                          "Random spreaders when --infected is not given");
  std::optional<double> cmp_theta;
  compare_cmd->add_option("--theta", cmp_theta, "Cluster threshold (default: sized by --target-fraction)")
      ->check(CLI::Range(0.0, 1.0));
  compare_cmd->add_option("--target-fraction", cmp_config.target_fraction,
                          "Cluster size as a fraction of N when --theta is unset");
  add_common(compare_cmd, cmp_common);

  // experiment
  std::string exp_path;
  std::string exp_output_dir;
  auto* experiment_cmd = app.add_subcommand("experiment", "Run a config-driven experiment");
  experiment_cmd->add_option("config", exp_path, "Experiment config file")->required();
  experiment_cmd->add_option("--output-dir", exp_output_dir, "Override output_dir from the config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (generate_cmd->parsed()) {
      gen.kind = parse_generator_kind(gen_kind);
      if (mean_degree) {
        if (gen.kind != GeneratorKind::erdos_renyi)
          throw ConfigError("--mean-degree", "only applies to erdos-renyi");
        if (gen.n < 2) throw ConfigError("--nodes", "must be at least 2 with --mean-degree");
        gen.p = *mean_degree / static_cast<double>(gen.n - 1);
      }
      gen.seed = stream_seed(gen_common.seed, SeedStream::generator);
      try {
        gen.validate();
      } catch (const std::invalid_argument& e) {
        throw ConfigError("generate", e.what());
      }
      const Graph g = generate(gen);
      if (gen_out.empty())
        std::cout << serialize_edge_list(g);
      else
        write_edge_list(g, gen_out);
      std::cerr << "generated " << to_string(gen.kind) << ": " << g.node_count() << " nodes, "
                << g.edge_count() << " edges\n";
    } else if (classify_cmd->parsed()) {
      auto config = base_config(cls_common);
      config.power_k_min = cls_config.power_k_min;
      config.ratio_threshold = cls_config.ratio_threshold;
      config.delta_ceiling = cls_config.delta_ceiling;
      run_single_action(cls_graph, config, Action::classify, cls_common);
    } else if (histogram_cmd->parsed()) {
      run_single_action(hist_graph, base_config(hist_common), Action::histogram, hist_common);
    } else if (simulate_cmd->parsed()) {
      const Graph g = read_edge_list(sim_graph);
      EpidemicParams params;
      params.beta = sim_beta;
      params.gamma = sim_gamma;
      params.max_steps = sim_steps;
      params.seed = stream_seed(sim_common.seed, SeedStream::epidemic);
      params.immunized = resolve_labels(g, sim_immunized, "--immunize");
      if (sim_infected.empty()) {
        if (g.empty()) throw std::runtime_error("graph has no nodes");
        Rng rng(stream_seed(sim_common.seed, SeedStream::infection_sources));
        params.initial_infected = {static_cast<NodeId>(rng.below(g.node_count()))};
      } else {
        params.initial_infected = resolve_labels(g, sim_infected, "--infected");
      }
      try {
        params.validate(g);
      } catch (const std::invalid_argument& e) {
        throw ConfigError("simulate", e.what());
      }
      const bool json = parse_output_format(sim_common.format) == OutputFormat::json;
      if (sim_runs > 1) {
        const auto summary = run_ensemble(g, params, sim_runs);
        std::string content;
        if (json) {
          content = ensemble_to_json(summary);
        } else {
          content = "run,outbreak\n";
          for (std::size_t i = 0; i < summary.outbreak_sizes.size(); ++i)
            content += std::to_string(i) + "," + std::to_string(summary.outbreak_sizes[i]) + "\n";
        }
        deliver(sim_common, json ? "ensemble.json" : "ensemble.csv", content);
        std::cerr << "mean outbreak " << summary.mean_outbreak << " (sd " << summary.sd_outbreak
                  << ") over " << summary.runs << " runs\n";
      } else {
        const auto trace = simulate_sir(g, params);
        deliver(sim_common, "simulate.csv", trace_to_csv(trace));
        if (!sim_infections_out.empty()) write_text_file(sim_infections_out, infections_to_csv(g, trace));
        std::cerr << "outbreak " << trace.final_outbreak_size << ", peak " << trace.peak_infected
                  << " at t=" << trace.peak_time << "\n";
      }
    } else if (percolate_cmd->parsed()) {
      if (perc_theta) {
        const Graph g = read_edge_list(perc_graph);
        const auto cluster = high_clustering_cluster(g, *perc_theta);
        deliver(perc_common, "cluster.txt", members_to_text(g, cluster.percolation_cluster()));
        std::cerr << "theta " << *perc_theta << ": " << cluster.members.size() << " members, "
                  << cluster.components.size() << " components, giant fraction "
                  << cluster.giant_fraction << "\n";
      } else {
        auto config = base_config(perc_common);
        config.sweep = perc_sweep;
        config.threshold_cut = perc_cut;
        run_single_action(perc_graph, config, Action::percolate, perc_common);
      }
    } else if (compare_cmd->parsed()) {
      auto config = cmp_config;
      config.master_seed = cmp_common.seed;
      config.format = parse_output_format(cmp_common.format);
      config.theta = cmp_theta;
      run_single_action(cmp_graph, config, Action::immunization_compare, cmp_common);
    } else if (experiment_cmd->parsed()) {
      auto config = read_config(exp_path);
      fs::path base = fs::path(exp_path).parent_path();
      if (!exp_output_dir.empty()) config.output_dir = fs::absolute(exp_output_dir).string();
      const auto result = run_experiment(config, base);
      for (std::size_t i = 0; i < result.files.size(); ++i)
        std::cout << result.summary[i] << " -> " << result.files[i].string() << "\n";
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    std::cerr << "error: edge list " << e.what() << "\n";
    return kRuntimeError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return 0;
}
