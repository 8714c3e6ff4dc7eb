#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netspread/graph.hpp"

namespace netspread {

enum class NodeState : std::uint8_t { susceptible, infected, recovered };

struct EpidemicParams {
  double beta = 0.0;   ///< per-edge, per-step transmission probability
  double gamma = 0.0;  ///< per-step recovery probability
  std::vector<NodeId> initial_infected;
  std::vector<NodeId> immunized;  ///< recovered from t = 0
  std::size_t max_steps = 1000;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument naming the offending field.
  void validate(const Graph& g) const;
};

struct StepCounts {
  std::size_t t = 0;
  std::size_t susceptible = 0;
  std::size_t infected = 0;
  std::size_t recovered = 0;
  friend bool operator==(const StepCounts&, const StepCounts&) = default;
};

struct InfectionEvent {
  std::size_t t = 0;
  NodeId infector = 0;
  NodeId infectee = 0;
  friend bool operator==(const InfectionEvent&, const InfectionEvent&) = default;
};

struct EpidemicTrace {
  std::vector<StepCounts> steps;  ///< t = 0 first
  std::vector<InfectionEvent> infections;
  std::size_t final_outbreak_size = 0;  ///< nodes ever infected
  std::size_t peak_time = 0;
  std::size_t peak_infected = 0;
  friend bool operator==(const EpidemicTrace&, const EpidemicTrace&) = default;
};

/**
 * Discrete-time SIR run.
 *
 * Each step, every infected node tries each susceptible neighbour with
 * probability beta; a node reached by several spreaders changes state once
 * and its infector is the lowest-id successful spreader. Then every node
 * that was infected at the start of the step recovers with probability
 * gamma. Immunized nodes are recovered from t = 0. The run stops when no
 * node is infected or after max_steps steps.
 */
EpidemicTrace simulate_sir(const Graph& g, const EpidemicParams& params);

struct EnsembleSummary {
  std::size_t runs = 0;
  double mean_outbreak = 0.0;
  double sd_outbreak = 0.0;  ///< sample standard deviation
  double mean_peak_time = 0.0;
  double mean_peak_infected = 0.0;
  std::vector<std::size_t> outbreak_sizes;  ///< per run, in run order
  std::vector<EpidemicTrace> traces;        ///< filled only when requested
};

/// Run i uses seed derive_seed(params.seed, i).
EnsembleSummary run_ensemble(const Graph& g, const EpidemicParams& params, std::size_t runs,
                             bool keep_traces = false);

struct ImmunizationStrategy {
  std::string name;
  std::vector<NodeId> nodes;
};

struct StrategyOutcome {
  std::string name;
  std::size_t size = 0;
  EnsembleSummary summary;
};

struct ImmunizationReport {
  std::vector<StrategyOutcome> outcomes;  ///< input order
  std::vector<std::size_t> ranking;       ///< indices into outcomes, best first
};

/**
 * Runs one ensemble per strategy with the strategy's nodes immunized
 * (replacing params.immunized). All strategies share the same per-run
 * seeds, so differences come from the immunization sets alone. Ranked by
 * mean outbreak, then mean peak height, then input order.
 */
ImmunizationReport evaluate_immunization(const Graph& g, const EpidemicParams& params,
                                         const std::vector<ImmunizationStrategy>& strategies,
                                         std::size_t runs);

/// "t,S,I,R" rows.
std::string trace_to_csv(const EpidemicTrace& trace);
/// "t,infector,infectee" rows using node labels.
std::string infections_to_csv(const Graph& g, const EpidemicTrace& trace);
std::string ensemble_to_json(const EnsembleSummary& summary);
std::string immunization_to_csv(const ImmunizationReport& report);
std::string immunization_to_json(const ImmunizationReport& report);

}  // namespace netspread
