#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "netspread/generators.hpp"
#include "netspread/graph.hpp"

namespace netspread {

/// A bad configuration value; `field()` names the offending key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

enum class Action { classify, histogram, simulate, percolate, immunization_compare };
std::string_view to_string(Action action);
Action parse_action(std::string_view text);

enum class OutputFormat { csv, json };
std::string_view to_string(OutputFormat format);
OutputFormat parse_output_format(std::string_view text);

enum class InputKind { generator, file };

struct ExperimentConfig {
  InputKind input = InputKind::generator;
  GeneratorParams generator;  ///< seed is derived from master_seed at run time
  std::string input_path;     ///< edge-list file when input == file
  std::vector<Action> actions;

  double beta = 0.1;
  double gamma = 0.2;
  std::size_t max_steps = 1000;
  std::vector<std::string> initial_infected;  ///< node labels; random pick when empty
  std::size_t initial_random = 1;

  std::vector<double> sweep;                 ///< empty: 0, 0.1, ..., 1
  std::optional<double> theta;               ///< fixed cluster threshold
  double target_fraction = 0.05;             ///< cluster size target when theta is unset
  double threshold_cut = 0.01;

  std::size_t power_k_min = 2;
  double ratio_threshold = 10.0;
  double delta_ceiling = 0.15;

  std::size_t runs = 30;
  std::string output_dir = "results";
  OutputFormat format = OutputFormat::csv;
  std::uint64_t master_seed = 0;

  /// Throws ConfigError.
  void validate() const;
  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/**
 * Parses "key = value" lines; '#' starts a comment, list values are comma
 * separated. Unknown keys, bad values and an invalid result (see
 * ExperimentConfig::validate) raise ConfigError naming the key.
 */
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig read_config(const std::filesystem::path& path);
/// Canonical form: every key, fixed order. parse_config inverts it.
std::string serialize_config(const ExperimentConfig& config);

/// Sub-streams of the master seed.
enum class SeedStream : std::uint64_t {
  generator = 1,
  epidemic = 2,
  infection_sources = 3,
  random_immunization = 4,
  path_sampling = 5,
};
std::uint64_t stream_seed(std::uint64_t master, SeedStream stream);

struct ActionOutput {
  std::string file_name;  ///< e.g. "histogram.csv"
  std::string content;
  std::string summary;    ///< one line
};

/// Runs a single action against `g` without touching the filesystem.
ActionOutput run_action(const Graph& g, const ExperimentConfig& config, Action action);

struct ExperimentResult {
  std::vector<std::filesystem::path> files;  ///< one per action, in order
  std::vector<std::string> summary;          ///< one line per action
};

/**
 * Loads or generates the graph, runs every action in order and writes one
 * result file per action into output_dir. Relative input paths resolve
 * against `base_dir`. Identical configs produce byte-identical files.
 */
ExperimentResult run_experiment(const ExperimentConfig& config,
                                const std::filesystem::path& base_dir = {});

// ---- plot data ------------------------------------------------------------

/// "k,count" rows in ascending degree. Throws on an empty histogram.
std::string histogram_to_csv(const DegreeHistogram& hist);
std::string histogram_to_json(const DegreeHistogram& hist);
/// Writes `content` to `path`; throws std::runtime_error when unwritable.
void write_text_file(const std::filesystem::path& path, std::string_view content);

/// Labels to ids; throws ConfigError(field) for an unknown label.
std::vector<NodeId> resolve_labels(const Graph& g, const std::vector<std::string>& labels,
                                   const std::string& field);

}  // namespace netspread
