#include "netspread/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "format.hpp"
#include "netspread/classifier.hpp"
#include "netspread/epidemic.hpp"
#include "netspread/percolation.hpp"
#include "netspread/random.hpp"

namespace netspread {

std::string_view to_string(Action action) {
  switch (action) {
    case Action::classify: return "classify";
    case Action::histogram: return "histogram";
    case Action::simulate: return "simulate";
    case Action::percolate: return "percolate";
    case Action::immunization_compare: return "immunization-compare";
  }
  return "unknown";
}

Action parse_action(std::string_view text) {
  for (auto a : {Action::classify, Action::histogram, Action::simulate, Action::percolate,
                 Action::immunization_compare})
    if (to_string(a) == text) return a;
  throw std::invalid_argument("unknown action '" + std::string(text) + "'");
}

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::csv ? "csv" : "json";
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json" || text == "json-like") return OutputFormat::json;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected csv or json)");
}

std::uint64_t stream_seed(std::uint64_t master, SeedStream stream) {
  return derive_seed(master, static_cast<std::uint64_t>(stream));
}

// ---- config parsing -------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> out;
  if (trim(value).empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = value.find(',', pos);
    const auto item = trim(value.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - pos));
    out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

template <typename T>
T parse_integer(const std::string& key, std::string_view text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw ConfigError(key, "expected a non-negative integer, got '" + std::string(text) + "'");
  return value;
}

double parse_real(const std::string& key, std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() || !std::isfinite(value))
    throw ConfigError(key, "expected a number, got '" + std::string(text) + "'");
  return value;
}

template <typename F>
auto rethrow_as(const std::string& key, F&& f) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(key, e.what());
  }
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (actions.empty()) throw ConfigError("actions", "at least one action is required");
  if (input == InputKind::file && input_path.empty())
    throw ConfigError("input.path", "required when input = file");
  if (input == InputKind::generator) {
    try {
      generator.validate();
    } catch (const std::invalid_argument& e) {
      const std::string msg = e.what();
      const auto colon = msg.find(':');
      throw ConfigError("generator." + msg.substr(0, colon), msg.substr(colon + 2));
    }
  }
  if (!(beta >= 0.0 && beta <= 1.0)) throw ConfigError("epidemic.beta", "must lie in [0, 1]");
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ConfigError("epidemic.gamma", "must lie in [0, 1]");
  if (max_steps == 0) throw ConfigError("epidemic.max_steps", "must be positive");
  if (initial_infected.empty() && initial_random == 0)
    throw ConfigError("epidemic.initial_random", "must be positive when no initial_infected is set");
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    if (!(sweep[i] >= 0.0 && sweep[i] <= 1.0))
      throw ConfigError("percolation.sweep", "values must lie in [0, 1]");
    if (i > 0 && sweep[i] < sweep[i - 1])
      throw ConfigError("percolation.sweep", "values must be ascending");
  }
  if (theta && !(*theta >= 0.0 && *theta <= 1.0))
    throw ConfigError("percolation.theta", "must lie in [0, 1]");
  if (!(target_fraction > 0.0 && target_fraction <= 1.0))
    throw ConfigError("percolation.target_fraction", "must lie in (0, 1]");
  if (!(threshold_cut >= 0.0 && threshold_cut <= 1.0))
    throw ConfigError("percolation.cut", "must lie in [0, 1]");
  if (!(ratio_threshold > 0.0)) throw ConfigError("classifier.ratio_threshold", "must be positive");
  if (!(delta_ceiling >= 0.0 && delta_ceiling <= 1.0))
    throw ConfigError("classifier.delta_ceiling", "must lie in [0, 1]");
  if (runs == 0) throw ConfigError("runs", "must be positive");
  if (output_dir.empty()) throw ConfigError("output_dir", "must not be empty");
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig c;
  std::unordered_map<std::string, std::size_t> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (seen.contains(key))
      throw ConfigError(key, "duplicate key (first on line " + std::to_string(seen[key]) + ")");
    seen[key] = line_no;

    if (key == "master_seed") {
      c.master_seed = parse_integer<std::uint64_t>(key, value);
    } else if (key == "output_dir") {
      c.output_dir = std::string(value);
    } else if (key == "format") {
      c.format = rethrow_as(key, [&] { return parse_output_format(value); });
    } else if (key == "input") {
      if (value == "generator")
        c.input = InputKind::generator;
      else if (value == "file")
        c.input = InputKind::file;
      else
        throw ConfigError(key, "expected 'generator' or 'file'");
    } else if (key == "input.path") {
      c.input_path = std::string(value);
    } else if (key == "generator.kind") {
      c.generator.kind = rethrow_as(key, [&] { return parse_generator_kind(value); });
    } else if (key == "generator.n") {
      c.generator.n = parse_integer<std::size_t>(key, value);
    } else if (key == "generator.p") {
      c.generator.p = parse_real(key, value);
    } else if (key == "generator.k") {
      c.generator.k = parse_integer<std::size_t>(key, value);
    } else if (key == "generator.m") {
      c.generator.m = parse_integer<std::size_t>(key, value);
    } else if (key == "actions") {
      c.actions.clear();
      for (const auto& a : split_list(value))
        c.actions.push_back(rethrow_as(key, [&] { return parse_action(a); }));
    } else if (key == "epidemic.beta") {
      c.beta = parse_real(key, value);
    } else if (key == "epidemic.gamma") {
      c.gamma = parse_real(key, value);
    } else if (key == "epidemic.max_steps") {
      c.max_steps = parse_integer<std::size_t>(key, value);
    } else if (key == "epidemic.initial_infected") {
      c.initial_infected = split_list(value);
    } else if (key == "epidemic.initial_random") {
      c.initial_random = parse_integer<std::size_t>(key, value);
    } else if (key == "classifier.k_min") {
      c.power_k_min = parse_integer<std::size_t>(key, value);
    } else if (key == "classifier.ratio_threshold") {
      c.ratio_threshold = parse_real(key, value);
    } else if (key == "classifier.delta_ceiling") {
      c.delta_ceiling = parse_real(key, value);
    } else if (key == "runs") {
      c.runs = parse_integer<std::size_t>(key, value);
    } else if (key == "percolation.sweep") {
      c.sweep.clear();
      for (const auto& v : split_list(value)) c.sweep.push_back(parse_real(key, v));
    } else if (key == "percolation.theta") {
      if (value.empty())
        c.theta.reset();
      else
        c.theta = parse_real(key, value);
    } else if (key == "percolation.target_fraction") {
      c.target_fraction = parse_real(key, value);
    } else if (key == "percolation.cut") {
      c.threshold_cut = parse_real(key, value);
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  c.validate();
  return c;
}

ExperimentConfig read_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const ExperimentConfig& c) {
  using detail::format_number;
  std::vector<std::string> actions;
  for (auto a : c.actions) actions.emplace_back(to_string(a));
  std::vector<std::string> sweep;
  for (double t : c.sweep) sweep.push_back(format_number(t));

  std::string out;
  auto put = [&](std::string_view key, const std::string& value) {
    out.append(key).append(" = ").append(value).append("\n");
  };
  put("master_seed", std::to_string(c.master_seed));
  put("output_dir", c.output_dir);
  put("format", std::string(to_string(c.format)));
  put("input", c.input == InputKind::generator ? "generator" : "file");
  put("input.path", c.input_path);
  put("generator.kind", std::string(to_string(c.generator.kind)));
  put("generator.n", std::to_string(c.generator.n));
  put("generator.p", format_number(c.generator.p));
  put("generator.k", std::to_string(c.generator.k));
  put("generator.m", std::to_string(c.generator.m));
  put("actions", join(actions));
  put("epidemic.beta", format_number(c.beta));
  put("epidemic.gamma", format_number(c.gamma));
  put("epidemic.max_steps", std::to_string(c.max_steps));
  put("epidemic.initial_infected", join(c.initial_infected));
  put("epidemic.initial_random", std::to_string(c.initial_random));
  put("classifier.k_min", std::to_string(c.power_k_min));
  put("classifier.ratio_threshold", format_number(c.ratio_threshold));
  put("classifier.delta_ceiling", format_number(c.delta_ceiling));
  put("runs", std::to_string(c.runs));
  put("percolation.sweep", join(sweep));
  put("percolation.theta", c.theta ? format_number(*c.theta) : "");
  put("percolation.target_fraction", format_number(c.target_fraction));
  put("percolation.cut", format_number(c.threshold_cut));
  return out;
}

// ---- plot data ------------------------------------------------------------

std::string histogram_to_csv(const DegreeHistogram& hist) {
  if (hist.empty()) throw std::invalid_argument("cannot emit an empty degree histogram");
  std::string out = "k,count\n";
  for (const auto& [k, count] : hist.counts)
    out += std::to_string(k) + "," + std::to_string(count) + "\n";
  return out;
}

std::string histogram_to_json(const DegreeHistogram& hist) {
  if (hist.empty()) throw std::invalid_argument("cannot emit an empty degree histogram");
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& [k, count] : hist.counts) j.push_back({{"k", k}, {"count", count}});
  return j.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::vector<NodeId> resolve_labels(const Graph& g, const std::vector<std::string>& labels,
                                   const std::string& field) {
  std::unordered_map<std::string_view, NodeId> index;
  for (NodeId v = 0; v < g.node_count(); ++v) index.emplace(g.label(v), v);
  std::vector<NodeId> out;
  for (const auto& l : labels) {
    auto it = index.find(l);
    if (it == index.end()) throw ConfigError(field, "unknown node label '" + l + "'");
    out.push_back(it->second);
  }
  return out;
}

// ---- running ----------------------------------------------------------------

namespace {

std::vector<NodeId> sample_nodes(std::vector<NodeId> candidates, std::size_t k, std::uint64_t seed) {
  k = std::min(k, candidates.size());
  Rng rng(seed);
  for (std::size_t i = 0; i < k; ++i)
    std::swap(candidates[i], candidates[i + rng.below(candidates.size() - i)]);
  candidates.resize(k);
  std::sort(candidates.begin(), candidates.end());
  return candidates;
}

std::vector<NodeId> nodes_except(const Graph& g, const std::vector<NodeId>& excluded) {
  std::vector<bool> skip(g.node_count(), false);
  for (NodeId v : excluded) skip[v] = true;
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (!skip[v]) out.push_back(v);
  return out;
}

std::vector<NodeId> pick_sources(const Graph& g, const ExperimentConfig& c,
                                 const std::vector<NodeId>& excluded) {
  if (!c.initial_infected.empty())
    return resolve_labels(g, c.initial_infected, "epidemic.initial_infected");
  auto sources = sample_nodes(nodes_except(g, excluded), c.initial_random,
                              stream_seed(c.master_seed, SeedStream::infection_sources));
  if (sources.empty()) throw std::runtime_error("no node available as an infection source");
  return sources;
}

EpidemicParams epidemic_params(const ExperimentConfig& c, std::vector<NodeId> sources) {
  EpidemicParams p;
  p.beta = c.beta;
  p.gamma = c.gamma;
  p.max_steps = c.max_steps;
  p.initial_infected = std::move(sources);
  p.seed = stream_seed(c.master_seed, SeedStream::epidemic);
  return p;
}

std::vector<double> default_sweep() {
  std::vector<double> s;
  for (int i = 0; i <= 10; ++i) s.push_back(i / 10.0);
  return s;
}

}  // namespace

ActionOutput run_action(const Graph& g, const ExperimentConfig& config, Action action) {
  using detail::format_number;
  const bool json = config.format == OutputFormat::json;
  switch (action) {
    case Action::classify: {
      ClassifierOptions options;
      options.power_k_min = config.power_k_min;
      options.ratio_threshold = config.ratio_threshold;
      options.delta_ceiling = config.delta_ceiling;
      options.seed = stream_seed(config.master_seed, SeedStream::path_sampling);
      const auto report = classify(g, options);
      return {json ? "classify.json" : "classify.txt",
              json ? report_to_json(report) : report_to_text(report),
              "classify: " + std::string(to_string(report.label)) +
                  " (C=" + format_number(report.clustering) +
                  ", l=" + format_number(report.path_length) + ")"};
    }
    case Action::histogram: {
      const auto hist = degree_histogram(g);
      return {json ? "histogram.json" : "histogram.csv",
              json ? histogram_to_json(hist) : histogram_to_csv(hist),
              "histogram: " + std::to_string(hist.counts.size()) + " distinct degrees"};
    }
    case Action::simulate: {
      const auto trace = simulate_sir(g, epidemic_params(config, pick_sources(g, config, {})));
      std::string content;
      if (json) {
        nlohmann::ordered_json j;
        j["final_outbreak_size"] = trace.final_outbreak_size;
        j["peak_time"] = trace.peak_time;
        j["peak_infected"] = trace.peak_infected;
        auto& steps = j["steps"] = nlohmann::ordered_json::array();
        for (const auto& s : trace.steps)
          steps.push_back({{"t", s.t}, {"S", s.susceptible}, {"I", s.infected}, {"R", s.recovered}});
        content = j.dump(2) + "\n";
      } else {
        content = trace_to_csv(trace);
      }
      return {json ? "simulate.json" : "simulate.csv", content,
              "simulate: outbreak " + std::to_string(trace.final_outbreak_size) + " of " +
                  std::to_string(g.node_count()) + ", peak " + std::to_string(trace.peak_infected) +
                  " at t=" + std::to_string(trace.peak_time)};
    }
    case Action::percolate: {
      const auto sweep = percolation_sweep(g, config.sweep.empty() ? default_sweep() : config.sweep);
      const auto threshold = percolation_threshold(sweep, config.threshold_cut);
      return {json ? "percolate.json" : "percolate.csv", json ? sweep_to_json(sweep) : sweep_to_csv(sweep),
              "percolate: threshold " + (threshold ? format_number(*threshold) : std::string("none")) +
                  " (giant fraction < " + format_number(config.threshold_cut) + ")"};
    }
    case Action::immunization_compare: {
      const auto target = static_cast<std::size_t>(
          std::llround(config.target_fraction * static_cast<double>(g.node_count())));
      const double theta = config.theta ? *config.theta : theta_for_cluster_size(g, target).value_or(1.0);
      const auto cluster = high_clustering_cluster(g, theta).percolation_cluster();
      const auto sources = pick_sources(g, config, cluster);
      const auto random_set =
          sample_nodes(nodes_except(g, sources), cluster.size(),
                       stream_seed(config.master_seed, SeedStream::random_immunization));
      const std::vector<ImmunizationStrategy> strategies{
          {"percolation-cluster", cluster}, {"random", random_set}, {"none", {}}};
      const auto report =
          evaluate_immunization(g, epidemic_params(config, sources), strategies, config.runs);
      const auto& best = report.outcomes[report.ranking.front()];
      return {json ? "immunization.json" : "immunization.csv",
              json ? immunization_to_json(report) : immunization_to_csv(report),
              "immunization-compare: theta=" + format_number(theta) + ", cluster " +
                  std::to_string(cluster.size()) + " nodes, best '" + best.name +
                  "' (mean outbreak " + format_number(best.summary.mean_outbreak) + ")"};
    }
  }
  throw std::invalid_argument("unknown action");
}

ExperimentResult run_experiment(const ExperimentConfig& config, const std::filesystem::path& base_dir) {
  config.validate();
  auto resolve = [&](const std::filesystem::path& p) {
    return p.is_absolute() || base_dir.empty() ? p : base_dir / p;
  };

  Graph g;
  if (config.input == InputKind::file) {
    const auto path = resolve(config.input_path);
    if (!std::filesystem::exists(path))
      throw std::runtime_error("input.path: file '" + path.string() + "' does not exist");
    g = read_edge_list(path);
  } else {
    GeneratorParams params = config.generator;
    params.seed = stream_seed(config.master_seed, SeedStream::generator);
    g = generate(params);
  }

  const auto out_dir = resolve(config.output_dir);
  std::filesystem::create_directories(out_dir);
  ExperimentResult result;
  for (Action action : config.actions) {
    auto out = run_action(g, config, action);
    const auto path = out_dir / out.file_name;
    write_text_file(path, out.content);
    result.files.push_back(path);
    result.summary.push_back(std::move(out.summary));
  }
  return result;
}

}  // namespace netspread
