#include "netspread/epidemic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "format.hpp"
#include "netspread/random.hpp"
#include "parallel.hpp"

namespace netspread {

namespace {

std::vector<NodeId> sorted_unique(std::vector<NodeId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool intersects(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  auto sa = sorted_unique(a);
  auto sb = sorted_unique(b);
  std::vector<NodeId> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  return !common.empty();
}

}  // namespace

void EpidemicParams::validate(const Graph& g) const {
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta: must lie in [0, 1]");
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma: must lie in [0, 1]");
  if (max_steps == 0) throw std::invalid_argument("max_steps: must be positive");
  for (NodeId v : initial_infected)
    if (v >= g.node_count())
      throw std::invalid_argument("initial_infected: node " + std::to_string(v) + " out of range");
  for (NodeId v : immunized)
    if (v >= g.node_count())
      throw std::invalid_argument("immunized: node " + std::to_string(v) + " out of range");
  if (intersects(initial_infected, immunized))
    throw std::invalid_argument("immunized: overlaps initial_infected");
}

EpidemicTrace simulate_sir(const Graph& g, const EpidemicParams& params) {
  params.validate(g);
  const std::size_t n = g.node_count();
  std::vector<NodeState> state(n, NodeState::susceptible);
  std::vector<NodeId> infected = sorted_unique(params.initial_infected);
  std::size_t recovered = 0;
  for (NodeId v : sorted_unique(params.immunized)) {
    state[v] = NodeState::recovered;
    ++recovered;
  }
  for (NodeId v : infected) state[v] = NodeState::infected;

  EpidemicTrace trace;
  auto record = [&](std::size_t t) {
    trace.steps.push_back({t, n - infected.size() - recovered, infected.size(), recovered});
    if (infected.size() > trace.peak_infected) {
      trace.peak_infected = infected.size();
      trace.peak_time = t;
    }
  };
  record(0);
  trace.final_outbreak_size = infected.size();

  Rng rng(params.seed);
  std::vector<NodeId> newly;
  std::vector<NodeId> next;
  for (std::size_t t = 1; t <= params.max_steps && !infected.empty(); ++t) {
    newly.clear();
    // infected is ascending, so the first successful spreader is the lowest id.
    for (NodeId u : infected) {
      for (NodeId w : g.neighbors(u)) {
        if (state[w] != NodeState::susceptible) continue;
        if (rng.bernoulli(params.beta)) {
          state[w] = NodeState::infected;
          newly.push_back(w);
          trace.infections.push_back({t, u, w});
        }
      }
    }
    next.clear();
    for (NodeId u : infected) {
      if (rng.bernoulli(params.gamma)) {
        state[u] = NodeState::recovered;
        ++recovered;
      } else {
        next.push_back(u);
      }
    }
    std::sort(newly.begin(), newly.end());
    infected.clear();
    std::merge(next.begin(), next.end(), newly.begin(), newly.end(), std::back_inserter(infected));
    trace.final_outbreak_size += newly.size();
    record(t);
  }
  return trace;
}

EnsembleSummary run_ensemble(const Graph& g, const EpidemicParams& params, std::size_t runs,
                             bool keep_traces) {
  if (runs == 0) throw std::invalid_argument("runs: must be positive");
  params.validate(g);
  std::vector<EpidemicTrace> traces(runs);
  detail::parallel_for(
      runs,
      [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
          EpidemicParams run = params;
          run.seed = derive_seed(params.seed, i);
          traces[i] = simulate_sir(g, run);
        }
      },
      1);

  EnsembleSummary s;
  s.runs = runs;
  double sum = 0.0, peak_t = 0.0, peak_i = 0.0;
  for (const auto& tr : traces) {
    s.outbreak_sizes.push_back(tr.final_outbreak_size);
    sum += static_cast<double>(tr.final_outbreak_size);
    peak_t += static_cast<double>(tr.peak_time);
    peak_i += static_cast<double>(tr.peak_infected);
  }
  const auto r = static_cast<double>(runs);
  s.mean_outbreak = sum / r;
  s.mean_peak_time = peak_t / r;
  s.mean_peak_infected = peak_i / r;
  if (runs > 1) {
    double ss = 0.0;
    for (auto x : s.outbreak_sizes) {
      const double d = static_cast<double>(x) - s.mean_outbreak;
      ss += d * d;
    }
    s.sd_outbreak = std::sqrt(ss / (r - 1.0));
  }
  if (keep_traces) s.traces = std::move(traces);
  return s;
}

ImmunizationReport evaluate_immunization(const Graph& g, const EpidemicParams& params,
                                         const std::vector<ImmunizationStrategy>& strategies,
                                         std::size_t runs) {
  ImmunizationReport report;
  for (const auto& strategy : strategies) {
    if (intersects(strategy.nodes, params.initial_infected))
      throw std::invalid_argument("strategy '" + strategy.name + "' overlaps the initial infected");
  }
  for (const auto& strategy : strategies) {
    EpidemicParams p = params;
    p.immunized = sorted_unique(strategy.nodes);
    StrategyOutcome outcome;
    outcome.name = strategy.name;
    outcome.size = p.immunized.size();
    outcome.summary = run_ensemble(g, p, runs);
    report.outcomes.push_back(std::move(outcome));
  }
  report.ranking.resize(report.outcomes.size());
  std::iota(report.ranking.begin(), report.ranking.end(), std::size_t{0});
  std::stable_sort(report.ranking.begin(), report.ranking.end(), [&](std::size_t a, std::size_t b) {
    const auto& sa = report.outcomes[a].summary;
    const auto& sb = report.outcomes[b].summary;
    if (sa.mean_outbreak != sb.mean_outbreak) return sa.mean_outbreak < sb.mean_outbreak;
    return sa.mean_peak_infected < sb.mean_peak_infected;
  });
  return report;
}

// ---- export -----------------------------------------------------------------

std::string trace_to_csv(const EpidemicTrace& trace) {
  std::string out = "t,S,I,R\n";
  for (const auto& s : trace.steps)
    out += std::to_string(s.t) + "," + std::to_string(s.susceptible) + "," +
           std::to_string(s.infected) + "," + std::to_string(s.recovered) + "\n";
  return out;
}

std::string infections_to_csv(const Graph& g, const EpidemicTrace& trace) {
  std::string out = "t,infector,infectee\n";
  for (const auto& e : trace.infections)
    out += std::to_string(e.t) + "," + g.label(e.infector) + "," + g.label(e.infectee) + "\n";
  return out;
}

namespace {

nlohmann::ordered_json summary_json(const EnsembleSummary& s) {
  nlohmann::ordered_json j;
  j["runs"] = s.runs;
  j["mean_outbreak"] = s.mean_outbreak;
  j["sd_outbreak"] = s.sd_outbreak;
  j["mean_peak_time"] = s.mean_peak_time;
  j["mean_peak_infected"] = s.mean_peak_infected;
  j["outbreak_sizes"] = s.outbreak_sizes;
  return j;
}

std::vector<std::size_t> rank_of(const ImmunizationReport& report) {
  std::vector<std::size_t> rank(report.outcomes.size());
  for (std::size_t r = 0; r < report.ranking.size(); ++r) rank[report.ranking[r]] = r + 1;
  return rank;
}

}  // namespace

std::string ensemble_to_json(const EnsembleSummary& summary) {
  return summary_json(summary).dump(2) + "\n";
}

std::string immunization_to_csv(const ImmunizationReport& report) {
  std::string out = "strategy,size,mean_outbreak,sd_outbreak,mean_peak_infected,mean_peak_time,rank\n";
  const auto rank = rank_of(report);
  for (std::size_t i = 0; i < report.outcomes.size(); ++i) {
    const auto& o = report.outcomes[i];
    out += o.name + "," + std::to_string(o.size) + "," +
           detail::format_number(o.summary.mean_outbreak) + "," +
           detail::format_number(o.summary.sd_outbreak) + "," +
           detail::format_number(o.summary.mean_peak_infected) + "," +
           detail::format_number(o.summary.mean_peak_time) + "," + std::to_string(rank[i]) + "\n";
  }
  return out;
}

std::string immunization_to_json(const ImmunizationReport& report) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  const auto rank = rank_of(report);
  for (std::size_t i = 0; i < report.outcomes.size(); ++i) {
    const auto& o = report.outcomes[i];
    nlohmann::ordered_json entry;
    entry["strategy"] = o.name;
    entry["size"] = o.size;
    entry["rank"] = rank[i];
    entry["summary"] = summary_json(o.summary);
    j.push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

}  // namespace netspread
