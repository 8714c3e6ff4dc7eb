#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "netspread/epidemic.hpp"
#include "netspread/generators.hpp"
#include "oracles.hpp"

using namespace netspread;

namespace {

EpidemicParams sir(double beta, double gamma, std::vector<NodeId> infected, std::uint64_t seed = 1) {
  EpidemicParams p;
  p.beta = beta;
  p.gamma = gamma;
  p.initial_infected = std::move(infected);
  p.seed = seed;
  return p;
}

void check_trace_invariants(const Graph& g, const EpidemicParams& p, const EpidemicTrace& t) {
  REQUIRE_FALSE(t.steps.empty());
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    CHECK(s.t == i);
    CHECK(s.susceptible + s.infected + s.recovered == g.node_count());
    if (i > 0) {
      CHECK(s.susceptible <= t.steps[i - 1].susceptible);
      CHECK(s.recovered >= t.steps[i - 1].recovered);
    }
  }
  const auto& last = t.steps.back();
  CHECK((last.infected == 0 || last.t == p.max_steps));
  CHECK(t.final_outbreak_size == p.initial_infected.size() + t.infections.size());
  for (const auto& e : t.infections) {
    CHECK(g.has_edge(e.infector, e.infectee));
    for (NodeId v : p.immunized) {
      CHECK(e.infector != v);
      CHECK(e.infectee != v);
    }
  }
}

}  // namespace

TEST_CASE("no transmission: the seed simply recovers") {
  const auto t = simulate_sir(oracle::path3(), sir(0.0, 1.0, {0}));
  REQUIRE(t.steps.size() == 2);
  CHECK(t.steps[1] == StepCounts{1, 2, 0, 1});
  CHECK(t.final_outbreak_size == 1);
  CHECK(t.infections.empty());
}

TEST_CASE("deterministic flood never empties I") {
  auto p = sir(1.0, 0.0, {0});
  p.max_steps = 25;
  const auto t = simulate_sir(oracle::star5(), p);
  CHECK(t.steps[1] == StepCounts{1, 0, 5, 0});
  CHECK(t.steps.size() == 26);
  CHECK(t.steps.back().t == 25);
  CHECK(t.final_outbreak_size == 5);
  CHECK(t.peak_infected == 5);
  CHECK(t.peak_time == 1);
}

TEST_CASE("hand trace on a three-node path") {
  const auto t = simulate_sir(oracle::path3(), sir(1.0, 1.0, {0}));
  const std::vector<StepCounts> expected{{0, 2, 1, 0}, {1, 1, 1, 1}, {2, 0, 1, 2}, {3, 0, 0, 3}};
  CHECK(t.steps == expected);
  const std::vector<InfectionEvent> events{{1, 0, 1}, {2, 1, 2}};
  CHECK(t.infections == events);
  CHECK(t.final_outbreak_size == 3);
}

TEST_CASE("lowest-id spreader is recorded as infector") {
  // 0 and 1 both reach 2 in the first step.
  const Graph g = oracle::make(3, {{0, 2}, {1, 2}});
  const auto t = simulate_sir(g, sir(1.0, 0.0, {1, 0}));
  REQUIRE(t.infections.size() == 1);
  CHECK(t.infections[0] == InfectionEvent{1, 0, 2});
}

TEST_CASE("invalid parameters") {
  const Graph g = oracle::path3();
  auto overlap = sir(0.5, 0.5, {0});
  overlap.immunized = {0};
  CHECK_THROWS_AS((void)simulate_sir(g, overlap), std::invalid_argument);
  CHECK_THROWS_AS((void)simulate_sir(g, sir(1.5, 0.5, {0})), std::invalid_argument);
  CHECK_THROWS_AS((void)simulate_sir(g, sir(0.5, -0.1, {0})), std::invalid_argument);
  CHECK_THROWS_AS((void)simulate_sir(g, sir(0.5, 0.5, {3})), std::invalid_argument);
  auto zero_steps = sir(0.5, 0.5, {0});
  zero_steps.max_steps = 0;
  CHECK_THROWS_AS((void)simulate_sir(g, zero_steps), std::invalid_argument);
}

TEST_CASE("randomized runs keep every invariant") {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 20 + rng.below(200);
    const Graph g = gen_erdos_renyi_mean_degree(n, 1.0 + 6.0 * rng.uniform(), rng.next());
    auto p = sir(rng.uniform(), rng.uniform(), {static_cast<NodeId>(rng.below(n))}, rng.next());
    for (int i = 0; i < 5; ++i) {
      const auto v = static_cast<NodeId>(rng.below(n));
      if (v != p.initial_infected[0]) p.immunized.push_back(v);
    }
    std::sort(p.immunized.begin(), p.immunized.end());
    p.immunized.erase(std::unique(p.immunized.begin(), p.immunized.end()), p.immunized.end());
    p.max_steps = 1 + rng.below(60);
    check_trace_invariants(g, p, simulate_sir(g, p));
  }
}

TEST_CASE("same seed gives identical traces") {
  const Graph g = gen_barabasi_albert(800, 2, 3);
  const auto p = sir(0.2, 0.3, {5, 17}, 42);
  CHECK(simulate_sir(g, p) == simulate_sir(g, p));
}

TEST_CASE("ensemble statistics") {
  const Graph g = gen_barabasi_albert(500, 2, 3);
  SUBCASE("no transmission") {
    const auto s = run_ensemble(g, sir(0.0, 0.5, {1, 2, 3}), 20);
    CHECK(s.runs == 20);
    CHECK(s.mean_outbreak == 3.0);
    CHECK(s.sd_outbreak == 0.0);
  }
  SUBCASE("flood covers the component") {
    auto p = sir(1.0, 0.0, {7});
    p.max_steps = 50;
    const auto s = run_ensemble(g, p, 5);
    for (auto size : s.outbreak_sizes) CHECK(size == 500);
  }
  SUBCASE("run i uses the derived seed") {
    const auto p = sir(0.15, 0.2, {0}, 11);
    const auto s = run_ensemble(g, p, 6, true);
    REQUIRE(s.traces.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
      auto single = p;
      single.seed = derive_seed(p.seed, i);
      CHECK(simulate_sir(g, single) == s.traces[i]);
      CHECK(s.outbreak_sizes[i] == s.traces[i].final_outbreak_size);
    }
    CHECK(run_ensemble(g, p, 6).outbreak_sizes == s.outbreak_sizes);
  }
  SUBCASE("zero runs") { CHECK_THROWS((void)run_ensemble(g, sir(0.1, 0.1, {0}), 0)); }
}

TEST_CASE("raising beta does not shrink the mean outbreak") {
  const Graph g = gen_erdos_renyi_mean_degree(1000, 5.0, 2);
  double previous = 0.0, previous_se = 0.0;
  for (double beta : {0.02, 0.05, 0.1, 0.2, 0.4}) {
    const auto s = run_ensemble(g, sir(beta, 0.3, {0}, 8), 40);
    const double se = s.sd_outbreak / std::sqrt(40.0);
    CHECK(s.mean_outbreak + std::max(se, previous_se) >= previous);
    previous = s.mean_outbreak;
    previous_se = se;
  }
}

TEST_CASE("immunizing the hub of a star blocks every path") {
  const auto report = evaluate_immunization(oracle::star5(), sir(1.0, 0.5, {1}),
                                            {{"center", {0}}, {"none", {}}}, 25);
  for (auto size : report.outcomes[0].summary.outbreak_sizes) CHECK(size == 1);
  CHECK(report.outcomes[1].summary.mean_outbreak == 5.0);
  CHECK(report.ranking == std::vector<std::size_t>{0, 1});
}

TEST_CASE("identical strategies give identical summaries") {
  const Graph g = gen_barabasi_albert(400, 2, 1);
  const auto report = evaluate_immunization(g, sir(0.2, 0.2, {3}, 5), {{"a", {}}, {"b", {}}}, 15);
  CHECK(report.outcomes[0].summary.outbreak_sizes == report.outcomes[1].summary.outbreak_sizes);
  CHECK(report.outcomes[0].summary.mean_peak_time == report.outcomes[1].summary.mean_peak_time);
  CHECK(report.ranking == std::vector<std::size_t>{0, 1});
}

TEST_CASE("strategy overlapping the seeds is rejected") {
  CHECK_THROWS_AS((void)evaluate_immunization(oracle::star5(), sir(1.0, 0.5, {1}), {{"bad", {1}}}, 3),
                  std::invalid_argument);
}

TEST_CASE("random immunization lowers the mean outbreak on a scale-free graph") {
  const Graph g = gen_barabasi_albert(5000, 3, 12);
  Rng rng(4);
  std::vector<NodeId> immune;
  std::vector<bool> taken(5000, false);
  taken[0] = true;
  while (immune.size() < 250) {
    const auto v = static_cast<NodeId>(rng.below(5000));
    if (!taken[v]) {
      taken[v] = true;
      immune.push_back(v);
    }
  }
  const auto report =
      evaluate_immunization(g, sir(0.1, 0.2, {0}, 6), {{"none", {}}, {"random", immune}}, 30);
  CHECK(report.outcomes[0].summary.mean_outbreak > report.outcomes[1].summary.mean_outbreak);
}

TEST_CASE("exports") {
  const Graph g = parse_edge_list("a b\nb c\n");
  const auto t = simulate_sir(g, sir(1.0, 1.0, {0}));
  CHECK(trace_to_csv(t) == "t,S,I,R\n0,2,1,0\n1,1,1,1\n2,0,1,2\n3,0,0,3\n");
  CHECK(infections_to_csv(g, t) == "t,infector,infectee\n1,a,b\n2,b,c\n");
  const auto s = run_ensemble(g, sir(1.0, 1.0, {0}), 2);
  CHECK(ensemble_to_json(s).find("\"mean_outbreak\"") != std::string::npos);
  const auto report = evaluate_immunization(g, sir(1.0, 1.0, {0}), {{"mid", {1}}, {"none", {}}}, 2);
  const std::string csv = immunization_to_csv(report);
  CHECK(csv.rfind("strategy,size,mean_outbreak,sd_outbreak,mean_peak_infected,mean_peak_time,rank\n", 0) == 0);
  CHECK(csv.find("mid,1,1,0,") != std::string::npos);
  CHECK(immunization_to_json(report).find("\"rank\": 1") != std::string::npos);
}
