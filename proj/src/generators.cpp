#include "netspread/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "netspread/random.hpp"

namespace netspread {

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::erdos_renyi: return "erdos-renyi";
    case GeneratorKind::watts_strogatz: return "watts-strogatz";
    case GeneratorKind::barabasi_albert: return "barabasi-albert";
  }
  return "unknown";
}

GeneratorKind parse_generator_kind(std::string_view text) {
  if (text == "erdos-renyi" || text == "er") return GeneratorKind::erdos_renyi;
  if (text == "watts-strogatz" || text == "ws") return GeneratorKind::watts_strogatz;
  if (text == "barabasi-albert" || text == "ba") return GeneratorKind::barabasi_albert;
  throw std::invalid_argument("unknown generator kind '" + std::string(text) + "'");
}

void GeneratorParams::validate() const {
  if (n == 0) throw std::invalid_argument("n: must be positive");
  switch (kind) {
    case GeneratorKind::erdos_renyi:
      if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p: must lie in [0, 1]");
      break;
    case GeneratorKind::watts_strogatz:
      if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p: must lie in [0, 1]");
      if (k == 0 || k % 2 != 0) throw std::invalid_argument("k: must be even and positive");
      if (k >= n) throw std::invalid_argument("k: must be smaller than n");
      break;
    case GeneratorKind::barabasi_albert:
      if (m == 0) throw std::invalid_argument("m: must be positive");
      if (m >= n) throw std::invalid_argument("m: must be smaller than n");
      break;
  }
}

Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  GeneratorParams{GeneratorKind::erdos_renyi, n, p}.validate();
  std::vector<Edge> edges;
  if (p >= 1.0) {
    edges.reserve(n * (n - 1) / 2);
    for (NodeId v = 1; v < n; ++v)
      for (NodeId w = 0; w < v; ++w) edges.emplace_back(w, v);
    return Graph::from_edges(n, edges);
  }
  if (p <= 0.0) return Graph::from_edges(n, edges);

  // Geometric skipping over the lower triangle (Batagelj & Brandes):
  // identical in law to one Bernoulli(p) trial per pair.
  Rng rng(seed);
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = rng.uniform();
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.emplace_back(static_cast<NodeId>(w), static_cast<NodeId>(v));
  }
  return Graph::from_edges(n, edges);
}

Graph gen_erdos_renyi_mean_degree(std::size_t n, double mean_degree, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("n: mean-degree form needs n >= 2");
  if (!(mean_degree >= 0.0)) throw std::invalid_argument("mean_degree: must be non-negative");
  return gen_erdos_renyi(n, mean_degree / static_cast<double>(n - 1), seed);
}

Graph gen_watts_strogatz(std::size_t n, std::size_t k, double p_rewire, std::uint64_t seed) {
  GeneratorParams{GeneratorKind::watts_strogatz, n, p_rewire, k}.validate();
  const std::size_t half = k / 2;
  auto key = [n](NodeId a, NodeId b) {
    return a < b ? std::uint64_t{a} * n + b : std::uint64_t{b} * n + a;
  };

  std::vector<Edge> edges;
  edges.reserve(n * half);
  std::unordered_set<std::uint64_t> present;
  present.reserve(n * half * 2);
  for (std::size_t j = 1; j <= half; ++j) {
    for (NodeId u = 0; u < n; ++u) {
      const auto v = static_cast<NodeId>((u + j) % n);
      edges.emplace_back(u, v);
      present.insert(key(u, v));
    }
  }

  Rng rng(seed);
  // edges is ordered by ring offset j, then origin u.
  for (auto& [u, v] : edges) {
    if (!rng.bernoulli(p_rewire)) continue;
    const auto target = static_cast<NodeId>(rng.below(n));
    if (target == u || present.contains(key(u, target))) continue;
    present.erase(key(u, v));
    present.insert(key(u, target));
    v = target;
  }
  return Graph::from_edges(n, edges);
}

Graph gen_barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  GeneratorParams{GeneratorKind::barabasi_albert, n, 0.0, 0, m}.validate();
  std::vector<Edge> edges;
  edges.reserve(barabasi_albert_edge_count(n, m));
  // Every edge endpoint once: a uniform pick from this pool is a
  // degree-proportional pick over nodes.
  std::vector<NodeId> pool;
  pool.reserve(2 * barabasi_albert_edge_count(n, m));

  const auto core = static_cast<NodeId>(m + 1);
  for (NodeId v = 1; v < core; ++v) {
    for (NodeId w = 0; w < v; ++w) {
      edges.emplace_back(w, v);
      pool.push_back(w);
      pool.push_back(v);
    }
  }

  Rng rng(seed);
  std::vector<NodeId> chosen;
  chosen.reserve(m);
  for (auto v = core; v < n; ++v) {
    chosen.clear();
    while (chosen.size() < m) {
      const NodeId t = pool[rng.below(pool.size())];
      if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
    }
    for (NodeId t : chosen) {
      edges.emplace_back(t, v);
      pool.push_back(t);
      pool.push_back(v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph generate(const GeneratorParams& params) {
  params.validate();
  switch (params.kind) {
    case GeneratorKind::erdos_renyi: return gen_erdos_renyi(params.n, params.p, params.seed);
    case GeneratorKind::watts_strogatz:
      return gen_watts_strogatz(params.n, params.k, params.p, params.seed);
    case GeneratorKind::barabasi_albert: return gen_barabasi_albert(params.n, params.m, params.seed);
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace netspread
