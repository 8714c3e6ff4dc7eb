// Brute-force reference implementations and small graph fixtures for tests.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "netspread/graph.hpp"
#include "netspread/random.hpp"

namespace oracle {

using netspread::Edge;
using netspread::Graph;
using netspread::NodeId;

inline Graph make(std::size_t n, std::vector<Edge> edges) {
  return Graph::from_edges(n, edges);
}

// Triangle a,b,c (0,1,2) with pendant d (3) hanging off a.
inline Graph triangle_plus_pendant() { return make(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }
inline Graph triangle() { return make(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Graph path3() { return make(3, {{0, 1}, {1, 2}}); }
inline Graph star5() { return make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}); }
inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return make(n, e);
}

// Random graph with 1..max_n nodes and a random edge density.
inline Graph random_small(netspread::Rng& rng, std::size_t max_n = 10) {
  const std::size_t n = 1 + rng.below(max_n);
  const double p = rng.uniform();
  std::vector<Edge> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) e.emplace_back(u, v);
  return make(n, e);
}

inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

// Exact C_i as a rational (numerator, denominator) from a full pair scan.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

inline std::vector<Ratio> local_clustering(const Graph& g) {
  const auto a = adjacency_matrix(g);
  const std::size_t n = a.size();
  std::vector<Ratio> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> nb;
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j]) nb.push_back(j);
    if (nb.size() < 2) continue;
    std::uint64_t closed = 0;
    for (std::size_t x = 0; x < nb.size(); ++x)
      for (std::size_t y = x + 1; y < nb.size(); ++y)
        if (a[nb[x]][nb[y]]) ++closed;
    out[i] = {closed, nb.size() * (nb.size() - 1) / 2};
  }
  return out;
}

// Average clustering as an exact fraction, compared by cross-multiplying.
inline bool average_clustering_matches(const Graph& g, double value) {
  const auto c = local_clustering(g);
  // Sum of num_i/den_i over a common denominator; dens are at most 36.
  std::uint64_t den = 1;
  for (const auto& r : c) den = std::lcm(den, r.den);
  std::uint64_t num = 0;
  for (const auto& r : c) num += r.num * (den / r.den);
  const double exact = static_cast<double>(num) / static_cast<double>(den * c.size());
  return std::abs(exact - value) < 1e-12;
}

// Transitive closure of reachability (Floyd-Warshall), restricted to `keep`.
inline std::vector<std::vector<bool>> reachability(const Graph& g, const std::vector<bool>& keep) {
  auto r = adjacency_matrix(g);
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (!keep[i] || !keep[j]) r[i][j] = false;
    if (keep[i]) r[i][i] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

// Components of the nodes with C_i >= theta, sorted largest first, then by smallest member.
inline std::vector<std::vector<NodeId>> threshold_components(const Graph& g, double theta) {
  const auto c = local_clustering(g);
  const std::size_t n = g.node_count();
  std::vector<bool> keep(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double ci = c[i].den == 0 ? 0.0 : static_cast<double>(c[i].num) / static_cast<double>(c[i].den);
    keep[i] = ci >= theta;
  }
  const auto r = reachability(g, keep);
  std::vector<bool> done(n, false);
  std::vector<std::vector<NodeId>> comps;
  for (std::size_t i = 0; i < n; ++i) {
    if (!keep[i] || done[i]) continue;
    std::vector<NodeId> comp;
    for (std::size_t j = 0; j < n; ++j)
      if (r[i][j]) {
        comp.push_back(static_cast<NodeId>(j));
        done[j] = true;
      }
    comps.push_back(comp);
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return comps;
}

}  // namespace oracle
