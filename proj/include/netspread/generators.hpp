#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "netspread/graph.hpp"

namespace netspread {

enum class GeneratorKind { erdos_renyi, watts_strogatz, barabasi_albert };

std::string_view to_string(GeneratorKind kind);
/// Accepts "erdos-renyi", "watts-strogatz", "barabasi-albert" (and the
/// short forms "er", "ws", "ba").
GeneratorKind parse_generator_kind(std::string_view text);

struct GeneratorParams {
  GeneratorKind kind = GeneratorKind::erdos_renyi;
  std::size_t n = 0;
  double p = 0.0;     ///< ER edge probability / WS rewiring probability
  std::size_t k = 0;  ///< WS ring degree (even)
  std::size_t m = 0;  ///< BA attachments per new node
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
  friend bool operator==(const GeneratorParams&, const GeneratorParams&) = default;
};

/// G(n, p): every one of the n(n-1)/2 pairs is an edge independently with
/// probability p.
Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed);
/// G(n, p) with p = mean_degree / (n - 1).
Graph gen_erdos_renyi_mean_degree(std::size_t n, double mean_degree, std::uint64_t seed);

/// Ring lattice with k/2 neighbours per side, each lattice edge rewired with
/// probability p_rewire. The edge keeps its origin; a rewire that would hit
/// the origin or an existing neighbour is skipped, so the edge count is
/// always k*n/2.
Graph gen_watts_strogatz(std::size_t n, std::size_t k, double p_rewire, std::uint64_t seed);

/// Preferential attachment from a seed clique on m+1 nodes. Each later node
/// adds m edges to distinct targets drawn with probability proportional to
/// degree. Edge count is m(n-m-1) + m(m+1)/2.
Graph gen_barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

/// Exact edge count produced by gen_barabasi_albert.
constexpr std::size_t barabasi_albert_edge_count(std::size_t n, std::size_t m) {
  return m * (n - m - 1) + m * (m + 1) / 2;
}

Graph generate(const GeneratorParams& params);

}  // namespace netspread
