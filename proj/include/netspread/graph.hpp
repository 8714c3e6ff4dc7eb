#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace netspread {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Raised by the edge-list reader; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/**
 * Immutable undirected simple graph.
 *
 * Nodes are dense ids 0..N-1. Each adjacency list is sorted and free of
 * duplicates and self-loops. Every node carries a label (the token it had
 * in the source edge list, or its decimal id for generated graphs).
 */
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list over ids 0..node_count-1. Self-loops are
  /// dropped and duplicates collapsed. Labels default to decimal ids.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return adjacency_.empty(); }

  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_.at(v); }
  std::size_t degree(NodeId v) const { return adjacency_.at(v).size(); }
  bool has_edge(NodeId u, NodeId v) const;

  const std::string& label(NodeId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Dense id for a label, if present.
  std::optional<NodeId> find_label(std::string_view label) const;

  /// All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

// ---- ingestion / serialization ----------------------------------------

/// Parses a line-oriented edge list: two whitespace-separated labels per
/// line, '#' comments and blank lines ignored. Labels are mapped to dense
/// ids in order of first appearance.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list(const std::filesystem::path& path);

/// One "u v" line per edge, sorted by dense id with u < v, using labels.
std::string serialize_edge_list(const Graph& g);
void write_edge_list(const Graph& g, const std::filesystem::path& path);

// ---- degree ------------------------------------------------------------

struct DegreeHistogram {
  std::map<std::size_t, std::uint64_t> counts;  ///< degree -> number of nodes
  std::uint64_t n = 0;

  bool empty() const noexcept { return counts.empty(); }
  friend bool operator==(const DegreeHistogram&, const DegreeHistogram&) = default;
};

std::size_t degree(const Graph& g, NodeId v);
DegreeHistogram degree_histogram(const Graph& g);

// ---- clustering --------------------------------------------------------

struct LocalClustering {
  NodeId node = 0;
  std::size_t degree = 0;
  std::uint64_t neighbor_edges = 0;  ///< edges among the node's neighbors
  double coefficient = 0.0;          ///< 0 when degree < 2
};

LocalClustering local_clustering(const Graph& g, NodeId v);
/// C_i for every node, indexed by id.
std::vector<double> clustering_coefficients(const Graph& g);
/// Mean of C_i over all nodes. Throws on an empty graph.
double average_clustering(const Graph& g);

// ---- distances ---------------------------------------------------------

/// Hop distance from `source`; nullopt for unreachable nodes.
std::vector<std::optional<std::uint32_t>> bfs_distances(const Graph& g, NodeId source);

struct PathLengthResult {
  double mean = 0.0;               ///< mean hop count over reachable ordered pairs
  double reachable_fraction = 0.0; ///< reachable ordered pairs / examined ordered pairs
  std::size_t sources = 0;         ///< BFS sources used
  bool exact = false;
};

/// Graphs at or below this size get exact all-pairs BFS by default.
inline constexpr std::size_t kExactPathLengthLimit = 10'000;
/// Source count used when a larger graph is measured without an explicit sample.
inline constexpr std::size_t kDefaultPathSources = 1'000;

/**
 * Average shortest-path length over reachable ordered pairs.
 *
 * With `sample_sources` unset the result is exact up to
 * kExactPathLengthLimit nodes; otherwise BFS runs from that many distinct
 * sources drawn uniformly with `seed`. Throws when the graph has fewer than
 * two nodes or no edges.
 */
PathLengthResult average_path_length(const Graph& g,
                                     std::optional<std::size_t> sample_sources = std::nullopt,
                                     std::uint64_t seed = 0);

// ---- components / subgraphs -------------------------------------------

/// Components ordered by smallest member; members sorted ascending.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

struct InducedSubgraph {
  Graph graph;                   ///< dense ids, labels carried over
  std::vector<NodeId> parent_id; ///< subgraph id -> id in the source graph
};

/// Keeps the edges with both endpoints in `nodes`. Ids are remapped in
/// ascending parent-id order. Throws std::out_of_range on an invalid id.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

}  // namespace netspread
