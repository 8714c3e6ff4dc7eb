#include "netspread/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "netspread/random.hpp"
#include "parallel.hpp"

namespace netspread {

namespace {

void check_node(const Graph& g, NodeId v) {
  if (v >= g.node_count())
    throw std::out_of_range("node id " + std::to_string(v) + " out of range (N=" +
                            std::to_string(g.node_count()) + ")");
}

std::uint64_t sorted_intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::uint64_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

// Single-source BFS into a caller-owned buffer. dist must be all -1 on
// entry; it is restored before returning. Returns (sum of hops, reached).
std::pair<std::uint64_t, std::uint64_t> bfs_sum(const Graph& g, NodeId source,
                                                std::vector<std::int32_t>& dist,
                                                std::vector<NodeId>& queue) {
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  std::uint64_t sum = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    const std::int32_t du = dist[u];
    sum += static_cast<std::uint64_t>(du);
    for (NodeId w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = du + 1;
        queue.push_back(w);
      }
    }
  }
  for (NodeId u : queue) dist[u] = -1;
  return {sum, queue.size() - 1};
}

}  // namespace

// ---- Graph ---------------------------------------------------------------

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != node_count)
    throw std::invalid_argument("label count does not match node count");
  Graph g;
  g.adjacency_.resize(node_count);
  for (const auto& [u, v] : edges) {
    if (u >= node_count || v >= node_count)
      throw std::out_of_range("edge endpoint out of range");
    if (u == v) continue;
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    adj.shrink_to_fit();
    degree_sum += adj.size();
  }
  g.edge_count_ = degree_sum / 2;
  if (labels.empty()) {
    labels.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) labels.push_back(std::to_string(i));
  }
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto& adj = adjacency_.at(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<NodeId> Graph::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<NodeId>(i);
  return std::nullopt;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u)
    for (NodeId v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

// ---- edge lists ----------------------------------------------------------

Graph parse_edge_list(std::string_view text) {
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto intern = [&](std::string_view token) {
    auto [it, inserted] = ids.try_emplace(std::string(token), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError(line_no, "expected 2 node labels, found " + std::to_string(tokens.size()));
    const NodeId u = intern(tokens[0]);
    const NodeId v = intern(tokens[1]);
    edges.emplace_back(u, v);
  }
  const std::size_t n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open edge list '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string serialize_edge_list(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    out += g.label(u);
    out += ' ';
    out += g.label(v);
    out += '\n';
  }
  return out;
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << serialize_edge_list(g);
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

// ---- degree --------------------------------------------------------------

std::size_t degree(const Graph& g, NodeId v) {
  check_node(g, v);
  return g.degree(v);
}

DegreeHistogram degree_histogram(const Graph& g) {
  DegreeHistogram h;
  for (NodeId v = 0; v < g.node_count(); ++v) ++h.counts[g.degree(v)];
  h.n = g.node_count();
  return h;
}

// ---- clustering ----------------------------------------------------------

LocalClustering local_clustering(const Graph& g, NodeId v) {
  check_node(g, v);
  LocalClustering lc;
  lc.node = v;
  const auto adj = g.neighbors(v);
  lc.degree = adj.size();
  // Each neighbor pair (u, w) is counted once, from its smaller endpoint u.
  for (NodeId u : adj) {
    const auto nu = g.neighbors(u);
    auto upper = std::upper_bound(nu.begin(), nu.end(), u);
    lc.neighbor_edges += sorted_intersection_size(adj, std::span<const NodeId>(upper, nu.end()));
  }
  if (lc.degree >= 2) {
    const double pairs = 0.5 * static_cast<double>(lc.degree) * static_cast<double>(lc.degree - 1);
    lc.coefficient = static_cast<double>(lc.neighbor_edges) / pairs;
  }
  return lc;
}

std::vector<double> clustering_coefficients(const Graph& g) {
  std::vector<double> c(g.node_count());
  detail::parallel_for(g.node_count(), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v)
      c[v] = local_clustering(g, static_cast<NodeId>(v)).coefficient;
  });
  return c;
}

double average_clustering(const Graph& g) {
  if (g.empty()) throw std::invalid_argument("average clustering of an empty graph");
  const auto c = clustering_coefficients(g);
  return std::accumulate(c.begin(), c.end(), 0.0) / static_cast<double>(c.size());
}

// ---- distances -----------------------------------------------------------

std::vector<std::optional<std::uint32_t>> bfs_distances(const Graph& g, NodeId source) {
  check_node(g, source);
  std::vector<std::optional<std::uint32_t>> dist(g.node_count());
  std::vector<NodeId> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (NodeId w : g.neighbors(u)) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

PathLengthResult average_path_length(const Graph& g, std::optional<std::size_t> sample_sources,
                                     std::uint64_t seed) {
  const std::size_t n = g.node_count();
  if (n < 2) throw std::invalid_argument("average path length needs at least 2 nodes");
  if (g.edge_count() == 0)
    throw std::invalid_argument("average path length undefined: graph has no edges");

  if (!sample_sources && n > kExactPathLengthLimit) sample_sources = kDefaultPathSources;
  if (sample_sources && *sample_sources == 0)
    throw std::invalid_argument("sample_sources must be positive");

  std::vector<NodeId> sources(n);
  std::iota(sources.begin(), sources.end(), NodeId{0});
  const bool exact = !sample_sources || *sample_sources >= n;
  if (!exact) {
    Rng rng(seed);
    for (std::size_t i = 0; i < *sample_sources; ++i)
      std::swap(sources[i], sources[i + rng.below(n - i)]);
    sources.resize(*sample_sources);
    std::sort(sources.begin(), sources.end());
  }

  const std::size_t workers = detail::worker_count(sources.size());
  std::vector<std::uint64_t> hop_sum(workers, 0);
  std::vector<std::uint64_t> reached(workers, 0);
  detail::parallel_for(sources.size(), [&](std::size_t w, std::size_t begin, std::size_t end) {
    std::vector<std::int32_t> dist(n, -1);
    std::vector<NodeId> queue;
    queue.reserve(n);
    for (std::size_t i = begin; i < end; ++i) {
      const auto [sum, count] = bfs_sum(g, sources[i], dist, queue);
      hop_sum[w] += sum;
      reached[w] += count;
    }
  });
  // Integer totals: the reduction is exact regardless of how work was split.
  const std::uint64_t total_hops = std::accumulate(hop_sum.begin(), hop_sum.end(), std::uint64_t{0});
  const std::uint64_t total_pairs = std::accumulate(reached.begin(), reached.end(), std::uint64_t{0});
  if (total_pairs == 0) throw std::runtime_error("no reachable pairs among the sampled sources");

  PathLengthResult r;
  r.mean = static_cast<double>(total_hops) / static_cast<double>(total_pairs);
  r.reachable_fraction = static_cast<double>(total_pairs) /
                         (static_cast<double>(sources.size()) * static_cast<double>(n - 1));
  r.sources = sources.size();
  r.exact = exact;
  return r;
}

// ---- components ----------------------------------------------------------

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<NodeId> comp;
    stack.assign(1, s);
    seen[s] = true;
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (NodeId w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  constexpr NodeId kAbsent = ~NodeId{0};
  std::vector<NodeId> keep(nodes.begin(), nodes.end());
  for (NodeId v : keep) check_node(g, v);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  std::vector<NodeId> local(g.node_count(), kAbsent);
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    local[keep[i]] = static_cast<NodeId>(i);
    labels.push_back(g.label(keep[i]));
  }
  std::vector<Edge> edges;
  for (NodeId u : keep)
    for (NodeId w : g.neighbors(u))
      if (u < w && local[w] != kAbsent) edges.emplace_back(local[u], local[w]);

  return {Graph::from_edges(keep.size(), edges, std::move(labels)), std::move(keep)};
}

}  // namespace netspread
