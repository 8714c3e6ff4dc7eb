#include "netspread/percolation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "format.hpp"

namespace netspread {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), NodeId{0});
  }
  NodeId find(NodeId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  std::size_t unite(NodeId a, NodeId b) {
    a = find(a);
    b = find(b);
    if (a == b) return size_[a];
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return size_[a];
  }

 private:
  std::vector<NodeId> parent_;
  std::vector<std::size_t> size_;
};

std::vector<NodeId> sorted_unique(std::vector<NodeId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

const std::vector<NodeId>& ClusterResult::percolation_cluster() const {
  static const std::vector<NodeId> kEmpty;
  return components.empty() ? kEmpty : components.front();
}

ClusterResult high_clustering_cluster(const Graph& g, const std::vector<double>& clustering,
                                      double theta) {
  if (clustering.size() != g.node_count())
    throw std::invalid_argument("clustering vector does not match the graph");
  ClusterResult r;
  r.theta = theta;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (clustering[v] >= theta) r.members.push_back(v);

  const auto sub = induced_subgraph(g, r.members);
  for (auto& comp : connected_components(sub.graph)) {
    for (auto& v : comp) v = sub.parent_id[v];
    r.components.push_back(std::move(comp));
  }
  // Components arrive ordered by smallest member; stable sort keeps that as the tie-break.
  std::stable_sort(r.components.begin(), r.components.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  for (const auto& c : r.components) r.component_sizes.push_back(c.size());
  if (!r.components.empty() && g.node_count() > 0)
    r.giant_fraction = static_cast<double>(r.component_sizes.front()) /
                       static_cast<double>(g.node_count());
  return r;
}

ClusterResult high_clustering_cluster(const Graph& g, double theta) {
  return high_clustering_cluster(g, clustering_coefficients(g), theta);
}

std::vector<SweepPoint> percolation_sweep(const Graph& g, const std::vector<double>& thetas) {
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (!(thetas[i] >= 0.0 && thetas[i] <= 1.0))
      throw std::invalid_argument("thetas: value " + detail::format_number(thetas[i]) +
                                  " outside [0, 1]");
    if (i > 0 && thetas[i] < thetas[i - 1])
      throw std::invalid_argument("thetas: must be in ascending order");
  }
  const auto clustering = clustering_coefficients(g);
  std::vector<SweepPoint> out;
  out.reserve(thetas.size());
  for (double theta : thetas) {
    const auto r = high_clustering_cluster(g, clustering, theta);
    out.push_back({theta, r.members.size(), r.giant_fraction});
  }
  return out;
}

std::optional<double> percolation_threshold(const std::vector<SweepPoint>& sweep, double cut) {
  for (const auto& p : sweep)
    if (p.giant_fraction < cut) return p.theta;
  return std::nullopt;
}

std::optional<double> theta_for_cluster_size(const Graph& g, std::size_t target_size) {
  const std::size_t n = g.node_count();
  if (n == 0) return std::nullopt;
  const auto c = clustering_coefficients(g);
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return c[a] > c[b]; });

  DisjointSets sets(n);
  std::vector<bool> added(n, false);
  std::size_t largest = 0;
  std::optional<double> best;
  std::size_t best_gap = 0;
  for (std::size_t i = 0; i < n;) {
    const double level = c[order[i]];
    for (; i < n && c[order[i]] == level; ++i) {
      const NodeId v = order[i];
      added[v] = true;
      largest = std::max<std::size_t>(largest, 1);
      for (NodeId w : g.neighbors(v))
        if (added[w]) largest = std::max(largest, sets.unite(v, w));
    }
    const std::size_t gap = largest > target_size ? largest - target_size : target_size - largest;
    if (!best || gap < best_gap) {
      best = level;
      best_gap = gap;
    }
  }
  return best;
}

double isolation_metric(const Graph& g, const std::vector<NodeId>& cluster,
                        const std::vector<NodeId>& sources) {
  const std::size_t n = g.node_count();
  const auto blocked_nodes = sorted_unique(cluster);
  const auto source_nodes = sorted_unique(sources);
  std::vector<bool> blocked(n, false);
  for (NodeId v : blocked_nodes) {
    if (v >= n) throw std::out_of_range("cluster node " + std::to_string(v) + " out of range");
    blocked[v] = true;
  }
  std::vector<bool> seen(n, false);
  std::vector<NodeId> queue;
  for (NodeId s : source_nodes) {
    if (s >= n) throw std::out_of_range("source node " + std::to_string(s) + " out of range");
    if (blocked[s]) throw std::invalid_argument("sources and cluster overlap at node " + g.label(s));
    seen[s] = true;
    queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (NodeId w : g.neighbors(queue[head])) {
      if (!seen[w] && !blocked[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  const std::size_t exposed = queue.size() - source_nodes.size();
  const std::size_t remaining = n - blocked_nodes.size() - source_nodes.size();
  return remaining == 0 ? 0.0 : static_cast<double>(exposed) / static_cast<double>(remaining);
}

std::string sweep_to_csv(const std::vector<SweepPoint>& sweep) {
  std::string out = "theta,members,giant_fraction\n";
  for (const auto& p : sweep)
    out += detail::format_number(p.theta) + "," + std::to_string(p.members) + "," +
           detail::format_number(p.giant_fraction) + "\n";
  return out;
}

std::string sweep_to_json(const std::vector<SweepPoint>& sweep) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& p : sweep)
    j.push_back({{"theta", p.theta}, {"members", p.members}, {"giant_fraction", p.giant_fraction}});
  return j.dump(2) + "\n";
}

std::string members_to_text(const Graph& g, const std::vector<NodeId>& members) {
  std::string out;
  for (NodeId v : members) out += g.label(v) + "\n";
  return out;
}

}  // namespace netspread
