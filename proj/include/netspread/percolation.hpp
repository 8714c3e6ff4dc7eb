#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netspread/graph.hpp"

namespace netspread {

/// Nodes with C_i >= theta and the components they induce.
struct ClusterResult {
  double theta = 0.0;
  std::vector<NodeId> members;                  ///< ascending
  std::vector<std::vector<NodeId>> components;  ///< largest first, ties by smallest member
  std::vector<std::size_t> component_sizes;     ///< descending
  double giant_fraction = 0.0;                  ///< largest component / N

  /// The percolation cluster: the largest induced component (empty if none).
  const std::vector<NodeId>& percolation_cluster() const;
};

ClusterResult high_clustering_cluster(const Graph& g, double theta);
/// Same, reusing precomputed clustering coefficients.
ClusterResult high_clustering_cluster(const Graph& g, const std::vector<double>& clustering,
                                      double theta);

struct SweepPoint {
  double theta = 0.0;
  std::size_t members = 0;
  double giant_fraction = 0.0;
};

/// One point per theta. Thetas must be non-decreasing and within [0, 1].
std::vector<SweepPoint> percolation_sweep(const Graph& g, const std::vector<double>& thetas);

/// Smallest swept theta whose giant fraction drops below `cut`.
std::optional<double> percolation_threshold(const std::vector<SweepPoint>& sweep, double cut = 0.01);

/**
 * Theta whose percolation cluster size is closest to `target_size`.
 *
 * Candidates are the distinct C_i values; nodes are added in decreasing C_i
 * order with a union-find, so every candidate is evaluated in one pass.
 * Ties go to the larger theta. Returns nullopt for an empty graph.
 */
std::optional<double> theta_for_cluster_size(const Graph& g, std::size_t target_size);

/**
 * Fraction of the nodes outside `cluster` and `sources` that remain
 * reachable from `sources` once the cluster is removed. 0 is perfect
 * isolation. Throws when sources and cluster overlap.
 */
double isolation_metric(const Graph& g, const std::vector<NodeId>& cluster,
                        const std::vector<NodeId>& sources);

/// "theta,members,giant_fraction" rows.
std::string sweep_to_csv(const std::vector<SweepPoint>& sweep);
std::string sweep_to_json(const std::vector<SweepPoint>& sweep);
/// One node label per line.
std::string members_to_text(const Graph& g, const std::vector<NodeId>& members);

}  // namespace netspread
