#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "netspread/generators.hpp"
#include "netspread/graph.hpp"

namespace netspread {

/// Too few distinct degrees to fit a law.
class InsufficientSupport : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FitModel { power_law, poisson };
std::string_view to_string(FitModel model);

struct FitResult {
  FitModel model = FitModel::power_law;
  double alpha = 0.0;   ///< power-law exponent (power_law only)
  double lambda = 0.0;  ///< Poisson mean (poisson only)
  double delta = 1.0;   ///< KS distance between empirical and fitted CDFs, in [0, 1]
  std::size_t k_min = 0;  ///< smallest degree included in the fit
  std::size_t k_max = 0;  ///< largest observed degree
  std::size_t support = 0;  ///< distinct observed degrees in [k_min, k_max]
};

/**
 * Kolmogorov-Smirnov distance between the histogram restricted to
 * [k_min, max degree] and a model CDF over the same range.
 *
 * `model_cdf(k)` must return P(K <= k | K >= k_min). This is the single
 * definition of the fit accuracy used by both fits.
 */
double ks_distance(const DegreeHistogram& hist, std::size_t k_min,
                   const std::function<double(std::size_t)>& model_cdf);

/**
 * Power-law fit p(k) ~ k^-alpha.
 *
 * Least squares on (log k, log p(k)) over the observed degrees >= k_min,
 * with each degree weighted by its node count. The fitted pmf is normalised
 * over [k_min, k_max] where k_min is raised to the smallest observed degree
 * in range. Throws InsufficientSupport with fewer than 3 distinct degrees.
 */
FitResult fit_power_law(const DegreeHistogram& hist, std::size_t k_min = 2);

/// Poisson fit: lambda is the mean degree over k >= k_min and the model is
/// Poisson(lambda) conditioned on k >= k_min. k_min = 0 is the plain law.
FitResult fit_poisson(const DegreeHistogram& hist, std::size_t k_min = 0);

double poisson_pmf(std::size_t k, double lambda);

// ---- expected features ----------------------------------------------------

enum class NetworkClass { scale_free, small_world, random };
std::string_view to_string(NetworkClass c);
NetworkClass network_class_of(GeneratorKind kind);

struct FeatureTable {
  double expected_edges = 0.0;
  double expected_path_length = 0.0;
  double expected_clustering = 0.0;
  std::string path_regime;  ///< which path-length formula applied
};

/**
 * Reference values for a generated network of the given class.
 *
 * ER uses <k> = p(n-1). BA picks its path-length regime from
 * `fitted_alpha` when given, else alpha = 3; alpha within
 * kAlphaThreeTolerance of 3 counts as the alpha = 3 regime.
 */
FeatureTable expected_features(NetworkClass kind, const GeneratorParams& params,
                               std::optional<double> fitted_alpha = std::nullopt);

inline constexpr double kAlphaThreeTolerance = 0.1;

// ---- classification -------------------------------------------------------

enum class TopologyLabel { scale_free, small_world, random, unclassified };
std::string_view to_string(TopologyLabel label);

struct ClassifierOptions {
  std::size_t power_k_min = 2;
  std::size_t poisson_k_min = 0;
  double ratio_threshold = 10.0;  ///< C/(<k>/N) at or above this => small-world
  double delta_ceiling = 0.15;    ///< a fit must reach this accuracy to count
  std::size_t min_nodes = 100;
  std::optional<std::size_t> path_sources;  ///< sampled path length; exact if unset
  std::uint64_t seed = 0;
};

struct TopologyReport {
  TopologyLabel label = TopologyLabel::unclassified;
  std::string reason;  ///< set when unclassified
  std::size_t n = 0;
  std::size_t edges = 0;
  double mean_degree = 0.0;
  double clustering = 0.0;
  double path_length = 0.0;
  double reachable_fraction = 0.0;
  std::optional<FitResult> power_fit;
  std::optional<FitResult> poisson_fit;
  double dispersion = 0.0;  ///< degree variance / mean degree
  std::optional<FitModel> degree_law;  ///< feature 1 outcome
  double clustering_ratio = 0.0;       ///< feature 2: C / (<k>/N)
  std::string evidence;
};

/**
 * Two-feature topology classification.
 *
 * Feature 1 is the degree law: a power law with alpha > 1 that beats the
 * Poisson fit and meets the delta ceiling gives scale-free. Otherwise the
 * distribution counts as Poisson-like when the Poisson fit meets the ceiling
 * or the degrees are no more dispersed than a Poisson law (variance <= mean).
 * Feature 2, the clustering ratio, then separates small-world from random.
 */
TopologyReport classify(const Graph& g, const ClassifierOptions& options = {});

/// Flat "key=value" lines.
std::string report_to_text(const TopologyReport& report);
std::string report_to_json(const TopologyReport& report);

}  // namespace netspread
