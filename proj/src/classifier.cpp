#include "netspread/classifier.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "format.hpp"

namespace netspread {

std::string_view to_string(FitModel model) {
  return model == FitModel::power_law ? "power-law" : "poisson";
}

std::string_view to_string(NetworkClass c) {
  switch (c) {
    case NetworkClass::scale_free: return "scale-free";
    case NetworkClass::small_world: return "small-world";
    case NetworkClass::random: return "random";
  }
  return "unknown";
}

std::string_view to_string(TopologyLabel label) {
  switch (label) {
    case TopologyLabel::scale_free: return "scale-free";
    case TopologyLabel::small_world: return "small-world";
    case TopologyLabel::random: return "random";
    case TopologyLabel::unclassified: return "unclassified";
  }
  return "unknown";
}

NetworkClass network_class_of(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::erdos_renyi: return NetworkClass::random;
    case GeneratorKind::watts_strogatz: return NetworkClass::small_world;
    case GeneratorKind::barabasi_albert: return NetworkClass::scale_free;
  }
  return NetworkClass::random;
}

// ---- fits -------------------------------------------------------------------

double ks_distance(const DegreeHistogram& hist, std::size_t k_min,
                   const std::function<double(std::size_t)>& model_cdf) {
  std::uint64_t total = 0;
  std::size_t k_max = k_min;
  for (auto it = hist.counts.lower_bound(k_min); it != hist.counts.end(); ++it) {
    total += it->second;
    if (it->second > 0) k_max = it->first;
  }
  if (total == 0) throw std::invalid_argument("no degrees at or above k_min");

  double worst = 0.0;
  std::uint64_t running = 0;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    if (auto it = hist.counts.find(k); it != hist.counts.end()) running += it->second;
    const double empirical = static_cast<double>(running) / static_cast<double>(total);
    worst = std::max(worst, std::abs(empirical - model_cdf(k)));
  }
  return std::min(worst, 1.0);
}

double poisson_pmf(std::size_t k, double lambda) {
  if (lambda <= 0.0) return k == 0 ? 1.0 : 0.0;
  const auto kd = static_cast<double>(k);
  return std::exp(kd * std::log(lambda) - lambda - std::lgamma(kd + 1.0));
}

FitResult fit_power_law(const DegreeHistogram& hist, std::size_t k_min) {
  const std::size_t lower = std::max<std::size_t>(k_min, 1);
  std::vector<double> x, y, w;
  std::vector<std::size_t> degrees;
  std::uint64_t total = 0;
  for (auto it = hist.counts.lower_bound(lower); it != hist.counts.end(); ++it) {
    if (it->second == 0) continue;
    degrees.push_back(it->first);
    x.push_back(std::log(static_cast<double>(it->first)));
    w.push_back(static_cast<double>(it->second));
    total += it->second;
  }
  if (x.size() < 3)
    throw InsufficientSupport("power-law fit needs at least 3 distinct degrees >= " +
                              std::to_string(lower) + ", found " + std::to_string(x.size()));

  FitResult fit;
  fit.model = FitModel::power_law;
  fit.support = x.size();
  fit.k_min = degrees.front();
  fit.k_max = degrees.back();

  const double log_total = std::log(static_cast<double>(total));
  double sw = 0.0, sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    y.push_back(std::log(w[i]) - log_total);
    sw += w[i];
    sx += w[i] * x[i];
    sy += w[i] * y[i];
  }
  const double mx = sx / sw;
  const double my = sy / sw;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += w[i] * (x[i] - mx) * (y[i] - my);
    sxx += w[i] * (x[i] - mx) * (x[i] - mx);
  }
  fit.alpha = -sxy / sxx;

  std::vector<double> cdf(fit.k_max - fit.k_min + 1);
  double acc = 0.0;
  for (std::size_t k = fit.k_min; k <= fit.k_max; ++k) {
    acc += std::pow(static_cast<double>(k), -fit.alpha);
    cdf[k - fit.k_min] = acc;
  }
  for (auto& c : cdf) c /= acc;
  fit.delta = ks_distance(hist, fit.k_min, [&](std::size_t k) { return cdf[k - fit.k_min]; });
  return fit;
}

FitResult fit_poisson(const DegreeHistogram& hist, std::size_t k_min) {
  std::uint64_t total = 0;
  double weighted = 0.0;
  FitResult fit;
  fit.model = FitModel::poisson;
  fit.k_min = k_min;
  for (auto it = hist.counts.lower_bound(k_min); it != hist.counts.end(); ++it) {
    if (it->second == 0) continue;
    total += it->second;
    weighted += static_cast<double>(it->first) * static_cast<double>(it->second);
    fit.k_max = it->first;
    ++fit.support;
  }
  if (total == 0) throw std::invalid_argument("poisson fit of an empty histogram");
  fit.lambda = weighted / static_cast<double>(total);

  double below = 0.0;
  for (std::size_t k = 0; k < k_min; ++k) below += poisson_pmf(k, fit.lambda);
  const double tail = 1.0 - below;
  std::vector<double> cdf(fit.k_max - k_min + 1);
  double acc = 0.0;
  for (std::size_t k = k_min; k <= fit.k_max; ++k) {
    acc += poisson_pmf(k, fit.lambda);
    cdf[k - k_min] = tail > 0.0 ? std::min(1.0, acc / tail) : 1.0;
  }
  fit.delta = ks_distance(hist, k_min, [&](std::size_t k) { return cdf[k - k_min]; });
  return fit;
}

// ---- expected features ------------------------------------------------------

FeatureTable expected_features(NetworkClass kind, const GeneratorParams& params,
                               std::optional<double> fitted_alpha) {
  params.validate();
  if (network_class_of(params.kind) != kind)
    throw std::invalid_argument("generator kind '" + std::string(to_string(params.kind)) +
                                "' does not describe a " + std::string(to_string(kind)) +
                                " network");
  if (params.n < 2) throw std::invalid_argument("n: expected features need n >= 2");

  const auto n = static_cast<double>(params.n);
  const double ln_n = std::log(n);
  FeatureTable t;
  switch (params.kind) {
    case GeneratorKind::erdos_renyi: {
      const double mean_k = params.p * (n - 1.0);
      if (mean_k <= 1.0)
        throw std::invalid_argument("p: mean degree p(n-1) must exceed 1 for a finite path length");
      t.expected_edges = mean_k * n / 2.0;
      t.expected_path_length = ln_n / std::log(mean_k);
      t.expected_clustering = mean_k / n;
      t.path_regime = "ln N / ln <k>";
      break;
    }
    case GeneratorKind::watts_strogatz: {
      const auto k = static_cast<double>(params.k);
      t.expected_edges = k * n / 2.0;
      t.expected_path_length = ln_n / std::log(k);
      t.expected_clustering = k / n;  // the p -> 1 reference level
      t.path_regime = "ln N / ln k";
      break;
    }
    case GeneratorKind::barabasi_albert: {
      const auto m = static_cast<double>(params.m);
      t.expected_edges = m * (n - 1.0);
      const double mean_k = 2.0 * t.expected_edges / n;
      t.expected_clustering = 5.0 * mean_k / n;
      if (params.m == 1) {
        t.expected_path_length = ln_n;
        t.path_regime = "m = 1: ln N";
        break;
      }
      const double alpha = fitted_alpha.value_or(3.0);
      if (std::abs(alpha - 3.0) <= kAlphaThreeTolerance) {
        t.expected_path_length = ln_n / std::log(ln_n);
        t.path_regime = "alpha = 3: ln N / ln ln N";
      } else if (alpha > 3.0) {
        t.expected_path_length = ln_n;
        t.path_regime = "alpha > 3: ln N";
      } else {
        // The 2 < alpha < 3 formula; alpha <= 2 has no tabulated value and shares it.
        t.expected_path_length = std::log(ln_n);
        t.path_regime = "2 < alpha < 3: ln ln N";
      }
      break;
    }
  }
  return t;
}

// ---- classification -------------------------------------------------------

TopologyReport classify(const Graph& g, const ClassifierOptions& options) {
  TopologyReport r;
  r.n = g.node_count();
  r.edges = g.edge_count();
  if (r.n == 0) {
    r.reason = "graph is empty";
    return r;
  }

  // Measure what we can before deciding whether a fit is meaningful.
  const auto n = static_cast<double>(r.n);
  r.mean_degree = 2.0 * static_cast<double>(r.edges) / n;
  r.clustering = average_clustering(g);
  if (r.edges == 0) {
    r.reason = "graph has no edges";
    return r;
  }
  r.clustering_ratio = r.clustering / (r.mean_degree / n);
  if (r.n >= 2) {
    const auto path = average_path_length(g, options.path_sources, options.seed);
    r.path_length = path.mean;
    r.reachable_fraction = path.reachable_fraction;
  }
  if (r.n < options.min_nodes) {
    r.reason = "too few nodes: " + std::to_string(r.n) + " < " + std::to_string(options.min_nodes);
    return r;
  }

  const auto hist = degree_histogram(g);
  double second_moment = 0.0;
  for (const auto& [k, c] : hist.counts)
    second_moment += static_cast<double>(k) * static_cast<double>(k) * static_cast<double>(c);
  const double variance = second_moment / n - r.mean_degree * r.mean_degree;
  r.dispersion = variance / r.mean_degree;

  std::string power_note = "power-law: n/a";
  try {
    r.power_fit = fit_power_law(hist, options.power_k_min);
    power_note = "power-law alpha=" + detail::format_number(r.power_fit->alpha) +
                 " delta=" + detail::format_number(r.power_fit->delta);
  } catch (const InsufficientSupport& e) {
    power_note = std::string("power-law: ") + e.what();
  }
  r.poisson_fit = fit_poisson(hist, options.poisson_k_min);
  const std::string poisson_note = "poisson lambda=" + detail::format_number(r.poisson_fit->lambda) +
                                   " delta=" + detail::format_number(r.poisson_fit->delta) +
                                   " dispersion=" + detail::format_number(r.dispersion);

  const bool power_wins = r.power_fit && r.power_fit->alpha > 1.0 &&
                          r.power_fit->delta < r.poisson_fit->delta &&
                          r.power_fit->delta <= options.delta_ceiling;
  const bool poisson_like = r.poisson_fit->delta <= options.delta_ceiling || r.dispersion <= 1.0;
  if (power_wins) {
    r.degree_law = FitModel::power_law;
  } else if (poisson_like) {
    r.degree_law = FitModel::poisson;
  }

  const std::string ratio_note = "clustering ratio=" + detail::format_number(r.clustering_ratio) +
                                 " (threshold " + detail::format_number(options.ratio_threshold) + ")";
  r.evidence = "degree law: " + power_note + "; " + poisson_note + "; " + ratio_note;

  if (!r.degree_law) {
    r.reason = "no degree law within delta " + detail::format_number(options.delta_ceiling);
    return r;
  }
  if (*r.degree_law == FitModel::power_law) {
    r.label = TopologyLabel::scale_free;
  } else {
    r.label = r.clustering_ratio >= options.ratio_threshold ? TopologyLabel::small_world
                                                            : TopologyLabel::random;
  }
  return r;
}

// ---- serialization ----------------------------------------------------------

namespace {

void append_fit(std::vector<std::pair<std::string, std::string>>& kv, const std::string& prefix,
                const std::optional<FitResult>& fit) {
  if (!fit) {
    kv.emplace_back(prefix + ".available", "false");
    return;
  }
  kv.emplace_back(prefix + ".available", "true");
  if (fit->model == FitModel::power_law)
    kv.emplace_back(prefix + ".alpha", detail::format_number(fit->alpha));
  else
    kv.emplace_back(prefix + ".lambda", detail::format_number(fit->lambda));
  kv.emplace_back(prefix + ".delta", detail::format_number(fit->delta));
  kv.emplace_back(prefix + ".k_min", std::to_string(fit->k_min));
  kv.emplace_back(prefix + ".k_max", std::to_string(fit->k_max));
}

std::vector<std::pair<std::string, std::string>> report_fields(const TopologyReport& r) {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("label", std::string(to_string(r.label)));
  if (!r.reason.empty()) kv.emplace_back("reason", r.reason);
  kv.emplace_back("nodes", std::to_string(r.n));
  kv.emplace_back("edges", std::to_string(r.edges));
  kv.emplace_back("mean_degree", detail::format_number(r.mean_degree));
  kv.emplace_back("clustering", detail::format_number(r.clustering));
  kv.emplace_back("clustering_ratio", detail::format_number(r.clustering_ratio));
  kv.emplace_back("path_length", detail::format_number(r.path_length));
  kv.emplace_back("reachable_fraction", detail::format_number(r.reachable_fraction));
  kv.emplace_back("dispersion", detail::format_number(r.dispersion));
  kv.emplace_back("degree_law", r.degree_law ? std::string(to_string(*r.degree_law)) : "none");
  append_fit(kv, "power_fit", r.power_fit);
  append_fit(kv, "poisson_fit", r.poisson_fit);
  kv.emplace_back("evidence", r.evidence);
  return kv;
}

nlohmann::ordered_json fit_json(const std::optional<FitResult>& fit) {
  if (!fit) return nullptr;
  nlohmann::ordered_json j;
  j["model"] = to_string(fit->model);
  if (fit->model == FitModel::power_law)
    j["alpha"] = fit->alpha;
  else
    j["lambda"] = fit->lambda;
  j["delta"] = fit->delta;
  j["k_min"] = fit->k_min;
  j["k_max"] = fit->k_max;
  return j;
}

}  // namespace

std::string report_to_text(const TopologyReport& report) {
  std::string out;
  for (const auto& [k, v] : report_fields(report)) out += k + "=" + v + "\n";
  return out;
}

std::string report_to_json(const TopologyReport& r) {
  nlohmann::ordered_json j;
  j["label"] = to_string(r.label);
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["nodes"] = r.n;
  j["edges"] = r.edges;
  j["mean_degree"] = r.mean_degree;
  j["clustering"] = r.clustering;
  j["clustering_ratio"] = r.clustering_ratio;
  j["path_length"] = r.path_length;
  j["reachable_fraction"] = r.reachable_fraction;
  j["dispersion"] = r.dispersion;
  j["degree_law"] = r.degree_law ? nlohmann::ordered_json(to_string(*r.degree_law)) : nullptr;
  j["power_fit"] = fit_json(r.power_fit);
  j["poisson_fit"] = fit_json(r.poisson_fit);
  j["evidence"] = r.evidence;
  return j.dump(2) + "\n";
}

}  // namespace netspread
