#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "netspread/classifier.hpp"
#include "netspread/epidemic.hpp"
#include "netspread/experiment.hpp"
#include "netspread/generators.hpp"
#include "netspread/graph.hpp"
#include "netspread/percolation.hpp"

namespace py = pybind11;
using namespace netspread;

namespace {

void bind_graph(py::module_& m) {
  py::class_<Graph>(m, "Graph", "Immutable undirected simple graph with dense node ids.")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) {
             return Graph::from_edges(n, edges);
           }),
           py::arg("node_count"), py::arg("edges"))
      .def_static("from_edge_list", &parse_edge_list, py::arg("text"))
      .def_static("read", [](const std::filesystem::path& p) { return read_edge_list(p); },
                  py::arg("path"))
      .def("to_edge_list", &serialize_edge_list)
      .def("write", [](const Graph& g, const std::filesystem::path& p) { write_edge_list(g, p); },
           py::arg("path"))
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("labels", &Graph::labels)
      .def("label", &Graph::label, py::arg("node"))
      .def("find_label", &Graph::find_label, py::arg("label"))
      .def("neighbors",
           [](const Graph& g, NodeId v) {
             const auto n = g.neighbors(v);
             return std::vector<NodeId>(n.begin(), n.end());
           },
           py::arg("node"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("edges", &Graph::edges)
      .def("__len__", &Graph::node_count)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph nodes=" + std::to_string(g.node_count()) +
               " edges=" + std::to_string(g.edge_count()) + ">";
      });

  py::class_<DegreeHistogram>(m, "DegreeHistogram")
      .def_readonly("counts", &DegreeHistogram::counts)
      .def_readonly("n", &DegreeHistogram::n)
      .def("to_csv", &histogram_to_csv);

  py::class_<LocalClustering>(m, "LocalClustering")
      .def_readonly("node", &LocalClustering::node)
      .def_readonly("degree", &LocalClustering::degree)
      .def_readonly("neighbor_edges", &LocalClustering::neighbor_edges)
      .def_readonly("coefficient", &LocalClustering::coefficient);

  py::class_<PathLengthResult>(m, "PathLengthResult")
      .def_readonly("mean", &PathLengthResult::mean)
      .def_readonly("reachable_fraction", &PathLengthResult::reachable_fraction)
      .def_readonly("sources", &PathLengthResult::sources)
      .def_readonly("exact", &PathLengthResult::exact);

  m.def("degree", &degree, py::arg("graph"), py::arg("node"));
  m.def("degree_histogram", &degree_histogram, py::arg("graph"));
  m.def("local_clustering", &local_clustering, py::arg("graph"), py::arg("node"));
  m.def("clustering_coefficients", &clustering_coefficients, py::arg("graph"));
  m.def("average_clustering", &average_clustering, py::arg("graph"));
  m.def("bfs_distances",
        [](const Graph& g, NodeId source) {
          py::dict out;
          const auto dist = bfs_distances(g, source);
          for (NodeId v = 0; v < dist.size(); ++v)
            if (dist[v]) out[py::int_(v)] = *dist[v];
          return out;
        },
        py::arg("graph"), py::arg("source"));
  m.def("average_path_length", &average_path_length, py::arg("graph"),
        py::arg("sample_sources") = py::none(), py::arg("seed") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("connected_components", &connected_components, py::arg("graph"));
  m.def("induced_subgraph",
        [](const Graph& g, const std::vector<NodeId>& nodes) {
          auto sub = induced_subgraph(g, nodes);
          return py::make_tuple(std::move(sub.graph), std::move(sub.parent_id));
        },
        py::arg("graph"), py::arg("nodes"));
}

void bind_generators(py::module_& m) {
  m.def("gen_erdos_renyi", &gen_erdos_renyi, py::arg("n"), py::arg("p"), py::arg("seed") = 0);
  m.def("gen_erdos_renyi_mean_degree", &gen_erdos_renyi_mean_degree, py::arg("n"),
        py::arg("mean_degree"), py::arg("seed") = 0);
  m.def("gen_watts_strogatz", &gen_watts_strogatz, py::arg("n"), py::arg("k"), py::arg("p"),
        py::arg("seed") = 0);
  m.def("gen_barabasi_albert", &gen_barabasi_albert, py::arg("n"), py::arg("m"), py::arg("seed") = 0);
}

void bind_classifier(py::module_& m) {
  py::class_<FitResult>(m, "FitResult")
      .def_property_readonly("model", [](const FitResult& f) { return std::string(to_string(f.model)); })
      .def_readonly("alpha", &FitResult::alpha)
      .def_readonly("lambda_", &FitResult::lambda)
      .def_readonly("delta", &FitResult::delta)
      .def_readonly("k_min", &FitResult::k_min)
      .def_readonly("k_max", &FitResult::k_max)
      .def_readonly("support", &FitResult::support);

  py::class_<FeatureTable>(m, "FeatureTable")
      .def_readonly("expected_edges", &FeatureTable::expected_edges)
      .def_readonly("expected_path_length", &FeatureTable::expected_path_length)
      .def_readonly("expected_clustering", &FeatureTable::expected_clustering)
      .def_readonly("path_regime", &FeatureTable::path_regime);

  py::class_<TopologyReport>(m, "TopologyReport")
      .def_property_readonly("label", [](const TopologyReport& r) { return std::string(to_string(r.label)); })
      .def_readonly("reason", &TopologyReport::reason)
      .def_readonly("n", &TopologyReport::n)
      .def_readonly("edges", &TopologyReport::edges)
      .def_readonly("mean_degree", &TopologyReport::mean_degree)
      .def_readonly("clustering", &TopologyReport::clustering)
      .def_readonly("path_length", &TopologyReport::path_length)
      .def_readonly("reachable_fraction", &TopologyReport::reachable_fraction)
      .def_readonly("power_fit", &TopologyReport::power_fit)
      .def_readonly("poisson_fit", &TopologyReport::poisson_fit)
      .def_readonly("dispersion", &TopologyReport::dispersion)
      .def_readonly("clustering_ratio", &TopologyReport::clustering_ratio)
      .def_readonly("evidence", &TopologyReport::evidence)
      .def("to_text", &report_to_text)
      .def("to_json", &report_to_json);

  m.def("fit_power_law", &fit_power_law, py::arg("hist"), py::arg("k_min") = 2);
  m.def("fit_poisson", &fit_poisson, py::arg("hist"), py::arg("k_min") = 0);
  m.def("expected_features",
        [](const std::string& kind, std::size_t n, double p, std::size_t k, std::size_t mm,
           std::optional<double> fitted_alpha) {
          GeneratorParams params{parse_generator_kind(kind), n, p, k, mm};
          return expected_features(network_class_of(params.kind), params, fitted_alpha);
        },
        py::arg("kind"), py::arg("n"), py::arg("p") = 0.0, py::arg("k") = 0, py::arg("m") = 0,
        py::arg("fitted_alpha") = py::none());
  m.def("classify",
        [](const Graph& g, std::size_t k_min, double ratio_threshold, double delta_ceiling,
           std::optional<std::size_t> path_sources, std::uint64_t seed) {
          ClassifierOptions o;
          o.power_k_min = k_min;
          o.ratio_threshold = ratio_threshold;
          o.delta_ceiling = delta_ceiling;
          o.path_sources = path_sources;
          o.seed = seed;
          py::gil_scoped_release release;
          return classify(g, o);
        },
        py::arg("graph"), py::arg("k_min") = 2, py::arg("ratio_threshold") = 10.0,
        py::arg("delta_ceiling") = 0.15, py::arg("path_sources") = py::none(), py::arg("seed") = 0);
}

void bind_epidemic(py::module_& m) {
  py::class_<EpidemicParams>(m, "EpidemicParams")
      .def(py::init([](double beta, double gamma, std::vector<NodeId> infected,
                       std::vector<NodeId> immunized, std::size_t max_steps, std::uint64_t seed) {
             return EpidemicParams{beta, gamma, std::move(infected), std::move(immunized), max_steps, seed};
           }),
           py::arg("beta"), py::arg("gamma"), py::arg("initial_infected"),
           py::arg("immunized") = std::vector<NodeId>{}, py::arg("max_steps") = 1000,
           py::arg("seed") = 0)
      .def_readwrite("beta", &EpidemicParams::beta)
      .def_readwrite("gamma", &EpidemicParams::gamma)
      .def_readwrite("initial_infected", &EpidemicParams::initial_infected)
      .def_readwrite("immunized", &EpidemicParams::immunized)
      .def_readwrite("max_steps", &EpidemicParams::max_steps)
      .def_readwrite("seed", &EpidemicParams::seed);

  py::class_<EpidemicTrace>(m, "EpidemicTrace")
      .def_property_readonly("steps",
                             [](const EpidemicTrace& t) {
                               py::list out;
                               for (const auto& s : t.steps)
                                 out.append(py::make_tuple(s.t, s.susceptible, s.infected, s.recovered));
                               return out;
                             })
      .def_property_readonly("infections",
                             [](const EpidemicTrace& t) {
                               py::list out;
                               for (const auto& e : t.infections)
                                 out.append(py::make_tuple(e.t, e.infector, e.infectee));
                               return out;
                             })
      .def_readonly("final_outbreak_size", &EpidemicTrace::final_outbreak_size)
      .def_readonly("peak_time", &EpidemicTrace::peak_time)
      .def_readonly("peak_infected", &EpidemicTrace::peak_infected)
      .def("to_csv", &trace_to_csv);

  py::class_<EnsembleSummary>(m, "EnsembleSummary")
      .def_readonly("runs", &EnsembleSummary::runs)
      .def_readonly("mean_outbreak", &EnsembleSummary::mean_outbreak)
      .def_readonly("sd_outbreak", &EnsembleSummary::sd_outbreak)
      .def_readonly("mean_peak_time", &EnsembleSummary::mean_peak_time)
      .def_readonly("mean_peak_infected", &EnsembleSummary::mean_peak_infected)
      .def_readonly("outbreak_sizes", &EnsembleSummary::outbreak_sizes)
      .def_readonly("traces", &EnsembleSummary::traces);

  py::class_<ImmunizationReport>(m, "ImmunizationReport")
      .def_property_readonly("outcomes",
                             [](const ImmunizationReport& r) {
                               py::list out;
                               for (const auto& o : r.outcomes)
                                 out.append(py::make_tuple(o.name, o.size, o.summary));
                               return out;
                             })
      .def_readonly("ranking", &ImmunizationReport::ranking)
      .def("to_csv", &immunization_to_csv);

  m.def("simulate_sir", &simulate_sir, py::arg("graph"), py::arg("params"));
  m.def("run_ensemble", &run_ensemble, py::arg("graph"), py::arg("params"), py::arg("runs"),
        py::arg("keep_traces") = false, py::call_guard<py::gil_scoped_release>());
  m.def("evaluate_immunization",
        [](const Graph& g, const EpidemicParams& params,
           const std::vector<std::pair<std::string, std::vector<NodeId>>>& strategies, std::size_t runs) {
          std::vector<ImmunizationStrategy> s;
          for (const auto& [name, nodes] : strategies) s.push_back({name, nodes});
          py::gil_scoped_release release;
          return evaluate_immunization(g, params, s, runs);
        },
        py::arg("graph"), py::arg("params"), py::arg("strategies"), py::arg("runs"));
}

void bind_percolation(py::module_& m) {
  py::class_<ClusterResult>(m, "ClusterResult")
      .def_readonly("theta", &ClusterResult::theta)
      .def_readonly("members", &ClusterResult::members)
      .def_readonly("components", &ClusterResult::components)
      .def_readonly("component_sizes", &ClusterResult::component_sizes)
      .def_readonly("giant_fraction", &ClusterResult::giant_fraction)
      .def_property_readonly("percolation_cluster", &ClusterResult::percolation_cluster);

  m.def("high_clustering_cluster",
        py::overload_cast<const Graph&, double>(&high_clustering_cluster), py::arg("graph"),
        py::arg("theta"));
  m.def("percolation_sweep",
        [](const Graph& g, const std::vector<double>& thetas) {
          py::list out;
          for (const auto& p : percolation_sweep(g, thetas))
            out.append(py::make_tuple(p.theta, p.members, p.giant_fraction));
          return out;
        },
        py::arg("graph"), py::arg("thetas"));
  m.def("percolation_threshold",
        [](const std::vector<std::tuple<double, std::size_t, double>>& sweep, double cut) {
          std::vector<SweepPoint> points;
          for (const auto& [t, n, f] : sweep) points.push_back({t, n, f});
          return percolation_threshold(points, cut);
        },
        py::arg("sweep"), py::arg("cut") = 0.01);
  m.def("theta_for_cluster_size", &theta_for_cluster_size, py::arg("graph"), py::arg("target_size"));
  m.def("isolation_metric", &isolation_metric, py::arg("graph"), py::arg("cluster"), py::arg("sources"));
}

void bind_experiment(py::module_& m) {
  m.def("canonical_config", [](const std::string& text) { return serialize_config(parse_config(text)); },
        py::arg("text"), "Parse an experiment config and return its canonical text form.");
  m.def("run_experiment",
        [](const std::string& config_text, const std::filesystem::path& base_dir) {
          const auto config = parse_config(config_text);
          py::gil_scoped_release release;
          auto r = run_experiment(config, base_dir);
          std::vector<std::string> files;
          for (const auto& f : r.files) files.push_back(f.string());
          return std::make_pair(files, r.summary);
        },
        py::arg("config_text"), py::arg("base_dir") = std::filesystem::path{},
        "Run an experiment from config text; returns (files, summary lines).");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "netspread C++ core";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InsufficientSupport>(m, "InsufficientSupport", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  bind_graph(m);
  bind_generators(m);
  bind_classifier(m);
  bind_epidemic(m);
  bind_percolation(m);
  bind_experiment(m);
}
