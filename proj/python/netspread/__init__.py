"""Topology classification, SIR misinformation spread and percolation-cluster
immunization on social graphs (Python bindings of the netspread C++ core)."""

from ._core import (
    ClusterResult,
    DegreeHistogram,
    EnsembleSummary,
    EpidemicParams,
    EpidemicTrace,
    FeatureTable,
    FitResult,
    Graph,
    ImmunizationReport,
    LocalClustering,
    PathLengthResult,
    TopologyReport,
    ParseError,
    InsufficientSupport,
    ConfigError,
    average_clustering,
    average_path_length,
    bfs_distances,
    canonical_config,
    classify,
    clustering_coefficients,
    connected_components,
    degree,
    degree_histogram,
    evaluate_immunization,
    expected_features,
    fit_poisson,
    fit_power_law,
    gen_barabasi_albert,
    gen_erdos_renyi,
    gen_erdos_renyi_mean_degree,
    gen_watts_strogatz,
    high_clustering_cluster,
    induced_subgraph,
    isolation_metric,
    local_clustering,
    percolation_sweep,
    percolation_threshold,
    run_ensemble,
    run_experiment,
    simulate_sir,
    theta_for_cluster_size,
)

__all__ = [name for name in dir() if not name.startswith("_")]
