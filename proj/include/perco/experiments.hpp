#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perco/graph.hpp"
#include "perco/percolation.hpp"
#include "perco/thresholds.hpp"

namespace perco {

/// one estimate slot of a result row; non-convergent orders keep their
/// partial data and are flagged rather than aborting the row
struct EstimateCell {
    int order = 0;
    bool ok = false;
    ThresholdEstimate estimate;
    std::string error;
};

struct ResultRow {
    std::string name;
    int nodes = 0;
    long long edges = 0;
    std::vector<EstimateCell> estimates;
    std::optional<double> empirical_pc;
    std::optional<double> empirical_uncertainty;
    std::vector<double> relative_errors;  // aligned with estimates when empirical present
};

struct SimulationParams {
    int runs = 1000;
    int grid = 401;
    uint64_t seed = 1;
};

/// LCC extraction, then one estimate per requested order.
ResultRow run_estimate(const Graph& g, const std::string& name, const std::vector<int>& orders,
                       const EstimateOptions& opts);

/// LCC extraction + Newman-Ziff curves + empirical threshold.
struct SimulateOutput {
    PercolationCurve curve;
    double empirical_pc = 0.0;
    double uncertainty = 0.0;  // grid spacing
};
SimulateOutput run_simulate(const Graph& g, const SimulationParams& sim);

/// growth trace of a single evolving forest-fire network: estimates and
/// empirical threshold recomputed at logarithmically spaced node counts
struct ForestFireTraceRow {
    int nodes = 0;
    long long edges = 0;
    double pc0 = 0.0, pc1 = 0.0, pc2 = 0.0;
    double empirical = 0.0;
};
std::vector<ForestFireTraceRow> run_forest_fire_trace(double q, int n_max, int checkpoints,
                                                      uint64_t seed, const SimulationParams& sim,
                                                      const EstimateOptions& opts);

/// averages over `networks` independent forest-fire graphs per burning
/// probability (the q-sweep experiment)
struct ForestFireSweepRow {
    double q = 0.0;
    double pc0 = 0.0, pc1 = 0.0, pc2 = 0.0;
    double empirical = 0.0;
};
std::vector<ForestFireSweepRow> run_forest_fire_sweep(const std::vector<double>& qs, int n,
                                                      int networks, uint64_t seed,
                                                      const SimulationParams& sim,
                                                      const EstimateOptions& opts);

struct TableSummary {
    std::vector<int> orders;
    std::vector<double> mean_relative_error;        // per order
    std::vector<double> pc_bin_centers;             // error binned by empirical pc
    std::vector<std::vector<double>> pc_bin_error;  // [order][bin]
    std::vector<double> degree_bin_centers;         // error binned by mean degree
    std::vector<std::vector<double>> degree_bin_error;
};

struct TableOutput {
    std::vector<ResultRow> rows;
    TableSummary summary;
};

/// manifest: one "name<TAB>file" per line, '#' comments; files are resolved
/// relative to the manifest location. Per-network failures are reported in
/// the row and the run continues.
TableOutput run_table(const std::string& manifest_path, const std::vector<int>& orders,
                      const SimulationParams& sim, const EstimateOptions& opts, int pc_bins = 8,
                      int degree_bins = 7);

// ---- serialization ----------------------------------------------------

std::string result_rows_csv(const std::vector<ResultRow>& rows, const std::vector<int>& orders);
std::string curve_csv(const PercolationCurve& curve);
std::string simulate_summary_json(const SimulateOutput& out, const std::string& name,
                                  const SimulationParams& sim);
std::string table_summary_json(const TableOutput& out);
std::string result_row_json(const ResultRow& row);
std::string forest_fire_trace_csv(const std::vector<ForestFireTraceRow>& rows);
std::string forest_fire_sweep_csv(const std::vector<ForestFireSweepRow>& rows);

/// "0,1,2" or "0..5"
std::vector<int> parse_orders(const std::string& text);

}  // namespace perco
