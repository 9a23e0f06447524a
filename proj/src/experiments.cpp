#include "perco/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "perco/generators.hpp"
#include "perco/rng.hpp"

namespace perco {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace

ResultRow run_estimate(const Graph& g, const std::string& name, const std::vector<int>& orders,
                       const EstimateOptions& opts) {
    LccResult lcc = largest_connected_component(g);
    ResultRow row;
    row.name = name;
    row.nodes = lcc.graph.node_count();
    row.edges = lcc.graph.edge_count();
    for (int order : orders) {
        EstimateCell cell;
        cell.order = order;
        try {
            cell.estimate = estimate_pc(lcc.graph, order, opts);
            cell.ok = true;
        } catch (const NonConvergence& e) {
            cell.estimate.order = order;
            cell.estimate.spectral = e.partial;
            cell.error = e.what();
        } catch (const PathCapExceeded& e) {
            cell.estimate.order = order;
            cell.error = e.what();
        }
        row.estimates.push_back(std::move(cell));
    }
    return row;
}

SimulateOutput run_simulate(const Graph& g, const SimulationParams& sim) {
    LccResult lcc = largest_connected_component(g);
    SimulateOutput out;
    out.curve = percolation_curves(lcc.graph, sim.runs, sim.grid, sim.seed);
    out.empirical_pc = empirical_threshold(out.curve);
    out.uncertainty = 1.0 / (sim.grid - 1);
    return out;
}

namespace {

void fill_errors(ResultRow& row) {
    if (!row.empirical_pc) return;
    std::vector<ThresholdEstimate> ok;
    for (const auto& c : row.estimates)
        if (c.ok) ok.push_back(c.estimate);
    row.relative_errors.assign(row.estimates.size(), std::nan(""));
    if (ok.empty()) return;
    ErrorReport rep = compare(ok, *row.empirical_pc);
    size_t j = 0;
    for (size_t i = 0; i < row.estimates.size(); ++i)
        if (row.estimates[i].ok) row.relative_errors[i] = rep.relative_errors[j++];
}

}  // namespace

std::vector<ForestFireTraceRow> run_forest_fire_trace(double q, int n_max, int checkpoints,
                                                      uint64_t seed, const SimulationParams& sim,
                                                      const EstimateOptions& opts) {
    if (checkpoints < 1 || n_max < 3)
        throw std::invalid_argument("forest fire trace: need n_max >= 3, checkpoints >= 1");
    // log-spaced node counts ending at n_max; the generator's prefix property
    // makes every checkpoint a snapshot of the same evolving network
    std::vector<int> ns;
    double lo = std::log(16.0 < n_max ? 16.0 : 3.0);
    double hi = std::log(static_cast<double>(n_max));
    for (int i = 0; i < checkpoints; ++i) {
        double t = checkpoints == 1 ? 1.0 : static_cast<double>(i) / (checkpoints - 1);
        int n = static_cast<int>(std::lround(std::exp(lo + t * (hi - lo))));
        n = std::max(3, std::min(n, n_max));
        if (ns.empty() || n > ns.back()) ns.push_back(n);
    }
    if (ns.back() != n_max) ns.push_back(n_max);
    std::vector<ForestFireTraceRow> rows;
    for (size_t i = 0; i < ns.size(); ++i) {
        Graph g = forest_fire({ns[i], q, seed});
        ForestFireTraceRow row;
        row.nodes = g.node_count();
        row.edges = g.edge_count();
        row.pc0 = estimate_pc(g, 0, opts).pc;
        row.pc1 = estimate_pc(g, 1, opts).pc;
        row.pc2 = estimate_pc(g, 2, opts).pc;
        SimulationParams local = sim;
        local.seed = Rng(sim.seed).split(1000 + i).seed();
        row.empirical = empirical_threshold(percolation_curves(g, local.runs, local.grid, local.seed));
        rows.push_back(row);
    }
    return rows;
}

std::vector<ForestFireSweepRow> run_forest_fire_sweep(const std::vector<double>& qs, int n,
                                                      int networks, uint64_t seed,
                                                      const SimulationParams& sim,
                                                      const EstimateOptions& opts) {
    if (networks < 1) throw std::invalid_argument("forest fire sweep: need networks >= 1");
    std::vector<ForestFireSweepRow> rows;
    Rng master(seed);
    for (size_t qi = 0; qi < qs.size(); ++qi) {
        ForestFireSweepRow row;
        row.q = qs[qi];
        for (int k = 0; k < networks; ++k) {
            uint64_t gseed = master.split(qi * 100000 + k).seed();
            Graph g = forest_fire({n, qs[qi], gseed});
            row.pc0 += estimate_pc(g, 0, opts).pc;
            row.pc1 += estimate_pc(g, 1, opts).pc;
            row.pc2 += estimate_pc(g, 2, opts).pc;
            row.empirical += empirical_threshold(
                percolation_curves(g, sim.runs, sim.grid, master.split(qi * 100000 + k + 50000).seed()));
        }
        row.pc0 /= networks;
        row.pc1 /= networks;
        row.pc2 /= networks;
        row.empirical /= networks;
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::string dirname_of(const std::string& path) {
    size_t cut = path.find_last_of('/');
    return cut == std::string::npos ? std::string(".") : path.substr(0, cut);
}

std::vector<double> bin_means(const std::vector<double>& key, const std::vector<double>& value,
                              int bins, std::vector<double>& centers) {
    centers.assign(bins, std::nan(""));
    std::vector<double> mean(bins, std::nan(""));
    if (key.empty()) return mean;
    double lo = *std::min_element(key.begin(), key.end());
    double hi = *std::max_element(key.begin(), key.end());
    double width = hi > lo ? (hi - lo) / bins : 1.0;
    std::vector<double> key_sum(bins, 0.0), val_sum(bins, 0.0);
    std::vector<int> count(bins, 0);
    for (size_t i = 0; i < key.size(); ++i) {
        if (std::isnan(value[i])) continue;
        int b = std::min(bins - 1, static_cast<int>((key[i] - lo) / width));
        key_sum[b] += key[i];
        val_sum[b] += value[i];
        ++count[b];
    }
    for (int b = 0; b < bins; ++b)
        if (count[b] > 0) {
            centers[b] = key_sum[b] / count[b];
            mean[b] = val_sum[b] / count[b];
        }
    return mean;
}

}  // namespace

TableOutput run_table(const std::string& manifest_path, const std::vector<int>& orders,
                      const SimulationParams& sim, const EstimateOptions& opts, int pc_bins,
                      int degree_bins) {
    std::ifstream in(manifest_path);
    if (!in) throw ParseError("cannot open manifest: " + manifest_path);
    const std::string base = dirname_of(manifest_path);
    TableOutput out;
    std::string line;
    size_t net_index = 0;
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#' || line[first] == '%') continue;
        std::istringstream fields(line);
        std::string name, file;
        fields >> name >> file;
        if (name.empty() || file.empty()) continue;
        ResultRow row;
        row.name = name;
        try {
            Graph g = parse_edge_list_file(base + "/" + file);
            row = run_estimate(g, name, orders, opts);
            SimulationParams local = sim;
            local.seed = Rng(sim.seed).split(net_index).seed();
            LccResult lcc = largest_connected_component(g);
            PercolationCurve curve = percolation_curves(lcc.graph, local.runs, local.grid, local.seed);
            row.empirical_pc = empirical_threshold(curve);
            row.empirical_uncertainty = 1.0 / (local.grid - 1);
            fill_errors(row);
        } catch (const std::exception& e) {
            if (row.estimates.empty())
                row.estimates.push_back({orders.empty() ? 0 : orders.front(), false, {}, e.what()});
            else
                row.estimates.front().error = e.what();
        }
        out.rows.push_back(std::move(row));
        ++net_index;
    }
    out.summary.orders = orders;
    for (size_t oi = 0; oi < orders.size(); ++oi) {
        double sum = 0.0;
        int count = 0;
        for (const auto& row : out.rows)
            if (oi < row.relative_errors.size() && !std::isnan(row.relative_errors[oi])) {
                sum += row.relative_errors[oi];
                ++count;
            }
        out.summary.mean_relative_error.push_back(count ? sum / count : std::nan(""));
    }
    std::vector<double> pcs, degrees;
    std::vector<std::vector<double>> errs(orders.size());
    for (const auto& row : out.rows) {
        if (!row.empirical_pc || row.relative_errors.empty()) continue;
        pcs.push_back(*row.empirical_pc);
        degrees.push_back(row.nodes > 0 ? 2.0 * row.edges / row.nodes : 0.0);
        for (size_t oi = 0; oi < orders.size(); ++oi) errs[oi].push_back(row.relative_errors[oi]);
    }
    out.summary.pc_bin_error.resize(orders.size());
    out.summary.degree_bin_error.resize(orders.size());
    for (size_t oi = 0; oi < orders.size(); ++oi) {
        out.summary.pc_bin_error[oi] = bin_means(pcs, errs[oi], pc_bins, out.summary.pc_bin_centers);
        out.summary.degree_bin_error[oi] =
            bin_means(degrees, errs[oi], degree_bins, out.summary.degree_bin_centers);
    }
    return out;
}

// ---- serialization ------------------------------------------------------

std::string result_rows_csv(const std::vector<ResultRow>& rows, const std::vector<int>& orders) {
    std::string out = "# percothresh results v1\n";
    out += "name,nodes,edges";
    for (int o : orders) out += ",pc" + std::to_string(o) + ",lambda" + std::to_string(o) + ",method" + std::to_string(o);
    out += ",empirical_pc";
    for (int o : orders) out += ",rel_err" + std::to_string(o);
    out += "\n";
    for (const auto& row : rows) {
        out += row.name + "," + std::to_string(row.nodes) + "," + std::to_string(row.edges);
        for (size_t i = 0; i < orders.size(); ++i) {
            if (i < row.estimates.size() && row.estimates[i].ok) {
                const auto& e = row.estimates[i].estimate;
                out += "," + fmt(e.pc) + "," + fmt(e.lambda) + "," + to_string(e.spectral.method);
            } else {
                out += ",,,failed";
            }
        }
        out += ",";
        if (row.empirical_pc) out += fmt(*row.empirical_pc);
        for (size_t i = 0; i < orders.size(); ++i) {
            out += ",";
            if (i < row.relative_errors.size() && !std::isnan(row.relative_errors[i]))
                out += fmt(row.relative_errors[i]);
        }
        out += "\n";
    }
    return out;
}

std::string curve_csv(const PercolationCurve& curve) {
    std::string out = "p,s1,s2\n";
    for (size_t i = 0; i < curve.p_grid.size(); ++i)
        out += fmt(curve.p_grid[i]) + "," + fmt(curve.s1[i]) + "," + fmt(curve.s2[i]) + "\n";
    return out;
}

std::string simulate_summary_json(const SimulateOutput& out, const std::string& name,
                                  const SimulationParams& sim) {
    nlohmann::json j;
    j["schema"] = "percothresh-simulate-v1";
    j["name"] = name;
    j["p_c"] = out.empirical_pc;
    j["uncertainty"] = out.uncertainty;
    j["runs"] = sim.runs;
    j["grid"] = sim.grid;
    j["seed"] = sim.seed;
    return j.dump(2) + "\n";
}

std::string result_row_json(const ResultRow& row) {
    nlohmann::json j;
    j["schema"] = "percothresh-estimate-v1";
    j["name"] = row.name;
    j["nodes"] = row.nodes;
    j["edges"] = row.edges;
    j["estimates"] = nlohmann::json::array();
    for (const auto& c : row.estimates) {
        nlohmann::json e;
        e["order"] = c.order;
        e["ok"] = c.ok;
        if (c.ok) {
            e["pc"] = c.estimate.pc;
            e["lambda"] = c.estimate.lambda;
            e["clamped"] = c.estimate.clamped;
            e["method"] = to_string(c.estimate.spectral.method);
            e["iterations"] = c.estimate.spectral.iterations;
            e["residual"] = c.estimate.spectral.residual;
        } else {
            e["error"] = c.error;
        }
        j["estimates"].push_back(e);
    }
    if (row.empirical_pc) j["empirical_pc"] = *row.empirical_pc;
    return j.dump(2) + "\n";
}

std::string table_summary_json(const TableOutput& out) {
    nlohmann::json j;
    j["schema"] = "percothresh-table-summary-v1";
    j["orders"] = out.summary.orders;
    auto numbers = [](const std::vector<double>& xs) {
        nlohmann::json arr = nlohmann::json::array();
        for (double x : xs)
            arr.push_back(std::isnan(x) ? nlohmann::json() : nlohmann::json(x));
        return arr;
    };
    j["mean_relative_error"] = numbers(out.summary.mean_relative_error);
    j["pc_bin_centers"] = numbers(out.summary.pc_bin_centers);
    j["degree_bin_centers"] = numbers(out.summary.degree_bin_centers);
    j["pc_bin_error"] = nlohmann::json::array();
    for (const auto& xs : out.summary.pc_bin_error) j["pc_bin_error"].push_back(numbers(xs));
    j["degree_bin_error"] = nlohmann::json::array();
    for (const auto& xs : out.summary.degree_bin_error)
        j["degree_bin_error"].push_back(numbers(xs));
    return j.dump(2) + "\n";
}

std::string forest_fire_trace_csv(const std::vector<ForestFireTraceRow>& rows) {
    std::string out = "nodes,edges,pc0,pc1,pc2,empirical\n";
    for (const auto& r : rows)
        out += std::to_string(r.nodes) + "," + std::to_string(r.edges) + "," + fmt(r.pc0) + "," +
               fmt(r.pc1) + "," + fmt(r.pc2) + "," + fmt(r.empirical) + "\n";
    return out;
}

std::string forest_fire_sweep_csv(const std::vector<ForestFireSweepRow>& rows) {
    std::string out = "q,pc0,pc1,pc2,empirical\n";
    for (const auto& r : rows)
        out += fmt(r.q) + "," + fmt(r.pc0) + "," + fmt(r.pc1) + "," + fmt(r.pc2) + "," +
               fmt(r.empirical) + "\n";
    return out;
}

std::vector<int> parse_orders(const std::string& text) {
    std::vector<int> orders;
    auto range = text.find("..");
    if (range != std::string::npos) {
        int lo = std::stoi(text.substr(0, range));
        int hi = std::stoi(text.substr(range + 2));
        if (lo < 0 || hi < lo) throw std::invalid_argument("bad order range: " + text);
        for (int o = lo; o <= hi; ++o) orders.push_back(o);
        return orders;
    }
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        size_t pos = 0;
        int o = std::stoi(tok, &pos);
        if (pos != tok.size() || o < 0) throw std::invalid_argument("bad orders list: " + text);
        orders.push_back(o);
    }
    if (orders.empty()) throw std::invalid_argument("empty orders list");
    return orders;
}

}  // namespace perco
