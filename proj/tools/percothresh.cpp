#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "perco/experiments.hpp"
#include "perco/generators.hpp"
#include "perco/spectral.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitSolver = 3;
constexpr int kExitDegenerate = 4;

struct InputSpec {
    std::string input_path;
    std::string model;
    int n = 0;
    int k = 0;
    int m = 2;
    double q = 0.0;
    uint64_t seed = 1;
};

perco::Graph load_graph(const InputSpec& in) {
    if (!in.input_path.empty()) return perco::parse_edge_list_file(in.input_path);
    if (in.model == "ring") return perco::ring(in.n);
    if (in.model == "triangle-ring") return perco::triangle_ring(in.k > 0 ? in.k : in.n);
    if (in.model == "forest-fire") return perco::forest_fire({in.n, in.q, in.seed});
    if (in.model == "ba") return perco::barabasi_albert({in.n, in.m, in.seed});
    throw std::invalid_argument("unknown model: " + in.model);
}

std::string graph_name(const InputSpec& in) {
    if (!in.input_path.empty()) {
        size_t cut = in.input_path.find_last_of('/');
        return cut == std::string::npos ? in.input_path : in.input_path.substr(cut + 1);
    }
    return in.model;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

void add_input_options(CLI::App* cmd, InputSpec& in) {
    cmd->add_option("--input", in.input_path, "edge list file");
    cmd->add_option("--model", in.model, "ring|triangle-ring|forest-fire|ba");
    cmd->add_option("--n", in.n, "node count for generators");
    cmd->add_option("--k", in.k, "triangle count for triangle-ring");
    cmd->add_option("--m", in.m, "edges per new node (ba)");
    cmd->add_option("--q", in.q, "burning probability (forest-fire)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"percolation threshold estimation via high-order non-backtracking matrices"};
    app.require_subcommand(1);

    InputSpec in;
    std::string orders_text = "0,1,2";
    std::string out_path;
    std::string summary_path;
    std::string format = "csv";
    std::string fast = "auto";
    perco::SimulationParams sim;
    perco::EstimateOptions opts;
    uint64_t seed = 1;
    double q = 0.01;
    std::string q_list;
    int avg = 0;
    int checkpoints = 12;
    std::string manifest;

    auto* generate = app.add_subcommand("generate", "write a synthetic graph as an edge list");
    add_input_options(generate, in);
    generate->add_option("--seed", seed, "generator seed");
    generate->add_option("--out", out_path, "output path (default stdout)");

    auto* estimate = app.add_subcommand("estimate", "spectral threshold estimates p_c^(g)");
    add_input_options(estimate, in);
    estimate->add_option("--orders", orders_text, "orders, e.g. 0,1,2 or 0..5");
    estimate->add_option("--seed", seed, "generator seed");
    estimate->add_option("--tol", opts.tol, "eigensolver tolerance");
    estimate->add_option("--max-iter", opts.max_iter, "iteration cap");
    estimate->add_option("--fast", fast, "auto|on|off: use the reduced matrix M for order 2");
    estimate->add_option("--path-cap", opts.path_cap, "maximum number of enumerated paths");
    estimate->add_option("--out", out_path, "output path (default stdout)");
    estimate->add_option("--format", format, "csv|json");

    auto* simulate = app.add_subcommand("simulate", "Newman-Ziff percolation curves");
    add_input_options(simulate, in);
    simulate->add_option("--runs", sim.runs, "Monte Carlo runs");
    simulate->add_option("--grid", sim.grid, "p-grid size");
    simulate->add_option("--seed", seed, "simulation seed");
    simulate->add_option("--out", out_path, "curve CSV path (default stdout)");
    simulate->add_option("--summary", summary_path, "JSON summary path (default stdout)");

    auto* forest = app.add_subcommand("forest-fire", "forest fire growth trace / q sweep");
    forest->add_option("--q", q, "burning probability (trace mode)");
    forest->add_option("--q-list", q_list, "comma-separated q values (sweep mode)");
    forest->add_option("--n", in.n, "final node count")->required();
    forest->add_option("--avg", avg, "networks to average per q (sweep mode)");
    forest->add_option("--checkpoints", checkpoints, "growth checkpoints (trace mode)");
    forest->add_option("--runs", sim.runs, "Monte Carlo runs per empirical estimate");
    forest->add_option("--grid", sim.grid, "p-grid size");
    forest->add_option("--seed", seed, "seed");
    forest->add_option("--tol", opts.tol, "eigensolver tolerance");
    forest->add_option("--out", out_path, "output CSV path (default stdout)");

    auto* table = app.add_subcommand("table", "estimates + simulation for a dataset manifest");
    table->add_option("--manifest", manifest, "name<TAB>file manifest")->required();
    table->add_option("--orders", orders_text, "orders, e.g. 0,1,2");
    table->add_option("--runs", sim.runs, "Monte Carlo runs");
    table->add_option("--grid", sim.grid, "p-grid size");
    table->add_option("--seed", seed, "simulation seed");
    table->add_option("--tol", opts.tol, "eigensolver tolerance");
    table->add_option("--fast", fast, "auto|on|off");
    table->add_option("--out", out_path, "rows CSV path (default stdout)");
    table->add_option("--summary", summary_path, "summary JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (fast == "on") opts.fast = perco::EstimateOptions::Fast::on;
        else if (fast == "off") opts.fast = perco::EstimateOptions::Fast::off;
        else if (fast == "auto") opts.fast = perco::EstimateOptions::Fast::automatic;
        else throw CLI::ValidationError("--fast must be auto|on|off");
        in.seed = seed;
        sim.seed = seed;

        if (generate->parsed()) {
            if (in.model.empty()) throw CLI::ValidationError("generate needs --model");
            perco::Graph g = load_graph(in);
            write_text(out_path, perco::serialize_edge_list(g));
            return kExitOk;
        }
        if (estimate->parsed()) {
            auto orders = perco::parse_orders(orders_text);
            perco::Graph g = load_graph(in);
            perco::ResultRow row = perco::run_estimate(g, graph_name(in), orders, opts);
            if (format == "json")
                write_text(out_path, perco::result_row_json(row));
            else
                write_text(out_path, perco::result_rows_csv({row}, orders));
            for (const auto& cell : row.estimates)
                if (!cell.ok) return kExitSolver;
            return kExitOk;
        }
        if (simulate->parsed()) {
            perco::Graph g = load_graph(in);
            perco::SimulateOutput out = perco::run_simulate(g, sim);
            write_text(out_path, perco::curve_csv(out.curve));
            write_text(summary_path, perco::simulate_summary_json(out, graph_name(in), sim));
            return kExitOk;
        }
        if (forest->parsed()) {
            if (!q_list.empty()) {
                std::vector<double> qs;
                std::istringstream ss(q_list);
                std::string tok;
                while (std::getline(ss, tok, ',')) qs.push_back(std::stod(tok));
                auto rows = perco::run_forest_fire_sweep(qs, in.n, avg > 0 ? avg : 100, seed, sim, opts);
                write_text(out_path, perco::forest_fire_sweep_csv(rows));
            } else {
                auto rows = perco::run_forest_fire_trace(q, in.n, checkpoints, seed, sim, opts);
                write_text(out_path, perco::forest_fire_trace_csv(rows));
            }
            return kExitOk;
        }
        if (table->parsed()) {
            auto orders = perco::parse_orders(orders_text);
            perco::TableOutput out = perco::run_table(manifest, orders, sim, opts);
            write_text(out_path, perco::result_rows_csv(out.rows, orders));
            if (!summary_path.empty()) write_text(summary_path, perco::table_summary_json(out));
            return kExitOk;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const perco::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const perco::NonConvergence& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const perco::DegenerateCurve& e) {
        std::cerr << "simulation error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
