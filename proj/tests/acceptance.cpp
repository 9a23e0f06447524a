// Acceptance suite: one pass/fail line per criterion. Returns the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "perco/experiments.hpp"
#include "perco/generators.hpp"
#include "perco/nbt.hpp"
#include "perco/percolation.hpp"
#include "perco/rng.hpp"
#include "perco/spectral.hpp"
#include "perco/thresholds.hpp"

using namespace perco;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d — %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string data_path(const std::string& file) { return std::string(PERCO_DATA_DIR) + "/" + file; }

bool within(double x, double target, double tol) { return std::abs(x - target) <= tol; }

std::string fmt3(double a, double b, double c) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.4f/%.4f/%.4f", a, b, c);
    return buf;
}

// ---- criterion 1 & 2: bundled-network spectral columns -------------------

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    Graph karate = parse_edge_list_file(data_path("karate.tsv"));
    double pc0 = estimate_pc(karate, 0).pc;
    double pc1 = estimate_pc(karate, 1).pc;
    double pc2 = estimate_pc(karate, 2).pc;
    double elapsed = seconds_since(t0);
    bool pass = within(pc0, 0.1487, 5e-4) && within(pc1, 0.1889, 5e-4) &&
                within(pc2, 0.2097, 5e-4) && elapsed < 1.0;
    report(1, "karate spectral thresholds", pass,
           fmt3(pc0, pc1, pc2) + " vs 0.1487/0.1889/0.2097 +-5e-4, " + std::to_string(elapsed) + " s");
}

void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    Graph dolphins = parse_edge_list_file(data_path("dolphins.tsv"));
    Graph usa = parse_edge_list_file(data_path("contiguous-usa.tsv"));
    double d0 = estimate_pc(dolphins, 0).pc;
    double d1 = estimate_pc(dolphins, 1).pc;
    double d2 = estimate_pc(dolphins, 2).pc;
    double u0 = estimate_pc(usa, 0).pc;
    double u1 = estimate_pc(usa, 1).pc;
    double u2 = estimate_pc(usa, 2).pc;
    double elapsed = seconds_since(t0);
    bool pass = within(d0, 0.1390, 1e-3) && within(d1, 0.1668, 1e-3) && within(d2, 0.1791, 1e-3) &&
                within(u0, 0.1880, 1e-3) && within(u1, 0.2400, 1e-3) && within(u2, 0.2723, 1e-3) &&
                elapsed < 5.0;
    report(2, "dolphins + contiguous-usa spectral thresholds", pass,
           "dolphins " + fmt3(d0, d1, d2) + ", usa " + fmt3(u0, u1, u2) + " +-1e-3, " +
               std::to_string(elapsed) + " s");
}

// ---- criterion 3: empirical thresholds -----------------------------------

void criterion_3() {
    auto t0 = std::chrono::steady_clock::now();
    Graph karate = parse_edge_list_file(data_path("karate.tsv"));
    double karate_pc = empirical_threshold(percolation_curves(karate, 1000, 401, 42));
    double karate_time = seconds_since(t0);
    auto t1 = std::chrono::steady_clock::now();
    Graph dolphins = parse_edge_list_file(data_path("dolphins.tsv"));
    double dolphins_pc = empirical_threshold(percolation_curves(dolphins, 1000, 401, 43));
    double dolphins_time = seconds_since(t1);
    bool pass = within(karate_pc, 0.2310, 0.02) && within(dolphins_pc, 0.2717, 0.03) &&
                karate_time < 30.0 && dolphins_time < 30.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "karate %.4f (0.2310 +-0.02), dolphins %.4f (0.2717 +-0.03)",
                  karate_pc, dolphins_pc);
    report(3, "Newman-Ziff empirical thresholds, 1000 runs", pass, buf);
}

// ---- criterion 4: motivating examples ------------------------------------

void criterion_4() {
    EstimateOptions tight;
    tight.tol = 1e-12;
    tight.max_iter = 500000;
    Graph r = ring(100);
    double r0 = estimate_pc(r, 0, tight).pc;
    ThresholdEstimate r1 = estimate_pc(r, 1, tight);
    Graph t = triangle_ring(32);
    double t0 = estimate_pc(t, 0, tight).pc;
    double t1 = estimate_pc(t, 1, tight).pc;
    ThresholdEstimate t2 = estimate_pc(t, 2, tight);
    bool pass = within(r0, 0.5, 1e-9) && r1.pc == 1.0 && r1.lambda == 1.0 && t2.pc == 1.0 &&
                t2.lambda == 1.0 && within(t0, 0.3333, 5e-5) && within(t1, 0.5523, 5e-5);
    char buf[200];
    std::snprintf(buf, sizeof buf, "ring %.10f/%.1f, triangle ring %.5f/%.5f/%.1f (lambda2=%.1f)",
                  r0, r1.pc, t0, t1, t2.pc, t2.lambda);
    report(4, "ring and triangle-ring exact thresholds", pass, buf);
}

// ---- criterion 5: eigenvalue order properties -----------------------------

void criterion_5() {
    auto t0 = std::chrono::steady_clock::now();
    bool monotone = true;
    for (int i = 0; i < 50; ++i) {
        Graph g = oracle::er_connected(5 + i % 26, 0.18, 100 + i);
        double prev = 1e300;
        for (int order = 0; order <= 3; ++order) {
            SpectralResult r = spectral_radius_01(build_b(g, order), 1e-12, 800000);
            if (!r.converged || r.radius > prev + 1e-8) monotone = false;
            prev = r.radius;
        }
    }
    bool nilpotent = true;
    int with_cycles = 0;
    for (int i = 0; with_cycles < 20 && i < 200; ++i) {
        Graph g = oracle::er_connected(5 + i % 8, 0.3, 300 + i);
        int cycle_len = oracle::longest_simple_cycle(g);
        if (cycle_len < 3) continue;
        ++with_cycles;
        for (int order : {cycle_len - 1, cycle_len, std::min(cycle_len + 1, g.node_count() - 1)}) {
            SpectralResult r = spectral_radius_01(build_b(g, order));
            if (r.radius != 0.0 || r.method != SpectralMethod::declared_zero_dag) nilpotent = false;
        }
        SpectralResult below = spectral_radius_01(build_b(g, cycle_len - 2), 1e-11, 500000);
        if (below.radius < 1.0 - 1e-9) nilpotent = false;
    }
    bool equal_when_absent = true;
    int bipartite_done = 0;
    for (int i = 0; bipartite_done < 20 && i < 200; ++i) {
        // random bipartite graphs are triangle-free
        Rng rng(500 + i);
        int left = 3 + static_cast<int>(rng.next_below(5));
        int right = 3 + static_cast<int>(rng.next_below(5));
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < left; ++a)
            for (int b = 0; b < right; ++b)
                if (rng.next_unit() < 0.4) pairs.emplace_back(a, left + b);
        Graph g = Graph::from_edge_pairs(left + right, pairs);
        if (!g.connected() || g.edge_count() < 4) continue;
        ++bipartite_done;
        double l1 = spectral_radius_01(build_b(g, 1), 1e-12, 800000).radius;
        double l2 = spectral_radius_01(build_b(g, 2), 1e-12, 800000).radius;
        if (std::abs(l1 - l2) > 1e-8) equal_when_absent = false;
    }
    double elapsed = seconds_since(t0);
    bool pass = monotone && nilpotent && equal_when_absent && with_cycles == 20 &&
                bipartite_done == 20 && elapsed < 60.0;
    report(5, "monotone / nilpotent / absent-cycle eigenvalue laws", pass,
           std::string("monotone=") + (monotone ? "yes" : "no") + " nilpotent=" +
               (nilpotent ? "yes" : "no") + " triangle-free-equality=" +
               (equal_when_absent ? "yes" : "no") + ", " + std::to_string(elapsed) + " s");
}

// ---- criterion 6: reduced matrix M ---------------------------------------

// Zero eigenvalues of M sit in defective blocks (the companion layout chains
// them), so they only resolve to ~1e-3 in double precision; genuine nonzero
// eigenvalues of these integer matrices stay above ~0.16. The classification
// cutoff sits in that gap, and the gap itself is asserted so a violation
// fails loudly instead of silently misclassifying. Multiple roots (e.g. -1
// appearing in both spectra) split by ~2e-8 under QR, hence the pairing
// tolerance of 1e-7.
bool match_multisets(const std::vector<std::complex<double>>& m_eigs,
                     std::vector<std::complex<double>> b_eigs) {
    const std::complex<double> exceptional[3] = {
        {-1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}, {0.5, -std::sqrt(3.0) / 2.0}};
    const double zero_cut = 0.1;
    const double match_tol = 1e-7;
    const std::vector<std::complex<double>>* vecs[2] = {&m_eigs, &b_eigs};
    for (const auto* vec : vecs)
        for (const auto& z : *vec)
            if (std::abs(z) > 0.05 && std::abs(z) < 0.15) return false;  // gap violated
    std::vector<bool> used(b_eigs.size(), false);
    for (const auto& z : m_eigs) {
        if (std::abs(z) < zero_cut) continue;
        bool matched = false;
        for (size_t i = 0; i < b_eigs.size(); ++i) {
            if (used[i]) continue;
            if (std::abs(z - b_eigs[i]) < match_tol) {
                used[i] = true;
                matched = true;
                break;
            }
        }
        if (matched) continue;
        for (const auto& e : exceptional)
            if (std::abs(z - e) < match_tol) matched = true;
        if (!matched) return false;
    }
    for (size_t i = 0; i < b_eigs.size(); ++i)
        if (!used[i] && std::abs(b_eigs[i]) >= zero_cut) return false;
    return true;
}

void criterion_6() {
    auto t0 = std::chrono::steady_clock::now();
    bool spectra_agree = true;
    for (int i = 0; i < 20; ++i) {
        Graph g = oracle::er_connected(6 + i % 7, 0.3, 700 + i);
        SparseOperator m = assemble_m_explicit(g);
        SparseOperator b2 = build_b(g, 2);
        auto m_eigs = dense_eigenvalues(m.to_dense(), m.dim);
        auto b_eigs = b2.dim ? dense_eigenvalues(b2.to_dense(), b2.dim)
                             : std::vector<std::complex<double>>{};
        if (!match_multisets(m_eigs, b_eigs)) spectra_agree = false;
    }
    bool radii_agree = true;
    int accepted = 0;
    for (int i = 0; accepted < 20 && i < 200; ++i) {
        Graph g = oracle::er_connected(16 + i % 11, 0.3, 900 + i);
        SpectralResult via_m = spectral_radius_of_b2_via_m(g, 1e-10, 400000);
        if (via_m.method != SpectralMethod::krylov_m) continue;  // needs lambda > 1
        ++accepted;
        SpectralResult direct = spectral_radius_01(build_b(g, 2), 1e-12, 500000);
        if (std::abs(via_m.radius - direct.radius) > 1e-6) radii_agree = false;
    }
    double elapsed = seconds_since(t0);
    bool pass = spectra_agree && radii_agree && accepted == 20 && elapsed < 120.0;
    report(6, "M spectrum equals B2 spectrum up to exceptional values", pass,
           std::string("multisets=") + (spectra_agree ? "ok" : "mismatch") + " via-M radii=" +
               (radii_agree ? "ok" : "mismatch") + " (" + std::to_string(accepted) + " graphs), " +
               std::to_string(elapsed) + " s");
}

// ---- criterion 7: line-graph construction oracle --------------------------

void criterion_7() {
    auto t0 = std::chrono::steady_clock::now();
    bool equal = true;
    for (int i = 0; i < 20; ++i) {
        Graph g = oracle::er_connected(8 + i % 8, 0.22, 1100 + i);
        for (int order = 1; order <= 4 && equal; ++order)
            if (build_b(g, order).to_dense() != build_via_line_graph(g, order).to_dense())
                equal = false;
    }
    double elapsed = seconds_since(t0);
    report(7, "line-graph route reproduces B^(g) exactly", equal,
           std::string(equal ? "entrywise equal, orders 1..4" : "mismatch found") + ", " +
               std::to_string(elapsed) + " s");
}

// ---- criterion 8: exhaustive simulation oracle ----------------------------

void criterion_8() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, Graph>> graphs;
    graphs.emplace_back("k3", ring(3));
    graphs.emplace_back("path4", Graph::from_edge_pairs(4, {{0, 1}, {1, 2}, {2, 3}}));
    graphs.emplace_back("star5", Graph::from_edge_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
    graphs.emplace_back("ring5", ring(5));
    graphs.emplace_back("ring6", ring(6));
    graphs.emplace_back("bowtie",
                        Graph::from_edge_pairs(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}));
    graphs.emplace_back("k4",
                        Graph::from_edge_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    graphs.emplace_back(
        "k4_pendant",
        Graph::from_edge_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}));
    graphs.emplace_back(
        "k23", Graph::from_edge_pairs(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}));
    graphs.emplace_back(
        "prism", Graph::from_edge_pairs(
                     6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}));
    const int grid = 21;
    const int runs = 10000;
    bool exact_ok = true;
    bool mc_ok = true;
    for (const auto& [name, g] : graphs) {
        const int e = static_cast<int>(g.edge_count());
        oracle::ExactPercolation exact = oracle::exhaustive_percolation(g);
        for (int i = 0; i < grid; ++i) {
            double p = static_cast<double>(i) / (grid - 1);
            auto w = binomial_weights(e, p);
            double s1 = 0.0, s2 = 0.0;
            for (int m = 0; m <= e; ++m) {
                s1 += w[m] * exact.mean_s1_by_m[m];
                s2 += w[m] * exact.mean_s2_by_m[m];
            }
            auto [d1, d2] = oracle::exhaustive_expectation(g, p);
            if (std::abs(s1 - d1) > 1e-12 || std::abs(s2 - d2) > 1e-12) exact_ok = false;
        }
        // Monte Carlo within 3 standard errors of the exhaustive expectation
        PercolationCurve curve = percolation_curves(g, runs, grid, 4242);
        Rng master(4242);
        std::vector<double> sum1(grid, 0.0), sumsq1(grid, 0.0), sum2(grid, 0.0), sumsq2(grid, 0.0);
        std::vector<std::vector<double>> weights(grid);
        for (int i = 0; i < grid; ++i)
            weights[i] = binomial_weights(e, static_cast<double>(i) / (grid - 1));
        for (int run = 0; run < runs; ++run) {
            RunProfile profile = newman_ziff_run(g, master.split(run).seed());
            for (int i = 0; i < grid; ++i) {
                double v1 = 0.0, v2 = 0.0;
                for (int m = 0; m <= e; ++m) {
                    v1 += weights[i][m] * profile.largest[m];
                    v2 += weights[i][m] * profile.second[m];
                }
                v1 /= g.node_count();
                v2 /= g.node_count();
                sum1[i] += v1;
                sumsq1[i] += v1 * v1;
                sum2[i] += v2;
                sumsq2[i] += v2 * v2;
            }
        }
        for (int i = 0; i < grid; ++i) {
            double p = static_cast<double>(i) / (grid - 1);
            auto [d1, d2] = oracle::exhaustive_expectation(g, p);
            double mean1 = sum1[i] / runs;
            double se1 = std::sqrt(std::max(0.0, sumsq1[i] / runs - mean1 * mean1) / runs);
            double mean2 = sum2[i] / runs;
            double se2 = std::sqrt(std::max(0.0, sumsq2[i] / runs - mean2 * mean2) / runs);
            if (std::abs(curve.s1[i] - d1) > 3.0 * se1 + 1e-9) mc_ok = false;
            if (std::abs(curve.s2[i] - d2) > 3.0 * se2 + 1e-9) mc_ok = false;
        }
    }
    double elapsed = seconds_since(t0);
    report(8, "exhaustive percolation oracle", exact_ok && mc_ok,
           std::string("exact-convolution=") + (exact_ok ? "1e-12 ok" : "mismatch") +
               ", monte-carlo=" + (mc_ok ? "within 3 SE" : "outside 3 SE") + ", " +
               std::to_string(elapsed) + " s");
}

// ---- criterion 9: forest fire experiment ----------------------------------

void criterion_9() {
    auto t0 = std::chrono::steady_clock::now();
    // The growth trace needs to reach its asymptotic regime: at 5000 nodes
    // the order-1/2 estimates are still drifting, so the endpoint is taken at
    // 40000 nodes, averaged over three growth seeds. The 5000-node checkpoint
    // is reported alongside for context.
    const double q = 0.01;
    double pc0 = 0.0, pc1 = 0.0, pc2 = 0.0, emp = 0.0;
    double pc1_5k = 0.0;
    const int seeds[3] = {7, 8, 9};
    for (int i = 0; i < 3; ++i) {
        Graph g = forest_fire({40000, q, static_cast<uint64_t>(seeds[i])});
        pc0 += estimate_pc(g, 0).pc / 3.0;
        pc1 += estimate_pc(g, 1).pc / 3.0;
        pc2 += estimate_pc(g, 2).pc / 3.0;
        emp += empirical_threshold(percolation_curves(g, 1000, 401, 77 + i)) / 3.0;
        Graph g5k = forest_fire({5000, q, static_cast<uint64_t>(seeds[i])});
        pc1_5k += estimate_pc(g5k, 1).pc / 3.0;
    }
    bool asymptotes = within(pc0, 0.210, 0.05) && within(pc1, 0.495, 0.05) &&
                      within(pc2, 0.778, 0.05) && within(emp, 0.901, 0.05);

    // q sweep, qualitative: empirical threshold decreases with q and the
    // three spectral estimates close in on each other
    SimulationParams sim;
    sim.runs = 300;
    sim.grid = 201;
    sim.seed = 5;
    auto sweep = run_forest_fire_sweep({0.05, 0.15, 0.3}, 1200, 3, 5, sim, {});
    bool emp_decreasing =
        sweep[0].empirical > sweep[1].empirical && sweep[1].empirical > sweep[2].empirical;
    bool estimates_close = (sweep[2].pc2 - sweep[2].pc0) < (sweep[0].pc2 - sweep[0].pc0);
    double elapsed = seconds_since(t0);
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "N=40k means %.3f/%.3f/%.3f emp %.3f (targets 0.210/0.495/0.778/0.901 +-0.05; "
                  "pc1 at N=5k: %.3f), sweep %s/%s, %.0f s",
                  pc0, pc1, pc2, emp, pc1_5k, emp_decreasing ? "decreasing" : "not-decreasing",
                  estimates_close ? "closing" : "not-closing", elapsed);
    report(9, "forest fire growth trace and q sweep", asymptotes && emp_decreasing && estimates_close,
           buf);
}

// ---- criterion 10: high-order sweep on BA(50, 2) --------------------------

void criterion_10() {
    auto t0 = std::chrono::steady_clock::now();
    bool monotone = true;
    bool overshoot = false;
    for (int seed = 1; seed <= 20; ++seed) {
        Graph g = barabasi_albert({50, 2, static_cast<uint64_t>(seed)});
        std::vector<double> pcs;
        for (int order = 0; order <= 5; ++order) pcs.push_back(estimate_pc(g, order).pc);
        for (size_t i = 0; i + 1 < pcs.size(); ++i)
            if (pcs[i + 1] < pcs[i] - 1e-9) monotone = false;
        double emp = empirical_threshold(percolation_curves(g, 1000, 401, 5000 + seed));
        if (pcs[4] > emp || pcs[5] > emp) overshoot = true;
    }
    double elapsed = seconds_since(t0);
    report(10, "high-order estimates on BA(50,2)", monotone && overshoot,
           std::string("sequence non-decreasing=") + (monotone ? "yes" : "no") +
               ", order-4/5 overshoot observed=" + (overshoot ? "yes" : "no") + ", " +
               std::to_string(elapsed) + " s");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
