#include "perco/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

#include "perco/nbt.hpp"
#include "perco/paths.hpp"
#include "perco/rng.hpp"

namespace perco {

namespace {

struct UnionFind {
    std::vector<int> parent;
    std::vector<int> size;

    explicit UnionFind(int n) : parent(n), size(n, 1) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        int root = x;
        while (parent[root] != root) root = parent[root];
        while (parent[x] != root) {
            int next = parent[x];
            parent[x] = root;
            x = next;
        }
        return root;
    }
};

// component sizes as a count-per-size map; top-two extraction is O(log)
struct SizeMultiset {
    std::map<int, int> counts;

    void insert(int s) { ++counts[s]; }
    void erase(int s) {
        auto it = counts.find(s);
        if (--it->second == 0) counts.erase(it);
    }
    int largest() const { return counts.rbegin()->first; }
    int second_largest() const {
        auto it = counts.rbegin();
        if (it->second >= 2) return it->first;
        ++it;
        return it == counts.rend() ? 0 : it->first;
    }
};

}  // namespace

RunProfile newman_ziff_run(const Graph& g, uint64_t seed) {
    const int n = g.node_count();
    auto edges = g.edges();
    const auto e = static_cast<size_t>(g.edge_count());
    Rng rng(seed);
    for (size_t i = e; i > 1; --i) std::swap(edges[i - 1], edges[rng.next_below(i)]);
    UnionFind uf(n);
    SizeMultiset sizes;
    for (int i = 0; i < n; ++i) sizes.insert(1);
    RunProfile profile;
    profile.largest.reserve(e + 1);
    profile.second.reserve(e + 1);
    profile.largest.push_back(n > 0 ? 1 : 0);
    profile.second.push_back(n > 1 ? 1 : 0);
    for (auto [u, v] : edges) {
        int ru = uf.find(u);
        int rv = uf.find(v);
        if (ru != rv) {
            if (uf.size[ru] < uf.size[rv]) std::swap(ru, rv);
            sizes.erase(uf.size[ru]);
            sizes.erase(uf.size[rv]);
            uf.parent[rv] = ru;
            uf.size[ru] += uf.size[rv];
            sizes.insert(uf.size[ru]);
        }
        profile.largest.push_back(sizes.largest());
        profile.second.push_back(sizes.second_largest());
    }
    return profile;
}

std::vector<double> binomial_weights(int total, double p) {
    std::vector<double> w(total + 1, 0.0);
    if (p <= 0.0) {
        w[0] = 1.0;
        return w;
    }
    if (p >= 1.0) {
        w[total] = 1.0;
        return w;
    }
    const double lp = std::log(p);
    const double lq = std::log1p(-p);
    const double lg_total = std::lgamma(total + 1.0);
    for (int m = 0; m <= total; ++m) {
        double lw = lg_total - std::lgamma(m + 1.0) - std::lgamma(total - m + 1.0) + m * lp +
                    (total - m) * lq;
        w[m] = std::exp(lw);
    }
    return w;
}

PercolationCurve percolation_curves(const Graph& g, int runs, int grid_size, uint64_t seed) {
    if (runs < 1) throw std::invalid_argument("percolation_curves: need runs >= 1");
    if (grid_size < 2) throw std::invalid_argument("percolation_curves: need grid_size >= 2");
    if (g.node_count() == 0) throw std::invalid_argument("percolation_curves: empty graph");
    if (!g.connected()) throw std::invalid_argument("percolation_curves: graph must be connected");
    const int n = g.node_count();
    const auto e = static_cast<size_t>(g.edge_count());
    Rng master(seed);

    std::vector<long long> sum_largest(e + 1, 0), sum_second(e + 1, 0);
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(runs));
    std::vector<std::vector<long long>> partial_largest(workers, std::vector<long long>(e + 1, 0));
    std::vector<std::vector<long long>> partial_second(workers, std::vector<long long>(e + 1, 0));
    auto work = [&](unsigned worker) {
        for (int run = static_cast<int>(worker); run < runs; run += static_cast<int>(workers)) {
            RunProfile profile = newman_ziff_run(g, master.split(run).seed());
            for (size_t m = 0; m <= e; ++m) {
                partial_largest[worker][m] += profile.largest[m];
                partial_second[worker][m] += profile.second[m];
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (unsigned w = 0; w < workers; ++w)
        for (size_t m = 0; m <= e; ++m) {
            sum_largest[m] += partial_largest[w][m];
            sum_second[m] += partial_second[w][m];
        }

    std::vector<double> mean_s1(e + 1), mean_s2(e + 1);
    const double scale = 1.0 / (static_cast<double>(runs) * n);
    for (size_t m = 0; m <= e; ++m) {
        mean_s1[m] = static_cast<double>(sum_largest[m]) * scale;
        mean_s2[m] = static_cast<double>(sum_second[m]) * scale;
    }

    PercolationCurve curve;
    curve.runs = runs;
    curve.seed = seed;
    curve.p_grid.resize(grid_size);
    curve.s1.assign(grid_size, 0.0);
    curve.s2.assign(grid_size, 0.0);
    for (int i = 0; i < grid_size; ++i) {
        double p = static_cast<double>(i) / (grid_size - 1);
        curve.p_grid[i] = p;
        auto w = binomial_weights(static_cast<int>(e), p);
        double s1 = 0.0, s2 = 0.0;
        for (size_t m = 0; m <= e; ++m) {
            s1 += w[m] * mean_s1[m];
            s2 += w[m] * mean_s2[m];
        }
        curve.s1[i] = s1;
        curve.s2[i] = s2;
    }
    return curve;
}

double empirical_threshold(const PercolationCurve& curve) {
    size_t best = 0;
    bool any = false;
    for (size_t i = 0; i < curve.s2.size(); ++i) {
        if (curve.s2[i] > 0.0) any = true;
        if (curve.s2[i] > curve.s2[best]) best = i;  // strict: ties go to smaller p
    }
    if (!any) throw DegenerateCurve("empirical_threshold: S2 vanishes identically");
    return curve.p_grid[best];
}

MessageState message_passing_theta(const Graph& g, double p, double tol, long max_iter) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("message_passing_theta: p must be in [0,1]");
    DirectedPathSet paths = enumerate_paths(g, 2);
    SparseOperator b2 = build_b(g, 2);  // successor lists of each path message
    const size_t np = paths.size();
    MessageState state;
    state.p = p;
    state.theta.assign(np, 1.0);
    std::vector<double> next(np);
    bool converged = np == 0;
    for (long it = 1; it <= max_iter && !converged; ++it) {
        double delta = 0.0;
        for (size_t r = 0; r < np; ++r) {
            double prod = 1.0;
            for (long long k = b2.row_ptr[r]; k < b2.row_ptr[r + 1]; ++k)
                prod *= 1.0 - p * state.theta[b2.col[k]];
            next[r] = 1.0 - prod;
            delta = std::max(delta, std::abs(next[r] - state.theta[r]));
        }
        state.theta.swap(next);
        state.iterations = it;
        converged = delta <= tol;
    }
    if (!converged)
        throw MessagePassingError("message passing did not converge", std::move(state));
    std::vector<double> miss(g.node_count(), 1.0);  // prod over paths from i of (1 - theta)
    for (size_t r = 0; r < np; ++r) miss[paths.path(r)[0]] *= 1.0 - state.theta[r];
    state.pi.resize(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) state.pi[v] = 1.0 - miss[v];
    return state;
}

double message_passing_s1(const Graph& g, double p, double tol, long max_iter) {
    MessageState state = message_passing_theta(g, p, tol, max_iter);
    double total = 0.0;
    for (double x : state.pi) total += x;
    return total;
}

}  // namespace perco
