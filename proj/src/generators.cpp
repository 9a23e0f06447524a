#include "perco/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "perco/rng.hpp"

namespace perco {

Graph ring(int n) {
    if (n < 3) throw std::invalid_argument("ring: need n >= 3");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(n);
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_pairs(n, pairs);
}

Graph triangle_ring(int k) {
    if (k < 3) throw std::invalid_argument("triangle_ring: need k >= 3");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(4 * k);
    for (int i = 0; i < k; ++i) {
        int a = k + 2 * i;
        int b = k + 2 * i + 1;
        pairs.emplace_back(i, (i + 1) % k);
        pairs.emplace_back(i, a);
        pairs.emplace_back(i, b);
        pairs.emplace_back(a, b);
    }
    return Graph::from_edge_pairs(3 * k, pairs);
}

namespace {

struct GrowingGraph {
    std::vector<std::vector<int>> adj;

    void link(int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    bool linked(int u, int v) const {
        for (int w : adj[u])
            if (w == v) return true;
        return false;
    }
};

}  // namespace

Graph forest_fire(const ForestFireConfig& cfg) {
    if (cfg.node_count < 1) throw std::invalid_argument("forest_fire: need node_count >= 1");
    if (cfg.burning_probability < 0.0 || cfg.burning_probability >= 1.0)
        throw std::invalid_argument("forest_fire: burning probability must be in [0,1)");
    const double q = cfg.burning_probability;
    Rng rng(cfg.seed);
    GrowingGraph g;
    g.adj.resize(cfg.node_count);
    std::vector<int> frontier;  // ambassadors awaiting processing, depth-first
    std::vector<int> burned;
    for (int u = 1; u < cfg.node_count; ++u) {
        int ambassador = static_cast<int>(rng.next_below(static_cast<uint64_t>(u)));
        g.link(u, ambassador);
        frontier.assign(1, ambassador);
        while (!frontier.empty()) {
            int v = frontier.back();
            frontier.pop_back();
            burned.clear();
            while (rng.next_unit_positive() <= q) {
                // neighbors of v not yet linked to u (covers u and prior ambassadors)
                std::vector<int> candidates;
                for (int w : g.adj[v])
                    if (w != u && !g.linked(u, w)) candidates.push_back(w);
                if (candidates.empty()) break;
                int w = candidates[rng.next_below(candidates.size())];
                g.link(u, w);
                burned.push_back(w);
            }
            // process w_1..w_k in linking order, depth-first
            for (auto it = burned.rbegin(); it != burned.rend(); ++it) frontier.push_back(*it);
        }
    }
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < cfg.node_count; ++u)
        for (int v : g.adj[u])
            if (u < v) pairs.emplace_back(u, v);
    return Graph::from_edge_pairs(cfg.node_count, pairs);
}

Graph barabasi_albert(const BaConfig& cfg) {
    const int m = cfg.edges_per_new_node;
    if (m < 1) throw std::invalid_argument("barabasi_albert: need m >= 1");
    if (cfg.node_count <= m)
        throw std::invalid_argument("barabasi_albert: need node_count > m");
    Rng rng(cfg.seed);
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> repeated;  // node id repeated once per unit of degree
    const int seed_nodes = m + 1;
    for (int i = 0; i < seed_nodes; ++i)
        for (int j = i + 1; j < seed_nodes; ++j) {
            pairs.emplace_back(i, j);
            repeated.push_back(i);
            repeated.push_back(j);
        }
    std::vector<int> targets;
    for (int u = seed_nodes; u < cfg.node_count; ++u) {
        targets.clear();
        // sample from the pre-step degree distribution, rejecting duplicates
        while (static_cast<int>(targets.size()) < m) {
            int candidate = repeated[rng.next_below(repeated.size())];
            if (std::find(targets.begin(), targets.end(), candidate) == targets.end())
                targets.push_back(candidate);
        }
        for (int t : targets) {
            pairs.emplace_back(u, t);
            repeated.push_back(u);
            repeated.push_back(t);
        }
    }
    return Graph::from_edge_pairs(cfg.node_count, pairs);
}

}  // namespace perco
