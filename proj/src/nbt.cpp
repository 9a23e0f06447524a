#include "perco/nbt.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <vector>

namespace perco {

SparseOperator build_b(const Graph& g, int order, size_t path_cap) {
    DirectedPathSet paths = enumerate_paths(g, order, path_cap);
    const int len = order + 1;
    SparseOperator op;
    op.dim = static_cast<int>(paths.size());
    op.tag = "B(" + std::to_string(order) + ")";
    op.row_ptr.assign(op.dim + 1, 0);
    std::vector<int> successor(len);
    for (size_t r = 0; r < paths.size(); ++r) {
        auto p = paths.path(r);
        std::copy(p.begin() + 1, p.end(), successor.begin());
        int last = p[order];
        long long row_entries = 0;
        for (int w : g.neighbors(last)) {
            if (std::find(p.begin(), p.end(), w) != p.end()) continue;
            successor[order] = w;
            auto idx = paths.index_of({successor.data(), static_cast<size_t>(len)});
            // suffix + fresh neighbor is always a valid path
            op.col.push_back(static_cast<int>(*idx));
            op.val.push_back(1.0);
            ++row_entries;
        }
        op.row_ptr[r + 1] = op.row_ptr[r] + row_entries;
    }
    return op;
}

namespace {

// directed graph as adjacency lists with a parallel reverse view
struct Digraph {
    std::vector<std::vector<int>> out;
    int nodes() const { return static_cast<int>(out.size()); }
};

// all simple directed cycles of exactly `length` edges; returns the set of
// edges participating in at least one such cycle
std::set<std::pair<int, int>> edges_on_cycles(const Digraph& d, int length) {
    std::set<std::pair<int, int>> marked;
    std::vector<int> path;
    std::vector<char> on_path(d.nodes(), 0);
    // canonical start: smallest node on the cycle
    for (int s = 0; s < d.nodes(); ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        // DFS over nodes > s
        struct Frame {
            int node;
            size_t next = 0;
        };
        std::vector<Frame> stack{{s, 0}};
        while (!stack.empty()) {
            Frame& f = stack.back();
            int depth = static_cast<int>(stack.size()) - 1;  // edges used so far
            if (depth == length - 1) {
                // one more edge must close the cycle
                for (int t : d.out[f.node])
                    if (t == s) {
                        for (int k = 0; k + 1 < static_cast<int>(path.size()); ++k)
                            marked.emplace(path[k], path[k + 1]);
                        marked.emplace(path.back(), s);
                    }
                on_path[f.node] = (f.node == s);
                path.pop_back();
                stack.pop_back();
                continue;
            }
            bool descended = false;
            while (f.next < d.out[f.node].size()) {
                int t = d.out[f.node][f.next++];
                if (t <= s || on_path[t]) continue;
                path.push_back(t);
                on_path[t] = 1;
                stack.push_back({t, 0});
                descended = true;
                break;
            }
            if (!descended) {
                on_path[f.node] = (f.node == s);
                if (path.size() > 1) path.pop_back();
                stack.pop_back();
            }
        }
        on_path[s] = 0;
    }
    return marked;
}

}  // namespace

SparseOperator build_via_line_graph(const Graph& g, int order) {
    if (order < 1) throw std::invalid_argument("build_via_line_graph: order must be >= 1");
    // level 0: the symmetric directed version of g; node tuples are single nodes
    Digraph current;
    current.out.resize(g.node_count());
    std::vector<std::vector<int>> tuples(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) {
        tuples[v] = {v};
        current.out[v] = g.neighbors(v);
    }
    for (int level = 1; level <= order; ++level) {
        // nodes of the line graph = edges of `current`
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < current.nodes(); ++u)
            for (int v : current.out[u]) edges.emplace_back(u, v);
        std::vector<std::vector<int>> next_tuples(edges.size());
        std::vector<long long> edge_index_start(current.nodes() + 1, 0);
        for (size_t e = 0; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            next_tuples[e] = tuples[u];
            next_tuples[e].push_back(tuples[v].back());
        }
        for (auto& [u, v] : edges) ++edge_index_start[u + 1];
        for (int u = 0; u < current.nodes(); ++u) edge_index_start[u + 1] += edge_index_start[u];
        // index of edge (u,v): edges are emitted u-major with v in out-list order
        auto edge_id = [&](int u, int v) -> int {
            long long base = edge_index_start[u];
            const auto& row = current.out[u];
            for (size_t i = 0; i < row.size(); ++i)
                if (row[i] == v) return static_cast<int>(base + i);
            return -1;
        };
        Digraph line;
        line.out.resize(edges.size());
        for (size_t e = 0; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            for (int w : current.out[v]) {
                int f = edge_id(v, w);
                if (static_cast<int>(e) != f) line.out[e].push_back(f);
            }
        }
        auto deleted = edges_on_cycles(line, level + 1);
        Digraph pruned;
        pruned.out.resize(line.nodes());
        for (int a = 0; a < line.nodes(); ++a)
            for (int b : line.out[a])
                if (!deleted.count({a, b})) pruned.out[a].push_back(b);
        current = std::move(pruned);
        tuples = std::move(next_tuples);
    }
    // re-index into canonical lexicographic path order
    DirectedPathSet canonical = enumerate_paths(g, order);
    std::vector<int> to_canonical(current.nodes(), -1);
    for (int v = 0; v < current.nodes(); ++v) {
        auto idx = canonical.index_of({tuples[v].data(), tuples[v].size()});
        to_canonical[v] = static_cast<int>(idx.value());
    }
    std::vector<std::tuple<int, int, double>> triplets;
    for (int a = 0; a < current.nodes(); ++a)
        for (int b : current.out[a])
            triplets.emplace_back(to_canonical[a], to_canonical[b], 1.0);
    auto op = SparseOperator::from_triplets(static_cast<int>(canonical.size()), std::move(triplets),
                                            "B(" + std::to_string(order) + ")/line-graph");
    return op;
}

SparseOperator build_delta_b1(const Graph& g) {
    DirectedPathSet edges = enumerate_paths(g, 1);
    SparseOperator op;
    op.dim = static_cast<int>(edges.size());
    op.tag = "dB1";
    op.row_ptr.assign(op.dim + 1, 0);
    std::array<int, 2> key;
    for (size_t r = 0; r < edges.size(); ++r) {
        auto p = edges.path(r);
        const int i = p[0], j = p[1];
        long long row_entries = 0;
        for (int l : g.neighbors(j)) {
            if (l == i || !g.has_edge(i, l)) continue;  // keep only triangle steps
            key = {j, l};
            op.col.push_back(static_cast<int>(*edges.index_of({key.data(), 2})));
            op.val.push_back(1.0);
            ++row_entries;
        }
        op.row_ptr[r + 1] = op.row_ptr[r] + row_entries;
    }
    return op;
}

SparseOperator build_delta_b2(const Graph& g) {
    DirectedPathSet edges = enumerate_paths(g, 1);
    SparseOperator op;
    op.dim = static_cast<int>(edges.size());
    op.tag = "dB2";
    op.row_ptr.assign(op.dim + 1, 0);
    std::array<int, 2> key;
    for (size_t r = 0; r < edges.size(); ++r) {
        auto p = edges.path(r);
        const int i = p[0], j = p[1];
        const auto& ni = g.neighbors(i);
        const auto& nj = g.neighbors(j);
        long long row_entries = 0;
        auto a = ni.begin();
        auto b = nj.begin();
        while (a != ni.end() && b != nj.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else {
                key = {*a, i};  // column k->i for each common neighbor k
                op.col.push_back(static_cast<int>(*edges.index_of({key.data(), 2})));
                op.val.push_back(1.0);
                ++row_entries;
                ++a;
                ++b;
            }
        }
        op.row_ptr[r + 1] = op.row_ptr[r] + row_entries;
    }
    // columns within a row are already sorted: k ascends and columns order by (k, i)
    return op;
}

SparseOperator build_d_delta(const Graph& g) {
    EdgeTriangleCounts tri = triangles_per_edge(g);
    SparseOperator op;
    op.dim = static_cast<int>(tri.count.size());
    op.tag = "D_delta";
    op.row_ptr.assign(op.dim + 1, 0);
    for (int r = 0; r < op.dim; ++r) {
        if (tri.count[r] != 0) {
            op.col.push_back(r);
            op.val.push_back(static_cast<double>(tri.count[r]));
        }
        op.row_ptr[r + 1] = static_cast<long long>(op.col.size());
    }
    return op;
}

namespace {

SparseOperator subtract_structural(const SparseOperator& a, const SparseOperator& b, std::string tag) {
    std::vector<std::tuple<int, int, double>> triplets;
    for (int r = 0; r < a.dim; ++r) {
        for (long long k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k)
            triplets.emplace_back(r, a.col[k], a.val[k]);
        for (long long k = b.row_ptr[r]; k < b.row_ptr[r + 1]; ++k)
            triplets.emplace_back(r, b.col[k], -b.val[k]);
    }
    return SparseOperator::from_triplets(a.dim, std::move(triplets), std::move(tag));
}

}  // namespace

ReducedM assemble_m(const Graph& g) {
    ReducedM m;
    m.b1 = build_b(g, 1);
    m.delta_b2 = build_delta_b2(g);
    m.b1_minus_delta_b1 = subtract_structural(m.b1, build_delta_b1(g), "B1-dB1");
    EdgeTriangleCounts tri = triangles_per_edge(g);
    m.triangle_diag.assign(tri.count.begin(), tri.count.end());
    m.block = m.b1.dim;
    return m;
}

void ReducedM::apply(const double* x, double* y) const {
    const int b = block;
    const double* x1 = x;
    const double* x2 = x + b;
    const double* x3 = x + 2 * b;
    const double* x4 = x + 3 * b;
    std::vector<double> tmp(b);
    b1.apply(x1, y);
    delta_b2.apply(x2, tmp.data());
    for (int i = 0; i < b; ++i) y[i] -= tmp[i];
    for (int i = 0; i < b; ++i) y[i] += (triangle_diag[i] - 1.0) * x3[i];
    b1_minus_delta_b1.apply(x4, tmp.data());
    for (int i = 0; i < b; ++i) y[i] += tmp[i];
    std::copy(x1, x1 + b, y + b);
    std::copy(x2, x2 + b, y + 2 * b);
    std::copy(x3, x3 + b, y + 3 * b);
}

SparseOperator assemble_m_explicit(const Graph& g) {
    ReducedM m = assemble_m(g);
    const int b = m.block;
    std::vector<std::tuple<int, int, double>> triplets;
    auto add_block = [&](const SparseOperator& op, int row0, int col0, double scale) {
        for (int r = 0; r < op.dim; ++r)
            for (long long k = op.row_ptr[r]; k < op.row_ptr[r + 1]; ++k)
                triplets.emplace_back(row0 + r, col0 + op.col[k], scale * op.val[k]);
    };
    add_block(m.b1, 0, 0, 1.0);
    add_block(m.delta_b2, 0, b, -1.0);
    for (int i = 0; i < b; ++i) triplets.emplace_back(i, 2 * b + i, m.triangle_diag[i] - 1.0);
    add_block(m.b1_minus_delta_b1, 0, 3 * b, 1.0);
    for (int i = 0; i < b; ++i) {
        triplets.emplace_back(b + i, i, 1.0);
        triplets.emplace_back(2 * b + i, b + i, 1.0);
        triplets.emplace_back(3 * b + i, 2 * b + i, 1.0);
    }
    return SparseOperator::from_triplets(4 * b, std::move(triplets), "M");
}

LinOp as_linop(const ReducedM& m) {
    LinOp lo;
    lo.dim = m.dim();
    lo.object = &m;
    lo.apply_fn = [](const void* obj, const double* x, double* y) {
        static_cast<const ReducedM*>(obj)->apply(x, y);
    };
    return lo;
}

}  // namespace perco
