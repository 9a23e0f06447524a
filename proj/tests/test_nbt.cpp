#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "perco/generators.hpp"
#include "perco/nbt.hpp"
#include "perco/rng.hpp"

using namespace perco;

namespace {

// direct evaluation of the defining entry rule over all path pairs: entry
// (p, q) is 1 iff q is p shifted by one and the chained tuple has g+2
// distinct nodes with consecutive adjacency
std::vector<double> naive_b_dense(const Graph& g, int order) {
    DirectedPathSet paths = enumerate_paths(g, order);
    const size_t n = paths.size();
    const int len = order + 1;
    std::vector<double> dense(n * n, 0.0);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            auto p = paths.path(r);
            auto q = paths.path(c);
            bool shift = true;
            for (int k = 0; k + 1 < len; ++k)
                if (p[k + 1] != q[k]) shift = false;
            if (!shift) continue;
            if (q[len - 1] == p[0]) continue;
            bool fresh = true;
            for (int k = 0; k < len; ++k)
                if (p[k] == q[len - 1]) fresh = false;
            if (order >= 1 && !fresh) continue;
            if (order == 0 && !g.has_edge(p[0], q[0])) continue;
            dense[r * n + c] = 1.0;
        }
    return dense;
}

}  // namespace

TEST_CASE("enumerate_paths counts") {
    Graph k3 = ring(3);
    CHECK(enumerate_paths(k3, 2).size() == 6);
    CHECK(enumerate_paths(k3, 0).size() == 3);

    for (uint64_t seed = 0; seed < 4; ++seed) {
        Graph g = oracle::er_graph(15, 0.25, seed);
        CHECK(enumerate_paths(g, 1).size() == static_cast<size_t>(2 * g.edge_count()));
    }

    CHECK(enumerate_paths(ring(5), 3).size() == 10);
    CHECK(enumerate_paths(ring(5), 5).size() == 0);  // only 5 distinct nodes
}

TEST_CASE("enumerate_paths tuples are valid, distinct and ordered") {
    Graph g = oracle::er_graph(12, 0.3, 5);
    DirectedPathSet paths = enumerate_paths(g, 3);
    for (size_t r = 0; r < paths.size(); ++r) {
        auto p = paths.path(r);
        std::set<int> uniq(p.begin(), p.end());
        CHECK(uniq.size() == p.size());
        for (size_t k = 0; k + 1 < p.size(); ++k) CHECK(g.has_edge(p[k], p[k + 1]));
        if (r > 0) {
            auto prev = paths.path(r - 1);
            CHECK(std::lexicographical_compare(prev.begin(), prev.end(), p.begin(), p.end()));
        }
        CHECK(paths.index_of(p) == r);
    }
}

TEST_CASE("enumerate_paths cap guardrail") {
    Graph g = oracle::er_graph(14, 0.5, 2);
    CHECK_THROWS_AS(enumerate_paths(g, 4, 100), PathCapExceeded);
}

TEST_CASE("build_b reference cases") {
    // no length-3 path of 4 distinct nodes exists in a triangle
    SparseOperator b2k3 = build_b(ring(3), 2);
    CHECK(b2k3.dim == 6);
    CHECK(b2k3.nnz() == 0);

    // directed 5-cycles: every row has exactly one entry
    SparseOperator b1r5 = build_b(ring(5), 1);
    CHECK(b1r5.dim == 10);
    for (int r = 0; r < b1r5.dim; ++r) CHECK(b1r5.row_ptr[r + 1] - b1r5.row_ptr[r] == 1);

    // unique extension per length-2 path in K4: a permutation matrix
    Graph k4 = Graph::from_edge_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    SparseOperator b2k4 = build_b(k4, 2);
    CHECK(b2k4.dim == 24);
    CHECK(b2k4.nnz() == 24);
    std::vector<int> col_hits(24, 0);
    for (int r = 0; r < 24; ++r) {
        CHECK(b2k4.row_ptr[r + 1] - b2k4.row_ptr[r] == 1);
        ++col_hits[b2k4.col[r]];
    }
    for (int hits : col_hits) CHECK(hits == 1);
}

TEST_CASE("order zero reproduces the adjacency matrix") {
    for (uint64_t seed = 0; seed < 4; ++seed) {
        Graph g = oracle::er_graph(12, 0.3, seed);
        SparseOperator b0 = build_b(g, 0);
        std::vector<double> dense = b0.to_dense();
        for (int i = 0; i < g.node_count(); ++i)
            for (int j = 0; j < g.node_count(); ++j)
                CHECK(dense[static_cast<size_t>(i) * g.node_count() + j] ==
                      (g.has_edge(i, j) ? 1.0 : 0.0));
    }
}

TEST_CASE("build_b rows decode to valid chained paths") {
    Graph g = oracle::er_graph(12, 0.3, 7);
    for (int order : {1, 2, 3}) {
        DirectedPathSet paths = enumerate_paths(g, order);
        SparseOperator b = build_b(g, order);
        for (int r = 0; r < b.dim; ++r) {
            auto p = paths.path(r);
            for (long long k = b.row_ptr[r]; k < b.row_ptr[r + 1]; ++k) {
                auto q = paths.path(b.col[k]);
                for (int i = 0; i + 1 <= order; ++i) CHECK(p[i + 1] == q[i]);
                std::set<int> all(p.begin(), p.end());
                all.insert(q.begin(), q.end());
                CHECK(all.size() == static_cast<size_t>(order + 2));
                CHECK(g.has_edge(q[order - 1], q[order]));
            }
        }
    }
}

TEST_CASE("build_b agrees with the entry-rule evaluation") {
    for (uint64_t seed = 0; seed < 3; ++seed) {
        Graph g = oracle::er_graph(10, 0.3, seed);
        for (int order : {0, 1, 2, 3})
            CHECK(build_b(g, order).to_dense() == naive_b_dense(g, order));
    }
}

TEST_CASE("line-graph construction matches direct path extension") {
    CHECK(build_via_line_graph(ring(5), 1).to_dense() == build_b(ring(5), 1).to_dense());
    CHECK(build_via_line_graph(ring(3), 2).nnz() == 0);
    for (uint64_t seed = 0; seed < 4; ++seed) {
        Graph g = oracle::er_graph(12, 0.3, seed);
        for (int order : {1, 2, 3})
            CHECK(build_via_line_graph(g, order).to_dense() == build_b(g, order).to_dense());
    }
}

TEST_CASE("delta_b1 reference cases and domination") {
    CHECK(build_delta_b1(ring(6)).nnz() == 0);  // triangle-free

    Graph k3 = ring(3);
    CHECK(build_delta_b1(k3).to_dense() == build_b(k3, 1).to_dense());

    Graph k4 = Graph::from_edge_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(build_delta_b1(k4).nnz() == 24);

    for (uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = oracle::er_graph(14, 0.3, seed);
        std::vector<double> d1 = build_delta_b1(g).to_dense();
        std::vector<double> b1 = build_b(g, 1).to_dense();
        for (size_t i = 0; i < d1.size(); ++i) CHECK(d1[i] <= b1[i]);
    }
}

TEST_CASE("delta_b2 reference cases and row sums") {
    CHECK(build_delta_b2(ring(6)).nnz() == 0);

    Graph k3 = ring(3);
    DirectedPathSet edges = enumerate_paths(k3, 2 - 1);
    SparseOperator d2 = build_delta_b2(k3);
    CHECK(d2.nnz() == 6);
    for (int r = 0; r < d2.dim; ++r) {
        CHECK(d2.row_ptr[r + 1] - d2.row_ptr[r] == 1);
        auto p = edges.path(r);          // edge i->j
        auto q = edges.path(d2.col[r]);  // must be k->i with k the third node
        CHECK(q[1] == p[0]);
        CHECK(q[0] != p[0]);
        CHECK(q[0] != p[1]);
    }

    for (uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = oracle::er_graph(13, 0.3, seed);
        SparseOperator d = build_delta_b2(g);
        EdgeTriangleCounts tri = triangles_per_edge(g);
        for (int r = 0; r < d.dim; ++r)
            CHECK(d.row_ptr[r + 1] - d.row_ptr[r] == tri.count[r]);
    }
}

TEST_CASE("d_delta diagonal") {
    Graph k3 = ring(3);
    std::vector<double> dk3 = build_d_delta(k3).to_dense();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(dk3[static_cast<size_t>(i) * 6 + j] == (i == j ? 1.0 : 0.0));

    CHECK(build_d_delta(ring(6)).nnz() == 0);

    Graph k4 = Graph::from_edge_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    SparseOperator dd = build_d_delta(k4);
    CHECK(dd.nnz() == 12);
    for (long long k = 0; k < dd.nnz(); ++k) CHECK(dd.val[k] == 2.0);
}

TEST_CASE("reduced matrix blocks on reference graphs") {
    // triangle-free ring: the top row collapses to [B1, 0, -I, B1]
    Graph r6 = ring(6);
    ReducedM m = assemble_m(r6);
    CHECK(m.delta_b2.nnz() == 0);
    for (double d : m.triangle_diag) CHECK(d == 0.0);
    CHECK(m.b1_minus_delta_b1.to_dense() == m.b1.to_dense());

    // K3: D_delta - I and B1 - dB1 blocks vanish
    ReducedM mk3 = assemble_m(ring(3));
    for (double d : mk3.triangle_diag) CHECK(d == 1.0);
    CHECK(mk3.b1_minus_delta_b1.nnz() == 0);
}

TEST_CASE("implicit and explicit M agree") {
    for (uint64_t seed = 0; seed < 4; ++seed) {
        Graph g = oracle::er_connected(10, 0.35, seed);
        ReducedM m = assemble_m(g);
        SparseOperator explicit_m = assemble_m_explicit(g);
        CHECK(explicit_m.dim == m.dim());
        Rng rng(seed);
        std::vector<double> x(m.dim()), y1(m.dim()), y2(m.dim());
        for (double& xi : x) xi = rng.next_unit() - 0.5;
        m.apply(x.data(), y1.data());
        explicit_m.apply(x.data(), y2.data());
        for (int i = 0; i < m.dim(); ++i) CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-14));
    }
}

TEST_CASE("karate path counts and M dimension") {
    Graph karate = parse_edge_list_file(std::string(PERCO_DATA_DIR) + "/karate.tsv");
    long long p2_from_degrees = 0;
    for (int v = 0; v < karate.node_count(); ++v) {
        long long d = karate.degree(v);
        p2_from_degrees += d * (d - 1);
    }
    CHECK(p2_from_degrees == 1056);
    CHECK(enumerate_paths(karate, 2).size() == 1056);
    CHECK(assemble_m(karate).dim() == 8 * 78);
}

TEST_CASE("coordinate dump round-trips entries") {
    Graph g = oracle::er_graph(8, 0.4, 3);
    SparseOperator b1 = build_b(g, 1);
    std::string text = b1.to_coordinate_text();
    size_t lines = std::count(text.begin(), text.end(), '\n');
    CHECK(lines == static_cast<size_t>(b1.nnz()));
}
