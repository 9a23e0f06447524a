#pragma once

#include "perco/graph.hpp"
#include "perco/paths.hpp"
#include "perco/sparse.hpp"

namespace perco {

/// g-th-order non-backtracking matrix over length-g directed paths: entry 1
/// where two paths chain into a length-(g+1) directed path of g+2 distinct
/// nodes. Order 0 is the adjacency matrix, order 1 the standard
/// non-backtracking matrix. Built by direct path extension.
SparseOperator build_b(const Graph& g, int order, size_t path_cap = kDefaultPathCap);

/// Independent construction of the same operator through the line-graph
/// route: take the line graph of the (order-1)-th path graph and delete all
/// edges lying on rotational length-(order+1) cycles. Quadratic-ish; meant as
/// a test oracle on small graphs.
SparseOperator build_via_line_graph(const Graph& g, int order);

/// Triangle-step selector: entry (i->j, j->l) of B1 kept only when (i,j,l)
/// is a triangle.
SparseOperator build_delta_b1(const Graph& g);

/// Triangle-return selector: entry (i->j, k->i) = 1 when (i,j,k) is a
/// triangle; row sums equal the per-edge triangle counts.
SparseOperator build_delta_b2(const Graph& g);

/// diagonal of per-directed-edge triangle counts
SparseOperator build_d_delta(const Graph& g);

/// Reduced 8E x 8E operator sharing the nonzero spectrum of the 2nd-order
/// non-backtracking matrix (up to the modulus-1 exceptional values). Stored
/// block-implicitly: top row [B1, -dB2, Dd-I, B1-dB1], three identity shifts
/// below; the full matrix is never materialized.
struct ReducedM {
    SparseOperator b1;
    SparseOperator delta_b2;
    SparseOperator b1_minus_delta_b1;
    std::vector<double> triangle_diag;  // D_delta diagonal
    int block = 0;                      // 2E

    int dim() const { return 4 * block; }
    void apply(const double* x, double* y) const;
};

ReducedM assemble_m(const Graph& g);

/// explicit CSR form of M (oracle/debug use only)
SparseOperator assemble_m_explicit(const Graph& g);

LinOp as_linop(const ReducedM& m);

}  // namespace perco
