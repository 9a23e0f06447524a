#pragma once

#include <cstdint>

#include "perco/graph.hpp"

namespace perco {

struct ForestFireConfig {
    int node_count = 0;
    double burning_probability = 0.0;  // q in [0,1)
    uint64_t seed = 0;
};

struct BaConfig {
    int node_count = 0;
    int edges_per_new_node = 1;  // m
    uint64_t seed = 0;
};

/// cycle graph C_n
Graph ring(int n);

/// Ring of k pendant triangles: cycle c_0..c_{k-1} with a private triangle
/// {c_i, a_i, b_i} hanging off every ring vertex. N = 3k, E = 4k; ring
/// vertices have degree 4, triangle vertices degree 2.
Graph triangle_ring(int k);

/// Forest fire growth: each new node links a uniform ambassador, then burns
/// through not-yet-linked neighbors with probability q per extra link,
/// recursing depth-first through the nodes it linked. Same seed, larger
/// node_count extends the smaller graph (the generator consumes randomness
/// strictly per new node).
Graph forest_fire(const ForestFireConfig& cfg);

/// Preferential attachment from a clique seed on m+1 nodes; each new node
/// attaches m edges without duplicate targets within one step.
Graph barabasi_albert(const BaConfig& cfg);

}  // namespace perco
