#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace perco {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Simple undirected graph. Neighbor lists are sorted and duplicate-free,
/// self-loops are impossible by construction. Immutable after construction,
/// safe for concurrent reads.
class Graph {
public:
    Graph() = default;

    /// Builds the simplified graph from raw pairs: self-loops dropped,
    /// duplicate and reverse-duplicate edges collapsed.
    static Graph from_edge_pairs(int node_count, const std::vector<std::pair<int, int>>& pairs);

    int node_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    bool connected() const;

    /// undirected edges, u < v, lexicographic order
    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> adj_;
    long long edge_count_ = 0;
};

struct DegreeStats {
    double mean_degree = 0.0;         // <d>
    double mean_square_degree = 0.0;  // <d^2>
    double reduction_factor = 0.0;    // <d^2> / (4<d>)
};

/// Triangle count per directed edge, indexed in lexicographic directed-edge
/// order (source ascending, then neighbor ascending). count[idx(i,j)] equals
/// |N_i ∩ N_j| and is symmetric under direction reversal.
struct EdgeTriangleCounts {
    std::vector<long long> offset;  // per node, start of its out-edges
    std::vector<int> count;

    long long index(const Graph& g, int u, int v) const;
    int at(const Graph& g, int u, int v) const { return count[index(g, u, v)]; }
};

struct LccResult {
    Graph graph;
    std::vector<int> original_ids;  // new id -> original id
};

/// Parses whitespace-separated edge lists ('%' and '#' comment lines, extra
/// columns ignored). Labels are compacted to 0..N-1 in first-appearance order.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_file(const std::string& path);

/// One "u v" line per edge, u < v, in node-introduction order: parsing the
/// output reproduces identical labels (nodes of degree zero are not
/// representable in an edge list and are dropped).
std::string serialize_edge_list(const Graph& g);

LccResult largest_connected_component(const Graph& g);
DegreeStats degree_stats(const Graph& g);
EdgeTriangleCounts triangles_per_edge(const Graph& g);

}  // namespace perco
