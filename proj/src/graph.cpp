#include "perco/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace perco {

Graph Graph::from_edge_pairs(int node_count, const std::vector<std::pair<int, int>>& pairs) {
    Graph g;
    g.adj_.assign(node_count, {});
    for (auto [u, v] : pairs) {
        if (u == v) continue;
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    long long half_degree_sum = 0;
    for (auto& row : g.adj_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        half_degree_sum += static_cast<long long>(row.size());
    }
    g.edge_count_ = half_degree_sum / 2;
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

bool Graph::connected() const {
    if (adj_.empty()) return true;
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj_[x]) {
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == node_count();
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int u = 0; u < node_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

bool parse_int_token(const std::string& tok, long long& out) {
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    auto res = std::from_chars(begin, end, out);
    return res.ec == std::errc() && res.ptr == end;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::unordered_map<long long, int> label_to_id;
    std::vector<std::pair<int, int>> pairs;
    std::string line;
    long long line_no = 0;
    bool saw_data = false;
    while (std::getline(in, line)) {
        ++line_no;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        char c = line[first];
        if (c == '%' || c == '#') continue;
        std::istringstream tokens(line);
        std::string a, b;
        tokens >> a >> b;
        long long la, lb;
        if (b.empty() || !parse_int_token(a, la) || !parse_int_token(b, lb))
            throw ParseError("edge list parse error at line " + std::to_string(line_no) +
                             ": expected two integer node labels");
        saw_data = true;
        for (long long label : {la, lb})
            label_to_id.try_emplace(label, static_cast<int>(label_to_id.size()));
        pairs.emplace_back(label_to_id.at(la), label_to_id.at(lb));
    }
    if (!saw_data) throw ParseError("edge list is empty");
    return Graph::from_edge_pairs(static_cast<int>(label_to_id.size()), pairs);
}

Graph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open edge list file: " + path);
    return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
    // node-introduction order: ascending max, descending min. A node pair
    // introduced together ("k k+1" lines) must precede the other edges of
    // k+1, so labels appear in ascending sequence and reparsing reproduces
    // the same ids.
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first > b.first;
    });
    std::string out;
    for (auto [u, v] : edges) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

LccResult largest_connected_component(const Graph& g) {
    const int n = g.node_count();
    if (n == 0) throw std::invalid_argument("largest_connected_component: empty graph");
    std::vector<int> component(n, -1);
    int best_component = -1;
    int best_size = 0;
    int components = 0;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (component[start] != -1) continue;
        int id = components++;
        int size = 0;
        stack.push_back(start);
        component[start] = id;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++size;
            for (int y : g.neighbors(x)) {
                if (component[y] == -1) {
                    component[y] = id;
                    stack.push_back(y);
                }
            }
        }
        // components are discovered in order of their smallest node id, so a
        // strict comparison breaks size ties toward the smaller original id
        if (size > best_size) {
            best_size = size;
            best_component = id;
        }
    }
    LccResult result;
    result.original_ids.reserve(best_size);
    std::vector<int> new_id(n, -1);
    for (int v = 0; v < n; ++v) {
        if (component[v] == best_component) {
            new_id[v] = static_cast<int>(result.original_ids.size());
            result.original_ids.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < n; ++v) {
        if (new_id[v] == -1) continue;
        for (int w : g.neighbors(v))
            if (v < w) pairs.emplace_back(new_id[v], new_id[w]);
    }
    result.graph = Graph::from_edge_pairs(best_size, pairs);
    return result;
}

DegreeStats degree_stats(const Graph& g) {
    const int n = g.node_count();
    if (n == 0) throw std::invalid_argument("degree_stats: empty graph");
    long long sum = 0, sum_sq = 0;
    for (int v = 0; v < n; ++v) {
        long long d = g.degree(v);
        sum += d;
        sum_sq += d * d;
    }
    DegreeStats s;
    s.mean_degree = static_cast<double>(sum) / n;
    s.mean_square_degree = static_cast<double>(sum_sq) / n;
    s.reduction_factor = sum == 0 ? 0.0 : static_cast<double>(sum_sq) / (4.0 * static_cast<double>(sum));
    return s;
}

EdgeTriangleCounts triangles_per_edge(const Graph& g) {
    EdgeTriangleCounts t;
    t.offset.assign(g.node_count() + 1, 0);
    for (int v = 0; v < g.node_count(); ++v) t.offset[v + 1] = t.offset[v] + g.degree(v);
    t.count.resize(static_cast<size_t>(t.offset.back()));
    for (int u = 0; u < g.node_count(); ++u) {
        const auto& nu = g.neighbors(u);
        for (size_t k = 0; k < nu.size(); ++k) {
            const auto& nv = g.neighbors(nu[k]);
            int common = 0;
            auto a = nu.begin();
            auto b = nv.begin();
            while (a != nu.end() && b != nv.end()) {
                if (*a < *b) ++a;
                else if (*b < *a) ++b;
                else { ++common; ++a; ++b; }
            }
            t.count[static_cast<size_t>(t.offset[u]) + k] = common;
        }
    }
    return t;
}

long long EdgeTriangleCounts::index(const Graph& g, int u, int v) const {
    const auto& row = g.neighbors(u);
    auto it = std::lower_bound(row.begin(), row.end(), v);
    return offset[u] + (it - row.begin());
}

}  // namespace perco
