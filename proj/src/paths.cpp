#include "perco/paths.hpp"

#include <algorithm>

namespace perco {

std::optional<size_t> DirectedPathSet::index_of(std::span<const int> tuple) const {
    if (static_cast<int>(tuple.size()) != tuple_len()) return std::nullopt;
    size_t lo = 0, hi = size();
    while (lo < hi) {
        size_t mid = lo + (hi - lo) / 2;
        auto p = path(mid);
        if (std::lexicographical_compare(p.begin(), p.end(), tuple.begin(), tuple.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == size()) return std::nullopt;
    auto p = path(lo);
    if (!std::equal(p.begin(), p.end(), tuple.begin())) return std::nullopt;
    return lo;
}

DirectedPathSet enumerate_paths(const Graph& g, int order, size_t cap) {
    if (order < 0) throw std::invalid_argument("enumerate_paths: order must be >= 0");
    const int len = order + 1;
    std::vector<int> flat;
    size_t count = 0;
    auto emit = [&](const int* tuple) {
        if (++count > cap)
            throw PathCapExceeded("path enumeration exceeded cap of " + std::to_string(cap) +
                                  " paths at order " + std::to_string(order));
        flat.insert(flat.end(), tuple, tuple + len);
    };
    std::vector<int> stack_pos(len);
    std::vector<int> path(len);
    for (int start = 0; start < g.node_count(); ++start) {
        // iterative DFS; neighbor lists are sorted, so output is lexicographic
        int depth = 0;
        path[0] = start;
        stack_pos[0] = 0;
        if (len == 1) {
            emit(path.data());
            continue;
        }
        while (depth >= 0) {
            int last = path[depth];
            const auto& nbrs = g.neighbors(last);
            bool descended = false;
            for (int& i = stack_pos[depth]; i < static_cast<int>(nbrs.size());) {
                int next = nbrs[i++];
                bool used = false;
                for (int k = 0; k <= depth; ++k)
                    if (path[k] == next) {
                        used = true;
                        break;
                    }
                if (used) continue;
                path[depth + 1] = next;
                if (depth + 1 == len - 1) {
                    emit(path.data());
                } else {
                    stack_pos[depth + 1] = 0;
                    ++depth;
                    descended = true;
                    break;
                }
            }
            if (!descended) --depth;
        }
    }
    return DirectedPathSet(order, std::move(flat));
}

}  // namespace perco
