#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>

#include "perco/graph.hpp"

namespace perco {

inline constexpr size_t kDefaultPathCap = 10'000'000;

struct PathCapExceeded : std::runtime_error {
    explicit PathCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Indexed set of length-g directed paths (g+1 distinct, consecutively
/// adjacent nodes), stored flat in lexicographic tuple order. For g=0 this is
/// the node set, for g=1 the 2E directed edges.
class DirectedPathSet {
public:
    DirectedPathSet(int order, std::vector<int> flat)
        : order_(order), flat_(std::move(flat)) {}

    int order() const { return order_; }
    int tuple_len() const { return order_ + 1; }
    size_t size() const { return flat_.empty() ? 0 : flat_.size() / tuple_len(); }

    std::span<const int> path(size_t row) const {
        return {flat_.data() + row * tuple_len(), static_cast<size_t>(tuple_len())};
    }

    /// lexicographic binary search; nullopt when the tuple is not a path
    std::optional<size_t> index_of(std::span<const int> tuple) const;

private:
    int order_;
    std::vector<int> flat_;
};

/// Depth-first path enumeration, deterministic lexicographic output.
/// Throws PathCapExceeded when more than `cap` paths would be produced.
DirectedPathSet enumerate_paths(const Graph& g, int order, size_t cap = kDefaultPathCap);

}  // namespace perco
