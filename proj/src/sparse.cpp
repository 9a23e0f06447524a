#include "perco/sparse.hpp"

#include <algorithm>
#include <cstdio>

namespace perco {

void SparseOperator::apply(const double* x, double* y) const {
    for (int r = 0; r < dim; ++r) {
        double acc = 0.0;
        for (long long k = row_ptr[r]; k < row_ptr[r + 1]; ++k) acc += val[k] * x[col[k]];
        y[r] = acc;
    }
}

SparseOperator SparseOperator::from_triplets(int dim, std::vector<std::tuple<int, int, double>> triplets,
                                             std::string tag) {
    std::sort(triplets.begin(), triplets.end());
    SparseOperator op;
    op.dim = dim;
    op.tag = std::move(tag);
    op.row_ptr.assign(dim + 1, 0);
    op.col.reserve(triplets.size());
    op.val.reserve(triplets.size());
    for (size_t i = 0; i < triplets.size();) {
        auto [r, c, v] = triplets[i];
        double acc = v;
        size_t j = i + 1;
        while (j < triplets.size() && std::get<0>(triplets[j]) == r && std::get<1>(triplets[j]) == c)
            acc += std::get<2>(triplets[j++]);
        if (acc != 0.0) {
            op.col.push_back(c);
            op.val.push_back(acc);
            ++op.row_ptr[r + 1];
        }
        i = j;
    }
    for (int r = 0; r < dim; ++r) op.row_ptr[r + 1] += op.row_ptr[r];
    return op;
}

std::vector<double> SparseOperator::to_dense() const {
    std::vector<double> dense(static_cast<size_t>(dim) * dim, 0.0);
    for (int r = 0; r < dim; ++r)
        for (long long k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            dense[static_cast<size_t>(r) * dim + col[k]] = val[k];
    return dense;
}

std::string SparseOperator::to_coordinate_text() const {
    std::string out;
    char buf[64];
    for (int r = 0; r < dim; ++r)
        for (long long k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
            std::snprintf(buf, sizeof buf, "%d %d %.17g\n", r, col[k], val[k]);
            out += buf;
        }
    return out;
}

LinOp as_linop(const SparseOperator& op) {
    LinOp lo;
    lo.dim = op.dim;
    lo.object = &op;
    lo.apply_fn = [](const void* obj, const double* x, double* y) {
        static_cast<const SparseOperator*>(obj)->apply(x, y);
    };
    return lo;
}

std::vector<double> to_dense(const LinOp& op) {
    const int n = op.dim;
    std::vector<double> dense(static_cast<size_t>(n) * n, 0.0);
    std::vector<double> e(n, 0.0), y(n, 0.0);
    for (int j = 0; j < n; ++j) {
        e[j] = 1.0;
        op.apply(e.data(), y.data());
        for (int i = 0; i < n; ++i) dense[static_cast<size_t>(i) * n + j] = y[i];
        e[j] = 0.0;
    }
    return dense;
}

}  // namespace perco
