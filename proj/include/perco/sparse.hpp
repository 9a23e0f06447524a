#pragma once

#include <string>
#include <tuple>
#include <vector>

namespace perco {

/// Square sparse matrix in CSR form. Column indices are sorted per row and
/// explicit zeros are dropped. Immutable once built; apply() is pure.
struct SparseOperator {
    int dim = 0;
    std::vector<long long> row_ptr;  // dim + 1
    std::vector<int> col;
    std::vector<double> val;
    std::string tag;

    long long nnz() const { return row_ptr.empty() ? 0 : row_ptr.back(); }

    /// y = A x
    void apply(const double* x, double* y) const;

    static SparseOperator from_triplets(int dim, std::vector<std::tuple<int, int, double>> triplets,
                                        std::string tag = {});

    /// row-major dense copy (small matrices / oracles)
    std::vector<double> to_dense() const;

    /// "row col value" per line, for cross-implementation diffing
    std::string to_coordinate_text() const;
};

/// minimal type-erased linear operator: enough for iterative eigensolvers
struct LinOp {
    int dim = 0;
    const void* object = nullptr;
    void (*apply_fn)(const void*, const double*, double*) = nullptr;

    void apply(const double* x, double* y) const { apply_fn(object, x, y); }
};

LinOp as_linop(const SparseOperator& op);

/// densify any operator by applying it to basis vectors (test/oracle use)
std::vector<double> to_dense(const LinOp& op);

}  // namespace perco
