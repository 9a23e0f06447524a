#include "perco/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "perco/nbt.hpp"

namespace perco {

const char* to_string(SpectralMethod m) {
    switch (m) {
        case SpectralMethod::power_shifted: return "power_shifted";
        case SpectralMethod::dense_oracle: return "dense_oracle";
        case SpectralMethod::krylov_m: return "krylov_m";
        case SpectralMethod::declared_zero_dag: return "declared_zero_dag";
        case SpectralMethod::declared_one_cycles: return "declared_one_cycles";
    }
    return "?";
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

SpectralResult power_spectral_radius(const LinOp& op, double tol, long max_iter) {
    SpectralResult res;
    res.method = SpectralMethod::power_shifted;
    const int n = op.dim;
    if (n == 0) {
        res.converged = true;
        return res;
    }
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    auto shifted = [&](const std::vector<double>& x, std::vector<double>& out) {
        op.apply(x.data(), out.data());
        for (int i = 0; i < n; ++i) out[i] += x[i];
    };
    shifted(v, y);
    double rayleigh = dot(v, y) / dot(v, v);
    // successive Rayleigh quotients can agree by coincidence long before the
    // iterate is an eigenvector, so convergence also demands a small residual
    const double residual_cap = std::sqrt(tol);
    for (long it = 1; it <= max_iter; ++it) {
        double nrm = norm(y);
        if (nrm == 0.0) {
            // op+I maps v to zero only if op has negative entries; nonnegative
            // operators cannot get here, but report a clean zero anyway
            res.radius = 0.0;
            res.iterations = it;
            res.converged = true;
            return res;
        }
        for (int i = 0; i < n; ++i) v[i] = y[i] / nrm;
        shifted(v, y);
        double next = dot(v, y) / dot(v, v);
        if (std::abs(next - rayleigh) <= tol) {
            double rnorm = 0.0;
            for (int i = 0; i < n; ++i) {
                double r = y[i] - next * v[i];
                rnorm += r * r;
            }
            rnorm = std::sqrt(rnorm);
            if (rnorm <= residual_cap * std::max(1.0, std::abs(next))) {
                res.radius = std::max(next - 1.0, 0.0);
                res.iterations = it;
                res.converged = true;
                res.residual = rnorm;
                return res;
            }
        }
        rayleigh = next;
    }
    res.radius = std::max(rayleigh - 1.0, 0.0);
    res.iterations = max_iter;
    res.converged = false;
    res.residual = std::numeric_limits<double>::quiet_NaN();
    return res;
}

bool dag_check(const SparseOperator& op) {
    const int n = op.dim;
    std::vector<int> indegree(n, 0);
    for (long long k = 0; k < op.nnz(); ++k) ++indegree[op.col[k]];
    std::vector<int> queue;
    queue.reserve(n);
    for (int v = 0; v < n; ++v)
        if (indegree[v] == 0) queue.push_back(v);
    size_t head = 0;
    int removed = 0;
    while (head < queue.size()) {
        int v = queue[head++];
        ++removed;
        for (long long k = op.row_ptr[v]; k < op.row_ptr[v + 1]; ++k)
            if (--indegree[op.col[k]] == 0) queue.push_back(op.col[k]);
    }
    return removed == n;
}

namespace {

// iterative Tarjan strongly-connected components; returns component id per node
std::vector<int> tarjan_scc(const SparseOperator& op, int& component_count) {
    const int n = op.dim;
    std::vector<int> comp(n, -1), low(n), disc(n, -1), scc_stack;
    std::vector<char> on_stack(n, 0);
    int timer = 0;
    component_count = 0;
    struct Frame {
        int node;
        long long edge;
    };
    std::vector<Frame> call;
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        call.push_back({root, op.row_ptr[root]});
        disc[root] = low[root] = timer++;
        scc_stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.edge < op.row_ptr[f.node + 1]) {
                int next = op.col[f.edge++];
                if (disc[next] == -1) {
                    disc[next] = low[next] = timer++;
                    scc_stack.push_back(next);
                    on_stack[next] = 1;
                    call.push_back({next, op.row_ptr[next]});
                } else if (on_stack[next]) {
                    low[f.node] = std::min(low[f.node], disc[next]);
                }
            } else {
                if (low[f.node] == disc[f.node]) {
                    int id = component_count++;
                    for (;;) {
                        int v = scc_stack.back();
                        scc_stack.pop_back();
                        on_stack[v] = 0;
                        comp[v] = id;
                        if (v == f.node) break;
                    }
                }
                int done = f.node;
                call.pop_back();
                if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[done]);
            }
        }
    }
    return comp;
}

}  // namespace

bool cycle_only_recurrence(const SparseOperator& op) {
    int count = 0;
    std::vector<int> comp = tarjan_scc(op, count);
    std::vector<int> size(count, 0);
    for (int v = 0; v < op.dim; ++v) ++size[comp[v]];
    bool found_cycle = false;
    for (int v = 0; v < op.dim; ++v) {
        int internal = 0;
        for (long long k = op.row_ptr[v]; k < op.row_ptr[v + 1]; ++k)
            if (comp[op.col[k]] == comp[v]) ++internal;
        if (size[comp[v]] == 1) {
            if (internal > 0) found_cycle = true;  // self-loop
        } else {
            if (internal != 1) return false;  // strongly connected, so internal >= 1
            found_cycle = true;
        }
    }
    return found_cycle;
}

SpectralResult spectral_radius_01(const SparseOperator& op, double tol, long max_iter) {
    SpectralResult res;
    if (dag_check(op)) {
        res.method = SpectralMethod::declared_zero_dag;
        res.converged = true;
        return res;
    }
    if (cycle_only_recurrence(op)) {
        res.method = SpectralMethod::declared_one_cycles;
        res.radius = 1.0;
        res.converged = true;
        return res;
    }
    return power_spectral_radius(as_linop(op), tol, max_iter);
}

std::vector<std::complex<double>> dense_eigenvalues(const std::vector<double>& dense, int dim,
                                                    int dim_cap) {
    if (dim > dim_cap)
        throw std::invalid_argument("dense_eigenvalues: dimension " + std::to_string(dim) +
                                    " exceeds cap " + std::to_string(dim_cap));
    if (dim == 0) return {};
    Eigen::MatrixXd a(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) a(r, c) = dense[static_cast<size_t>(r) * dim + c];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("dense_eigenvalues: eigensolver failed");
    std::vector<std::complex<double>> eig(dim);
    for (int i = 0; i < dim; ++i) eig[i] = solver.eigenvalues()[i];
    std::sort(eig.begin(), eig.end(), [](const auto& a, const auto& b) {
        double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma > mb;
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
    return eig;
}

namespace {

struct ArnoldiOutcome {
    std::complex<double> dominant{0.0, 0.0};
    double residual = std::numeric_limits<double>::infinity();
    long matvecs = 0;
    bool converged = false;
};

// restarted Arnoldi for the largest-modulus eigenvalue of a general operator
ArnoldiOutcome arnoldi_largest(const LinOp& op, int subspace, double tol, long max_matvecs) {
    ArnoldiOutcome out;
    const int n = op.dim;
    if (n == 0) {
        out.converged = true;
        return out;
    }
    const int m = std::min(subspace, n);
    std::vector<std::vector<double>> basis;  // m+1 vectors of size n
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m + 1, m);
    std::vector<double> v0(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> w(n);
    while (out.matvecs < max_matvecs) {
        basis.assign(1, v0);
        h.setZero();
        int built = 0;
        bool invariant = false;
        for (int j = 0; j < m; ++j) {
            op.apply(basis[j].data(), w.data());
            ++out.matvecs;
            // modified Gram-Schmidt with one re-orthogonalization pass
            for (int pass = 0; pass < 2; ++pass)
                for (int i = 0; i <= j; ++i) {
                    double c = dot(basis[i], w);
                    if (pass == 0) h(i, j) = c;
                    else h(i, j) += c;
                    for (int k = 0; k < n; ++k) w[k] -= c * basis[i][k];
                }
            double nrm = norm(w);
            h(j + 1, j) = nrm;
            built = j + 1;
            if (nrm <= 1e-14) {
                invariant = true;
                break;
            }
            std::vector<double> next(n);
            for (int k = 0; k < n; ++k) next[k] = w[k] / nrm;
            basis.push_back(std::move(next));
        }
        Eigen::MatrixXd hm = h.topLeftCorner(built, built);
        Eigen::EigenSolver<Eigen::MatrixXd> solver(hm, /*computeEigenvectors=*/true);
        if (solver.info() != Eigen::Success) return out;
        int pick = 0;
        for (int i = 1; i < built; ++i)
            if (std::abs(solver.eigenvalues()[i]) > std::abs(solver.eigenvalues()[pick])) pick = i;
        out.dominant = solver.eigenvalues()[pick];
        Eigen::VectorXcd s = solver.eigenvectors().col(pick);
        double tail = invariant ? 0.0 : h(built, built - 1) * std::abs(s[built - 1]);
        out.residual = tail;
        if (tail <= tol * std::max(1.0, std::abs(out.dominant))) {
            out.converged = true;
            return out;
        }
        // explicit restart with the real part of the dominant Ritz vector
        std::vector<double> restart(n, 0.0);
        for (int i = 0; i < built; ++i) {
            double c = s[i].real();
            for (int k = 0; k < n; ++k) restart[k] += c * basis[i][k];
        }
        double nrm = norm(restart);
        if (nrm <= 1e-14) {
            for (int i = 0; i < built; ++i) {
                double c = std::abs(s[i]);
                for (int k = 0; k < n; ++k) restart[k] += c * basis[i][k];
            }
            nrm = norm(restart);
            if (nrm <= 1e-14) return out;
        }
        for (int k = 0; k < n; ++k) v0[k] = restart[k] / nrm;
    }
    return out;
}

}  // namespace

SpectralResult spectral_radius_of_b2_via_m(const Graph& g, double tol, long max_iter,
                                           int krylov_dim, size_t path_cap) {
    SpectralResult res;
    if (g.edge_count() == 0) {
        res.method = SpectralMethod::declared_zero_dag;
        res.converged = true;
        return res;
    }
    ReducedM m = assemble_m(g);
    ArnoldiOutcome arn = arnoldi_largest(as_linop(m), krylov_dim, tol, max_iter);
    const double delta = 1e-6;
    const std::complex<double> theta = arn.dominant;
    bool real_dominant = std::abs(theta.imag()) <= 1e-8 * std::max(1.0, std::abs(theta.real()));
    if (arn.converged && real_dominant && theta.real() >= 0.0 && std::abs(theta) > 1.0 + delta) {
        res.radius = theta.real();
        res.iterations = arn.matvecs;
        res.converged = true;
        res.residual = arn.residual;
        res.method = SpectralMethod::krylov_m;
        return res;
    }
    // modulus <= 1+delta, complex-dominant oscillation, or non-convergence:
    // the M route cannot distinguish B2's radius from the exceptional values
    SparseOperator b2 = build_b(g, 2, path_cap);
    return spectral_radius_01(b2, tol, max_iter);
}

}  // namespace perco
