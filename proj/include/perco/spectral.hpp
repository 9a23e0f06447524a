#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "perco/graph.hpp"
#include "perco/sparse.hpp"

namespace perco {

enum class SpectralMethod {
    power_shifted,
    dense_oracle,
    krylov_m,
    declared_zero_dag,
    declared_one_cycles
};

const char* to_string(SpectralMethod m);

struct SpectralResult {
    double radius = 0.0;
    long iterations = 0;
    bool converged = false;
    double residual = 0.0;
    SpectralMethod method = SpectralMethod::power_shifted;
};

struct NonConvergence : std::runtime_error {
    SpectralResult partial;
    explicit NonConvergence(const SpectralResult& r)
        : std::runtime_error("spectral iteration did not converge"), partial(r) {}
};

/// Spectral radius of a nonnegative operator by power iteration on op + I.
/// The shift breaks periodicity (e.g. B1 of a ring is a permutation) and adds
/// exactly 1 to every eigenvalue; the reported radius is rho(op+I) - 1.
/// Convergence: successive Rayleigh quotients within tol. Never throws on
/// non-convergence; the caller inspects `converged`.
SpectralResult power_spectral_radius(const LinOp& op, double tol = 1e-10, long max_iter = 100000);

/// true iff the directed graph encoded by the 0/1 operator is acyclic
bool dag_check(const SparseOperator& op);

/// true iff the digraph has at least one cycle and every strongly connected
/// component is a lone simple cycle. An irreducible 0/1 matrix has spectral
/// radius 1 exactly when it permutes a cycle, so this certifies radius == 1
/// without iteration (rings and triangle rings hit this case).
bool cycle_only_recurrence(const SparseOperator& op);

/// Exact-first radius of a 0/1 operator: DAGs are declared zero, cycle-only
/// recurrence is declared one, anything else runs shifted power iteration.
SpectralResult spectral_radius_01(const SparseOperator& op, double tol = 1e-10,
                                  long max_iter = 100000);

/// Full complex spectrum of a dense row-major matrix, sorted by modulus
/// descending, then real part, then imaginary part descending.
std::vector<std::complex<double>> dense_eigenvalues(const std::vector<double>& dense, int dim,
                                                    int dim_cap = 2000);

/// Largest eigenvalue of B2 through the reduced matrix M: restarted Arnoldi
/// on the implicit operator; accepts a real nonnegative dominant value of
/// modulus > 1 + 1e-6 (the exceptional eigenvalues of M all have modulus 1),
/// otherwise falls back to shifted power iteration on the explicit B2.
SpectralResult spectral_radius_of_b2_via_m(const Graph& g, double tol = 1e-10,
                                           long max_iter = 100000, int krylov_dim = 30,
                                           size_t path_cap = 10'000'000);

}  // namespace perco
