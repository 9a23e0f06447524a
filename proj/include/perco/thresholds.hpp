#pragma once

#include <vector>

#include "perco/graph.hpp"
#include "perco/paths.hpp"
#include "perco/spectral.hpp"

namespace perco {

/// p_c^(g) = 1/lambda_B^(g), clamped into (0,1]. When lambda <= 1 the raw
/// reciprocal would leave the physical range, so pc is pinned to 1 and the
/// clamped flag records that (lambda == 1 reports pc = 1 unclamped).
struct ThresholdEstimate {
    int order = 0;
    double lambda = 0.0;
    double pc = 1.0;
    bool clamped = false;
    SpectralResult spectral;
};

struct EstimateOptions {
    double tol = 1e-10;
    long max_iter = 100000;
    enum class Fast { automatic, on, off } fast = Fast::automatic;
    int krylov_dim = 30;
    size_t path_cap = kDefaultPathCap;
};

/// Order 0 estimates from the adjacency matrix, order 2 optionally through
/// the reduced matrix M (fast route), anything else through the explicit
/// B^(order). DAGs are declared zero exactly, without iteration. Throws
/// NonConvergence (carrying the partial result) when iteration fails.
ThresholdEstimate estimate_pc(const Graph& g, int order, const EstimateOptions& opts = {});

struct ErrorReport {
    std::vector<int> orders;
    std::vector<double> relative_errors;  // (pc_emp - pc_est) / pc_emp
    bool ordering_violation = false;      // estimates decreased with order
};

ErrorReport compare(const std::vector<ThresholdEstimate>& estimates, double empirical_pc);

}  // namespace perco
