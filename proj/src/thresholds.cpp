#include "perco/thresholds.hpp"

#include <stdexcept>

#include "perco/nbt.hpp"

namespace perco {

namespace {

ThresholdEstimate from_spectral(int order, const SpectralResult& s) {
    if (!s.converged) throw NonConvergence(s);
    ThresholdEstimate e;
    e.order = order;
    e.lambda = s.radius;
    e.spectral = s;
    if (s.radius > 1.0) {
        e.pc = 1.0 / s.radius;
        e.clamped = false;
    } else {
        e.pc = 1.0;
        e.clamped = s.radius < 1.0;
    }
    return e;
}

}  // namespace

ThresholdEstimate estimate_pc(const Graph& g, int order, const EstimateOptions& opts) {
    if (order < 0) throw std::invalid_argument("estimate_pc: order must be >= 0");
    bool fast = false;
    if (order == 2) {
        switch (opts.fast) {
            case EstimateOptions::Fast::on: fast = true; break;
            case EstimateOptions::Fast::off: fast = false; break;
            case EstimateOptions::Fast::automatic:
                // M pays off once P2 > 8E, i.e. reduction factor above 1
                fast = g.node_count() > 0 && degree_stats(g).reduction_factor > 1.0;
                break;
        }
    }
    if (fast) {
        SpectralResult s =
            spectral_radius_of_b2_via_m(g, opts.tol, opts.max_iter, opts.krylov_dim, opts.path_cap);
        return from_spectral(order, s);
    }
    SparseOperator b = build_b(g, order, opts.path_cap);
    return from_spectral(order, spectral_radius_01(b, opts.tol, opts.max_iter));
}

ErrorReport compare(const std::vector<ThresholdEstimate>& estimates, double empirical_pc) {
    if (empirical_pc <= 0.0) throw std::invalid_argument("compare: empirical pc must be positive");
    ErrorReport report;
    report.orders.reserve(estimates.size());
    report.relative_errors.reserve(estimates.size());
    for (const auto& e : estimates) {
        report.orders.push_back(e.order);
        report.relative_errors.push_back((empirical_pc - e.pc) / empirical_pc);
    }
    for (size_t i = 0; i + 1 < estimates.size(); ++i)
        if (estimates[i + 1].order > estimates[i].order && estimates[i + 1].pc < estimates[i].pc)
            report.ordering_violation = true;
    return report;
}

}  // namespace perco
