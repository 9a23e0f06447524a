#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "perco/graph.hpp"

namespace perco {

/// Top-two cluster sizes after each edge addition of one Newman-Ziff sweep;
/// index m runs over occupied-edge counts 0..E.
struct RunProfile {
    std::vector<int> largest;
    std::vector<int> second;
};

struct PercolationCurve {
    std::vector<double> p_grid;
    std::vector<double> s1;  // mean relative size of the largest cluster
    std::vector<double> s2;  // mean relative size of the second largest
    int runs = 0;
    uint64_t seed = 0;
};

struct DegenerateCurve : std::runtime_error {
    explicit DegenerateCurve(const std::string& what) : std::runtime_error(what) {}
};

/// One sweep: edges added in a uniformly random permutation, weighted
/// union-find with path compression, second-largest maintained through a
/// count-per-size multiset.
RunProfile newman_ziff_run(const Graph& g, uint64_t seed);

/// Microcanonical means over `runs` independent sweeps, convolved with the
/// binomial distribution onto a uniform p-grid (weights computed in log
/// space). Runs execute concurrently; aggregation is order-independent
/// integer summation, so results are bit-stable.
PercolationCurve percolation_curves(const Graph& g, int runs, int grid_size, uint64_t seed);

/// Binomial weights w_m(p) for m = 0..total, stable in log space.
std::vector<double> binomial_weights(int total, double p);

/// argmax_p S2(p); ties break toward smaller p. Throws DegenerateCurve when
/// s2 vanishes identically.
double empirical_threshold(const PercolationCurve& curve);

/// Message-passing state over length-2 directed paths (theta aligned with
/// the lexicographic path order) plus per-node connection probabilities.
struct MessageState {
    std::vector<double> theta;
    std::vector<double> pi;
    double p = 0.0;
    long iterations = 0;
};

struct MessagePassingError : std::runtime_error {
    MessageState state;
    MessagePassingError(const std::string& what, MessageState s)
        : std::runtime_error(what), state(std::move(s)) {}
};

/// Fixed point of the path message recursion from the all-ones start (the
/// largest fixed point); updates are monotone non-increasing and stay in
/// [0,1]. Converged when the max-norm update is <= tol.
MessageState message_passing_theta(const Graph& g, double p, double tol = 1e-10,
                                   long max_iter = 100000);

/// expected giant-component size: sum of pi (absolute node count)
double message_passing_s1(const Graph& g, double p, double tol = 1e-10, long max_iter = 100000);

}  // namespace perco
