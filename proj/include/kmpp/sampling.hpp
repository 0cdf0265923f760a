#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kmpp/cluster_state.hpp"
#include "kmpp/counters.hpp"

namespace kmpp {

/// Per-point D^2 weights: w[i] is the SED from point i to its nearest chosen
/// center, zero for points already chosen. `total` caches the sum for
/// invariant checks; the selection routines re-derive their own totals in scan
/// order so that selections are bit-reproducible across variants.
struct WeightVector {
    std::vector<double> w;
    double total = 0.0;
};

/// Roulette-wheel selection over all weights in ascending index order:
/// returns the smallest i whose prefix sum strictly exceeds u * total.
/// Throws DegenerateWeights when every weight is zero.
std::size_t roulette_global(std::span<const double> w, double u, Counters* sink = nullptr);

inline std::size_t roulette_global(const WeightVector& weights, double u,
                                   Counters* sink = nullptr) {
    return roulette_global(std::span<const double>(weights.w), u, sink);
}

/// The single-uniform, global-index-order selection discipline. Identical to
/// roulette_global by definition; every variant run in strict mode funnels
/// its one per-iteration uniform through this, which is what makes their
/// center sequences bit-identical under one seed.
std::size_t strict_select(std::span<const double> w, double u, Counters* sink = nullptr);

inline std::size_t strict_select(const WeightVector& weights, double u,
                                 Counters* sink = nullptr) {
    return strict_select(std::span<const double>(weights.w), u, sink);
}

/// Binary search over a nondecreasing prefix array: smallest index with
/// prefix[index] > target. `probes` (optional) accumulates the number of
/// elements inspected.
std::size_t cumulative_search(std::span<const double> prefix, double target,
                              std::size_t* probes = nullptr);

/// Two-step D^2 selection with per-cluster cumulative-weight caches. The
/// cluster stage roulettes over the weight sums s_j; the point stage
/// binary-searches the selected cluster's member prefix, which is rebuilt
/// lazily only when the cluster's generation moved since it was cached.
class TwoStepSampler {
public:
    /// Returns (cluster index, point index). Consumes exactly the two
    /// uniforms supplied. Throws DegenerateWeights when all sums are zero.
    std::pair<std::size_t, std::size_t> select(const ClusterState& state,
                                               std::span<const double> w,
                                               double u_cluster, double u_point,
                                               Counters* sink = nullptr);

private:
    struct CachedPrefix {
        std::vector<double> prefix;            // cumulative member weights
        std::vector<std::uint32_t> order;      // member ids in prefix order
        std::uint64_t generation = 0;
        bool valid = false;
    };
    std::vector<CachedPrefix> member_prefix_;
    std::vector<double> cluster_prefix_;
};

/// Stateless convenience wrapper over TwoStepSampler for one-shot use.
std::pair<std::size_t, std::size_t> two_step_select(const ClusterState& state,
                                                    const WeightVector& weights,
                                                    double u_cluster, double u_point,
                                                    Counters* sink = nullptr);

}  // namespace kmpp
