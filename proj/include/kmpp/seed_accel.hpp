#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>

#include "kmpp/cluster_state.hpp"
#include "kmpp/geometry.hpp"
#include "kmpp/random.hpp"
#include "kmpp/seed_result.hpp"

namespace kmpp {

// Skip predicates, all SED-valued unless noted. Boundary convention: equality
// skips, since at equality no strict weight decrease is possible.

/// Cluster/partition-level TIE test: the whole partition can be bypassed when
/// the new center is at least twice the partition radius away from its center.
inline bool filter1(double radius_sq, double d_new_sq) {
    return d_new_sq >= 4.0 * radius_sq;
}

/// Point-level TIE test against the point's current weight.
inline bool filter2(double point_weight_sq, double d_new_sq) {
    return d_new_sq >= 4.0 * point_weight_sq;
}

/// Norm-gap test: a center whose norm differs from the point's by at least
/// the point's current distance bound cannot be nearer.
inline bool norm_reject_point(double sqnorm_p, double sqnorm_cnew, double point_weight_sq) {
    const double gap = std::sqrt(sqnorm_cnew) - std::sqrt(sqnorm_p);
    return gap * gap >= point_weight_sq;
}

/// Aggregate norm-band test: a center outside [bound_lo, bound_hi] cannot be
/// nearest to any member. Empty partitions are trivially skipped.
inline bool norm_reject_partition(const ClusterPartition& part, double norm_cnew) {
    if (part.empty()) return true;
    return norm_cnew <= part.bound_lo || norm_cnew >= part.bound_hi;
}

/// Center-pair separation test, evaluated in metric (square-rooted) form:
/// once ed(c_src, c_tgt) - sqrt(r_src) >= 2 sqrt(r_tgt), no center drawn from
/// the source cluster can ever claim a member of the target, and since radii
/// never grow the conclusion is permanent.
inline bool pair_separation_skip(double d_centers_sq, double r_source_sq, double r_target_sq) {
    return std::sqrt(d_centers_sq) - std::sqrt(r_source_sq) >= 2.0 * std::sqrt(r_target_sq);
}

/// Validation hook: fired for every skip decision so a test harness can
/// brute-force check that the skip hides no reassignment. The spans point at
/// live internal state and are only valid during the callback.
struct SkipEvent {
    enum class Kind {
        point_filter2,
        point_norm,
        partition_radius,      // filter1 (cluster-level when unpartitioned)
        partition_norm,
        pair_separated,        // center-center skip
    };
    Kind kind;
    std::size_t new_center;
    std::size_t point = static_cast<std::size_t>(-1);   // point events only
    double point_weight = 0.0;                          // point events only
    std::span<const std::uint32_t> members;             // partition/pair events
    std::span<const double> weights;                    // current weight view
};

class FilterAudit {
public:
    virtual ~FilterAudit() = default;
    virtual void on_skip(const SkipEvent& event) = 0;
};

struct AccelConfig {
    bool norm_filter = false;
    bool center_skip = false;   // center-center separation cache
    SamplingMode sampling_mode = SamplingMode::fast;
    ReferencePoint reference;   // frame for the norm filter; origin by default
    TraceLevel trace = TraceLevel::off;
    FilterAudit* audit = nullptr;
    // Called after every completed iteration with the live cluster state and
    // weights; a test hook like `audit`, null in production runs.
    std::function<void(const ClusterState&, std::span<const double>)> state_observer;
};

/// TIE-accelerated k-means++ seeding. Distributionally identical to
/// standard_seed under every configuration, and bit-identical to it in strict
/// sampling mode with an equal seed. Counters reflect only the points
/// actually examined and the distances actually computed, with cluster and
/// partition center examinations counted as point visits.
SeedResult accel_seed(const Dataset& ds, std::size_t k, RandomStream& rng,
                      const AccelConfig& cfg = {}, Counters* sink = nullptr);

}  // namespace kmpp
