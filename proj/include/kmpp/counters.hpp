#pragma once

#include <cstdint>
#include <optional>

namespace kmpp {

enum class Phase { update, sampling };

/// Intrinsic work counters of one seeding run. Point visits and distance
/// evaluations are counted with the same accounting in every variant so the
/// numbers stay comparable: examining a cluster or partition center counts as
/// one point visit, center-center distances count as distances, and norms are
/// charged once, at the first iteration of the norm-filter variant.
struct Counters {
    std::uint64_t points_examined_update = 0;
    std::uint64_t points_examined_sampling = 0;
    std::uint64_t distances_point_center = 0;
    std::uint64_t distances_center_center = 0;
    std::uint64_t norms_computed = 0;
    std::uint64_t wall_time_ns = 0;

    std::uint64_t distances_computed() const {
        return distances_point_center + distances_center_center;
    }
};

// A "sink" is simply a nullable pointer: passing nullptr detaches
// instrumentation entirely and must not change any algorithmic output.
inline void record_point_visit(Counters* sink, Phase phase, std::uint64_t count = 1) {
    if (!sink) return;
    if (phase == Phase::update)
        sink->points_examined_update += count;
    else
        sink->points_examined_sampling += count;
}

inline void record_distance(Counters* sink, bool center_center = false) {
    if (!sink) return;
    if (center_center)
        ++sink->distances_center_center;
    else
        ++sink->distances_point_center;
}

inline void record_norm(Counters* sink, std::uint64_t count = 1) {
    if (!sink) return;
    sink->norms_computed += count;
}

/// Per-metric percentage of the standard variant's counts plus wall-time
/// speedup. A metric whose standard-side count is zero has no meaningful
/// ratio and is reported as an empty optional.
struct RatioReport {
    std::optional<double> points_examined_update_pct;
    std::optional<double> points_examined_sampling_pct;
    std::optional<double> distances_computed_pct;
    std::optional<double> norms_computed_pct;
    std::optional<double> speedup;  // standard wall time / accelerated wall time
};

RatioReport ratio_report(const Counters& accel, const Counters& standard);

}  // namespace kmpp
