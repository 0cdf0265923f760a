#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace kmpp {

/// One side of a cluster's norm split (or the whole cluster when the norm
/// filter is off). radius_sq is the largest member weight and weight_sum the
/// sum; bound_lo/bound_hi aggregate the per-point norm bounds
/// ||x|| -/+ ed(x, c) and are only maintained while the norm filter is active.
struct ClusterPartition {
    std::vector<std::uint32_t> members;
    double radius_sq = 0.0;
    double weight_sum = 0.0;
    double bound_lo = std::numeric_limits<double>::infinity();
    double bound_hi = -std::numeric_limits<double>::infinity();

    bool empty() const { return members.empty(); }
};

struct Cluster {
    std::uint32_t center = 0;          // point index of the fixed center
    std::uint64_t generation = 0;      // bumped on every membership change
    ClusterPartition parts[2];         // [0] = lower side (everything when unsplit)

    double weight_sum() const { return parts[0].weight_sum + parts[1].weight_sum; }
    double max_radius_sq() const {
        return parts[0].radius_sq > parts[1].radius_sq ? parts[0].radius_sq
                                                       : parts[1].radius_sq;
    }
    std::size_t size() const { return parts[0].members.size() + parts[1].members.size(); }
};

/// Membership bookkeeping shared between the accelerated seeder and the
/// two-step sampler. Member lists use swap-with-last removal, so list order
/// carries no meaning; per-point (side, pos) locate a point in O(1).
struct ClusterState {
    std::vector<Cluster> clusters;
    std::vector<std::uint32_t> assignment;  // point -> cluster
    std::vector<std::uint8_t> side;         // point -> partition index within its cluster
    std::vector<std::uint32_t> pos;         // point -> slot in its partition member list
    bool partitioned = false;               // norm filter active: two sides per cluster

    void init_points(std::size_t n) {
        assignment.assign(n, 0);
        side.assign(n, 0);
        pos.assign(n, 0);
    }

    void insert(std::uint32_t point, std::uint32_t cluster, std::uint8_t part_side) {
        auto& part = clusters[cluster].parts[part_side];
        assignment[point] = cluster;
        side[point] = part_side;
        pos[point] = static_cast<std::uint32_t>(part.members.size());
        part.members.push_back(point);
        ++clusters[cluster].generation;
    }

    void remove(std::uint32_t point) {
        auto& part = clusters[assignment[point]].parts[side[point]];
        const std::uint32_t slot = pos[point];
        const std::uint32_t last = part.members.back();
        part.members[slot] = last;
        pos[last] = slot;
        part.members.pop_back();
        ++clusters[assignment[point]].generation;
    }
};

}  // namespace kmpp
