#include "kmpp/seed_accel.hpp"

#include <cmath>
#include <limits>
#include <tuple>
#include <vector>

#include "kmpp/errors.hpp"
#include "kmpp/sampling.hpp"

namespace kmpp {

namespace {

constexpr double kUnknownDistance = -1.0;

// Run-local state of one accelerated seeding pass.
struct AccelRun {
    const Dataset& ds;
    const AccelConfig& cfg;
    Counters* sink;

    std::vector<double> w;        // SED to assigned center
    std::vector<double> edc;      // cached ed = sqrt(w); norm filter only
    std::vector<double> norm;     // point norms in the reference frame; norm filter only
    ClusterState cs;

    // Center-pair bookkeeping, allocated only with center_skip on.
    std::size_t k = 0;
    std::vector<double> center_dist;  // SED between cluster centers, -1 = unknown
    std::vector<char> separated;      // ordered (source, target) pair proven apart

    double& dist_at(std::size_t a, std::size_t b) { return center_dist[a * k + b]; }

    AccelRun(const Dataset& d, const AccelConfig& c, std::size_t k_, Counters* s)
        : ds(d), cfg(c), sink(s), k(k_) {
        w.assign(ds.n, 0.0);
        cs.partitioned = cfg.norm_filter;
        cs.init_points(ds.n);
        cs.clusters.reserve(k);
        if (cfg.norm_filter) {
            edc.assign(ds.n, 0.0);
            ReferencePoint ref = cfg.reference;
            if (ref.coords.empty() && ref.is_origin()) ref = ReferencePoint::origin(ds.d);
            if (ref.coords.size() != ds.d)
                throw ContractViolation("accel_seed: reference dimension mismatch");
            norm.resize(ds.n);
            for (std::size_t i = 0; i < ds.n; ++i)
                norm[i] = std::sqrt(squared_norm_to(ds.row(i), ref));
            record_norm(sink, ds.n);
        }
        if (cfg.center_skip) {
            center_dist.assign(k * k, kUnknownDistance);
            separated.assign(k * k, 0);
        }
    }

    std::uint8_t side_for(std::uint32_t point, std::uint32_t cluster) const {
        if (!cs.partitioned) return 0;
        return norm[point] <= norm[cs.clusters[cluster].center] ? 0 : 1;
    }

    // Insert with incremental radius/sum/bound maintenance; exact because the
    // new cluster only ever grows within the iteration that created it.
    void insert_point(std::uint32_t point, std::uint32_t cluster) {
        const std::uint8_t s = side_for(point, cluster);
        cs.insert(point, cluster, s);
        auto& part = cs.clusters[cluster].parts[s];
        if (w[point] > part.radius_sq) part.radius_sq = w[point];
        part.weight_sum += w[point];
        if (cs.partitioned) {
            const double e = edc[point];
            if (norm[point] - e < part.bound_lo) part.bound_lo = norm[point] - e;
            if (norm[point] + e > part.bound_hi) part.bound_hi = norm[point] + e;
        }
    }

    void audit_point_skip(SkipEvent::Kind kind, std::size_t c_new, std::size_t point) {
        if (!cfg.audit) return;
        SkipEvent ev;
        ev.kind = kind;
        ev.new_center = c_new;
        ev.point = point;
        ev.point_weight = w[point];
        ev.weights = w;
        cfg.audit->on_skip(ev);
    }

    void audit_group_skip(SkipEvent::Kind kind, std::size_t c_new,
                          const ClusterPartition& part) {
        if (!cfg.audit) return;
        SkipEvent ev;
        ev.kind = kind;
        ev.new_center = c_new;
        ev.members = part.members;
        ev.weights = w;
        cfg.audit->on_skip(ev);
    }

    // Scans one partition against the new center: filter2 and the point norm
    // test guard each distance; reassignment requires a strict decrease.
    // Radius, sum and bounds are recomputed from the survivors.
    void scan_partition(std::uint32_t j, std::uint8_t s, std::uint32_t c_new,
                        double d_new, double norm_cnew) {
        auto& part = cs.clusters[j].parts[s];
        const auto c_new_row = ds.row(c_new);
        double radius = 0.0;
        double sum = 0.0;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();

        std::size_t idx = 0;
        while (idx < part.members.size()) {
            const std::uint32_t i = part.members[idx];
            record_point_visit(sink, Phase::update);
            bool migrated = false;
            if (filter2(w[i], d_new)) {
                audit_point_skip(SkipEvent::Kind::point_filter2, c_new, i);
            } else if (cs.partitioned &&
                       (norm_cnew - norm[i]) * (norm_cnew - norm[i]) >= w[i]) {
                audit_point_skip(SkipEvent::Kind::point_norm, c_new, i);
            } else {
                record_distance(sink);
                const double dist = sed(ds.row(i), c_new_row);
                if (w[i] > dist) {
                    w[i] = dist;
                    if (cs.partitioned) edc[i] = std::sqrt(dist);
                    cs.remove(i);
                    insert_point(i, static_cast<std::uint32_t>(cs.clusters.size() - 1));
                    migrated = true;
                }
            }
            if (!migrated) {
                if (w[i] > radius) radius = w[i];
                sum += w[i];
                if (cs.partitioned) {
                    if (norm[i] - edc[i] < lo) lo = norm[i] - edc[i];
                    if (norm[i] + edc[i] > hi) hi = norm[i] + edc[i];
                }
                ++idx;  // on migration the swapped-in tail element lands here
            }
        }
        part.radius_sq = radius;
        part.weight_sum = sum;
        part.bound_lo = lo;
        part.bound_hi = hi;
    }

    // Processes one existing cluster against the freshly drawn center.
    void visit_cluster(std::uint32_t j, std::uint32_t c_new, std::uint32_t src,
                       double w_cnew) {
        auto& cl = cs.clusters[j];
        if (cl.size() == 0) return;  // fully drained cluster, nothing to examine
        const auto jn = cs.clusters.size() - 1;
        const bool is_src = (j == src);

        if (cfg.center_skip && !is_src) {
            if (separated[src * k + j]) {
                record_point_visit(sink, Phase::update);
                for (const auto& part : cl.parts)
                    if (!part.empty())
                        audit_group_skip(SkipEvent::Kind::pair_separated, c_new, part);
                return;
            }
            const double dc = dist_at(src, j);
            if (dc != kUnknownDistance &&
                pair_separation_skip(dc, cs.clusters[src].max_radius_sq(), cl.max_radius_sq())) {
                separated[src * k + j] = 1;
                record_point_visit(sink, Phase::update);
                for (const auto& part : cl.parts)
                    if (!part.empty())
                        audit_group_skip(SkipEvent::Kind::pair_separated, c_new, part);
                return;
            }
        }

        // d^new_j is needed lazily: the norm band can reject a partition with
        // no center-center distance at all, and the previous cluster of c_new
        // already knows it as the point's own weight.
        double d_new = is_src ? w_cnew : kUnknownDistance;
        const double norm_cnew = cs.partitioned ? norm[c_new] : 0.0;
        if (cfg.center_skip && is_src) {
            dist_at(jn, j) = d_new;
            dist_at(j, jn) = d_new;
        }

        bool scan[2] = {false, false};
        for (std::uint8_t s = 0; s < 2; ++s) {
            auto& part = cl.parts[s];
            if (part.empty()) continue;
            record_point_visit(sink, Phase::update);
            if (cs.partitioned && norm_reject_partition(part, norm_cnew)) {
                audit_group_skip(SkipEvent::Kind::partition_norm, c_new, part);
                continue;
            }
            if (d_new == kUnknownDistance) {
                record_distance(sink, /*center_center=*/true);
                d_new = sed(ds.row(c_new), ds.row(cl.center));
                if (cfg.center_skip) {
                    dist_at(jn, j) = d_new;
                    dist_at(j, jn) = d_new;
                }
            }
            if (filter1(part.radius_sq, d_new)) {
                audit_group_skip(SkipEvent::Kind::partition_radius, c_new, part);
                continue;
            }
            scan[s] = true;
        }
        for (std::uint8_t s = 0; s < 2; ++s)
            if (scan[s]) scan_partition(j, s, c_new, d_new, norm_cnew);
    }
};

}  // namespace

SeedResult accel_seed(const Dataset& ds, std::size_t k, RandomStream& rng,
                      const AccelConfig& cfg, Counters* sink) {
    const std::size_t n = ds.n;
    if (k < 1 || k > n) throw InvalidK("accel_seed: k must be in [1, n]");

    AccelRun run(ds, cfg, k, sink);
    SeedResult result;
    result.centers.reserve(k);
    TwoStepSampler sampler;

    // Trace entry m: the weights the selection of center m saw, plus the
    // cumulative counters once this iteration's propagation finished.
    std::vector<double> weights_at_selection;
    auto snapshot = [&](std::size_t chosen, double total) {
        if (cfg.trace == TraceLevel::off) return;
        IterationTrace t;
        t.chosen = chosen;
        t.total_weight = total;
        if (sink) t.counters = *sink;
        if (cfg.trace == TraceLevel::weights) t.weights = std::move(weights_at_selection);
        result.trace.push_back(std::move(t));
    };

    // Initial center: uniform draw, one cluster holding every point, weights
    // and radius seeded by a full pass.
    const auto c0 = static_cast<std::uint32_t>(rng.uniform_index(n));
    run.cs.clusters.emplace_back();
    run.cs.clusters.back().center = c0;
    result.centers.push_back(c0);
    const auto c0_row = ds.row(c0);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (i != c0) {
            record_point_visit(sink, Phase::update);
            record_distance(sink);
            run.w[i] = sed(ds.row(i), c0_row);
            if (cfg.norm_filter) run.edc[i] = std::sqrt(run.w[i]);
        }
        run.insert_point(i, 0);
    }
    if (cfg.trace == TraceLevel::weights) weights_at_selection.assign(n, 0.0);
    snapshot(c0, 0.0);
    if (cfg.state_observer) cfg.state_observer(run.cs, run.w);

    while (result.centers.size() < k) {
        double total = 0.0;
        if (cfg.trace != TraceLevel::off)
            for (double v : run.w) total += v;
        if (cfg.trace == TraceLevel::weights) weights_at_selection = run.w;

        std::size_t c_new;
        std::size_t src;
        if (cfg.sampling_mode == SamplingMode::strict) {
            c_new = strict_select(std::span<const double>(run.w), rng.uniform(), sink);
            src = run.cs.assignment[c_new];
        } else {
            const double u_cluster = rng.uniform();
            const double u_point = rng.uniform();
            std::tie(src, c_new) = sampler.select(run.cs, run.w, u_cluster, u_point, sink);
        }

        const double w_cnew = run.w[c_new];
        run.cs.clusters.emplace_back();
        run.cs.clusters.back().center = static_cast<std::uint32_t>(c_new);
        result.centers.push_back(c_new);
        const auto existing = static_cast<std::uint32_t>(run.cs.clusters.size() - 1);
        for (std::uint32_t j = 0; j < existing; ++j)
            run.visit_cluster(j, static_cast<std::uint32_t>(c_new),
                              static_cast<std::uint32_t>(src), w_cnew);
        snapshot(c_new, total);
        if (cfg.state_observer) cfg.state_observer(run.cs, run.w);
    }

    result.center_coords.reserve(k * ds.d);
    for (std::size_t c : result.centers) {
        const auto row = ds.row(c);
        result.center_coords.insert(result.center_coords.end(), row.begin(), row.end());
    }
    if (sink) result.counters = *sink;
    return result;
}

}  // namespace kmpp
