#include "kmpp/sampling.hpp"

#include "kmpp/errors.hpp"

namespace kmpp {

std::size_t roulette_global(std::span<const double> w, double u, Counters* sink) {
    double total = 0.0;
    for (double v : w) total += v;
    if (!(total > 0.0))
        throw DegenerateWeights("roulette selection over all-zero weights");

    // The target is u * total with total accumulated in the same order as the
    // scan below, so the scan always terminates inside the array (u < 1).
    const double target = u * total;
    double prefix = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        record_point_visit(sink, Phase::sampling);
        prefix += w[i];
        if (prefix > target) return i;
    }
    return w.size() - 1;  // unreachable for u < 1; keeps the function total
}

std::size_t strict_select(std::span<const double> w, double u, Counters* sink) {
    return roulette_global(w, u, sink);
}

std::size_t cumulative_search(std::span<const double> prefix, double target,
                              std::size_t* probes) {
    if (prefix.empty())
        throw ContractViolation("cumulative_search: empty prefix");
    if (!(target >= 0.0) || !(target < prefix.back()))
        throw ContractViolation("cumulative_search: target out of range");
    std::size_t lo = 0;
    std::size_t hi = prefix.size() - 1;
    std::size_t inspected = 0;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        ++inspected;
        if (prefix[mid] > target)
            hi = mid;
        else
            lo = mid + 1;
    }
    ++inspected;  // the final element decides
    if (probes) *probes += inspected;
    return lo;
}

std::pair<std::size_t, std::size_t> TwoStepSampler::select(const ClusterState& state,
                                                           std::span<const double> w,
                                                           double u_cluster, double u_point,
                                                           Counters* sink) {
    const std::size_t m = state.clusters.size();
    cluster_prefix_.resize(m);
    double total = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        total += state.clusters[j].weight_sum();
        cluster_prefix_[j] = total;
    }
    record_point_visit(sink, Phase::sampling, m);  // clusters count as entries
    if (!(total > 0.0))
        throw DegenerateWeights("two-step selection over all-zero cluster sums");

    std::size_t probes = 0;
    const std::size_t cluster = cumulative_search(cluster_prefix_, u_cluster * total, &probes);

    if (member_prefix_.size() < m) member_prefix_.resize(m);
    CachedPrefix& cache = member_prefix_[cluster];
    const Cluster& cl = state.clusters[cluster];
    if (!cache.valid || cache.generation != cl.generation) {
        cache.prefix.clear();
        cache.order.clear();
        double acc = 0.0;
        for (const auto& part : cl.parts) {
            for (std::uint32_t p : part.members) {
                acc += w[p];
                cache.prefix.push_back(acc);
                cache.order.push_back(p);
            }
        }
        cache.generation = cl.generation;
        cache.valid = true;
        record_point_visit(sink, Phase::sampling, cache.order.size());
    }

    const std::size_t slot =
        cumulative_search(cache.prefix, u_point * cache.prefix.back(), &probes);
    record_point_visit(sink, Phase::sampling, probes);
    return {cluster, cache.order[slot]};
}

std::pair<std::size_t, std::size_t> two_step_select(const ClusterState& state,
                                                    const WeightVector& weights,
                                                    double u_cluster, double u_point,
                                                    Counters* sink) {
    TwoStepSampler sampler;
    return sampler.select(state, weights.w, u_cluster, u_point, sink);
}

}  // namespace kmpp
