#include "kmpp/seed_standard.hpp"

#include <vector>

#include "kmpp/errors.hpp"
#include "kmpp/sampling.hpp"

namespace kmpp {

SeedResult standard_seed(const Dataset& ds, std::size_t k, RandomStream& rng,
                         SamplingMode /*mode*/, Counters* sink, TraceLevel trace) {
    const std::size_t n = ds.n;
    if (k < 1 || k > n) throw InvalidK("standard_seed: k must be in [1, n]");

    SeedResult result;
    result.centers.reserve(k);

    std::vector<char> is_center(n, 0);
    WeightVector weights;
    weights.w.assign(n, 0.0);

    auto add_center = [&](std::size_t c) {
        is_center[c] = 1;
        weights.w[c] = 0.0;
        result.centers.push_back(c);
    };

    // Trace entry m: the weights the selection of center m saw, plus the
    // cumulative counters once this iteration is done.
    std::vector<double> weights_at_selection;
    auto snapshot = [&](std::size_t chosen, double total) {
        if (trace == TraceLevel::off) return;
        IterationTrace t;
        t.chosen = chosen;
        t.total_weight = total;
        if (sink) t.counters = *sink;
        if (trace == TraceLevel::weights) t.weights = std::move(weights_at_selection);
        result.trace.push_back(std::move(t));
    };

    add_center(rng.uniform_index(n));
    if (trace == TraceLevel::weights) weights_at_selection.assign(n, 0.0);
    snapshot(result.centers.back(), 0.0);

    bool first_update = true;
    while (result.centers.size() < k) {
        // Refresh weights against the newest center only; the nearest center
        // among the older ones is already reflected in w. Ties keep the
        // incumbent (update on strict decrease only).
        const auto c_new = result.centers.back();
        const auto center_row = ds.row(c_new);
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (is_center[i]) continue;
            record_point_visit(sink, Phase::update);
            record_distance(sink);
            const double d = sed(ds.row(i), center_row);
            if (first_update || d < weights.w[i]) weights.w[i] = d;
            total += weights.w[i];
        }
        first_update = false;
        weights.total = total;

        if (trace == TraceLevel::weights) weights_at_selection = weights.w;
        const std::size_t chosen = strict_select(weights, rng.uniform(), sink);
        add_center(chosen);
        snapshot(chosen, total);
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
