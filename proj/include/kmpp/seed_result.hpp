#pragma once

#include <cstddef>
#include <vector>

#include "kmpp/counters.hpp"

namespace kmpp {

enum class SamplingMode { fast, strict };

/// Optional per-iteration snapshot. Entry m records the selection of center
/// m: `weights` is the weight vector the selection saw (min SED to centers
/// 0..m-1, zeros for entry 0), `total_weight` its sum, and `counters` the
/// cumulative counts once the variant finished iteration m. `weights` is
/// filled only at TraceLevel::weights.
struct IterationTrace {
    std::size_t chosen = 0;
    double total_weight = 0.0;
    Counters counters;
    std::vector<double> weights;
};

enum class TraceLevel { off, summary, weights };

struct SeedResult {
    std::vector<std::size_t> centers;    // k point indices, in selection order
    std::vector<double> center_coords;   // k x d, row-major
    std::vector<IterationTrace> trace;   // empty unless tracing was requested
    Counters counters;
};

}  // namespace kmpp
