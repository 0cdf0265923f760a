#pragma once

#include "kmpp/geometry.hpp"
#include "kmpp/random.hpp"
#include "kmpp/seed_result.hpp"

namespace kmpp {

/// Reference k-means++ seeding: first center uniform, every further center by
/// D^2 roulette, weights refreshed against the newly added center only.
/// Points already chosen as centers hold weight zero and are skipped by the
/// update loop, so a full run computes exactly sum_{t=1..k-1} (n - t)
/// distances. Both sampling modes behave identically here; the parameter
/// exists so call sites can treat all variants uniformly.
SeedResult standard_seed(const Dataset& ds, std::size_t k, RandomStream& rng,
                         SamplingMode mode = SamplingMode::fast,
                         Counters* sink = nullptr,
                         TraceLevel trace = TraceLevel::off);

}  // namespace kmpp
