#pragma once

#include <vector>

#include "kmpp/geometry.hpp"

namespace kmpp {

/// Norm-variance scores for a set of candidate reference frames, as a
/// percentage in [0, 100]. Higher spread means the norm filter has more to
/// work with; 0 is the filter's worst case (all points on a sphere around the
/// reference).
struct NormVarianceReport {
    struct Entry {
        ReferencePoint reference;
        double variance_pct = 0.0;
    };
    std::vector<Entry> entries;
};

/// 100 * Var_pop(||x - ref||) / Mean(||x - ref||^2). Dimensionless, bounded
/// in [0, 100], invariant under uniform scaling, zero exactly when all
/// shifted norms coincide. Defined as 0 when every point equals ref.
double norm_variance_pct(const Dataset& ds, const ReferencePoint& ref);

/// The five candidate frames, in fixed order: origin, coordinate-wise mean,
/// coordinate-wise median (lower median for even n), positive corner
/// (per-dimension minimum), and the dataset point whose origin-frame norm is
/// closest to the mean norm (ties to the lowest index).
std::vector<ReferencePoint> candidate_references(const Dataset& ds);

/// Scores every candidate and returns the argmax (ties to the earliest
/// candidate in the fixed order), along with the full report.
std::pair<ReferencePoint, NormVarianceReport> best_reference(const Dataset& ds);

/// Resolves a reference kind against a dataset (e.g. Kind::mean computes the
/// coordinate-wise mean). Kind::explicit_point is rejected here since it
/// carries its own coordinates.
ReferencePoint resolve_reference(const Dataset& ds, ReferencePoint::Kind kind);

}  // namespace kmpp
