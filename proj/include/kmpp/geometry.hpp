#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kmpp/counters.hpp"

namespace kmpp {

/// Origin of the frame in which point norms are taken. Shifting the frame
/// never changes pairwise distances, but it can spread the norms out and make
/// the norm filter bite harder.
struct ReferencePoint {
    enum class Kind { origin, mean, median, positive_corner, mean_norm_point, explicit_point };

    Kind kind = Kind::origin;
    std::vector<double> coords;  // all zeros for the origin

    static ReferencePoint origin(std::size_t d) {
        return ReferencePoint{Kind::origin, std::vector<double>(d, 0.0)};
    }
    static ReferencePoint explicit_at(std::vector<double> c) {
        return ReferencePoint{Kind::explicit_point, std::move(c)};
    }
    bool is_origin() const { return kind == Kind::origin; }
};

std::string to_string(ReferencePoint::Kind kind);
ReferencePoint::Kind reference_kind_from_string(const std::string& name);

/// n points in d dimensions, row-major, immutable once built. squared_norms,
/// when present, caches ||x_i||^2 taken in the frame of `reference`.
struct Dataset {
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<double> data;              // n*d values, row-major
    std::vector<std::size_t> point_ids;    // original row numbers surviving preprocessing
    std::vector<double> squared_norms;     // empty when not cached
    ReferencePoint reference;              // frame of squared_norms

    std::span<const double> row(std::size_t i) const { return {data.data() + i * d, d}; }
    bool has_norms() const { return squared_norms.size() == n; }
};

/// Builds a dataset from a row-major matrix, validating that every value is
/// finite and assigning identity point_ids.
Dataset make_dataset(std::size_t n, std::size_t d, std::vector<double> data);

/// Squared Euclidean distance. Left-to-right summation over dimensions; every
/// caller in the library goes through this single kernel so that weights are
/// reproducible bit for bit across variants.
double sed(std::span<const double> x, std::span<const double> y);

/// Euclidean distance, sqrt(sed).
double ed(std::span<const double> x, std::span<const double> y);

double dot(std::span<const double> x, std::span<const double> y);

/// SED from cached squared norms and a dot product:
/// ||x||^2 + ||y||^2 - 2 x.y, clamped at zero against cancellation.
double sed_via_dot(double x_sqnorm, double y_sqnorm, double dot_xy);

/// Returns a copy of the dataset translated so that `ref` sits at the origin,
/// with squared norms recomputed in the new frame.
Dataset shift_frame(const Dataset& ds, const ReferencePoint& ref);

/// Populates ds.squared_norms in the frame of ds.reference. Counts one norm
/// per point when a sink is attached.
void precompute_norms(Dataset& ds, Counters* sink = nullptr);

/// ||x - ref||^2 for a single row; the kernel behind precompute_norms.
double squared_norm_to(std::span<const double> x, const ReferencePoint& ref);

}  // namespace kmpp
