#include "kmpp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kmpp/errors.hpp"

namespace kmpp {

double norm_variance_pct(const Dataset& ds, const ReferencePoint& ref) {
    if (ref.coords.size() != ds.d)
        throw ContractViolation("norm_variance_pct: reference dimension mismatch");
    double sum_y = 0.0;
    double sum_y2 = 0.0;
    for (std::size_t i = 0; i < ds.n; ++i) {
        const double y2 = squared_norm_to(ds.row(i), ref);
        sum_y += std::sqrt(y2);
        sum_y2 += y2;
    }
    if (sum_y2 <= 0.0) return 0.0;  // every point sits on the reference
    const double n = static_cast<double>(ds.n);
    const double pct = 100.0 * (1.0 - (sum_y * sum_y) / (n * sum_y2));
    return std::clamp(pct, 0.0, 100.0);
}

std::vector<ReferencePoint> candidate_references(const Dataset& ds) {
    std::vector<ReferencePoint> out;
    out.reserve(5);
    out.push_back(ReferencePoint::origin(ds.d));
    out.push_back(resolve_reference(ds, ReferencePoint::Kind::mean));
    out.push_back(resolve_reference(ds, ReferencePoint::Kind::median));
    out.push_back(resolve_reference(ds, ReferencePoint::Kind::positive_corner));
    out.push_back(resolve_reference(ds, ReferencePoint::Kind::mean_norm_point));
    return out;
}

ReferencePoint resolve_reference(const Dataset& ds, ReferencePoint::Kind kind) {
    ReferencePoint ref;
    ref.kind = kind;
    switch (kind) {
        case ReferencePoint::Kind::origin:
            return ReferencePoint::origin(ds.d);
        case ReferencePoint::Kind::mean: {
            ref.coords.assign(ds.d, 0.0);
            for (std::size_t i = 0; i < ds.n; ++i)
                for (std::size_t j = 0; j < ds.d; ++j) ref.coords[j] += ds.data[i * ds.d + j];
            for (double& v : ref.coords) v /= static_cast<double>(ds.n);
            return ref;
        }
        case ReferencePoint::Kind::median: {
            ref.coords.resize(ds.d);
            std::vector<double> column(ds.n);
            for (std::size_t j = 0; j < ds.d; ++j) {
                for (std::size_t i = 0; i < ds.n; ++i) column[i] = ds.data[i * ds.d + j];
                const std::size_t mid = (ds.n - 1) / 2;  // lower median for even n
                std::nth_element(column.begin(), column.begin() + mid, column.end());
                ref.coords[j] = column[mid];
            }
            return ref;
        }
        case ReferencePoint::Kind::positive_corner: {
            ref.coords.assign(ds.d, std::numeric_limits<double>::infinity());
            for (std::size_t i = 0; i < ds.n; ++i)
                for (std::size_t j = 0; j < ds.d; ++j)
                    ref.coords[j] = std::min(ref.coords[j], ds.data[i * ds.d + j]);
            return ref;
        }
        case ReferencePoint::Kind::mean_norm_point: {
            const auto origin = ReferencePoint::origin(ds.d);
            double mean_norm = 0.0;
            for (std::size_t i = 0; i < ds.n; ++i)
                mean_norm += std::sqrt(squared_norm_to(ds.row(i), origin));
            mean_norm /= static_cast<double>(ds.n);
            std::size_t best = 0;
            double best_gap = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < ds.n; ++i) {
                const double gap =
                    std::abs(std::sqrt(squared_norm_to(ds.row(i), origin)) - mean_norm);
                if (gap < best_gap) {
                    best_gap = gap;
                    best = i;
                }
            }
            const auto row = ds.row(best);
            ref.coords.assign(row.begin(), row.end());
            return ref;
        }
        case ReferencePoint::Kind::explicit_point:
            throw ContractViolation("resolve_reference: explicit kind carries its own coords");
    }
    throw ContractViolation("resolve_reference: unknown kind");
}

std::pair<ReferencePoint, NormVarianceReport> best_reference(const Dataset& ds) {
    NormVarianceReport report;
    for (auto& cand : candidate_references(ds)) {
        NormVarianceReport::Entry e;
        e.variance_pct = norm_variance_pct(ds, cand);
        e.reference = std::move(cand);
        report.entries.push_back(std::move(e));
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < report.entries.size(); ++i)
        if (report.entries[i].variance_pct > report.entries[best].variance_pct) best = i;
    return {report.entries[best].reference, std::move(report)};
}

}  // namespace kmpp
