#include "kmpp/geometry.hpp"

#include <cmath>

#include "kmpp/errors.hpp"

namespace kmpp {

std::string to_string(ReferencePoint::Kind kind) {
    switch (kind) {
        case ReferencePoint::Kind::origin: return "origin";
        case ReferencePoint::Kind::mean: return "mean";
        case ReferencePoint::Kind::median: return "median";
        case ReferencePoint::Kind::positive_corner: return "positive-corner";
        case ReferencePoint::Kind::mean_norm_point: return "mean-norm-point";
        case ReferencePoint::Kind::explicit_point: return "explicit";
    }
    return "?";
}

ReferencePoint::Kind reference_kind_from_string(const std::string& name) {
    if (name == "origin") return ReferencePoint::Kind::origin;
    if (name == "mean") return ReferencePoint::Kind::mean;
    if (name == "median") return ReferencePoint::Kind::median;
    if (name == "positive-corner") return ReferencePoint::Kind::positive_corner;
    if (name == "mean-norm-point") return ReferencePoint::Kind::mean_norm_point;
    if (name == "explicit") return ReferencePoint::Kind::explicit_point;
    throw ContractViolation("unknown reference point kind: " + name);
}

Dataset make_dataset(std::size_t n, std::size_t d, std::vector<double> data) {
    if (n < 1 || d < 1) throw ContractViolation("dataset needs n >= 1 and d >= 1");
    if (data.size() != n * d) throw ContractViolation("dataset data size does not match n*d");
    for (double v : data)
        if (!std::isfinite(v)) throw ContractViolation("dataset contains NaN or Inf");
    Dataset ds;
    ds.n = n;
    ds.d = d;
    ds.data = std::move(data);
    ds.point_ids.resize(n);
    for (std::size_t i = 0; i < n; ++i) ds.point_ids[i] = i;
    ds.reference = ReferencePoint::origin(d);
    return ds;
}

double sed(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.empty())
        throw ContractViolation("sed: dimension mismatch");
    double acc = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double diff = x[j] - y[j];
        acc += diff * diff;
    }
    return acc;
}

double ed(std::span<const double> x, std::span<const double> y) {
    return std::sqrt(sed(x, y));
}

double dot(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.empty())
        throw ContractViolation("dot: dimension mismatch");
    double acc = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += x[j] * y[j];
    return acc;
}

double sed_via_dot(double x_sqnorm, double y_sqnorm, double dot_xy) {
    const double v = x_sqnorm + y_sqnorm - 2.0 * dot_xy;
    return v < 0.0 ? 0.0 : v;
}

double squared_norm_to(std::span<const double> x, const ReferencePoint& ref) {
    if (ref.is_origin()) {
        double acc = 0.0;
        for (double v : x) acc += v * v;
        return acc;
    }
    return sed(x, std::span<const double>{ref.coords});
}

Dataset shift_frame(const Dataset& ds, const ReferencePoint& ref) {
    if (ref.coords.size() != ds.d)
        throw ContractViolation("shift_frame: reference dimension mismatch");
    Dataset out;
    out.n = ds.n;
    out.d = ds.d;
    out.point_ids = ds.point_ids;
    out.reference = ReferencePoint::origin(ds.d);
    out.data.resize(ds.n * ds.d);
    for (std::size_t i = 0; i < ds.n; ++i)
        for (std::size_t j = 0; j < ds.d; ++j)
            out.data[i * ds.d + j] = ds.data[i * ds.d + j] - ref.coords[j];
    if (ds.has_norms()) precompute_norms(out);
    return out;
}

void precompute_norms(Dataset& ds, Counters* sink) {
    if (ds.reference.coords.size() != ds.d)
        throw ContractViolation("precompute_norms: reference dimension mismatch");
    ds.squared_norms.resize(ds.n);
    for (std::size_t i = 0; i < ds.n; ++i)
        ds.squared_norms[i] = squared_norm_to(ds.row(i), ds.reference);
    record_norm(sink, ds.n);
}

}  // namespace kmpp
