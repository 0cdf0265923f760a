#include "kmpp/counters.hpp"

namespace kmpp {

namespace {

std::optional<double> pct(std::uint64_t accel, std::uint64_t standard) {
    if (standard == 0) return std::nullopt;
    return 100.0 * static_cast<double>(accel) / static_cast<double>(standard);
}

}  // namespace

RatioReport ratio_report(const Counters& accel, const Counters& standard) {
    RatioReport r;
    r.points_examined_update_pct =
        pct(accel.points_examined_update, standard.points_examined_update);
    r.points_examined_sampling_pct =
        pct(accel.points_examined_sampling, standard.points_examined_sampling);
    r.distances_computed_pct = pct(accel.distances_computed(), standard.distances_computed());
    r.norms_computed_pct = pct(accel.norms_computed, standard.norms_computed);
    if (accel.wall_time_ns != 0)
        r.speedup = static_cast<double>(standard.wall_time_ns) /
                    static_cast<double>(accel.wall_time_ns);
    return r;
}

}  // namespace kmpp
