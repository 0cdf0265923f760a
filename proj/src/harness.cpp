#include "kmpp/harness.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <thread>

#include "kmpp/analysis.hpp"
#include "kmpp/errors.hpp"
#include "kmpp/json_canon.hpp"
#include "kmpp/random.hpp"
#include "kmpp/seed_accel.hpp"
#include "kmpp/seed_standard.hpp"

namespace kmpp {

std::string to_string(Variant v) {
    switch (v) {
        case Variant::standard: return "standard";
        case Variant::tie: return "tie";
        case Variant::tie_norm: return "tie+norm";
    }
    return "?";
}

Variant variant_from_string(const std::string& name) {
    if (name == "standard") return Variant::standard;
    if (name == "tie") return Variant::tie;
    if (name == "tie+norm") return Variant::tie_norm;
    throw ContractViolation("unknown variant: " + name);
}

std::uint64_t variant_id(Variant v) {
    switch (v) {
        case Variant::standard: return 1;
        case Variant::tie: return 2;
        case Variant::tie_norm: return 3;
    }
    return 0;
}

std::vector<std::size_t> resolve_k_grid(const ExperimentPlan& plan, std::size_t n) {
    std::vector<std::size_t> grid = plan.k_values;
    if (grid.empty())
        for (std::size_t k = 1; k <= 4096 && k <= n; k *= 2) grid.push_back(k);
    for (std::size_t k : grid)
        if (k < 1 || k > n)
            throw InvalidK("plan k=" + std::to_string(k) + " outside [1, n=" +
                           std::to_string(n) + "]");
    if (plan.repetitions < 1) throw ContractViolation("plan needs repetitions >= 1");
    if (plan.concurrent_jobs < 1) throw ContractViolation("plan needs concurrent_jobs >= 1");
    return grid;
}

namespace {

CellRecord run_cell(const Dataset& ds, const ExperimentPlan& plan,
                    const ReferencePoint& reference, Variant variant, std::size_t k,
                    std::size_t rep) {
    CellRecord rec;
    rec.variant = variant;
    rec.k = k;
    rec.repetition = rep;
    // Strict mode exists to compare variants on the same draws, so the
    // variant id stays out of the seed there.
    const std::uint64_t vid =
        plan.sampling_mode == SamplingMode::strict ? 0 : variant_id(variant);
    rec.seed = mix_seed(plan.base_seed, vid, k, rep);
    RandomStream rng(rec.seed);
    Counters counters;
    try {
        SeedResult result;
        const auto t0 = std::chrono::steady_clock::now();
        if (variant == Variant::standard) {
            result = standard_seed(ds, k, rng, plan.sampling_mode, &counters);
        } else {
            AccelConfig cfg;
            cfg.norm_filter = (variant == Variant::tie_norm);
            cfg.center_skip = plan.center_skip;
            cfg.sampling_mode = plan.sampling_mode;
            cfg.reference = reference;
            result = accel_seed(ds, k, rng, cfg, &counters);
        }
        const auto t1 = std::chrono::steady_clock::now();
        counters.wall_time_ns = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
        if (plan.record_centers) rec.centers = std::move(result.centers);
    } catch (const Error& e) {
        rec.error = e.what();
    }
    rec.counters = counters;
    return rec;
}

}  // namespace

RunReport run_plan(const ExperimentPlan& plan, const Dataset& ds) {
    RunReport report;
    report.plan = plan;
    report.plan.k_values = resolve_k_grid(plan, ds.n);
    report.seed_policy =
        "cell seed = splitmix64 chain over (base_seed, variant_id, k, repetition); "
        "variant_id is 0 for every variant in strict mode so sequences align";

    const ReferencePoint reference = resolve_reference(ds, plan.reference);

    struct CellKey {
        Variant variant;
        std::size_t k;
        std::size_t rep;
    };
    std::vector<CellKey> cells;
    for (Variant v : plan.variants)
        for (std::size_t k : report.plan.k_values)
            for (std::size_t r = 0; r < plan.repetitions; ++r) cells.push_back({v, k, r});

    report.records.resize(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            const auto& cell = cells[i];
            report.records[i] = run_cell(ds, plan, reference, cell.variant, cell.k, cell.rep);
        }
    };
    const std::size_t jobs = std::min(plan.concurrent_jobs, cells.size());
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Aggregates: arithmetic means over the successful repetitions of a cell
    // group, in (variant, k) plan order.
    for (Variant v : plan.variants) {
        for (std::size_t k : report.plan.k_values) {
            Aggregate agg;
            agg.variant = v;
            agg.k = k;
            std::size_t count = 0;
            for (const auto& rec : report.records) {
                if (rec.variant != v || rec.k != k || !rec.error.empty()) continue;
                agg.mean_points_examined_update +=
                    static_cast<double>(rec.counters.points_examined_update);
                agg.mean_points_examined_sampling +=
                    static_cast<double>(rec.counters.points_examined_sampling);
                agg.mean_distances_computed +=
                    static_cast<double>(rec.counters.distances_computed());
                agg.mean_norms_computed += static_cast<double>(rec.counters.norms_computed);
                agg.mean_wall_time_ns += static_cast<double>(rec.counters.wall_time_ns);
                ++count;
            }
            if (count > 0) {
                const auto c = static_cast<double>(count);
                agg.mean_points_examined_update /= c;
                agg.mean_points_examined_sampling /= c;
                agg.mean_distances_computed /= c;
                agg.mean_norms_computed /= c;
                agg.mean_wall_time_ns /= c;
            }
            report.aggregates.push_back(agg);
        }
    }

    // Ratios of each accelerated variant against standard at the same k.
    auto find_aggregate = [&](Variant v, std::size_t k) -> const Aggregate* {
        for (const auto& a : report.aggregates)
            if (a.variant == v && a.k == k) return &a;
        return nullptr;
    };
    auto pct = [](double accel, double standard) -> std::optional<double> {
        if (standard == 0.0) return std::nullopt;
        return 100.0 * accel / standard;
    };
    for (Variant v : plan.variants) {
        if (v == Variant::standard) continue;
        for (std::size_t k : report.plan.k_values) {
            const Aggregate* accel = find_aggregate(v, k);
            const Aggregate* std_agg = find_aggregate(Variant::standard, k);
            if (!accel || !std_agg) continue;
            VariantRatios vr;
            vr.variant = v;
            vr.k = k;
            vr.ratios.points_examined_update_pct =
                pct(accel->mean_points_examined_update, std_agg->mean_points_examined_update);
            vr.ratios.points_examined_sampling_pct = pct(
                accel->mean_points_examined_sampling, std_agg->mean_points_examined_sampling);
            vr.ratios.distances_computed_pct =
                pct(accel->mean_distances_computed, std_agg->mean_distances_computed);
            vr.ratios.norms_computed_pct =
                pct(accel->mean_norms_computed, std_agg->mean_norms_computed);
            if (accel->mean_wall_time_ns > 0.0)
                vr.ratios.speedup = std_agg->mean_wall_time_ns / accel->mean_wall_time_ns;
            report.ratios.push_back(std::move(vr));
        }
    }
    return report;
}

namespace {

nlohmann::ordered_json counters_to_json(const Counters& c) {
    nlohmann::ordered_json j;
    j["points_examined_update"] = c.points_examined_update;
    j["points_examined_sampling"] = c.points_examined_sampling;
    j["distances_computed"] = c.distances_computed();
    j["distances_point_center"] = c.distances_point_center;
    j["distances_center_center"] = c.distances_center_center;
    j["norms_computed"] = c.norms_computed;
    j["wall_time_ns"] = c.wall_time_ns;
    return j;
}

nlohmann::ordered_json opt_to_json(const std::optional<double>& v) {
    if (!v) return nullptr;
    return *v;
}

}  // namespace

std::string report_to_json(const RunReport& report) {
    nlohmann::ordered_json j;
    auto& plan = j["plan"];
    plan["dataset"] = report.plan.dataset_source;
    auto& variants = plan["variants"];
    variants = nlohmann::ordered_json::array();
    for (Variant v : report.plan.variants) variants.push_back(to_string(v));
    plan["k_values"] = report.plan.k_values;
    plan["repetitions"] = report.plan.repetitions;
    plan["base_seed"] = report.plan.base_seed;
    plan["concurrent_jobs"] = report.plan.concurrent_jobs;
    plan["sampling_mode"] =
        report.plan.sampling_mode == SamplingMode::strict ? "strict" : "fast";
    plan["center_skip"] = report.plan.center_skip;
    plan["reference"] = to_string(report.plan.reference);
    plan["record_centers"] = report.plan.record_centers;
    j["seed_policy"] = report.seed_policy;

    auto& records = j["records"];
    records = nlohmann::ordered_json::array();
    for (const auto& rec : report.records) {
        nlohmann::ordered_json r;
        r["variant"] = to_string(rec.variant);
        r["k"] = rec.k;
        r["rep"] = rec.repetition;
        r["seed"] = rec.seed;
        auto counters = counters_to_json(rec.counters);
        for (auto it = counters.begin(); it != counters.end(); ++it) r[it.key()] = it.value();
        if (report.plan.record_centers) r["centers"] = rec.centers;
        if (!rec.error.empty()) r["error"] = rec.error;
        records.push_back(std::move(r));
    }

    auto& aggregates = j["aggregates"];
    aggregates = nlohmann::ordered_json::array();
    for (const auto& agg : report.aggregates) {
        nlohmann::ordered_json a;
        a["variant"] = to_string(agg.variant);
        a["k"] = agg.k;
        a["mean_points_examined_update"] = agg.mean_points_examined_update;
        a["mean_points_examined_sampling"] = agg.mean_points_examined_sampling;
        a["mean_distances_computed"] = agg.mean_distances_computed;
        a["mean_norms_computed"] = agg.mean_norms_computed;
        a["mean_wall_time_ns"] = agg.mean_wall_time_ns;
        aggregates.push_back(std::move(a));
    }

    auto& ratios = j["ratios"];
    ratios = nlohmann::ordered_json::array();
    for (const auto& vr : report.ratios) {
        nlohmann::ordered_json r;
        r["variant"] = to_string(vr.variant);
        r["k"] = vr.k;
        r["points_examined_update_pct"] = opt_to_json(vr.ratios.points_examined_update_pct);
        r["points_examined_sampling_pct"] =
            opt_to_json(vr.ratios.points_examined_sampling_pct);
        r["distances_computed_pct"] = opt_to_json(vr.ratios.distances_computed_pct);
        r["norms_computed_pct"] = opt_to_json(vr.ratios.norms_computed_pct);
        r["speedup"] = opt_to_json(vr.ratios.speedup);
        ratios.push_back(std::move(r));
    }

    return dump_canonical(j);
}

std::string report_to_csv(const RunReport& report) {
    std::string out =
        "variant,k,rep,points_examined_update,points_examined_sampling,distances,norms,"
        "wall_time_ns\n";
    for (const auto& rec : report.records) {
        out += to_string(rec.variant);
        out += ',' + std::to_string(rec.k);
        out += ',' + std::to_string(rec.repetition);
        out += ',' + std::to_string(rec.counters.points_examined_update);
        out += ',' + std::to_string(rec.counters.points_examined_sampling);
        out += ',' + std::to_string(rec.counters.distances_computed());
        out += ',' + std::to_string(rec.counters.norms_computed);
        out += ',' + std::to_string(rec.counters.wall_time_ns);
        out += '\n';
    }
    return out;
}

void emit_report(const RunReport& report, ReportFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw LoadError("cannot write " + path);
    out << (format == ReportFormat::json ? report_to_json(report) : report_to_csv(report));
    if (!out) throw LoadError("write failed: " + path);
}

}  // namespace kmpp
