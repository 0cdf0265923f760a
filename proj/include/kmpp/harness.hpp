#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmpp/counters.hpp"
#include "kmpp/geometry.hpp"
#include "kmpp/seed_result.hpp"

namespace kmpp {

enum class Variant { standard, tie, tie_norm };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& name);
std::uint64_t variant_id(Variant v);

/// One experiment matrix: every (variant, k, repetition) cell runs with a
/// seed derived purely from (base_seed, variant, k, repetition), so cells are
/// reproducible independently of plan composition or job count.
struct ExperimentPlan {
    std::string dataset_source;  // echo only: file path or synthetic spec text
    std::vector<Variant> variants = {Variant::standard, Variant::tie, Variant::tie_norm};
    std::vector<std::size_t> k_values;  // empty: powers of two 1..min(4096, n)
    std::size_t repetitions = 10;
    std::uint64_t base_seed = 1;
    std::size_t concurrent_jobs = 1;
    SamplingMode sampling_mode = SamplingMode::fast;
    bool center_skip = false;
    ReferencePoint::Kind reference = ReferencePoint::Kind::origin;
    bool record_centers = false;
};

struct CellRecord {
    Variant variant = Variant::standard;
    std::size_t k = 0;
    std::size_t repetition = 0;
    std::uint64_t seed = 0;
    Counters counters;
    std::vector<std::size_t> centers;  // only when record_centers
    std::string error;                 // non-empty when the cell failed
};

struct Aggregate {
    Variant variant = Variant::standard;
    std::size_t k = 0;
    double mean_points_examined_update = 0.0;
    double mean_points_examined_sampling = 0.0;
    double mean_distances_computed = 0.0;
    double mean_norms_computed = 0.0;
    double mean_wall_time_ns = 0.0;
};

struct VariantRatios {
    Variant variant = Variant::tie;
    std::size_t k = 0;
    RatioReport ratios;  // vs the standard variant at the same k
};

struct RunReport {
    ExperimentPlan plan;
    std::string seed_policy;  // documents how per-cell seeds were derived
    std::vector<CellRecord> records;
    std::vector<Aggregate> aggregates;
    std::vector<VariantRatios> ratios;
};

/// Expands an empty k grid to powers of two capped at n and validates the plan.
std::vector<std::size_t> resolve_k_grid(const ExperimentPlan& plan, std::size_t n);

/// Executes every cell, up to plan.concurrent_jobs at a time. Each cell owns
/// its stream and counters and sees the dataset read-only, so all outputs
/// except wall times are independent of the job count. Seeding errors are
/// recorded per cell without aborting the plan.
RunReport run_plan(const ExperimentPlan& plan, const Dataset& ds);

enum class ReportFormat { json, csv };

/// JSON: one document with the plan echo, records, aggregates and ratios,
/// canonical key order and 17-significant-digit floats (a parse/re-emit
/// round-trip is byte-identical). CSV: one row per cell in a fixed column
/// order.
void emit_report(const RunReport& report, ReportFormat format, const std::string& path);

std::string report_to_json(const RunReport& report);
std::string report_to_csv(const RunReport& report);

}  // namespace kmpp
