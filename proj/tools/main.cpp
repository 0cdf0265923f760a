// Command-line entry point: `seed` runs one configuration, `bench` runs the
// full variant x k x repetition matrix, `norms` scores candidate reference
// points, `gen` writes a synthetic dataset as CSV.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kmpp/analysis.hpp"
#include "kmpp/dataset_io.hpp"
#include "kmpp/errors.hpp"
#include "kmpp/harness.hpp"
#include "kmpp/json_canon.hpp"
#include "kmpp/synthetic.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitDegenerate = 4;

struct DatasetOptions {
    std::string input;
    char delimiter = ',';
    bool no_header = false;
    std::vector<std::string> drop;
    std::vector<std::size_t> drop_index;

    std::string generator;
    kmpp::SyntheticSpec spec;

    void attach(CLI::App* cmd) {
        auto* input_opt = cmd->add_option("--input", input, "CSV dataset to load");
        auto* gen_opt = cmd->add_option("--gen", generator,
                                        "synthetic generator: gaussian-mixture, "
                                        "uniform-box or sphere-shell");
        input_opt->excludes(gen_opt);
        gen_opt->excludes(input_opt);

        cmd->add_option("--delimiter", delimiter, "CSV field delimiter");
        cmd->add_flag("--no-header", no_header, "CSV file has no header row");
        cmd->add_option("--drop", drop, "columns to drop by name")->delimiter(',');
        cmd->add_option("--drop-index", drop_index, "columns to drop by zero-based index")
            ->delimiter(',');

        cmd->add_option("--n", spec.n, "points to generate");
        cmd->add_option("--d", spec.d, "dimensions to generate");
        cmd->add_option("--components", spec.components, "mixture component count");
        cmd->add_option("--spread", spec.spread, "component sigma / box side");
        cmd->add_option("--separation", spec.separation, "minimum center separation");
        cmd->add_option("--gen-seed", spec.seed, "generator seed");
        cmd->add_option("--shell-radii", spec.shell_radii, "sphere-shell radii")
            ->delimiter(',');
        cmd->add_option("--shell-weights", spec.shell_weights, "sphere-shell mass per radius")
            ->delimiter(',');
        cmd->add_option("--radial-jitter", spec.radial_jitter,
                        "gaussian sigma added to shell radii");
    }

    kmpp::Dataset load(std::string* description) const {
        if (!input.empty()) {
            kmpp::CsvOptions options;
            options.delimiter = delimiter;
            options.header = !no_header;
            options.drop_names = drop;
            options.drop_indices = drop_index;
            kmpp::LoadSummary summary;
            kmpp::Dataset ds = kmpp::load_csv(input, options, &summary);
            std::fprintf(stderr, "loaded %zu rows (%zu dropped), d=%zu from %s\n", ds.n,
                         summary.rows_dropped, ds.d, input.c_str());
            if (description) *description = input;
            return ds;
        }
        if (generator.empty())
            throw kmpp::ContractViolation("one of --input or --gen is required");
        kmpp::SyntheticSpec s = spec;
        s.generator = kmpp::generator_from_string(generator);
        if (description)
            *description = generator + "(n=" + std::to_string(s.n) +
                           ",d=" + std::to_string(s.d) + ",seed=" + std::to_string(s.seed) +
                           ")";
        return kmpp::generate(s);
    }
};

void write_output(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw kmpp::LoadError("cannot write " + path);
    out << content;
    if (!out) throw kmpp::LoadError("write failed: " + path);
}

int run_seed_or_bench(const DatasetOptions& data_opts, kmpp::ExperimentPlan plan,
                      const std::string& format, const std::string& out_path) {
    const kmpp::Dataset ds = data_opts.load(&plan.dataset_source);
    const kmpp::RunReport report = kmpp::run_plan(plan, ds);
    const std::string content =
        format == "csv" ? kmpp::report_to_csv(report) : kmpp::report_to_json(report);
    write_output(content, out_path);
    for (const auto& rec : report.records)
        if (!rec.error.empty()) {
            std::fprintf(stderr, "cell %s k=%zu rep=%zu failed: %s\n",
                         kmpp::to_string(rec.variant).c_str(), rec.k, rec.repetition,
                         rec.error.c_str());
            return kExitDegenerate;
        }
    return kExitOk;
}

int run_norms(const DatasetOptions& data_opts, const std::vector<std::string>& kinds,
              const std::string& out_path) {
    std::string description;
    const kmpp::Dataset ds = data_opts.load(&description);
    const auto [best, report] = kmpp::best_reference(ds);

    nlohmann::ordered_json j;
    j["dataset"] = description;
    auto& candidates = j["candidates"];
    candidates = nlohmann::ordered_json::array();
    for (const auto& entry : report.entries) {
        const std::string kind = kmpp::to_string(entry.reference.kind);
        if (!kinds.empty() && std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
            continue;
        nlohmann::ordered_json e;
        e["kind"] = kind;
        e["variance_pct"] = entry.variance_pct;
        e["coords"] = entry.reference.coords;
        candidates.push_back(std::move(e));
    }
    j["best"] = kmpp::to_string(best.kind);
    write_output(kmpp::dump_canonical(j), out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact k-means++ seeding benchmark"};
    app.require_subcommand(1);

    // seed
    auto* seed_cmd = app.add_subcommand("seed", "run one seeding configuration");
    DatasetOptions seed_data;
    seed_data.attach(seed_cmd);
    std::string variant = "standard";
    std::size_t k = 8;
    std::uint64_t seed_value = 1;
    std::string mode = "fast";
    bool norm_filter = false;
    bool center_skip = false;
    std::string reference = "origin";
    std::string seed_out;
    std::string seed_format = "json";
    seed_cmd->add_option("--variant", variant, "standard, tie or tie+norm");
    seed_cmd->add_option("--k", k, "number of centers")->required();
    seed_cmd->add_option("--seed", seed_value, "RNG seed");
    seed_cmd->add_option("--mode", mode, "fast or strict sampling")
        ->check(CLI::IsMember({"fast", "strict"}));
    seed_cmd->add_flag("--norm-filter", norm_filter, "force the norm filter on");
    seed_cmd->add_flag("--center-skip", center_skip, "enable the center-pair skip cache");
    seed_cmd->add_option("--reference", reference,
                         "norm reference: origin, mean, median, positive-corner or "
                         "mean-norm-point");
    seed_cmd->add_option("--out", seed_out, "output path (stdout when omitted)");
    seed_cmd->add_option("--format", seed_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "run the full experiment matrix");
    DatasetOptions bench_data;
    bench_data.attach(bench_cmd);
    std::vector<std::string> variants = {"standard", "tie", "tie+norm"};
    std::vector<std::size_t> k_grid;
    std::size_t reps = 10;
    std::size_t jobs = 1;
    std::uint64_t base_seed = 1;
    std::string bench_mode = "fast";
    bool bench_center_skip = false;
    std::string bench_reference = "origin";
    bool record_centers = false;
    std::string bench_out;
    std::string bench_format = "json";
    bench_cmd->add_option("--variants", variants, "variants to run")->delimiter(',');
    bench_cmd->add_option("--k-grid", k_grid,
                          "k values (default: powers of two up to min(4096, n))")
        ->delimiter(',');
    bench_cmd->add_option("--reps", reps, "repetitions per cell");
    bench_cmd->add_option("--jobs", jobs, "concurrent cells");
    bench_cmd->add_option("--seed", base_seed, "base seed for the cell-seed derivation");
    bench_cmd->add_option("--mode", bench_mode, "fast or strict sampling")
        ->check(CLI::IsMember({"fast", "strict"}));
    bench_cmd->add_flag("--center-skip", bench_center_skip,
                        "enable the center-pair skip cache");
    bench_cmd->add_option("--reference", bench_reference, "norm reference kind");
    bench_cmd->add_flag("--record-centers", record_centers,
                        "include chosen center indices in the report");
    bench_cmd->add_option("--out", bench_out, "output path (stdout when omitted)");
    bench_cmd->add_option("--format", bench_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // norms
    auto* norms_cmd = app.add_subcommand("norms", "score candidate reference points");
    DatasetOptions norms_data;
    norms_data.attach(norms_cmd);
    std::vector<std::string> candidates;
    std::string norms_out;
    norms_cmd->add_option("--candidates", candidates,
                          "subset of origin, mean, median, positive-corner, mean-norm-point")
        ->delimiter(',');
    norms_cmd->add_option("--out", norms_out, "output path (stdout when omitted)");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "write a synthetic dataset as CSV");
    DatasetOptions gen_data;
    gen_data.attach(gen_cmd);
    std::string gen_out;
    gen_cmd->add_option("--out", gen_out, "CSV output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (seed_cmd->parsed()) {
            kmpp::Variant v = kmpp::variant_from_string(variant);
            if (norm_filter) {
                if (v == kmpp::Variant::standard)
                    throw kmpp::ContractViolation("--norm-filter needs an accelerated variant");
                v = kmpp::Variant::tie_norm;
            }
            kmpp::ExperimentPlan plan;
            plan.variants = {v};
            plan.k_values = {k};
            plan.repetitions = 1;
            plan.base_seed = seed_value;
            plan.sampling_mode =
                mode == "strict" ? kmpp::SamplingMode::strict : kmpp::SamplingMode::fast;
            plan.center_skip = center_skip;
            plan.reference = kmpp::reference_kind_from_string(reference);
            plan.record_centers = true;
            return run_seed_or_bench(seed_data, std::move(plan), seed_format, seed_out);
        }
        if (bench_cmd->parsed()) {
            kmpp::ExperimentPlan plan;
            plan.variants.clear();
            for (const auto& name : variants)
                plan.variants.push_back(kmpp::variant_from_string(name));
            plan.k_values = k_grid;
            plan.repetitions = reps;
            plan.concurrent_jobs = jobs;
            plan.base_seed = base_seed;
            plan.sampling_mode = bench_mode == "strict" ? kmpp::SamplingMode::strict
                                                        : kmpp::SamplingMode::fast;
            plan.center_skip = bench_center_skip;
            plan.reference = kmpp::reference_kind_from_string(bench_reference);
            plan.record_centers = record_centers;
            return run_seed_or_bench(bench_data, std::move(plan), bench_format, bench_out);
        }
        if (norms_cmd->parsed()) return run_norms(norms_data, candidates, norms_out);
        if (gen_cmd->parsed()) {
            const kmpp::Dataset ds = gen_data.load(nullptr);
            kmpp::write_csv(ds, gen_out);
            return kExitOk;
        }
    } catch (const kmpp::DegenerateWeights& e) {
        std::fprintf(stderr, "degenerate instance: %s\n", e.what());
        return kExitDegenerate;
    } catch (const kmpp::LoadError& e) {
        std::fprintf(stderr, "data error: %s\n", e.what());
        return kExitData;
    } catch (const kmpp::InvalidK& e) {
        std::fprintf(stderr, "invalid arguments: %s\n", e.what());
        return kExitUsage;
    } catch (const kmpp::ContractViolation& e) {
        std::fprintf(stderr, "invalid arguments: %s\n", e.what());
        return kExitUsage;
    } catch (const kmpp::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    }
    return kExitUsage;
}
