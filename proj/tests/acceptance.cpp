// Acceptance suite: one line per criterion, [PASS]/[FAIL] for gating checks,
// [WARN] for the non-gating wall-time comparison. Exit code is the number of
// gating failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "json.hpp"
#include "kmpp/analysis.hpp"
#include "kmpp/harness.hpp"
#include "kmpp/json_canon.hpp"
#include "kmpp/sampling.hpp"
#include "kmpp/seed_accel.hpp"
#include "kmpp/seed_standard.hpp"
#include "kmpp/synthetic.hpp"
#include "oracles.hpp"

using namespace kmpp;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

class CountingAudit : public FilterAudit {
public:
    explicit CountingAudit(const Dataset& ds) : ds_(ds) {}

    void on_skip(const SkipEvent& ev) override {
        ++invocations;
        const auto c_new = ds_.row(ev.new_center);
        if (ev.kind == SkipEvent::Kind::point_filter2 ||
            ev.kind == SkipEvent::Kind::point_norm) {
            if (sed(ds_.row(ev.point), c_new) < ev.point_weight) ++violations;
            return;
        }
        for (std::uint32_t m : ev.members)
            if (sed(ds_.row(m), c_new) < ev.weights[m]) ++violations;
    }

    std::uint64_t invocations = 0;
    std::uint64_t violations = 0;

private:
    const Dataset& ds_;
};

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criterion 1 & 2: exactness across configurations + filter soundness ----

Outcome criterion_exactness(std::uint64_t* audit_invocations,
                            std::uint64_t* audit_violations) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    RandomStream meta(20240601);
    *audit_invocations = 0;
    *audit_violations = 0;

    for (int instance = 0; instance < 100; ++instance) {
        const std::size_t n = 50 + meta.uniform_index(1951);   // [50, 2000]
        const std::size_t d = 2 + meta.uniform_index(31);      // [2, 32]
        const std::size_t k =
            2 + meta.uniform_index(std::min<std::size_t>(63, n - 1));  // [2, 64]
        const Dataset ds = test::random_dataset(n, d, 77000 + instance, 50.0);
        const std::uint64_t seed = 31000 + instance;

        RandomStream std_rng(seed);
        const auto reference = standard_seed(ds, k, std_rng, SamplingMode::strict, nullptr,
                                             TraceLevel::weights);

        // brute-force weight oracle against the standard trace
        for (std::size_t it = 1; it < reference.trace.size(); ++it) {
            const auto brute = test::brute_force_weights(
                ds, std::span<const std::size_t>(reference.centers.data(), it));
            for (std::size_t i = 0; i < n; ++i)
                if (!test::nearly_equal(reference.trace[it].weights[i], brute[i], 1e-9)) {
                    out.fail("standard weights diverge from brute force (instance " +
                             std::to_string(instance) + ")");
                    return out;
                }
        }

        struct Config {
            bool norm_filter;
            bool center_skip;
            const char* name;
        };
        const Config configs[] = {{false, false, "tie"},
                                  {true, false, "tie+norm"},
                                  {true, true, "tie+norm+center_skip"}};
        for (const auto& config : configs) {
            CountingAudit audit(ds);
            AccelConfig cfg;
            cfg.sampling_mode = SamplingMode::strict;
            cfg.norm_filter = config.norm_filter;
            cfg.center_skip = config.center_skip;
            cfg.trace = TraceLevel::weights;
            cfg.audit = &audit;
            RandomStream rng(seed);
            const auto result = accel_seed(ds, k, rng, cfg);
            *audit_invocations += audit.invocations;
            *audit_violations += audit.violations;
            if (result.centers != reference.centers) {
                out.fail(std::string(config.name) + " center sequence diverges (instance " +
                         std::to_string(instance) + ")");
                return out;
            }
            for (std::size_t it = 0; it < result.trace.size(); ++it)
                if (result.trace[it].weights != reference.trace[it].weights) {
                    out.fail(std::string(config.name) +
                             " weight vector diverges (instance " +
                             std::to_string(instance) + ", iteration " +
                             std::to_string(it) + ")");
                    return out;
                }
        }
    }

    const double secs = elapsed_seconds(start);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "100 instances, 4 configurations, %.1fs", secs);
    out.detail = buf;
    if (secs >= 60.0) out.fail("runtime exceeded 60s");
    return out;
}

// ---- criterion 3: two-step sampling correctness ----

Outcome criterion_sampling() {
    Outcome out;

    // exact enumeration on small integer-weight instances
    RandomStream meta(5151);
    std::size_t enumerated = 0;
    for (int instance = 0; instance < 40; ++instance) {
        const std::size_t n_clusters = 1 + meta.uniform_index(4);
        std::vector<std::vector<std::uint64_t>> member_weights(n_clusters);
        std::size_t n = 0;
        for (auto& cw : member_weights) {
            const std::size_t m = 1 + meta.uniform_index(3);
            for (std::size_t i = 0; i < m && n < 12; ++i, ++n)
                cw.push_back(meta.uniform_index(9));
        }
        ClusterState cs;
        cs.init_points(n);
        WeightVector weights;
        std::uint64_t total = 0;
        {
            std::uint32_t point = 0;
            for (const auto& cw : member_weights) {
                cs.clusters.emplace_back();
                auto& cl = cs.clusters.back();
                cl.center = point;
                for (std::uint64_t w : cw) {
                    weights.w.push_back(static_cast<double>(w));
                    cs.insert(point, static_cast<std::uint32_t>(cs.clusters.size() - 1), 0);
                    cl.parts[0].weight_sum += static_cast<double>(w);
                    cl.parts[0].radius_sq =
                        std::max(cl.parts[0].radius_sq, static_cast<double>(w));
                    total += w;
                    ++point;
                }
            }
        }
        if (total == 0) continue;
        ++enumerated;

        // walk every rectangle of the (u1, u2) unit square; the measure of
        // point i's preimage is (s_j/total)*(w_i/s_j) = w_i/total exactly
        std::uint64_t cluster_prefix = 0;
        std::size_t point_base = 0;
        for (std::size_t j = 0; j < n_clusters; ++j) {
            std::uint64_t s_j = 0;
            for (auto w : member_weights[j]) s_j += w;
            const double u1_lo =
                static_cast<double>(cluster_prefix) / static_cast<double>(total);
            cluster_prefix += s_j;
            const double u1_hi =
                static_cast<double>(cluster_prefix) / static_cast<double>(total);
            if (s_j > 0) {
                const double u1_mid = (u1_lo + u1_hi) / 2.0;
                std::uint64_t member_prefix = 0;
                for (std::size_t i = 0; i < member_weights[j].size(); ++i) {
                    const std::uint64_t wi = member_weights[j][i];
                    const double u2_lo =
                        static_cast<double>(member_prefix) / static_cast<double>(s_j);
                    member_prefix += wi;
                    const double u2_hi =
                        static_cast<double>(member_prefix) / static_cast<double>(s_j);
                    if (wi == 0) continue;
                    const auto picked =
                        two_step_select(cs, weights, u1_mid, (u2_lo + u2_hi) / 2.0);
                    if (picked.first != j || picked.second != point_base + i) {
                        out.fail("enumerated rectangle selects the wrong point");
                        return out;
                    }
                }
            }
            point_base += member_weights[j].size();
        }
    }
    if (enumerated < 30) out.fail("too few enumerable instances");

    // chi-square at n = 100 over 1e5 draws
    RandomStream wgen(777);
    const std::size_t n = 100;
    std::vector<std::vector<double>> member_weights(7);
    for (std::size_t i = 0; i < n; ++i)
        member_weights[i % member_weights.size()].push_back(0.1 + wgen.uniform());
    ClusterState cs;
    cs.init_points(n);
    WeightVector weights;
    weights.w.resize(n);
    std::vector<double> expected(n, 0.0);
    double total = 0.0;
    {
        std::uint32_t point = 0;
        for (const auto& cw : member_weights) {
            cs.clusters.emplace_back();
            auto& cl = cs.clusters.back();
            cl.center = point;
            for (double w : cw) {
                weights.w[point] = w;
                cs.insert(point, static_cast<std::uint32_t>(cs.clusters.size() - 1), 0);
                cl.parts[0].weight_sum += w;
                cl.parts[0].radius_sq = std::max(cl.parts[0].radius_sq, w);
                total += w;
                ++point;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) expected[i] = 0.0;
    {
        std::uint32_t point = 0;
        for (const auto& cw : member_weights)
            for (double w : cw) expected[point++] = w / total;
    }
    TwoStepSampler sampler;
    RandomStream rng(161616);
    std::vector<std::uint64_t> hits(n, 0);
    const std::uint64_t trials = 100000;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const double u1 = rng.uniform();
        const double u2 = rng.uniform();
        ++hits[sampler.select(cs, weights.w, u1, u2).second];
    }
    const double stat = test::chi_square_statistic(hits, expected, trials);
    const double p = test::chi_square_p_value(stat, static_cast<double>(n - 1));
    char buf[128];
    std::snprintf(buf, sizeof(buf), "enumeration ok, chi-square p = %.4f over 1e5 draws", p);
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += buf;
    if (!(p > 0.001)) out.fail("chi-square p <= 0.001");
    return out;
}

// ---- criteria 4 & 9: desk-scale counter reduction and wall-time sanity ----

Dataset mixture_instance() {
    SyntheticSpec spec;
    spec.generator = SyntheticSpec::Generator::gaussian_mixture;
    spec.n = 50000;
    spec.d = 4;
    spec.components = 64;
    spec.spread = 1.0;
    spec.separation = 100.0;
    spec.seed = 424242;
    return generate(spec);
}

Outcome criterion_counter_reduction(const Dataset& ds) {
    Outcome out;
    auto run = [&](bool accel, std::size_t k) {
        Counters counters;
        RandomStream rng(mix_seed(5, accel ? 2 : 1, k, 0));
        if (accel)
            accel_seed(ds, k, rng, AccelConfig{}, &counters);
        else
            standard_seed(ds, k, rng, SamplingMode::fast, &counters);
        return counters;
    };
    const Counters std16 = run(false, 16);
    const Counters std256 = run(false, 256);
    const Counters tie16 = run(true, 16);
    const Counters tie256 = run(true, 256);

    const double visits_pct_256 = 100.0 *
                                  static_cast<double>(tie256.points_examined_update) /
                                  static_cast<double>(std256.points_examined_update);
    const double dist_pct_256 = 100.0 * static_cast<double>(tie256.distances_computed()) /
                                static_cast<double>(std256.distances_computed());
    const double visits_pct_16 = 100.0 *
                                 static_cast<double>(tie16.points_examined_update) /
                                 static_cast<double>(std16.points_examined_update);
    const double dist_pct_16 = 100.0 * static_cast<double>(tie16.distances_computed()) /
                               static_cast<double>(std16.distances_computed());

    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "k=256: visits %.1f%%, distances %.1f%%; k=16: visits %.1f%%, "
                  "distances %.1f%%",
                  visits_pct_256, dist_pct_256, visits_pct_16, dist_pct_16);
    out.detail = buf;
    if (!(visits_pct_256 < 50.0)) out.fail("points examined not below 50%");
    if (!(dist_pct_256 < 50.0)) out.fail("distances not below 50%");
    if (!(visits_pct_256 < visits_pct_16)) out.fail("visit ratio not lower at k=256");
    if (!(dist_pct_256 < dist_pct_16)) out.fail("distance ratio not lower at k=256");
    return out;
}

Outcome criterion_wall_time(const Dataset& ds) {
    Outcome out;
    const std::size_t k = 1024;
    const int reps = 3;
    auto mean_time = [&](bool accel) {
        double total = 0.0;
        for (int r = 0; r < reps; ++r) {
            RandomStream rng(mix_seed(9, accel ? 2 : 1, k, r));
            const auto t0 = std::chrono::steady_clock::now();
            if (accel)
                accel_seed(ds, k, rng, AccelConfig{});
            else
                standard_seed(ds, k, rng);
            total += elapsed_seconds(t0);
        }
        return total / reps;
    };
    const double t_std = mean_time(false);
    const double t_tie = mean_time(true);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "standard %.3fs vs tie %.3fs (mean of %d at k=%zu)",
                  t_std, t_tie, reps, k);
    out.detail = buf;
    out.pass = t_tie <= t_std;
    return out;
}

// ---- criterion 5: norm-filter advantage and overhead ----

Outcome criterion_norm_filter() {
    Outcome out;

    // radial gaussian shells: norm variance above 70
    SyntheticSpec shells;
    shells.generator = SyntheticSpec::Generator::sphere_shell;
    shells.n = 20000;
    shells.d = 8;
    shells.shell_radii = {0.1, 10.0};
    shells.shell_weights = {0.9, 0.1};
    shells.radial_jitter = 0.02;
    shells.seed = 99;
    const Dataset layered = generate(shells);
    const double variance = norm_variance_pct(layered, ReferencePoint::origin(layered.d));
    if (!(variance > 70.0))
        out.fail("shell instance variance " + std::to_string(variance) + " <= 70");

    const std::size_t k = 256;
    const std::uint64_t seed = 4242;
    auto run = [&](const Dataset& ds, bool norm_filter) {
        Counters counters;
        AccelConfig cfg;
        cfg.norm_filter = norm_filter;
        cfg.sampling_mode = SamplingMode::strict;  // same seed => paired runs
        RandomStream rng(seed);
        accel_seed(ds, k, rng, cfg, &counters);
        return counters;
    };
    const Counters tie_layered = run(layered, false);
    const Counters norm_layered = run(layered, true);
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "shells: variance %.1f%%, tie %llu vs tie+norm %llu distances", variance,
                  static_cast<unsigned long long>(tie_layered.distances_computed()),
                  static_cast<unsigned long long>(norm_layered.distances_computed()));
    out.detail = buf;
    if (!(norm_layered.distances_computed() < tie_layered.distances_computed()))
        out.fail("norm filter saved no distances on the high-variance instance");

    // exact-norm sphere: every point carries a bitwise-identical squared
    // norm, the filter's provable worst case (generator shells carry
    // ulp-level norm noise that would split the partitions)
    std::vector<double> data;
    const std::size_t d = 8;
    const double a = 3.0, b = 4.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (i == j) continue;
            for (double sa : {a, -a})
                for (double sb : {b, -b}) {
                    std::vector<double> row(d, 0.0);
                    row[i] = sa;
                    row[j] = sb;
                    data.insert(data.end(), row.begin(), row.end());
                }
        }
    const std::size_t sphere_n = data.size() / d;
    const Dataset sphere = make_dataset(sphere_n, d, std::move(data));
    const double sphere_variance = norm_variance_pct(sphere, ReferencePoint::origin(d));
    if (sphere_variance != 0.0) out.fail("constructed sphere variance is not exactly 0");

    const std::size_t sphere_k = 64;
    auto run_sphere = [&](bool norm_filter) {
        Counters counters;
        AccelConfig cfg;
        cfg.norm_filter = norm_filter;
        cfg.sampling_mode = SamplingMode::strict;
        RandomStream rng(31415);
        accel_seed(sphere, sphere_k, rng, cfg, &counters);
        return counters;
    };
    const Counters tie_sphere = run_sphere(false);
    const Counters norm_sphere = run_sphere(true);
    if (norm_sphere.distances_point_center < tie_sphere.distances_point_center)
        out.fail("norm filter computed fewer point-center distances on the sphere");
    if (norm_sphere.norms_computed != tie_sphere.norms_computed + sphere_n)
        out.fail("norm overhead is not exactly n");
    std::snprintf(buf, sizeof(buf),
                  "; sphere(n=%zu): point-center %llu vs %llu, extra norms %llu", sphere_n,
                  static_cast<unsigned long long>(tie_sphere.distances_point_center),
                  static_cast<unsigned long long>(norm_sphere.distances_point_center),
                  static_cast<unsigned long long>(norm_sphere.norms_computed));
    out.detail += buf;
    return out;
}

// ---- criterion 6: standard closed form ----

Outcome criterion_closed_form() {
    Outcome out;
    RandomStream meta(8080);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 10 + meta.uniform_index(500);
        const std::size_t k = 1 + meta.uniform_index(n);
        const Dataset ds = test::random_dataset(n, 1 + meta.uniform_index(6), 600 + t);
        Counters counters;
        RandomStream rng(t);
        standard_seed(ds, k, rng, SamplingMode::fast, &counters);
        std::uint64_t expected = 0;
        for (std::size_t m = 1; m < k; ++m) expected += n - m;
        if (counters.distances_computed() != expected) {
            out.fail("closed form violated at n=" + std::to_string(n) +
                     ", k=" + std::to_string(k));
            return out;
        }
    }
    out.detail = "20 random (n, k) pairs";
    return out;
}

// ---- criterion 7: norm-variance statistic ----

Outcome criterion_norm_variance() {
    Outcome out;

    SyntheticSpec spec;
    spec.generator = SyntheticSpec::Generator::sphere_shell;
    spec.n = 500;
    spec.d = 5;
    spec.seed = 21;
    const Dataset sphere = generate(spec);
    const double on_sphere = norm_variance_pct(sphere, ReferencePoint::origin(5));
    if (!(on_sphere < 1e-9)) out.fail("sphere variance not ~0");

    const Dataset pair = make_dataset(2, 1, {0.0, 2.0});
    if (norm_variance_pct(pair, ReferencePoint::origin(1)) != 50.0)
        out.fail("1-d {0,2} instance is not exactly 50");

    const Dataset ds = test::random_dataset(200, 3, 1234);
    const double base = norm_variance_pct(ds, ReferencePoint::origin(3));
    for (double alpha : {1e-3, 0.37, 42.0, 1e6}) {
        std::vector<double> scaled = ds.data;
        for (double& v : scaled) v *= alpha;
        const double v = norm_variance_pct(make_dataset(ds.n, ds.d, std::move(scaled)),
                                           ReferencePoint::origin(3));
        if (std::abs(v - base) > 1e-12 * 100.0) {
            out.fail("scale invariance violated at alpha=" + std::to_string(alpha));
            break;
        }
    }

    const auto [best, report] = best_reference(sphere);
    double best_score = 0.0;
    for (const auto& e : report.entries) best_score = std::max(best_score, e.variance_pct);
    if (best.kind == ReferencePoint::Kind::origin ||
        best.kind == ReferencePoint::Kind::mean || !(best_score > 1.0))
        out.fail("best_reference picked a near-zero-variance candidate on the sphere");

    char buf[128];
    std::snprintf(buf, sizeof(buf), "sphere %.2e, pair 50.0, best=%s at %.1f%%", on_sphere,
                  to_string(best.kind).c_str(), best_score);
    out.detail = buf;
    return out;
}

// ---- criterion 8: harness determinism and byte-stable reports ----

Outcome criterion_harness() {
    Outcome out;
    const Dataset ds = test::random_dataset(2000, 4, 2024, 20.0);
    ExperimentPlan plan;
    plan.dataset_source = "acceptance";
    plan.k_values = {1, 4, 16};
    plan.repetitions = 2;
    plan.base_seed = 555;
    plan.record_centers = true;

    plan.concurrent_jobs = 1;
    const RunReport serial = run_plan(plan, ds);
    plan.concurrent_jobs = 4;
    const RunReport parallel = run_plan(plan, ds);

    if (serial.records.size() != parallel.records.size()) {
        out.fail("record counts differ across job counts");
        return out;
    }
    for (std::size_t i = 0; i < serial.records.size(); ++i) {
        const auto& x = serial.records[i];
        const auto& y = parallel.records[i];
        const bool same =
            x.variant == y.variant && x.k == y.k && x.seed == y.seed &&
            x.centers == y.centers &&
            x.counters.points_examined_update == y.counters.points_examined_update &&
            x.counters.points_examined_sampling == y.counters.points_examined_sampling &&
            x.counters.distances_point_center == y.counters.distances_point_center &&
            x.counters.distances_center_center == y.counters.distances_center_center &&
            x.counters.norms_computed == y.counters.norms_computed;
        if (!same) {
            out.fail("cell " + std::to_string(i) + " differs between 1 and 4 jobs");
            return out;
        }
    }

    const std::string first = report_to_json(serial);
    const std::string second = dump_canonical(nlohmann::ordered_json::parse(first));
    if (first != second) out.fail("JSON round-trip is not byte-identical");
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%zu cells identical across jobs, %zu-byte report",
                  serial.records.size(), first.size());
    out.detail = buf;
    return out;
}

}  // namespace

int main() {
    int gating_failures = 0;
    auto print = [&](int id, const char* name, const Outcome& result, bool gating = true) {
        const char* tag = result.pass ? "[PASS]" : (gating ? "[FAIL]" : "[WARN]");
        if (!result.pass && gating) ++gating_failures;
        std::printf("%s criterion %d: %s%s%s\n", tag, id, name,
                    result.detail.empty() ? "" : " -- ", result.detail.c_str());
        std::fflush(stdout);
    };

    std::uint64_t audit_invocations = 0;
    std::uint64_t audit_violations = 0;
    print(1, "exactness across variants",
          criterion_exactness(&audit_invocations, &audit_violations));

    {
        Outcome out;
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%llu audited skips, %llu violations",
                      static_cast<unsigned long long>(audit_invocations),
                      static_cast<unsigned long long>(audit_violations));
        out.detail = buf;
        if (audit_invocations < 100000) out.fail("fewer than 1e5 audited invocations");
        if (audit_violations != 0) out.fail("filter soundness violations");
        print(2, "filter soundness", out);
    }

    print(3, "two-step sampling correctness", criterion_sampling());

    const Dataset mixture = mixture_instance();
    print(4, "counter reduction on the mixture instance",
          criterion_counter_reduction(mixture));
    print(5, "norm-filter advantage and overhead", criterion_norm_filter());
    print(6, "standard-variant distance closed form", criterion_closed_form());
    print(7, "norm-variance statistic", criterion_norm_variance());
    print(8, "harness determinism and report stability", criterion_harness());
    print(9, "wall-time sanity (non-gating)", criterion_wall_time(mixture),
          /*gating=*/false);

    if (gating_failures == 0)
        std::printf("acceptance: all gating criteria passed\n");
    else
        std::printf("acceptance: %d gating criteria FAILED\n", gating_failures);
    return gating_failures;
}
