#include "kmpp/synthetic.hpp"

#include <cmath>
#include <numbers>

#include "kmpp/errors.hpp"
#include "kmpp/random.hpp"

namespace kmpp {

namespace {

// Box-Muller over the portable uniform stream; std::normal_distribution is
// implementation-defined and would break cross-platform reproducibility.
class GaussianSource {
public:
    explicit GaussianSource(RandomStream& rng) : rng_(rng) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = rng_.uniform();
        while (u1 <= 0.0) u1 = rng_.uniform();
        const double u2 = rng_.uniform();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = mag * std::sin(angle);
        have_spare_ = true;
        return mag * std::cos(angle);
    }

    /// Standard normal truncated to [-limit, limit], by resampling.
    double next_truncated(double limit) {
        double v = next();
        while (std::abs(v) > limit) v = next();
        return v;
    }

private:
    RandomStream& rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

Dataset generate_gaussian_mixture(const SyntheticSpec& spec) {
    if (spec.components < 1 || spec.n < spec.components)
        throw ContractViolation("gaussian-mixture: need n >= components >= 1");
    if (spec.spread <= 0.0 || spec.separation <= 0.0)
        throw ContractViolation("gaussian-mixture: spread and separation must be positive");

    RandomStream rng(spec.seed);
    GaussianSource gauss(rng);

    // Component centers on a jittered grid: spacing 2*separation with jitter
    // within +-separation/2 keeps every pair at least `separation` apart.
    std::size_t cells_per_dim = 1;
    while (std::pow(static_cast<double>(cells_per_dim), static_cast<double>(spec.d)) <
           static_cast<double>(spec.components))
        ++cells_per_dim;
    const double spacing = 2.0 * spec.separation;
    std::vector<double> centers(spec.components * spec.d);
    for (std::size_t c = 0; c < spec.components; ++c) {
        std::size_t cell = c;
        for (std::size_t j = 0; j < spec.d; ++j) {
            const auto coord = static_cast<double>(cell % cells_per_dim);
            cell /= cells_per_dim;
            const double jitter = (rng.uniform() - 0.5) * spec.separation * 0.5;
            centers[c * spec.d + j] = coord * spacing + jitter;
        }
    }

    // Points round-robin across components, 5-sigma truncated so that every
    // point provably stays within SED (5*spread)^2 of its own center.
    std::vector<double> data(spec.n * spec.d);
    for (std::size_t i = 0; i < spec.n; ++i) {
        const std::size_t c = i % spec.components;
        for (std::size_t j = 0; j < spec.d; ++j)
            data[i * spec.d + j] =
                centers[c * spec.d + j] + gauss.next_truncated(5.0) * spec.spread;
    }
    return make_dataset(spec.n, spec.d, std::move(data));
}

Dataset generate_uniform_box(const SyntheticSpec& spec) {
    if (spec.spread <= 0.0) throw ContractViolation("uniform-box: spread must be positive");
    RandomStream rng(spec.seed);
    std::vector<double> data(spec.n * spec.d);
    for (double& v : data) v = rng.uniform() * spec.spread;
    return make_dataset(spec.n, spec.d, std::move(data));
}

Dataset generate_sphere_shell(const SyntheticSpec& spec) {
    if (spec.shell_radii.empty())
        throw ContractViolation("sphere-shell: need at least one radius");
    for (double r : spec.shell_radii)
        if (r <= 0.0) throw ContractViolation("sphere-shell: radii must be positive");
    std::vector<double> weights = spec.shell_weights;
    if (weights.empty()) weights.assign(spec.shell_radii.size(), 1.0);
    if (weights.size() != spec.shell_radii.size())
        throw ContractViolation("sphere-shell: one weight per radius");
    double weight_total = 0.0;
    for (double v : weights) {
        if (v < 0.0) throw ContractViolation("sphere-shell: weights must be nonnegative");
        weight_total += v;
    }
    if (weight_total <= 0.0) throw ContractViolation("sphere-shell: all weights zero");

    RandomStream rng(spec.seed);
    GaussianSource gauss(rng);
    std::vector<double> data(spec.n * spec.d);
    for (std::size_t i = 0; i < spec.n; ++i) {
        // Pick the shell, then a uniform direction via a normalized gaussian.
        const double pick = rng.uniform() * weight_total;
        std::size_t shell = 0;
        double acc = 0.0;
        for (std::size_t s = 0; s < weights.size(); ++s) {
            acc += weights[s];
            if (pick < acc) {
                shell = s;
                break;
            }
        }
        double radius = spec.shell_radii[shell];
        if (spec.radial_jitter > 0.0) {
            radius += gauss.next() * spec.radial_jitter;
            if (radius < 1e-12) radius = 1e-12;
        }
        double norm_sq = 0.0;
        std::span<double> row{data.data() + i * spec.d, spec.d};
        do {
            norm_sq = 0.0;
            for (double& v : row) {
                v = gauss.next();
                norm_sq += v * v;
            }
        } while (norm_sq <= 0.0);
        const double scale = radius / std::sqrt(norm_sq);
        for (double& v : row) v *= scale;
    }
    return make_dataset(spec.n, spec.d, std::move(data));
}

}  // namespace

SyntheticSpec::Generator generator_from_string(const std::string& name) {
    if (name == "gaussian-mixture") return SyntheticSpec::Generator::gaussian_mixture;
    if (name == "uniform-box") return SyntheticSpec::Generator::uniform_box;
    if (name == "sphere-shell") return SyntheticSpec::Generator::sphere_shell;
    throw ContractViolation("unknown generator: " + name);
}

std::string to_string(SyntheticSpec::Generator gen) {
    switch (gen) {
        case SyntheticSpec::Generator::gaussian_mixture: return "gaussian-mixture";
        case SyntheticSpec::Generator::uniform_box: return "uniform-box";
        case SyntheticSpec::Generator::sphere_shell: return "sphere-shell";
    }
    return "?";
}

Dataset generate(const SyntheticSpec& spec) {
    if (spec.n < 1 || spec.d < 1)
        throw ContractViolation("generate: need n >= 1 and d >= 1");
    switch (spec.generator) {
        case SyntheticSpec::Generator::gaussian_mixture: return generate_gaussian_mixture(spec);
        case SyntheticSpec::Generator::uniform_box: return generate_uniform_box(spec);
        case SyntheticSpec::Generator::sphere_shell: return generate_sphere_shell(spec);
    }
    throw ContractViolation("generate: unknown generator");
}

}  // namespace kmpp
