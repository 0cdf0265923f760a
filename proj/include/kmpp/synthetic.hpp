#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kmpp/geometry.hpp"

namespace kmpp {

/// Synthetic instance description. gaussian-mixture places component centers
/// on a jittered grid with pairwise distance >= separation and draws
/// 5-sigma-truncated gaussian points around them; sphere-shell emits points
/// on one or more concentric shells (the norm filter's worst case when a
/// single exact shell is used); uniform-box fills [0, spread)^d.
struct SyntheticSpec {
    enum class Generator { gaussian_mixture, uniform_box, sphere_shell };

    Generator generator = Generator::gaussian_mixture;
    std::size_t n = 1000;
    std::size_t d = 2;
    std::uint64_t seed = 1;

    // gaussian-mixture
    std::size_t components = 4;
    double spread = 1.0;       // per-coordinate sigma (also the box side for uniform-box)
    double separation = 10.0;  // minimum center-center distance

    // sphere-shell
    std::vector<double> shell_radii = {1.0};
    std::vector<double> shell_weights = {};  // defaults to equal mass
    double radial_jitter = 0.0;              // gaussian sigma added to the radius
};

SyntheticSpec::Generator generator_from_string(const std::string& name);
std::string to_string(SyntheticSpec::Generator gen);

/// Deterministic for a fixed spec: the same spec always yields the same
/// dataset, on every platform.
Dataset generate(const SyntheticSpec& spec);

}  // namespace kmpp
