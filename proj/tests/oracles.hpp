#pragma once

// Test-only oracles, deliberately written as the dumbest possible code and
// kept independent of the library's seeding state machines.

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "kmpp/geometry.hpp"
#include "kmpp/random.hpp"

namespace kmpp::test {

/// True D^2 weight vector: for every point, the minimum SED to any chosen
/// center, scanning centers in selection order with strict-decrease updates
/// so ties resolve to the earliest center exactly as the library does.
inline std::vector<double> brute_force_weights(const Dataset& ds,
                                               std::span<const std::size_t> centers) {
    std::vector<double> w(ds.n, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < ds.n; ++i)
        for (std::size_t c : centers) {
            const double d = sed(ds.row(i), ds.row(c));
            if (d < w[i]) w[i] = d;
        }
    return w;
}

inline bool nearly_equal(double a, double b, double rel = 1e-9) {
    const double diff = std::abs(a - b);
    if (diff == 0.0) return true;
    const double scale = std::max(std::abs(a), std::abs(b));
    return diff <= rel * scale;
}

/// Regularized lower incomplete gamma P(a, x), series + continued fraction.
inline double regularized_gamma_p(double a, double x) {
    if (x <= 0.0) return 0.0;
    const double gln = std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a;
        double sum = 1.0 / a;
        double del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-15) break;
        }
        return sum * std::exp(-x + a * std::log(x) - gln);
    }
    // continued fraction for Q(a, x)
    double b = x + 1.0 - a;
    double c = 1e300;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    const double q = std::exp(-x + a * std::log(x) - gln) * h;
    return 1.0 - q;
}

/// p-value of a chi-square statistic with df degrees of freedom.
inline double chi_square_p_value(double statistic, double df) {
    return 1.0 - regularized_gamma_p(df / 2.0, statistic / 2.0);
}

/// Chi-square statistic of observed counts against expected probabilities.
inline double chi_square_statistic(std::span<const std::uint64_t> observed,
                                   std::span<const double> expected_prob,
                                   std::uint64_t trials) {
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double expected = expected_prob[i] * static_cast<double>(trials);
        if (expected == 0.0) continue;
        const double diff = static_cast<double>(observed[i]) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

/// Random dataset with coordinates uniform in [-range, range].
inline Dataset random_dataset(std::size_t n, std::size_t d, std::uint64_t seed,
                              double range = 10.0) {
    RandomStream rng(seed);
    std::vector<double> data(n * d);
    for (double& v : data) v = (rng.uniform() * 2.0 - 1.0) * range;
    return make_dataset(n, d, std::move(data));
}

}  // namespace kmpp::test
