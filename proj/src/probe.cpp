#include "singular/probe.hpp"

#include "singular/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace singular {

std::vector<ProbeRow> median_quotient_table(
    const std::function<double(double)>& g, std::size_t samples,
    const std::vector<unsigned>& levels, std::uint64_t seed) {
    if (samples == 0) throw std::domain_error("probe needs samples >= 1");

    std::mt19937_64 rng = make_rng(seed);
    std::vector<double> xs(samples);
    for (double& x : xs) x = unit_uniform(rng);

    std::vector<ProbeRow> out;
    out.reserve(levels.size());
    std::vector<double> quot(samples);
    for (unsigned level : levels) {
        double h = std::ldexp(1.0, -static_cast<int>(level));
        for (std::size_t i = 0; i < samples; ++i)
            quot[i] = std::abs(g(xs[i] + h) - g(xs[i] - h)) / (2.0 * h);
        auto mid = quot.begin() + samples / 2;
        std::nth_element(quot.begin(), mid, quot.end());
        out.push_back({level, *mid});
    }
    return out;
}

}  // namespace singular
