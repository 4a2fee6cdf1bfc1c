#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace singular {

struct ProbeRow {
    unsigned level = 0;  // h = 2^-level
    double median = 0.0;
};

// Median of |g(x+h) - g(x-h)| / (2h) over `samples` uniform draws of x in
// (0,1), one row per level, the same x reused across levels. For a function
// with a bounded derivative the medians stay bounded; for the singular
// distribution functions here they decay geometrically, which is the
// signature this probe exists to expose.
std::vector<ProbeRow> median_quotient_table(
    const std::function<double(double)>& g, std::size_t samples,
    const std::vector<unsigned>& levels, std::uint64_t seed);

}  // namespace singular
