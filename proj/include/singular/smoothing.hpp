#pragma once

#include "singular/bernoulli.hpp"
#include "singular/dyadic.hpp"

#include <vector>

namespace singular {

// Values of the order-fold iterated integral of F_p on the uniform dyadic
// grid i / 2^depth, i = 0 .. 2^depth. Order 1 is the exact antiderivative at
// every grid point; each further order is the trapezoid prefix sum of the
// previous one, still exact rational arithmetic.
struct SmoothGrid {
    unsigned order = 0;
    unsigned depth = 0;
    Rational step;                 // 2^-depth
    std::vector<Rational> values;  // 2^depth + 1 entries

    DyadicRational point(std::size_t i) const {
        return DyadicRational(Integer(static_cast<unsigned long>(i)), depth);
    }
};

// Requires order >= 1 and depth >= order + 2 (coarser grids leave no room
// for the divided-difference windows below).
SmoothGrid iterated_integral(const BernoulliParam& p, unsigned order,
                             unsigned depth);

struct FiniteDiffReport {
    unsigned order = 0;
    unsigned depth = 0;
    // max over windows of |order-fold difference quotient - F at the window
    // center|; the center of window [i, i+order] is the dyadic point
    // (2i + order) / 2^(depth+1).
    Rational max_deviation;
    // max over windows of (F(right end) - F(left end)) / 2: certified bound
    // on how far the quotient can sit from the window-center value.
    Rational window_bound;
    // one more difference: quotients of order order+1, which estimate the
    // derivative of F and blow up or collapse with its singularity.
    double next_order_median = 0.0;
    double next_order_max = 0.0;
};

// Differentiates the grid back `order` times by forward differences and
// compares against the exact distribution function.
FiniteDiffReport finite_diff_check(const SmoothGrid& grid,
                                   const BernoulliParam& p);

}  // namespace singular
