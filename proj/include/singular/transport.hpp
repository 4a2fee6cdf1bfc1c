#pragma once

#include "singular/dyadic.hpp"
#include "singular/numeric.hpp"

#include <utility>

namespace singular {

// Source interval I0 = [t0, t0 + 2^-n0] and target I1 = [t1, t1 + 2^-n1]
// with componentwise comparable digit counts: zeros(t1) >= zeros(t0) and
// ones(t1) >= ones(t0). Under these constraints a copy of I1's mass profile
// can be placed inside I0 by pure digit bookkeeping, uniformly in the
// measure parameter.
class TransportProblem {
public:
    TransportProblem(DyadicInterval source, DyadicInterval target);

    const DyadicInterval& source() const { return source_; }
    const DyadicInterval& target() const { return target_; }

    // m: extra zeros the target carries; k: extra ones.
    unsigned extra_zeros() const { return extra_zeros_; }
    unsigned extra_ones() const { return extra_ones_; }

private:
    DyadicInterval source_;
    DyadicInterval target_;
    unsigned extra_zeros_ = 0;
    unsigned extra_ones_ = 0;
};

// The level-n1 subinterval J of I0 whose left endpoint has the same digit
// counts as t1, namely
//   J = [t0 + 2^-(n0+m) - 2^-(n0+m+k), t0 + 2^-(n0+m)].
// Digit-count equality forces mu_p(J) = mu_p(I1) for every parameter p at
// once.
DyadicInterval match_interval(const TransportProblem& prob);

// Rigid shift x = min J - t1 taking I1 onto J, as an exact rational.
Rational transport_shift(const TransportProblem& prob);

// Applies the shift to a subinterval [alpha, beta] of I1 (endpoints dyadic,
// alpha < beta, both inside I1). Returns the shifted endpoints, re-expressed
// at a common grid fine enough to hold the shift exactly.
std::pair<DyadicRational, DyadicRational> translate_subinterval(
    const TransportProblem& prob, const DyadicRational& alpha,
    const DyadicRational& beta);

// Floating fallback for endpoints that are not dyadic rationals.
std::pair<double, double> translate_subinterval(const TransportProblem& prob,
                                                double alpha, double beta);

}  // namespace singular
