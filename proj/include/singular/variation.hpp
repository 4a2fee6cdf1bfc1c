#pragma once

#include "singular/bernoulli.hpp"
#include "singular/dyadic.hpp"

#include <optional>
#include <vector>

namespace singular {

struct Term {
    Rational coefficient;
    BernoulliParam param;
};

// Finite combination sum_i a_i mu_{p_i} with nonzero coefficients and
// pairwise distinct parameters, kept sorted by parameter. The empty
// combination is the zero measure.
class LinearCombination {
public:
    LinearCombination() = default;
    explicit LinearCombination(std::vector<Term> terms);

    static LinearCombination difference(const BernoulliParam& p,
                                        const BernoulliParam& q);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    // sum |a_i|; dominates every partition variation.
    Rational coefficient_norm() const;

    LinearCombination scaled(const Rational& c) const;
    friend LinearCombination operator+(const LinearCombination& f,
                                       const LinearCombination& g);

private:
    std::vector<Term> terms_;
};

// sum_i a_i mu_{p_i}(I), exact.
Rational combination_measure(const LinearCombination& f,
                             const DyadicInterval& I);

struct VariationEstimate {
    unsigned level = 0;
    Rational value;
    Rational upper_bound;  // sum |a_i|, level independent
};

// V_n(f) = sum over the 2^n level-n intervals of |f(I)|. Two routes:
// leaf enumeration walks every interval, aggregation groups intervals by
// digit counts and sums C(n,j) |sum_i a_i p_i^j (1-p_i)^(n-j)|. They agree
// because f(I) depends on I only through its digit counts.
Rational partition_variation_enumerated(const LinearCombination& f,
                                        unsigned level);
Rational partition_variation_aggregated(const LinearCombination& f,
                                        unsigned level);

// Dispatches on level: enumeration up to kEnumerationCutoff, aggregation
// beyond.
inline constexpr unsigned kEnumerationCutoff = 20;
VariationEstimate partition_variation(const LinearCombination& f,
                                      unsigned level);

// V_0, V_1, ..., V_max_level via the aggregation kernel with shared power
// tables. Nondecreasing in the level.
std::vector<VariationEstimate> variation_curve(const LinearCombination& f,
                                               unsigned max_level);

// |f([0,1])| is 0 for differences, so this is just V_n viewed as a lower
// bound for the total variation norm.
VariationEstimate norm_lower_bound(const LinearCombination& f, unsigned level);

// Lower bound for ||F_p - F_q|| at partition level n. Requires p != q.
VariationEstimate distance(const BernoulliParam& p, const BernoulliParam& q,
                           unsigned level);

struct NonvanishingReport {
    bool pass = false;
    unsigned max_level = 0;
    std::uint64_t intervals_checked = 0;
    std::optional<DyadicInterval> vanishing_interval;
};

// Verifies f(I) != 0 for every dyadic interval of level 1..max_level,
// scanning level by level, left to right, and stopping at the first
// vanishing interval. A finite verifier, not a proof for deeper levels.
NonvanishingReport nonvanishing_check(const LinearCombination& f,
                                      unsigned max_level);

}  // namespace singular
