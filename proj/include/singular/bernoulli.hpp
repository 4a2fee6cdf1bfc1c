#pragma once

#include "singular/dyadic.hpp"
#include "singular/numeric.hpp"

#include <cstdint>
#include <vector>

namespace singular {

// Bernoulli digit bias, restricted to the asymmetric open interval
// (0, 1/2). The measure mu_p gives each dyadic interval of level n mass
// p^zeros * (1-p)^ones where (zeros, ones) are the digit counts of its left
// endpoint.
class BernoulliParam {
public:
    explicit BernoulliParam(Rational p) : p_(std::move(p)) {
        if (!(p_ > 0 && 2 * p_ < 1))
            throw std::domain_error("parameter must satisfy 0 < p < 1/2");
    }

    static BernoulliParam parse(const std::string& text) {
        return BernoulliParam(parse_rational(text));
    }

    const Rational& value() const { return p_; }
    Rational complement() const { return 1 - p_; }
    double approx() const { return to_double(p_); }

    friend bool operator==(const BernoulliParam& a, const BernoulliParam& b) {
        return a.p_ == b.p_;
    }
    friend bool operator!=(const BernoulliParam& a, const BernoulliParam& b) {
        return !(a == b);
    }

private:
    Rational p_;
};

// mu_p(I), exact.
Rational interval_measure(const BernoulliParam& p, const DyadicInterval& I);

// Exact distribution function F_p(x) for rational x, clamped to [0,1]
// outside the unit interval. For dyadic x the digit extraction terminates
// and the result is exact regardless of depth; for other rationals the
// truncation error is bounded by (1-p)^depth.
Rational cdf(const BernoulliParam& p, const Rational& x, int depth = 64);

// Truncation error bound for the call above: 0 for dyadic x, (1-p)^depth
// otherwise.
Rational cdf_error_bound(const BernoulliParam& p, const Rational& x,
                         int depth = 64);

// Floating backend, same digit-extraction loop in double arithmetic.
double cdf(double p, double x, int depth = 64);

// A_p(x) = integral of F_p from 0 to x, exact for dyadic x. Satisfies
// A(x) = (p/2) A(2x) on [0,1/2] and
// A(x) = p^2/2 + p (x - 1/2) + ((1-p)/2) A(2x-1) on [1/2,1].
Rational antiderivative(const BernoulliParam& p, const DyadicRational& x);

// count i.i.d. draws from mu_p, truncated to the first `truncation` binary
// digits (each digit is 1 with probability p). Deterministic in the seed.
std::vector<double> sample(const BernoulliParam& p, unsigned truncation,
                           std::size_t count, std::uint64_t seed);

struct SeparationMasses {
    unsigned level = 0;
    Rational p_mass;  // mu_p of the favored union A
    Rational q_mass;  // mu_q of the same union
};

// A is the union of level-n intervals whose zero-digit frequency is at least
// as close to p as to q (ties go to p). Masses are exact binomial sums; the
// intervals themselves are never enumerated.
SeparationMasses support_separation(const BernoulliParam& p,
                                    const BernoulliParam& q, unsigned level);

}  // namespace singular
