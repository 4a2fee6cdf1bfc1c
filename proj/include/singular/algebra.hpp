#pragma once

#include "singular/bernoulli.hpp"
#include "singular/dyadic.hpp"
#include "singular/probe.hpp"

#include <cstdint>
#include <vector>

namespace singular {

// One term a * e^(b x).
struct ExpTerm {
    double coefficient = 0.0;  // a, nonzero
    double exponent = 0.0;     // b
};

// Finite sum of exponential terms with pairwise distinct exponents, kept
// sorted by exponent. The term count is the range; every derivative has the
// same range, which is what makes level-set counting inductive.
class ExpLike {
public:
    explicit ExpLike(std::vector<ExpTerm> terms);

    const std::vector<ExpTerm>& terms() const { return terms_; }
    std::size_t range() const { return terms_.size(); }

private:
    std::vector<ExpTerm> terms_;
};

// Pointwise evaluation. Throws std::overflow_error if any term's exponent
// argument leaves the safe double range.
double eval_explike(const ExpLike& f, double x);

// All solutions of f(x) = c in [lo, hi], each located to within tol, found
// by recursive derivative-root isolation and bisection on the resulting
// monotone pieces. Root count never exceeds range(f). Roots closer than tol
// are merged; if merging cannot resolve a cluster wider than tol the
// tolerance is too coarse and an error says so.
std::vector<double> preimage_points(const ExpLike& f, double c, double lo,
                                    double hi, double tol);
std::size_t count_preimage(const ExpLike& f, double c, double lo, double hi,
                           double tol);

// sqrt(2), sqrt(3), sqrt(5), ...: square roots of the first n primes.
// Rationally independent, so distinct monomial rows below never collide.
std::vector<double> make_generators(unsigned n);

// Rows are exponent vectors over the generators; row r with coefficient a
// contributes a * e^((r . gen) x). Duplicate rows and zero rows are
// rejected.
struct MonomialMatrix {
    std::vector<double> coefficients;
    std::vector<std::vector<unsigned>> rows;
};

ExpLike reduce_polynomial(const MonomialMatrix& matrix,
                          const std::vector<double>& generators);

// f(F_p(x)) with the floating cdf backend.
double compose_with_F(const ExpLike& f, const BernoulliParam& p, double x,
                      int depth = 64);

struct Witness {
    double x_low = 0.0;   // argmin of f(F(.)) on the sampled grid
    double x_high = 0.0;  // argmax
    double gap = 0.0;     // f(F(x_high)) - f(F(x_low))
};

// Searches dyadic grids of increasing depth inside I for two points where
// f(F_p(.)) differs by more than gap_threshold. Exhausting every depth up
// to max_depth without a witness throws (a constant composition, which the
// structure of f rules out, would be the only way to get there).
Witness nonconstancy_witness(const ExpLike& f, const BernoulliParam& p,
                             const DyadicInterval& I,
                             double gap_threshold = 1e-9,
                             unsigned max_depth = 20);

// Median difference-quotient table for f(F_p(.)).
std::vector<ProbeRow> singularity_probe(const ExpLike& f,
                                        const BernoulliParam& p,
                                        std::size_t samples,
                                        const std::vector<unsigned>& levels,
                                        std::uint64_t seed);

// sup norm of c * (e^(r x) - 1) on [0,1]: the error of freezing the
// argument of a single exponential term. Requires r != 0; decreasing in
// |r|, which quantifies "small exponent, nearly constant".
double constant_approx_error(double c, double r);

}  // namespace singular
