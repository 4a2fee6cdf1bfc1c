#include "singular/transport.hpp"

#include <algorithm>

namespace singular {

TransportProblem::TransportProblem(DyadicInterval source,
                                   DyadicInterval target)
    : source_(std::move(source)), target_(std::move(target)) {
    DigitCounts c0 = source_.counts();
    DigitCounts c1 = target_.counts();
    if (target_.level() < source_.level())
        throw std::domain_error(
            "target level " + std::to_string(target_.level()) +
            " is below source level " + std::to_string(source_.level()));
    if (c1.zeros < c0.zeros)
        throw std::domain_error(
            "target zero count " + std::to_string(c1.zeros) +
            " is below source zero count " + std::to_string(c0.zeros));
    if (c1.ones < c0.ones)
        throw std::domain_error(
            "target one count " + std::to_string(c1.ones) +
            " is below source one count " + std::to_string(c0.ones));
    extra_zeros_ = c1.zeros - c0.zeros;
    extra_ones_ = c1.ones - c0.ones;
}

DyadicInterval match_interval(const TransportProblem& prob) {
    // Append m zeros then k ones to the source's digit string:
    // j = k0 * 2^(m+k) + (2^k - 1) at level n0 + m + k. The left endpoint
    // then has digit counts (zeros0 + m, ones0 + k), matching the target's.
    unsigned m = prob.extra_zeros();
    unsigned k = prob.extra_ones();
    Integer j = (prob.source().left().numerator() << (m + k)) + pow2(k) - 1;
    return DyadicInterval(j, prob.target().level());
}

Rational transport_shift(const TransportProblem& prob) {
    DyadicInterval J = match_interval(prob);
    Integer diff = J.left().numerator() - prob.target().left().numerator();
    return Rational(diff, pow2(prob.target().level()));
}

std::pair<DyadicRational, DyadicRational> translate_subinterval(
    const TransportProblem& prob, const DyadicRational& alpha,
    const DyadicRational& beta) {
    if (!(alpha.value() < beta.value()))
        throw std::domain_error("subinterval needs alpha < beta");
    const DyadicInterval& I1 = prob.target();
    if (alpha.value() < I1.left().value() ||
        beta.value() > I1.right().value())
        throw std::domain_error(
            "subinterval endpoints fall outside the target interval");

    DyadicInterval J = match_interval(prob);
    unsigned n1 = prob.target().level();
    Integer shift_num =
        J.left().numerator() - prob.target().left().numerator();

    unsigned grid = std::max({alpha.level(), beta.level(), n1});
    auto shifted = [&](const DyadicRational& x) {
        Integer num = (x.numerator() << (grid - x.level())) +
                      (shift_num << (grid - n1));
        return DyadicRational(num, grid);
    };
    return {shifted(alpha), shifted(beta)};
}

std::pair<double, double> translate_subinterval(const TransportProblem& prob,
                                                double alpha, double beta) {
    if (!(alpha < beta))
        throw std::domain_error("subinterval needs alpha < beta");
    if (alpha < to_double(prob.target().left().value()) ||
        beta > to_double(prob.target().right().value()))
        throw std::domain_error(
            "subinterval endpoints fall outside the target interval");
    double s = to_double(transport_shift(prob));
    return {alpha + s, beta + s};
}

}  // namespace singular
