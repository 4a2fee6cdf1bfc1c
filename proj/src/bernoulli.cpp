#include "singular/bernoulli.hpp"

#include "singular/rng.hpp"

#include <cmath>

namespace singular {

namespace {

bool is_power_of_two(const Integer& n) {
    return n > 0 && (n == 1 || lsb(n) == msb(n));
}

}  // namespace

Rational interval_measure(const BernoulliParam& p, const DyadicInterval& I) {
    DigitCounts c = I.counts();
    return rpow(p.value(), c.zeros) * rpow(p.complement(), c.ones);
}

Rational cdf(const BernoulliParam& p, const Rational& x, int depth) {
    if (depth < 0) throw std::domain_error("depth must be >= 0");
    if (x <= 0) return 0;
    if (x >= 1) return 1;

    // Digit extraction. Each step peels the leading binary digit of y and
    // rescales: F(y) = p F(2y) below 1/2, F(y) = p + (1-p) F(2y-1) above.
    // The boundary y = 1/2 takes the upper branch; both agree there.
    // Dyadic inputs reach y = 0 within level() steps and are returned
    // exactly; other rationals stop after `depth` steps with the remaining
    // mass bounded by (1-p)^depth.
    long steps = depth;
    if (is_power_of_two(denominator(x)))
        steps = static_cast<long>(msb(denominator(x)));

    Rational acc = 0;
    Rational weight = 1;
    Rational y = x;
    const Rational& pv = p.value();
    Rational qv = p.complement();
    for (long i = 0; i < steps; ++i) {
        Rational y2 = 2 * y;
        if (y2 < 1) {
            weight *= pv;
            y = y2;
        } else {
            acc += weight * pv;
            weight *= qv;
            y = y2 - 1;
        }
        if (y == 0) break;
    }
    return acc;
}

Rational cdf_error_bound(const BernoulliParam& p, const Rational& x,
                         int depth) {
    if (depth < 0) throw std::domain_error("depth must be >= 0");
    if (x <= 0 || x >= 1) return 0;
    if (is_power_of_two(denominator(x))) return 0;
    return rpow(p.complement(), static_cast<unsigned>(depth));
}

double cdf(double p, double x, int depth) {
    if (!(p > 0.0 && p < 0.5))
        throw std::domain_error("parameter must satisfy 0 < p < 1/2");
    if (depth < 0) throw std::domain_error("depth must be >= 0");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;

    double acc = 0.0;
    double weight = 1.0;
    double y = x;
    for (int i = 0; i < depth; ++i) {
        y *= 2.0;
        if (y < 1.0) {
            weight *= p;
        } else {
            acc += weight * p;
            weight *= 1.0 - p;
            y -= 1.0;
        }
        if (y == 0.0) break;
    }
    return acc;
}

Rational antiderivative(const BernoulliParam& p, const DyadicRational& x) {
    if (x.is_zero()) return 0;
    if (x.is_one()) return p.value();

    // x is strictly inside (0,1), so level >= 1 and the halved argument
    // below is well formed. Level drops by one per call.
    const Rational& pv = p.value();
    Integer half = pow2(x.level() - 1);
    if (x.numerator() <= half) {
        DyadicRational doubled(x.numerator(), x.level() - 1);
        return pv / 2 * antiderivative(p, doubled);
    }
    DyadicRational shifted(x.numerator() - half, x.level() - 1);
    Rational qv = p.complement();
    return pv * pv / 2 + pv * (x.value() - Rational(1, 2)) +
           qv / 2 * antiderivative(p, shifted);
}

std::vector<double> sample(const BernoulliParam& p, unsigned truncation,
                           std::size_t count, std::uint64_t seed) {
    if (truncation == 0 || truncation > 53)
        throw std::domain_error("truncation must lie in [1, 53]");

    // Digit i is 0 with probability p (the measure weights a zero digit by
    // p). The uniform draw is a 53-bit integer j; comparing j * den <
    // num * 2^53 is an exact Bernoulli(p) test with no rounding bias.
    std::mt19937_64 rng = make_rng(seed);
    const Integer num53 = numerator(p.value()) << 53;
    const Integer den = denominator(p.value());

    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        double x = 0.0;
        for (unsigned d = 1; d <= truncation; ++d) {
            Integer j(rng() >> 11);
            bool zero_digit = j * den < num53;
            if (!zero_digit) x += std::ldexp(1.0, -static_cast<int>(d));
        }
        out.push_back(x);
    }
    return out;
}

SeparationMasses support_separation(const BernoulliParam& p,
                                    const BernoulliParam& q, unsigned level) {
    if (level == 0)
        throw std::domain_error("separation level must be >= 1");
    if (p == q) throw std::domain_error("parameters must be distinct");

    // Level-n intervals with j zero digits carry total mu_p mass
    // C(n,j) p^j (1-p)^(n-j). The favored union keeps the j whose frequency
    // j/n is at least as close to p as to q, which is a half line in j cut
    // at (p+q)/2. Ties go to p.
    Rational mid = (p.value() + q.value()) / 2;
    bool keep_low = p.value() < q.value();

    Rational term_p = rpow(p.complement(), level);  // j = 0 term
    Rational term_q = rpow(q.complement(), level);
    Rational ratio_p = p.value() / p.complement();
    Rational ratio_q = q.value() / q.complement();

    SeparationMasses out;
    out.level = level;
    for (unsigned j = 0; j <= level; ++j) {
        if (j > 0) {
            Rational step(level - j + 1, j);
            term_p *= step * ratio_p;
            term_q *= step * ratio_q;
        }
        Rational freq(j, level);
        bool in_A = keep_low ? (freq <= mid) : (freq >= mid);
        if (in_A) {
            out.p_mass += term_p;
            out.q_mass += term_q;
        }
    }
    return out;
}

}  // namespace singular
