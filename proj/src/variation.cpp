#include "singular/variation.hpp"

#include <algorithm>
#include <bit>

namespace singular {

namespace {

// Common-denominator view of a combination: coefficients become integers
// over F, parameters become C_i over D, so every level-n class mass is an
// integer over F * D^n. Keeps the deep aggregation loops in integer
// arithmetic, with a single rational division at the end.
struct IntegerView {
    Integer coeff_den = 1;  // F
    Integer param_den = 1;  // D
    std::vector<Integer> coeffs;      // a_i * F
    std::vector<Integer> p_nums;      // C_i   (p_i = C_i / D)
    std::vector<Integer> q_nums;      // D - C_i

    explicit IntegerView(const LinearCombination& f) {
        for (const Term& t : f.terms()) {
            coeff_den = lcm(coeff_den, denominator(t.coefficient));
            param_den = lcm(param_den, denominator(t.param.value()));
        }
        for (const Term& t : f.terms()) {
            coeffs.push_back(numerator(t.coefficient) *
                             (coeff_den / denominator(t.coefficient)));
            Integer c = numerator(t.param.value()) *
                        (param_den / denominator(t.param.value()));
            p_nums.push_back(c);
            q_nums.push_back(param_den - c);
        }
    }
};

// base^0 .. base^n
std::vector<Integer> power_table(const Integer& base, unsigned n) {
    std::vector<Integer> out(n + 1);
    out[0] = 1;
    for (unsigned j = 1; j <= n; ++j) out[j] = out[j - 1] * base;
    return out;
}

Rational class_sum_over(const IntegerView& v, unsigned level,
                        const std::vector<std::vector<Integer>>& p_pows,
                        const std::vector<std::vector<Integer>>& q_pows) {
    Integer total = 0;
    Integer binom = 1;
    for (unsigned j = 0; j <= level; ++j) {
        if (j > 0) {
            binom *= (level - j + 1);
            binom /= j;
        }
        Integer inner = 0;
        for (std::size_t i = 0; i < v.coeffs.size(); ++i)
            inner += v.coeffs[i] * p_pows[i][j] * q_pows[i][level - j];
        total += binom * abs(inner);
    }
    return Rational(total, v.coeff_den * ipow(v.param_den, level));
}

}  // namespace

LinearCombination::LinearCombination(std::vector<Term> terms)
    : terms_(std::move(terms)) {
    for (const Term& t : terms_)
        if (t.coefficient == 0)
            throw std::domain_error("combination coefficients must be nonzero");
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return a.param.value() < b.param.value();
    });
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (terms_[i - 1].param == terms_[i].param)
            throw std::domain_error(
                "combination parameters must be pairwise distinct");
}

LinearCombination LinearCombination::difference(const BernoulliParam& p,
                                                const BernoulliParam& q) {
    return LinearCombination({Term{1, p}, Term{-1, q}});
}

Rational LinearCombination::coefficient_norm() const {
    Rational out = 0;
    for (const Term& t : terms_) out += abs(t.coefficient);
    return out;
}

LinearCombination LinearCombination::scaled(const Rational& c) const {
    if (c == 0) return LinearCombination();
    std::vector<Term> out = terms_;
    for (Term& t : out) t.coefficient *= c;
    return LinearCombination(std::move(out));
}

LinearCombination operator+(const LinearCombination& f,
                            const LinearCombination& g) {
    std::vector<Term> merged;
    auto a = f.terms().begin(), ae = f.terms().end();
    auto b = g.terms().begin(), be = g.terms().end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->param.value() < b->param.value())) {
            merged.push_back(*a++);
        } else if (a == ae || b->param.value() < a->param.value()) {
            merged.push_back(*b++);
        } else {
            Rational c = a->coefficient + b->coefficient;
            if (c != 0) merged.push_back(Term{c, a->param});
            ++a;
            ++b;
        }
    }
    return LinearCombination(std::move(merged));
}

Rational combination_measure(const LinearCombination& f,
                             const DyadicInterval& I) {
    DigitCounts c = I.counts();
    Rational out = 0;
    for (const Term& t : f.terms())
        out += t.coefficient * rpow(t.param.value(), c.zeros) *
               rpow(t.param.complement(), c.ones);
    return out;
}

Rational partition_variation_enumerated(const LinearCombination& f,
                                        unsigned level) {
    if (level > 30)
        throw std::domain_error("enumeration beyond level 30 is not supported");

    // Walk every level-n interval. The left endpoint numerator t, read as n
    // binary digits, is the interval's digit string, so popcount(t) gives
    // the ones count directly.
    std::vector<std::vector<Rational>> p_pows, q_pows;
    for (const Term& t : f.terms()) {
        p_pows.push_back({});
        q_pows.push_back({});
        Rational pp = 1, qq = 1;
        for (unsigned j = 0; j <= level; ++j) {
            p_pows.back().push_back(pp);
            q_pows.back().push_back(qq);
            pp *= t.param.value();
            qq *= t.param.complement();
        }
    }

    Rational total = 0;
    const std::uint64_t n_intervals = std::uint64_t(1) << level;
    for (std::uint64_t t = 0; t < n_intervals; ++t) {
        unsigned ones = static_cast<unsigned>(std::popcount(t));
        unsigned zeros = level - ones;
        Rational val = 0;
        for (std::size_t i = 0; i < f.terms().size(); ++i)
            val += f.terms()[i].coefficient * p_pows[i][zeros] *
                   q_pows[i][ones];
        total += abs(val);
    }
    return total;
}

Rational partition_variation_aggregated(const LinearCombination& f,
                                        unsigned level) {
    IntegerView v(f);
    std::vector<std::vector<Integer>> p_pows, q_pows;
    for (std::size_t i = 0; i < v.coeffs.size(); ++i) {
        p_pows.push_back(power_table(v.p_nums[i], level));
        q_pows.push_back(power_table(v.q_nums[i], level));
    }
    return class_sum_over(v, level, p_pows, q_pows);
}

VariationEstimate partition_variation(const LinearCombination& f,
                                      unsigned level) {
    VariationEstimate out;
    out.level = level;
    out.upper_bound = f.coefficient_norm();
    out.value = level <= kEnumerationCutoff
                    ? partition_variation_enumerated(f, level)
                    : partition_variation_aggregated(f, level);
    return out;
}

std::vector<VariationEstimate> variation_curve(const LinearCombination& f,
                                               unsigned max_level) {
    IntegerView v(f);
    std::vector<std::vector<Integer>> p_pows, q_pows;
    for (std::size_t i = 0; i < v.coeffs.size(); ++i) {
        p_pows.push_back(power_table(v.p_nums[i], max_level));
        q_pows.push_back(power_table(v.q_nums[i], max_level));
    }

    Rational upper = f.coefficient_norm();
    std::vector<VariationEstimate> out;
    out.reserve(max_level + 1);
    for (unsigned n = 0; n <= max_level; ++n)
        out.push_back({n, class_sum_over(v, n, p_pows, q_pows), upper});
    return out;
}

VariationEstimate norm_lower_bound(const LinearCombination& f,
                                   unsigned level) {
    return partition_variation(f, level);
}

VariationEstimate distance(const BernoulliParam& p, const BernoulliParam& q,
                           unsigned level) {
    if (p == q) throw std::domain_error("distance requires p != q");
    return partition_variation(LinearCombination::difference(p, q), level);
}

NonvanishingReport nonvanishing_check(const LinearCombination& f,
                                      unsigned max_level) {
    if (max_level == 0)
        throw std::domain_error("nonvanishing check needs max_level >= 1");
    if (max_level > 30)
        throw std::domain_error("enumeration beyond level 30 is not supported");

    NonvanishingReport report;
    report.max_level = max_level;

    // Level by level, left to right, so a reported counterexample is the
    // first one in breadth-first order.
    for (unsigned n = 1; n <= max_level; ++n) {
        std::vector<std::vector<Rational>> p_pows, q_pows;
        for (const Term& t : f.terms()) {
            p_pows.push_back({});
            q_pows.push_back({});
            Rational pp = 1, qq = 1;
            for (unsigned j = 0; j <= n; ++j) {
                p_pows.back().push_back(pp);
                q_pows.back().push_back(qq);
                pp *= t.param.value();
                qq *= t.param.complement();
            }
        }
        const std::uint64_t n_intervals = std::uint64_t(1) << n;
        for (std::uint64_t t = 0; t < n_intervals; ++t) {
            unsigned ones = static_cast<unsigned>(std::popcount(t));
            unsigned zeros = n - ones;
            Rational val = 0;
            for (std::size_t i = 0; i < f.terms().size(); ++i)
                val += f.terms()[i].coefficient * p_pows[i][zeros] *
                       q_pows[i][ones];
            ++report.intervals_checked;
            if (val == 0) {
                report.pass = false;
                report.vanishing_interval = DyadicInterval(Integer(t), n);
                return report;
            }
        }
    }
    report.pass = true;
    return report;
}

}  // namespace singular
