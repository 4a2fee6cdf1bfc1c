#pragma once

#include "singular/numeric.hpp"

#include <string>
#include <utility>

namespace singular {

// Zero/one counts of the binary expansion u_1 ... u_n of a level-n dyadic
// point. zeros + ones always equals the level.
struct DigitCounts {
    unsigned zeros = 0;
    unsigned ones = 0;

    friend bool operator==(const DigitCounts& a, const DigitCounts& b) {
        return a.zeros == b.zeros && a.ones == b.ones;
    }
    friend bool operator!=(const DigitCounts& a, const DigitCounts& b) {
        return !(a == b);
    }
};

// k / 2^n with 0 <= k <= 2^n. The representation is not normalized on
// purpose: (2, 2) and (1, 1) denote the same real number but carry different
// digit strings, and the digit string is what the measure logic consumes.
class DyadicRational {
public:
    DyadicRational() = default;

    DyadicRational(Integer numerator, unsigned level)
        : num_(std::move(numerator)), level_(level) {
        if (num_ < 0)
            throw std::domain_error("dyadic numerator must be >= 0");
        if (num_ > pow2(level_))
            throw std::domain_error("dyadic numerator exceeds 2^level");
    }

    const Integer& numerator() const { return num_; }
    unsigned level() const { return level_; }

    Rational value() const { return Rational(num_, pow2(level_)); }
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == pow2(level_); }

    // Same real number, finer grid. Coarsening is not supported.
    DyadicRational at_level(unsigned new_level) const {
        if (new_level < level_)
            throw std::domain_error("cannot coarsen a dyadic rational");
        return DyadicRational(num_ << (new_level - level_), new_level);
    }

    std::string str() const {
        return num_.str() + "/2^" + std::to_string(level_);
    }

    // Accepts "k/2^n"; a bare "0" or "1" is allowed as level-0 shorthand.
    static DyadicRational parse(const std::string& text);

    // Representation identity, not numeric equality; use value() to compare
    // points living on different grids.
    friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
        return a.level_ == b.level_ && a.num_ == b.num_;
    }
    friend bool operator!=(const DyadicRational& a, const DyadicRational& b) {
        return !(a == b);
    }

private:
    Integer num_ = 0;
    unsigned level_ = 0;
};

DyadicRational make_dyadic(const Integer& numerator, int level);

// Counts of the level-many digits of t. Requires t < 1 at its own level, so
// the expansion has exactly level() digits.
DigitCounts digit_counts(const DyadicRational& t);

// [k/2^n, (k+1)/2^n], represented by its left endpoint. Right endpoints are
// derived; k < 2^n always holds.
class DyadicInterval {
public:
    explicit DyadicInterval(DyadicRational left) : left_(std::move(left)) {
        if (left_.is_one())
            throw std::domain_error("interval left endpoint must be < 1");
    }

    DyadicInterval(Integer numerator, unsigned level)
        : DyadicInterval(DyadicRational(std::move(numerator), level)) {}

    const DyadicRational& left() const { return left_; }
    DyadicRational right() const {
        return DyadicRational(left_.numerator() + 1, level());
    }
    unsigned level() const { return left_.level(); }

    Rational width() const { return Rational(1, pow2(level())); }
    DigitCounts counts() const { return digit_counts(left_); }

    std::string str() const {
        return "[" + left_.str() + ", " + right().str() + "]";
    }

    friend bool operator==(const DyadicInterval& a, const DyadicInterval& b) {
        return a.left_ == b.left_;
    }
    friend bool operator!=(const DyadicInterval& a, const DyadicInterval& b) {
        return !(a == b);
    }

private:
    DyadicRational left_;
};

// The two level-(n+1) children. Left child appends digit 0, right child
// appends digit 1.
std::pair<DyadicInterval, DyadicInterval> halves(const DyadicInterval& I);

}  // namespace singular
