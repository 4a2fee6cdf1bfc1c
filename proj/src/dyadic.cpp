#include "singular/dyadic.hpp"

namespace singular {

DyadicRational DyadicRational::parse(const std::string& text) {
    auto sep = text.find("/2^");
    if (sep == std::string::npos) {
        if (text == "0") return DyadicRational(0, 0);
        if (text == "1") return DyadicRational(1, 0);
        throw std::invalid_argument("expected k/2^n, got: " + text);
    }
    try {
        Integer k(text.substr(0, sep));
        unsigned long n = std::stoul(text.substr(sep + 3));
        return DyadicRational(k, static_cast<unsigned>(n));
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("expected k/2^n, got: " + text);
    }
}

DyadicRational make_dyadic(const Integer& numerator, int level) {
    if (level < 0) throw std::domain_error("dyadic level must be >= 0");
    return DyadicRational(numerator, static_cast<unsigned>(level));
}

DigitCounts digit_counts(const DyadicRational& t) {
    if (t.is_one())
        throw std::domain_error(
            "digit_counts requires t < 1 (no length-n expansion of 1)");
    DigitCounts out;
    const Integer& k = t.numerator();
    for (unsigned i = 0; i < t.level(); ++i) {
        if (bit_test(k, i))
            ++out.ones;
        else
            ++out.zeros;
    }
    return out;
}

std::pair<DyadicInterval, DyadicInterval> halves(const DyadicInterval& I) {
    Integer doubled = I.left().numerator() << 1;
    unsigned child_level = I.level() + 1;
    return {DyadicInterval(doubled, child_level),
            DyadicInterval(doubled + 1, child_level)};
}

}  // namespace singular
