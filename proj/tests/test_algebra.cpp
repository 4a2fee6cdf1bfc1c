#include "singular/algebra.hpp"

#include "singular/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace singular;

namespace {

const BernoulliParam kQuarter{Rational(1, 4)};

ExpLike hand_case() {
    // e^(2x) - 3 e^x = -2 exactly at x = 0 and x = ln 2
    return ExpLike({ExpTerm{1.0, 2.0}, ExpTerm{-3.0, 1.0}});
}

}  // namespace

TEST_CASE("term lists are validated and sorted") {
    CHECK_THROWS_AS(ExpLike({}), std::domain_error);
    CHECK_THROWS_AS(ExpLike({ExpTerm{0.0, 1.0}}), std::domain_error);
    CHECK_THROWS_AS(ExpLike({ExpTerm{1.0, 1.0}, ExpTerm{2.0, 1.0}}),
                    std::domain_error);

    ExpLike f({ExpTerm{1.0, 2.0}, ExpTerm{-3.0, 1.0}});
    CHECK(f.range() == 2);
    CHECK(f.terms()[0].exponent == 1.0);  // ascending exponents
}

TEST_CASE("evaluation matches closed forms") {
    ExpLike one({ExpTerm{1.0, 1.0}});
    CHECK(eval_explike(one, 0.0) == 1.0);
    CHECK(eval_explike(one, 1.0) == doctest::Approx(std::exp(1.0)));

    ExpLike balanced({ExpTerm{1.0, 1.0}, ExpTerm{-1.0, -1.0}});
    CHECK(eval_explike(balanced, 0.0) == 0.0);

    CHECK(eval_explike(hand_case(), std::log(2.0)) == doctest::Approx(-2.0));

    ExpLike steep({ExpTerm{1.0, 1000.0}});
    CHECK_THROWS_AS(eval_explike(steep, 1.0), std::overflow_error);
}

TEST_CASE("preimages of the hand case") {
    auto roots = preimage_points(hand_case(), -2.0, -1.0, 1.0, 1e-9);
    REQUIRE(roots.size() == 2);
    CHECK(std::abs(roots[0] - 0.0) <= 1e-9);
    CHECK(std::abs(roots[1] - std::log(2.0)) <= 1e-9);
    CHECK(count_preimage(hand_case(), -2.0, -1.0, 1.0, 1e-9) == 2);

    // brute grid scan confirms there is no third crossing
    int sign_changes = 0;
    double prev = eval_explike(hand_case(), -1.0) + 2.0;
    for (int i = 1; i <= 4000; ++i) {
        double x = -1.0 + 2.0 * double(i) / 4000.0;
        double v = eval_explike(hand_case(), x) + 2.0;
        if ((v < 0) != (prev < 0)) ++sign_changes;
        prev = v;
    }
    CHECK(sign_changes == 2);
}

TEST_CASE("single exponentials solve in closed form") {
    ExpLike f({ExpTerm{2.0, 1.0}});
    CHECK(count_preimage(f, -1.0, -10.0, 10.0, 1e-9) == 0);
    auto roots = preimage_points(f, 2.0 * std::exp(0.5), 0.0, 1.0, 1e-9);
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0] - 0.5) <= 1e-9);
}

TEST_CASE("level sets never exceed the range") {
    std::mt19937_64 rng = make_rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t m = 1 + rng() % 4;
        std::vector<ExpTerm> terms;
        for (std::size_t i = 0; i < m; ++i) {
            double coeff = -5.0 + 10.0 * unit_uniform(rng);
            if (coeff == 0.0) coeff = 1.0;
            double expo = -4.0 + 8.0 * unit_uniform(rng);
            terms.push_back(ExpTerm{coeff, expo});
        }
        double c = -5.0 + 10.0 * unit_uniform(rng);
        try {
            ExpLike f(std::move(terms));
            CHECK(count_preimage(f, c, 0.0, 1.0, 1e-9) <= f.range());
        } catch (const std::domain_error&) {
            // colliding random exponents: not this test's subject
        }
    }
}

TEST_CASE("close roots merge or demand a finer tolerance") {
    // roots at 0 and ln 2 = 0.6931...
    CHECK(count_preimage(hand_case(), -2.0, -1.0, 1.0, 0.6) == 2);
    CHECK(count_preimage(hand_case(), -2.0, -1.0, 1.0, 0.75) == 1);
}

TEST_CASE("generators are the square roots of the primes") {
    auto g = make_generators(3);
    REQUIRE(g.size() == 3);
    CHECK(g[0] == doctest::Approx(std::sqrt(2.0)));
    CHECK(g[1] == doctest::Approx(std::sqrt(3.0)));
    CHECK(g[2] == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("monomial reduction builds distinct exponents") {
    auto gens = make_generators(2);

    MonomialMatrix single;
    single.coefficients = {1.0};
    single.rows = {{1, 1}};
    ExpLike f = reduce_polynomial(single, gens);
    CHECK(f.range() == 1);
    CHECK(f.terms()[0].exponent ==
          doctest::Approx(std::sqrt(2.0) + std::sqrt(3.0)));

    MonomialMatrix two;
    two.coefficients = {1.0, -1.0};
    two.rows = {{2, 0}, {1, 0}};
    ExpLike h = reduce_polynomial(two, gens);
    REQUIRE(h.range() == 2);
    CHECK(h.terms()[0].coefficient == -1.0);
    CHECK(h.terms()[0].exponent == doctest::Approx(std::sqrt(2.0)));
    CHECK(h.terms()[1].coefficient == 1.0);
    CHECK(h.terms()[1].exponent == doctest::Approx(2.0 * std::sqrt(2.0)));

    MonomialMatrix bad;
    bad.coefficients = {1.0};
    bad.rows = {{0, 0}};
    CHECK_THROWS_AS(reduce_polynomial(bad, gens), std::domain_error);

    MonomialMatrix dup;
    dup.coefficients = {1.0, 2.0};
    dup.rows = {{1, 2}, {1, 2}};
    CHECK_THROWS_AS(reduce_polynomial(dup, gens), std::domain_error);

    MonomialMatrix ragged;
    ragged.coefficients = {1.0};
    ragged.rows = {{1}};
    CHECK_THROWS_AS(reduce_polynomial(ragged, gens), std::domain_error);
}

TEST_CASE("random monomial matrices separate their exponents") {
    auto gens = make_generators(3);
    std::mt19937_64 rng = make_rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t m = 1 + rng() % 4;
        MonomialMatrix matrix;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<unsigned> row = {unsigned(rng() % 4),
                                         unsigned(rng() % 4),
                                         unsigned(rng() % 4)};
            bool zero = row[0] == 0 && row[1] == 0 && row[2] == 0;
            bool dup = false;
            for (const auto& r : matrix.rows) dup = dup || (r == row);
            if (zero || dup) {
                --i;
                continue;
            }
            matrix.rows.push_back(row);
            matrix.coefficients.push_back(1.0 + double(rng() % 5));
        }
        ExpLike f = reduce_polynomial(matrix, gens);
        CHECK(f.range() == m);
        for (std::size_t i = 1; i < f.range(); ++i)
            CHECK(f.terms()[i].exponent - f.terms()[i - 1].exponent >= 1e-9);
    }
}

TEST_CASE("composition with the distribution function") {
    ExpLike f({ExpTerm{1.0, 1.5}});
    CHECK(compose_with_F(f, kQuarter, 0.0) == 1.0);
    CHECK(compose_with_F(f, kQuarter, 1.0) == doctest::Approx(std::exp(1.5)));
    // F(1/2) = 1/4 exactly in the float backend as well
    CHECK(compose_with_F(f, kQuarter, 0.5) ==
          doctest::Approx(std::exp(1.5 * 0.25)).epsilon(1e-14));
}

TEST_CASE("nonconstancy witnesses appear at small depth") {
    ExpLike f({ExpTerm{1.0, 1.0}});
    Witness w = nonconstancy_witness(f, kQuarter, DyadicInterval(Integer(0), 0));
    // the very first grid already spans e^F(0) .. e^F(1)
    CHECK(w.gap == doctest::Approx(std::expm1(1.0)));
    CHECK(w.x_low < w.x_high);

    // inside [1/4, 3/8] the composition still moves
    DyadicInterval I(Integer(2), 3);
    std::mt19937_64 rng = make_rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        double c1 = 0.5 + 4.0 * unit_uniform(rng);
        double c2 = -4.0 + 3.0 * unit_uniform(rng);
        ExpLike g({ExpTerm{c1, std::sqrt(2.0)},
                   ExpTerm{c2, 2.0 * std::sqrt(2.0)}});
        Witness v = nonconstancy_witness(g, kQuarter, I);
        CHECK(v.gap > 1e-9);
        CHECK(v.x_low >= 0.25);
        CHECK(v.x_high <= 0.375);
    }
}

TEST_CASE("probe medians of a composition collapse along even levels") {
    ExpLike f({ExpTerm{1.0, std::sqrt(2.0)}});
    auto rows = singularity_probe(f, kQuarter, 600, {10, 12, 14, 16, 18, 20}, 1);
    REQUIRE(rows.size() == 6);
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i].median < rows[i - 1].median);
    // the chain rule keeps the factor f'(F(x)) inside [r, r e^r], so the
    // collapse is inherited from the distribution function itself
    CHECK(rows.back().median < 0.2);
}

TEST_CASE("freezing a slow exponential term costs little") {
    CHECK(constant_approx_error(0.0, 1.0) == 0.0);
    CHECK(constant_approx_error(2.0, 1.0) ==
          doctest::Approx(2.0 * std::expm1(1.0)));
    CHECK(constant_approx_error(2.0, -1.0) ==
          doctest::Approx(2.0 * std::expm1(1.0)));
    CHECK_THROWS_AS(constant_approx_error(2.0, 0.0), std::domain_error);

    double prev = constant_approx_error(1.0, std::sqrt(2.0) / 2.0);
    for (int k = 2; k <= 11; ++k) {
        double cur = constant_approx_error(1.0, std::sqrt(2.0) /
                                                    std::ldexp(1.0, k));
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK(prev < 1e-3);
}
