#include "singular/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace singular {

namespace {

constexpr double kMaxExpArg = 700.0;  // exp() overflows near 709.8

void check_exp_arg(double b, double x) {
    if (std::abs(b * x) > kMaxExpArg)
        throw std::overflow_error(
            "exponential term overflows: |b*x| > 700 for b = " +
            std::to_string(b) + ", x = " + std::to_string(x));
}

double bisect_root(const ExpLike& f, double c, double u, double v,
                   double width_goal) {
    double fu = eval_explike(f, u) - c;
    for (int i = 0; i < 200 && (v - u) > width_goal; ++i) {
        double mid = u + (v - u) / 2;
        if (mid <= u || mid >= v) break;  // double resolution reached
        double fm = eval_explike(f, mid) - c;
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (fu < 0.0)) {
            u = mid;
            fu = fm;
        } else {
            v = mid;
        }
    }
    return u + (v - u) / 2;
}

}  // namespace

ExpLike::ExpLike(std::vector<ExpTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty())
        throw std::domain_error("exponential sum needs at least one term");
    for (const ExpTerm& t : terms_) {
        if (t.coefficient == 0.0 || !std::isfinite(t.coefficient) ||
            !std::isfinite(t.exponent))
            throw std::domain_error(
                "term coefficients must be finite and nonzero");
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const ExpTerm& a, const ExpTerm& b) {
                  return a.exponent < b.exponent;
              });
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (terms_[i - 1].exponent == terms_[i].exponent)
            throw std::domain_error("term exponents must be pairwise distinct");
}

double eval_explike(const ExpLike& f, double x) {
    double out = 0.0;
    for (const ExpTerm& t : f.terms()) {
        check_exp_arg(t.exponent, x);
        out += t.coefficient * std::exp(t.exponent * x);
    }
    return out;
}

std::vector<double> preimage_points(const ExpLike& f, double c, double lo,
                                    double hi, double tol) {
    if (!(lo < hi)) throw std::domain_error("preimage needs lo < hi");
    if (!(tol > 0.0)) throw std::domain_error("preimage needs tol > 0");

    // Range 1: a e^(bx) = c solves in closed form.
    if (f.range() == 1) {
        double a = f.terms()[0].coefficient;
        double b = f.terms()[0].exponent;
        if (b == 0.0) {
            if (a == c)
                throw std::domain_error(
                    "constant function attains the level on a continuum");
            return {};
        }
        double ratio = c / a;
        if (ratio <= 0.0) return {};
        double x = std::log(ratio) / b;
        if (x >= lo && x <= hi) return {x};
        return {};
    }

    // Differentiate and factor out the smallest surviving exponent:
    // f'(x) = e^(b1 x) * (a1 b1 + sum_{i>1} a_i b_i e^((b_i - b1) x)),
    // so critical points are a preimage problem of strictly smaller range.
    std::vector<ExpTerm> deriv;
    for (const ExpTerm& t : f.terms())
        if (t.exponent != 0.0)
            deriv.push_back({t.coefficient * t.exponent, t.exponent});

    std::vector<double> crit;
    if (deriv.size() >= 2) {
        double b1 = deriv[0].exponent;
        double lead = deriv[0].coefficient;
        std::vector<ExpTerm> shifted(deriv.begin() + 1, deriv.end());
        for (ExpTerm& t : shifted) t.exponent -= b1;
        crit = preimage_points(ExpLike(std::move(shifted)), -lead, lo, hi, tol);
    }

    std::vector<double> cuts;
    cuts.push_back(lo);
    for (double x : crit)
        if (x > lo && x < hi) cuts.push_back(x);
    cuts.push_back(hi);

    // One monotone piece per gap; at most one root each.
    std::vector<double> roots;
    double width_goal = std::max(tol / 4.0, 0.0);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double u = cuts[i], v = cuts[i + 1];
        double fu = eval_explike(f, u) - c;
        double fv = eval_explike(f, v) - c;
        if (fu == 0.0) roots.push_back(u);
        if (fv == 0.0 && i + 2 == cuts.size()) roots.push_back(v);
        if (fu != 0.0 && fv != 0.0 && (fu < 0.0) != (fv < 0.0))
            roots.push_back(bisect_root(f, c, u, v, width_goal));
    }

    std::sort(roots.begin(), roots.end());

    // Greedy merge of near-coincident roots. A cluster that chains out wider
    // than tol cannot be reported at this resolution.
    std::vector<double> merged;
    std::size_t i = 0;
    while (i < roots.size()) {
        std::size_t j = i;
        while (j + 1 < roots.size() && roots[j + 1] - roots[j] <= tol) ++j;
        if (roots[j] - roots[i] > tol)
            throw std::invalid_argument(
                "roots merge into a cluster wider than tol; "
                "retry with a smaller tol");
        merged.push_back(roots[i] + (roots[j] - roots[i]) / 2);
        i = j + 1;
    }
    return merged;
}

std::size_t count_preimage(const ExpLike& f, double c, double lo, double hi,
                           double tol) {
    return preimage_points(f, c, lo, hi, tol).size();
}

std::vector<double> make_generators(unsigned n) {
    std::vector<unsigned> primes;
    unsigned candidate = 2;
    while (primes.size() < n) {
        bool prime = true;
        for (unsigned p : primes) {
            if (p * p > candidate) break;
            if (candidate % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.push_back(candidate);
        ++candidate;
    }
    std::vector<double> out;
    out.reserve(n);
    for (unsigned p : primes) out.push_back(std::sqrt(double(p)));
    return out;
}

ExpLike reduce_polynomial(const MonomialMatrix& matrix,
                          const std::vector<double>& generators) {
    if (matrix.coefficients.size() != matrix.rows.size())
        throw std::domain_error("one coefficient per monomial row required");
    if (matrix.rows.empty())
        throw std::domain_error("monomial matrix must be nonempty");

    for (const auto& row : matrix.rows) {
        if (row.size() != generators.size())
            throw std::domain_error(
                "row width must match the generator count");
        if (std::all_of(row.begin(), row.end(),
                        [](unsigned e) { return e == 0; }))
            throw std::domain_error("all-zero monomial row is not allowed");
    }
    for (std::size_t i = 0; i < matrix.rows.size(); ++i)
        for (std::size_t j = i + 1; j < matrix.rows.size(); ++j)
            if (matrix.rows[i] == matrix.rows[j])
                throw std::domain_error("duplicate monomial rows");

    std::vector<ExpTerm> terms;
    for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
        double exponent = 0.0;
        for (std::size_t k = 0; k < generators.size(); ++k)
            exponent += double(matrix.rows[i][k]) * generators[k];
        terms.push_back({matrix.coefficients[i], exponent});
    }
    return ExpLike(std::move(terms));
}

double compose_with_F(const ExpLike& f, const BernoulliParam& p, double x,
                      int depth) {
    return eval_explike(f, cdf(p.approx(), x, depth));
}

Witness nonconstancy_witness(const ExpLike& f, const BernoulliParam& p,
                             const DyadicInterval& I, double gap_threshold,
                             unsigned max_depth) {
    if (!(gap_threshold > 0.0))
        throw std::domain_error("gap threshold must be positive");

    double left = to_double(I.left().value());
    double width = std::ldexp(1.0, -static_cast<int>(I.level()));

    for (unsigned d = 1; d <= max_depth; ++d) {
        std::size_t points = (std::size_t(1) << d) + 1;
        double lo_val = 0.0, hi_val = 0.0, lo_x = 0.0, hi_x = 0.0;
        for (std::size_t j = 0; j < points; ++j) {
            double x = left + width * (double(j) / double(points - 1));
            double g = compose_with_F(f, p, x);
            if (j == 0 || g < lo_val) {
                lo_val = g;
                lo_x = x;
            }
            if (j == 0 || g > hi_val) {
                hi_val = g;
                hi_x = x;
            }
        }
        if (hi_val - lo_val > gap_threshold)
            return {lo_x, hi_x, hi_val - lo_val};
    }
    throw std::runtime_error(
        "no nonconstancy witness up to the depth cap; the composition "
        "evaluated constant, which the term structure rules out");
}

std::vector<ProbeRow> singularity_probe(const ExpLike& f,
                                        const BernoulliParam& p,
                                        std::size_t samples,
                                        const std::vector<unsigned>& levels,
                                        std::uint64_t seed) {
    double pd = p.approx();
    auto g = [&f, pd](double x) { return eval_explike(f, cdf(pd, x, 64)); };
    return median_quotient_table(g, samples, levels, seed);
}

double constant_approx_error(double c, double r) {
    if (r == 0.0)
        throw std::domain_error("constant approximation needs r != 0");
    if (c == 0.0) return 0.0;
    return std::abs(c) * std::expm1(std::abs(r));
}

}  // namespace singular
