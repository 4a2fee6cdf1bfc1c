#include "singular/smoothing.hpp"

#include <algorithm>

namespace singular {

SmoothGrid iterated_integral(const BernoulliParam& p, unsigned order,
                             unsigned depth) {
    if (order < 1) throw std::domain_error("order must be >= 1");
    if (depth < order + 2)
        throw std::domain_error("depth must be at least order + 2");

    SmoothGrid grid;
    grid.order = order;
    grid.depth = depth;
    grid.step = Rational(1, pow2(depth));

    std::size_t n = (std::size_t(1) << depth) + 1;
    grid.values.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        grid.values[i] = antiderivative(p, grid.point(i));

    // Trapezoid prefix sums lift order 1 to order `order`. The scheme stays
    // exact as arithmetic (each level is a rational linear map of the
    // previous one); what it approximates is the next integral.
    std::vector<Rational> current = grid.values;
    for (unsigned k = 2; k <= order; ++k) {
        std::vector<Rational> next(n);
        next[0] = 0;
        for (std::size_t i = 1; i < n; ++i)
            next[i] =
                next[i - 1] + grid.step * (current[i - 1] + current[i]) / 2;
        current = std::move(next);
        grid.values = current;
    }
    return grid;
}

FiniteDiffReport finite_diff_check(const SmoothGrid& grid,
                                   const BernoulliParam& p) {
    const unsigned n = grid.order;
    const unsigned d = grid.depth;
    const std::size_t points = grid.values.size();
    if (points != (std::size_t(1) << d) + 1)
        throw std::domain_error("grid size does not match its depth");

    FiniteDiffReport report;
    report.order = n;
    report.depth = d;

    std::vector<Integer> binom(n + 1);
    for (unsigned j = 0; j <= n; ++j) binom[j] = binomial(n, j);

    Rational h_pow = rpow(grid.step, n);

    // F at the grid points once; window centers live on a grid one level
    // finer and are evaluated exactly on demand.
    std::vector<Rational> F(points);
    for (std::size_t i = 0; i < points; ++i)
        F[i] = cdf(p, grid.point(i).value());

    Rational max_dev = 0;
    Rational max_window = 0;
    for (std::size_t i = 0; i + n < points; ++i) {
        Rational diff = 0;
        for (unsigned j = 0; j <= n; ++j) {
            Rational term = Rational(binom[j]) * grid.values[i + j];
            if ((n - j) % 2 == 0)
                diff += term;
            else
                diff -= term;
        }
        Rational quotient = diff / h_pow;

        DyadicRational center(Integer(2 * i + n), d + 1);
        Rational dev = abs(quotient - cdf(p, center.value()));
        if (dev > max_dev) max_dev = dev;
        Rational window = (F[i + n] - F[i]) / 2;
        if (window > max_window) max_window = window;
    }
    report.max_deviation = max_dev;
    report.window_bound = max_window;

    // Informational: one extra difference order, floating point.
    std::vector<double> next_q;
    Rational h_pow_next = h_pow * grid.step;
    for (std::size_t i = 0; i + n + 1 < points; ++i) {
        Rational diff = 0;
        for (unsigned j = 0; j <= n + 1; ++j) {
            Rational term =
                Rational(binomial(n + 1, j)) * grid.values[i + j];
            if ((n + 1 - j) % 2 == 0)
                diff += term;
            else
                diff -= term;
        }
        next_q.push_back(std::abs(to_double(diff / h_pow_next)));
    }
    if (!next_q.empty()) {
        auto mid = next_q.begin() + next_q.size() / 2;
        std::nth_element(next_q.begin(), mid, next_q.end());
        report.next_order_median = *mid;
        report.next_order_max =
            *std::max_element(next_q.begin(), next_q.end());
    }
    return report;
}

}  // namespace singular
