#include "singular/cli.hpp"

#include "singular/algebra.hpp"
#include "singular/bernoulli.hpp"
#include "singular/dyadic.hpp"
#include "singular/probe.hpp"
#include "singular/smoothing.hpp"
#include "singular/transport.hpp"
#include "singular/variation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace singular {

namespace {

using json = nlohmann::ordered_json;

std::string fmt_double(double v) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

json rat_json(const Rational& r) {
    return json{{"num", numerator(r).str()},
                {"den", denominator(r).str()},
                {"float", to_double(r)}};
}

// "COEF:PARAM", both rationals, e.g. "-3:1/3".
Term parse_term(const std::string& text) {
    auto sep = text.find(':');
    if (sep == std::string::npos)
        throw std::invalid_argument("term must look like COEF:PARAM, got: " +
                                    text);
    return Term{parse_rational(text.substr(0, sep)),
                BernoulliParam::parse(text.substr(sep + 1))};
}

LinearCombination parse_combination(const std::vector<std::string>& terms) {
    std::vector<Term> parsed;
    for (const auto& t : terms) parsed.push_back(parse_term(t));
    return LinearCombination(std::move(parsed));
}

double parse_double(const std::string& text) {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size())
        throw std::invalid_argument("bad number: " + text);
    return v;
}

// "C:B" with doubles, e.g. "1:1.4142".
ExpTerm parse_exp_term(const std::string& text) {
    auto sep = text.find(':');
    if (sep == std::string::npos)
        throw std::invalid_argument(
            "exponential term must look like COEF:EXPONENT, got: " + text);
    return ExpTerm{parse_double(text.substr(0, sep)),
                   parse_double(text.substr(sep + 1))};
}

// "10:20" (inclusive range) or "10,12,14".
std::vector<unsigned> parse_levels(const std::string& text) {
    std::vector<unsigned> out;
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, colon)));
        unsigned hi = static_cast<unsigned>(std::stoul(text.substr(colon + 1)));
        if (hi < lo) throw std::invalid_argument("bad level range: " + text);
        for (unsigned v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ','))
        out.push_back(static_cast<unsigned>(std::stoul(piece)));
    if (out.empty()) throw std::invalid_argument("empty level list");
    return out;
}

std::vector<BernoulliParam> parse_params(const std::string& text) {
    std::vector<BernoulliParam> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ','))
        out.push_back(BernoulliParam::parse(piece));
    if (out.empty()) throw std::invalid_argument("empty parameter list");
    return out;
}

Rational parse_point(const std::string& text) {
    if (text.find("/2^") != std::string::npos)
        return DyadicRational::parse(text).value();
    return parse_rational(text);
}

std::string csv_rat_row(const Rational& r) {
    return fmt_double(to_double(r)) + "," + numerator(r).str() + "," +
           denominator(r).str();
}

struct Defaults {
    int depth = 12;
    std::uint64_t seed = 0;
};

Defaults read_env_defaults() {
    Defaults d;
    if (const char* e = std::getenv("SINGULAR_DEPTH")) {
        std::size_t used = 0;
        d.depth = std::stoi(e, &used);
        if (used != std::string(e).size() || d.depth < 0)
            throw std::invalid_argument("bad SINGULAR_DEPTH: " +
                                        std::string(e));
    }
    if (const char* e = std::getenv("SINGULAR_SEED")) {
        std::size_t used = 0;
        d.seed = std::stoull(e, &used);
        if (used != std::string(e).size())
            throw std::invalid_argument("bad SINGULAR_SEED: " +
                                        std::string(e));
    }
    return d;
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& operation_dispatch() {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"make_dyadic", "measure"},
        {"digit_counts", "measure"},
        {"halves", "measure"},
        {"interval_measure", "measure"},
        {"cdf", "cdf"},
        {"cdf_float", "cdf"},
        {"cdf_error_bound", "cdf"},
        {"antiderivative", "cdf"},
        {"median_quotient_table", "cdf"},
        {"sample", "sample"},
        {"support_separation", "separate"},
        {"combination_measure", "variation"},
        {"partition_variation", "variation"},
        {"norm_lower_bound", "variation"},
        {"variation_curve", "distance"},
        {"distance", "distance"},
        {"nonvanishing_check", "nonvanishing"},
        {"match_interval", "transport"},
        {"transport_shift", "transport"},
        {"translate_subinterval", "transport"},
        {"eval_explike", "algebra"},
        {"preimage_points", "algebra"},
        {"count_preimage", "algebra"},
        {"make_generators", "algebra"},
        {"reduce_polynomial", "algebra"},
        {"compose_with_F", "algebra"},
        {"nonconstancy_witness", "algebra"},
        {"singularity_probe", "algebra"},
        {"constant_approx_error", "algebra"},
        {"iterated_integral", "smooth"},
        {"finite_diff_check", "smooth"},
    };
    return table;
}

namespace {

// ---- subcommand handlers ----------------------------------------------

CliResult do_measure(const std::string& p_str, const std::string& left_str) {
    BernoulliParam p = BernoulliParam::parse(p_str);
    DyadicInterval I(DyadicRational::parse(left_str));
    DigitCounts c = I.counts();
    Rational mass = interval_measure(p, I);
    auto [left_child, right_child] = halves(I);
    Rational left_mass = interval_measure(p, left_child);
    Rational right_mass = interval_measure(p, right_child);

    bool additive = (left_mass + right_mass == mass);
    bool left_share = (left_mass == p.value() * mass);

    json j;
    j["op"] = "measure";
    j["ref"] = "digit-count product mass";
    j["p"] = rational_to_string(p.value());
    j["interval"] = I.str();
    j["level"] = I.level();
    j["zeros"] = c.zeros;
    j["ones"] = c.ones;
    j["mass"] = rat_json(mass);
    j["children"] = {
        {"left", {{"interval", left_child.str()}, {"mass", rat_json(left_mass)}}},
        {"right",
         {{"interval", right_child.str()}, {"mass", rat_json(right_mass)}}}};
    j["checks"] = {{"children_sum_to_parent", additive},
                   {"left_child_is_p_share", left_share}};

    CliResult res;
    res.exit_code = (additive && left_share) ? 0 : 1;
    res.out = j.dump(2) + "\n";
    return res;
}

CliResult do_cdf(const std::string& p_str, const std::string& x_str,
                 int depth, const std::string& backend, bool antideriv,
                 bool probe, std::size_t samples,
                 const std::string& levels_str, std::uint64_t seed) {
    BernoulliParam p = BernoulliParam::parse(p_str);
    json j;
    j["op"] = "cdf";
    j["p"] = rational_to_string(p.value());
    CliResult res;

    if (probe) {
        // The difference quotients need the full double resolution; a coarse
        // digit-extraction cutoff would flatten F on cells finer than it.
        int probe_depth = std::max(depth, 64);
        double pd = p.approx();
        auto g = [pd, probe_depth](double x) { return cdf(pd, x, probe_depth); };
        auto rows =
            median_quotient_table(g, samples, parse_levels(levels_str), seed);
        j["ref"] = "difference quotients collapse";
        j["mode"] = "probe";
        j["samples"] = samples;
        j["seed"] = seed;
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"level", r.level}, {"median", r.median}});
        j["rows"] = arr;
        res.out = j.dump(2) + "\n";
        return res;
    }

    if (antideriv) {
        DyadicRational x = DyadicRational::parse(x_str);
        j["ref"] = "self-similar antiderivative";
        j["mode"] = "antiderivative";
        j["x"] = x.str();
        j["value"] = rat_json(antiderivative(p, x));
        j["exact"] = true;
        res.out = j.dump(2) + "\n";
        return res;
    }

    j["ref"] = "self-similar distribution function";
    j["x"] = x_str;
    j["depth"] = depth;
    if (backend == "float") {
        double x = parse_double(x_str);
        j["mode"] = "float";
        j["value_float"] = cdf(p.approx(), x, depth);
    } else {
        Rational x = parse_point(x_str);
        Rational bound = cdf_error_bound(p, x, depth);
        j["mode"] = "exact";
        j["value"] = rat_json(cdf(p, x, depth));
        j["error_bound"] = rat_json(bound);
        j["exact"] = (bound == 0);
    }
    res.out = j.dump(2) + "\n";
    return res;
}

CliResult do_variation(const std::vector<std::string>& term_strs,
                       unsigned level, bool curve,
                       const std::string& format) {
    LinearCombination f = parse_combination(term_strs);
    CliResult res;

    if (curve) {
        auto rows = variation_curve(f, level);
        if (format == "csv") {
            std::string out = "n,value,value_num,value_den,upper_bound\n";
            for (const auto& r : rows)
                out += std::to_string(r.level) + "," + csv_rat_row(r.value) +
                       "," + fmt_double(to_double(r.upper_bound)) + "\n";
            res.out = out;
        } else {
            json arr = json::array();
            for (const auto& r : rows)
                arr.push_back({{"level", r.level},
                               {"value", rat_json(r.value)},
                               {"upper_bound", rat_json(r.upper_bound)}});
            json j;
            j["op"] = "variation";
            j["ref"] = "partition sums are nondecreasing";
            j["rows"] = arr;
            res.out = j.dump(2) + "\n";
        }
        return res;
    }

    VariationEstimate est = partition_variation(f, level);
    VariationEstimate lower = norm_lower_bound(f, level);
    Rational whole = combination_measure(f, DyadicInterval(Integer(0), 0));

    json j;
    j["op"] = "variation";
    j["ref"] = "partition sums are nondecreasing";
    j["level"] = level;
    j["route"] = (level <= kEnumerationCutoff) ? "enumeration" : "aggregation";
    j["value"] = rat_json(est.value);
    j["upper_bound"] = rat_json(est.upper_bound);
    j["norm_lower_bound"] = rat_json(lower.value);
    j["whole_interval_mass"] = rat_json(whole);
    res.out = j.dump(2) + "\n";
    return res;
}

CliResult do_distance(const std::string& p_str, const std::string& q_str,
                      unsigned max_depth, const std::string& format) {
    BernoulliParam p = BernoulliParam::parse(p_str);
    BernoulliParam q = BernoulliParam::parse(q_str);
    VariationEstimate final_est = distance(p, q, max_depth);
    auto rows =
        variation_curve(LinearCombination::difference(p, q), max_depth);

    CliResult res;
    if (format == "csv") {
        std::string out = "n,value,value_num,value_den,upper_bound\n";
        for (const auto& r : rows)
            out += std::to_string(r.level) + "," + csv_rat_row(r.value) +
                   "," + fmt_double(to_double(r.upper_bound)) + "\n";
        res.out = out;
    } else {
        json j;
        j["op"] = "distance";
        j["ref"] = "variation lower bounds the norm";
        j["p"] = rational_to_string(p.value());
        j["q"] = rational_to_string(q.value());
        j["max_depth"] = max_depth;
        j["final"] = rat_json(final_est.value);
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"level", r.level},
                           {"value", rat_json(r.value)},
                           {"upper_bound", rat_json(r.upper_bound)}});
        j["rows"] = arr;
        res.out = j.dump(2) + "\n";
    }
    return res;
}

CliResult do_nonvanishing(const std::vector<std::string>& term_strs,
                          unsigned depth) {
    LinearCombination f = parse_combination(term_strs);
    NonvanishingReport rep = nonvanishing_check(f, depth);

    json j;
    j["op"] = "nonvanishing";
    j["ref"] = "no vanishing dyadic interval";
    j["max_level"] = rep.max_level;
    j["intervals_checked"] = rep.intervals_checked;
    j["pass"] = rep.pass;
    if (rep.vanishing_interval)
        j["vanishing_interval"] = rep.vanishing_interval->str();
    else
        j["vanishing_interval"] = nullptr;

    CliResult res;
    res.exit_code = rep.pass ? 0 : 1;
    res.out = j.dump(2) + "\n";
    return res;
}

CliResult do_transport(const std::string& source_str,
                       const std::string& target_str,
                       const std::string& alpha_str,
                       const std::string& beta_str,
                       const std::string& params_str) {
    DyadicInterval I0(DyadicRational::parse(source_str));
    DyadicInterval I1(DyadicRational::parse(target_str));
    TransportProblem prob(I0, I1);
    DyadicInterval J = match_interval(prob);
    Rational shift = transport_shift(prob);
    std::vector<BernoulliParam> params = parse_params(params_str);

    bool all_equal = true;
    json checks = json::array();
    for (const auto& p : params) {
        Rational target_mass = interval_measure(p, I1);
        Rational matched_mass = interval_measure(p, J);
        bool equal = (target_mass == matched_mass);
        all_equal = all_equal && equal;
        checks.push_back({{"p", rational_to_string(p.value())},
                          {"target_mass", rat_json(target_mass)},
                          {"matched_mass", rat_json(matched_mass)},
                          {"equal", equal}});
    }

    json j;
    j["op"] = "transport";
    j["ref"] = "matched digit counts move mass rigidly";
    j["source"] = I0.str();
    j["target"] = I1.str();
    j["extra_zeros"] = prob.extra_zeros();
    j["extra_ones"] = prob.extra_ones();
    j["matched"] = J.str();
    j["shift"] = rational_to_string(shift);
    j["checks"] = checks;

    if (!alpha_str.empty() || !beta_str.empty()) {
        if (alpha_str.empty() || beta_str.empty())
            throw std::invalid_argument("--alpha and --beta come together");
        DyadicRational alpha = DyadicRational::parse(alpha_str);
        DyadicRational beta = DyadicRational::parse(beta_str);
        auto [a2, b2] = translate_subinterval(prob, alpha, beta);
        json sub;
        sub["alpha"] = alpha.str();
        sub["beta"] = beta.str();
        sub["alpha_shifted"] = a2.str();
        sub["beta_shifted"] = b2.str();
        json sub_checks = json::array();
        for (const auto& p : params) {
            Rational before = cdf(p, beta.value()) - cdf(p, alpha.value());
            Rational after = cdf(p, b2.value()) - cdf(p, a2.value());
            bool equal = (before == after);
            all_equal = all_equal && equal;
            sub_checks.push_back({{"p", rational_to_string(p.value())},
                                  {"mass", rat_json(before)},
                                  {"shifted_mass", rat_json(after)},
                                  {"equal", equal}});
        }
        sub["checks"] = sub_checks;
        j["subinterval"] = sub;
    }

    CliResult res;
    res.exit_code = all_equal ? 0 : 1;
    res.out = j.dump(2) + "\n";
    return res;
}

struct AlgebraArgs {
    std::vector<std::string> terms;
    std::vector<std::string> rows;
    unsigned generators = 0;
    std::string eval_at, count_c, roots_c, compose_at, witness_interval,
        constant_approx;
    std::string p_str = "1/4";
    double lo = 0.0, hi = 1.0, tol = 1e-9, gap = 1e-9;
    std::size_t samples = 1000;
    std::string levels = "10:20";
    std::uint64_t seed = 0;
    bool probe = false;
};

CliResult do_algebra(const AlgebraArgs& a) {
    json j;
    j["op"] = "algebra";

    int actions = int(!a.eval_at.empty()) + int(!a.count_c.empty()) +
                  int(!a.roots_c.empty()) + int(!a.compose_at.empty()) +
                  int(!a.witness_interval.empty()) + int(a.probe) +
                  int(!a.constant_approx.empty());
    if (actions != 1)
        throw std::invalid_argument(
            "pick exactly one action: --eval-at, --count, --roots, "
            "--compose-at, --witness, --probe, --constant-approx");

    if (!a.constant_approx.empty()) {
        auto comma = a.constant_approx.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--constant-approx wants C,R");
        double c = parse_double(a.constant_approx.substr(0, comma));
        double r = parse_double(a.constant_approx.substr(comma + 1));
        j["ref"] = "freezing one exponential term";
        j["action"] = "constant-approx";
        j["c"] = c;
        j["r"] = r;
        j["sup_error"] = constant_approx_error(c, r);
        CliResult res;
        res.out = j.dump(2) + "\n";
        return res;
    }

    ExpLike f = [&]() {
        if (!a.rows.empty()) {
            MonomialMatrix m;
            for (const auto& row : a.rows) {
                auto sep = row.find(':');
                if (sep == std::string::npos)
                    throw std::invalid_argument(
                        "row must look like COEF:E1,E2,..., got: " + row);
                m.coefficients.push_back(parse_double(row.substr(0, sep)));
                std::vector<unsigned> exps;
                std::stringstream ss(row.substr(sep + 1));
                std::string piece;
                while (std::getline(ss, piece, ','))
                    exps.push_back(
                        static_cast<unsigned>(std::stoul(piece)));
                m.rows.push_back(std::move(exps));
            }
            unsigned width = a.generators
                                 ? a.generators
                                 : unsigned(m.rows.front().size());
            return reduce_polynomial(m, make_generators(width));
        }
        if (a.terms.empty())
            throw std::invalid_argument("give --term or --row input");
        std::vector<ExpTerm> terms;
        for (const auto& t : a.terms) terms.push_back(parse_exp_term(t));
        return ExpLike(std::move(terms));
    }();

    json fterms = json::array();
    for (const auto& t : f.terms())
        fterms.push_back(
            {{"coefficient", t.coefficient}, {"exponent", t.exponent}});
    j["terms"] = fterms;
    j["range"] = f.range();

    CliResult res;
    if (!a.eval_at.empty()) {
        double x = parse_double(a.eval_at);
        j["ref"] = "exponential sum evaluation";
        j["action"] = "eval";
        j["x"] = x;
        j["value"] = eval_explike(f, x);
    } else if (!a.count_c.empty() || !a.roots_c.empty()) {
        double c = parse_double(a.count_c.empty() ? a.roots_c : a.count_c);
        auto roots = preimage_points(f, c, a.lo, a.hi, a.tol);
        j["ref"] = "level sets stay finite";
        j["action"] = a.count_c.empty() ? "roots" : "count";
        j["c"] = c;
        j["lo"] = a.lo;
        j["hi"] = a.hi;
        j["tol"] = a.tol;
        j["count"] = roots.size();
        j["range_bound_holds"] = (roots.size() <= f.range());
        if (a.count_c.empty()) {
            json arr = json::array();
            for (double r : roots) arr.push_back(r);
            j["roots"] = arr;
        }
        res.exit_code = (roots.size() <= f.range()) ? 0 : 1;
    } else if (!a.compose_at.empty()) {
        BernoulliParam p = BernoulliParam::parse(a.p_str);
        double x = parse_double(a.compose_at);
        j["ref"] = "composition with the distribution function";
        j["action"] = "compose";
        j["p"] = rational_to_string(p.value());
        j["x"] = x;
        j["value"] = compose_with_F(f, p, x);
    } else if (!a.witness_interval.empty()) {
        BernoulliParam p = BernoulliParam::parse(a.p_str);
        DyadicInterval I(DyadicRational::parse(a.witness_interval));
        Witness w = nonconstancy_witness(f, p, I, a.gap);
        j["ref"] = "no interval of constancy";
        j["action"] = "witness";
        j["p"] = rational_to_string(p.value());
        j["interval"] = I.str();
        j["x_low"] = w.x_low;
        j["x_high"] = w.x_high;
        j["gap"] = w.gap;
    } else {
        BernoulliParam p = BernoulliParam::parse(a.p_str);
        auto rows = singularity_probe(f, p, a.samples, parse_levels(a.levels),
                                      a.seed);
        j["ref"] = "difference quotients collapse";
        j["action"] = "probe";
        j["p"] = rational_to_string(p.value());
        j["samples"] = a.samples;
        j["seed"] = a.seed;
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"level", r.level}, {"median", r.median}});
        j["rows"] = arr;
    }
    res.out = j.dump(2) + "\n";
    return res;
}

CliResult do_smooth(const std::string& p_str, unsigned order, unsigned depth,
                    bool emit_grid) {
    BernoulliParam p = BernoulliParam::parse(p_str);
    SmoothGrid grid = iterated_integral(p, order, depth);

    if (emit_grid) {
        std::string out = "x,value,value_num,value_den\n";
        for (std::size_t i = 0; i < grid.values.size(); ++i)
            out += grid.point(i).str() + "," +
                   fmt_double(to_double(grid.values[i])) + "," +
                   numerator(grid.values[i]).str() + "," +
                   denominator(grid.values[i]).str() + "\n";
        CliResult res;
        res.out = out;
        return res;
    }

    FiniteDiffReport rep = finite_diff_check(grid, p);
    bool within = (rep.max_deviation <= rep.window_bound);

    json j;
    j["op"] = "smooth";
    j["ref"] = "finite differences return the distribution";
    j["p"] = rational_to_string(p.value());
    j["order"] = rep.order;
    j["depth"] = rep.depth;
    j["end_value"] = rat_json(grid.values.back());
    j["max_deviation"] = rat_json(rep.max_deviation);
    j["window_bound"] = rat_json(rep.window_bound);
    j["within_bound"] = within;
    j["next_order_median"] = rep.next_order_median;
    j["next_order_max"] = rep.next_order_max;

    CliResult res;
    res.exit_code = within ? 0 : 1;
    res.out = j.dump(2) + "\n";
    return res;
}

CliResult do_sample(const std::string& p_str, std::size_t count,
                    unsigned truncation, std::uint64_t seed,
                    bool emit_values) {
    BernoulliParam p = BernoulliParam::parse(p_str);
    std::vector<double> xs = sample(p, truncation, count, seed);

    if (emit_values) {
        std::string out = "x\n";
        for (double x : xs) out += fmt_double(x) + "\n";
        CliResult res;
        res.out = out;
        return res;
    }

    double mean = 0.0;
    for (double x : xs) mean += x;
    if (!xs.empty()) mean /= double(xs.size());

    // Empirical distribution function against the exact one on the level-6
    // grid.
    double max_dev = 0.0;
    std::vector<double> sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    for (unsigned k = 1; k < 64; ++k) {
        double t = double(k) / 64.0;
        double exact =
            to_double(cdf(p, Rational(k, 64)));
        auto it = std::upper_bound(sorted.begin(), sorted.end(), t);
        double emp = double(it - sorted.begin()) / double(sorted.size());
        max_dev = std::max(max_dev, std::abs(emp - exact));
    }

    json j;
    j["op"] = "sample";
    j["ref"] = "digitwise simulation";
    j["p"] = rational_to_string(p.value());
    j["count"] = count;
    j["truncation"] = truncation;
    j["seed"] = seed;
    j["mean"] = mean;
    j["grid_level"] = 6;
    j["max_cdf_deviation"] = max_dev;

    CliResult res;
    res.out = j.dump(2) + "\n";
    return res;
}

CliResult do_separate(const std::string& p_str, const std::string& q_str,
                      unsigned level) {
    BernoulliParam p = BernoulliParam::parse(p_str);
    BernoulliParam q = BernoulliParam::parse(q_str);
    SeparationMasses m = support_separation(p, q, level);

    json j;
    j["op"] = "separate";
    j["ref"] = "digit frequencies separate the measures";
    j["p"] = rational_to_string(p.value());
    j["q"] = rational_to_string(q.value());
    j["level"] = m.level;
    j["p_mass"] = rat_json(m.p_mass);
    j["q_mass"] = rat_json(m.q_mass);
    j["gap"] = rat_json(m.p_mass - m.q_mass);

    CliResult res;
    res.out = j.dump(2) + "\n";
    return res;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CliResult result;
    try {
        Defaults env = read_env_defaults();

        CLI::App app{"exact toolkit for singular Bernoulli distribution "
                     "functions"};
        app.require_subcommand(1);

        // measure
        auto* sc_measure = app.add_subcommand(
            "measure", "mass of a dyadic interval and its children");
        std::string m_p = "1/4", m_interval;
        sc_measure->add_option("--p", m_p, "parameter in (0,1/2)")
            ->capture_default_str();
        sc_measure->add_option("--interval", m_interval,
                               "left endpoint k/2^n")
            ->required();
        sc_measure->callback(
            [&]() { result = do_measure(m_p, m_interval); });

        // cdf
        auto* sc_cdf = app.add_subcommand(
            "cdf", "distribution function, antiderivative, or probe");
        std::string c_p = "1/4", c_x = "1/2", c_backend = "exact";
        std::string c_levels = "10:20";
        int c_depth = env.depth;
        bool c_antideriv = false, c_probe = false;
        std::size_t c_samples = 1000;
        std::uint64_t c_seed = env.seed;
        sc_cdf->add_option("--p", c_p)->capture_default_str();
        sc_cdf->add_option("--x", c_x, "rational or k/2^n")
            ->capture_default_str();
        sc_cdf->add_option("--depth", c_depth)->capture_default_str();
        sc_cdf->add_option("--backend", c_backend)
            ->check(CLI::IsMember({"exact", "float"}))
            ->capture_default_str();
        sc_cdf->add_flag("--antiderivative", c_antideriv,
                         "integrate instead of evaluating");
        sc_cdf->add_flag("--probe", c_probe,
                         "median difference-quotient table");
        sc_cdf->add_option("--samples", c_samples)->capture_default_str();
        sc_cdf->add_option("--levels", c_levels)->capture_default_str();
        sc_cdf->add_option("--seed", c_seed)->capture_default_str();
        sc_cdf->callback([&]() {
            result = do_cdf(c_p, c_x, c_depth, c_backend, c_antideriv,
                            c_probe, c_samples, c_levels, c_seed);
        });

        // variation
        auto* sc_var = app.add_subcommand(
            "variation", "partition variation of a combination");
        std::vector<std::string> v_terms;
        unsigned v_level = unsigned(env.depth);
        bool v_curve = false;
        std::string v_format = "json";
        sc_var->add_option("--term", v_terms, "COEF:PARAM, repeatable")
            ->required();
        sc_var->add_option("--level", v_level)->capture_default_str();
        sc_var->add_flag("--curve", v_curve, "emit all levels up to --level");
        sc_var->add_option("--format", v_format)
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sc_var->callback([&]() {
            result = do_variation(v_terms, v_level, v_curve, v_format);
        });

        // distance
        auto* sc_dist = app.add_subcommand(
            "distance", "variation lower bounds for |F_p - F_q|");
        std::string d_p = "1/4", d_q = "1/3", d_format = "json";
        unsigned d_max = unsigned(env.depth);
        sc_dist->add_option("--p", d_p)->capture_default_str();
        sc_dist->add_option("--q", d_q)->capture_default_str();
        sc_dist->add_option("--max-depth", d_max)->capture_default_str();
        sc_dist->add_option("--format", d_format)
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sc_dist->callback(
            [&]() { result = do_distance(d_p, d_q, d_max, d_format); });

        // nonvanishing
        auto* sc_nv = app.add_subcommand(
            "nonvanishing", "verify a combination has no vanishing interval");
        std::vector<std::string> n_terms;
        unsigned n_depth = unsigned(env.depth);
        sc_nv->add_option("--term", n_terms, "COEF:PARAM, repeatable")
            ->required();
        sc_nv->add_option("--depth", n_depth)->capture_default_str();
        sc_nv->callback(
            [&]() { result = do_nonvanishing(n_terms, n_depth); });

        // transport
        auto* sc_tr = app.add_subcommand(
            "transport", "match a target interval inside a source interval");
        std::string t_source, t_target, t_alpha, t_beta;
        std::string t_params = "1/4,1/3,2/5";
        sc_tr->add_option("--source", t_source, "left endpoint k/2^n")
            ->required();
        sc_tr->add_option("--target", t_target, "left endpoint k/2^n")
            ->required();
        sc_tr->add_option("--alpha", t_alpha, "subinterval start k/2^n");
        sc_tr->add_option("--beta", t_beta, "subinterval end k/2^n");
        sc_tr->add_option("--params", t_params, "verification parameters")
            ->capture_default_str();
        sc_tr->callback([&]() {
            result = do_transport(t_source, t_target, t_alpha, t_beta,
                                  t_params);
        });

        // algebra
        auto* sc_alg = app.add_subcommand(
            "algebra", "exponential sums: evaluation, roots, composition");
        AlgebraArgs a;
        a.seed = env.seed;
        sc_alg->add_option("--term", a.terms, "COEF:EXPONENT, repeatable");
        sc_alg->add_option("--row", a.rows,
                           "COEF:E1,E2,... monomial row, repeatable");
        sc_alg->add_option("--generators", a.generators,
                           "generator count (default: row width)");
        sc_alg->add_option("--eval-at", a.eval_at);
        sc_alg->add_option("--count", a.count_c, "count preimages of C");
        sc_alg->add_option("--roots", a.roots_c, "list preimages of C");
        sc_alg->add_option("--lo", a.lo)->capture_default_str();
        sc_alg->add_option("--hi", a.hi)->capture_default_str();
        sc_alg->add_option("--tol", a.tol)->capture_default_str();
        sc_alg->add_option("--compose-at", a.compose_at);
        sc_alg->add_option("--witness", a.witness_interval,
                           "search interval, left endpoint k/2^n");
        sc_alg->add_option("--gap", a.gap)->capture_default_str();
        sc_alg->add_flag("--probe", a.probe);
        sc_alg->add_option("--p", a.p_str)->capture_default_str();
        sc_alg->add_option("--samples", a.samples)->capture_default_str();
        sc_alg->add_option("--levels", a.levels)->capture_default_str();
        sc_alg->add_option("--seed", a.seed)->capture_default_str();
        sc_alg->add_option("--constant-approx", a.constant_approx,
                           "C,R: sup error of freezing e^(R x)");
        sc_alg->callback([&]() { result = do_algebra(a); });

        // smooth
        auto* sc_sm = app.add_subcommand(
            "smooth", "iterated integrals and finite differences");
        std::string s_p = "1/4";
        unsigned s_order = 1, s_depth = unsigned(env.depth);
        bool s_grid = false;
        sc_sm->add_option("--p", s_p)->capture_default_str();
        sc_sm->add_option("--order", s_order)->capture_default_str();
        sc_sm->add_option("--depth", s_depth)->capture_default_str();
        sc_sm->add_flag("--emit-grid", s_grid, "CSV of the grid values");
        sc_sm->callback(
            [&]() { result = do_smooth(s_p, s_order, s_depth, s_grid); });

        // sample
        auto* sc_sa = app.add_subcommand("sample", "draw from the measure");
        std::string sa_p = "1/4";
        std::size_t sa_count = 1000;
        unsigned sa_trunc = 53;
        std::uint64_t sa_seed = env.seed;
        bool sa_values = false;
        sc_sa->add_option("--p", sa_p)->capture_default_str();
        sc_sa->add_option("--count", sa_count)->capture_default_str();
        sc_sa->add_option("--truncation", sa_trunc)->capture_default_str();
        sc_sa->add_option("--seed", sa_seed)->capture_default_str();
        sc_sa->add_flag("--emit-values", sa_values, "CSV of the draws");
        sc_sa->callback([&]() {
            result = do_sample(sa_p, sa_count, sa_trunc, sa_seed, sa_values);
        });

        // separate
        auto* sc_sep = app.add_subcommand(
            "separate", "mass both measures give one frequency class");
        std::string sep_p = "1/4", sep_q = "1/3";
        unsigned sep_level = unsigned(env.depth);
        sc_sep->add_option("--p", sep_p)->capture_default_str();
        sc_sep->add_option("--q", sep_q)->capture_default_str();
        sc_sep->add_option("--level", sep_level)->capture_default_str();
        sc_sep->callback(
            [&]() { result = do_separate(sep_p, sep_q, sep_level); });

        std::vector<const char*> argv;
        argv.push_back("singular");
        for (const auto& s : args) argv.push_back(s.c_str());
        try {
            app.parse(int(argv.size()), argv.data());
        } catch (const CLI::CallForHelp& e) {
            std::ostringstream out;
            app.exit(e, out, out);
            result = CliResult{};
            result.out = out.str();
            return result;
        } catch (const CLI::ParseError& e) {
            result = CliResult{};
            result.exit_code = 2;
            result.err = std::string(e.get_name()) + ": " + e.what() + "\n";
            return result;
        }
        return result;
    } catch (const std::domain_error& e) {
        result = CliResult{};
        result.exit_code = 2;
        result.err = std::string("domain error: ") + e.what() + "\n";
        return result;
    } catch (const std::invalid_argument& e) {
        result = CliResult{};
        result.exit_code = 2;
        result.err = std::string("bad input: ") + e.what() + "\n";
        return result;
    } catch (const std::overflow_error& e) {
        result = CliResult{};
        result.exit_code = 2;
        result.err = std::string("overflow: ") + e.what() + "\n";
        return result;
    } catch (const std::exception& e) {
        result = CliResult{};
        result.exit_code = 1;
        result.err = std::string("verification failed: ") + e.what() + "\n";
        return result;
    }
}

int run_cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    CliResult res = run_cli(args);
    if (!res.out.empty()) std::fputs(res.out.c_str(), stdout);
    if (!res.err.empty()) std::fputs(res.err.c_str(), stderr);
    return res.exit_code;
}

}  // namespace singular
