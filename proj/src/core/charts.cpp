#include "charts.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hc {

using nlohmann::json;

ChartMap ChartMap::make(std::vector<std::string> new_vars,
                        std::vector<std::string> new_frame,
                        const std::vector<std::pair<std::string, std::string>>& exprs)
{
    ChartMap m;
    m.new_vars = std::move(new_vars);
    m.new_frame = std::move(new_frame);
    for (const auto& [var, expr] : exprs) {
        std::set<std::string> used;
        RatFn f = parse_ratfn(expr, &used);
        for (const auto& u : used)
            if (std::find(m.new_vars.begin(), m.new_vars.end(), u) == m.new_vars.end())
                throw std::invalid_argument("expression for " + var +
                                            " uses undeclared variable " + u);
        m.assignments.emplace(var, std::move(f));
    }
    for (const auto& f : m.new_frame)
        if (std::find(m.new_vars.begin(), m.new_vars.end(), f) == m.new_vars.end())
            throw std::invalid_argument("frame variable " + f + " not in chart");
    return m;
}

RatFn ratfn_det(const std::vector<std::vector<RatFn>>& m)
{
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0)
        return RatFn::constant(1);

    // clear denominators row by row; det(M) = det(P) / prod(row factors)
    std::vector<std::vector<SparsePoly>> p(n, std::vector<SparsePoly>(n));
    SparsePoly den_prod = SparsePoly::constant(1);
    for (size_t i = 0; i < n; ++i) {
        SparsePoly row_den = SparsePoly::constant(1);
        for (size_t j = 0; j < n; ++j)
            row_den = row_den * m[i][j].den();
        for (size_t j = 0; j < n; ++j) {
            SparsePoly others = SparsePoly::constant(1);
            for (size_t k = 0; k < n; ++k)
                if (k != j)
                    others = others * m[i][k].den();
            p[i][j] = m[i][j].num() * others;
        }
        den_prod = den_prod * row_den;
    }

    // Bareiss fraction-free elimination
    int sign = 1;
    SparsePoly prev = SparsePoly::constant(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (p[k][k].is_zero()) {
            size_t r = k + 1;
            while (r < n && p[r][k].is_zero())
                ++r;
            if (r == n)
                return RatFn::constant(0);
            std::swap(p[k], p[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                p[i][j] = exact_divide(p[k][k] * p[i][j] - p[i][k] * p[k][j], prev);
            p[i][k] = SparsePoly();
        }
        prev = p[k][k];
    }
    SparsePoly det = p[n - 1][n - 1];
    if (sign < 0)
        det = -det;
    return RatFn(std::move(det), std::move(den_prod));
}

TopForm pullback(const TopForm& form, const ChartMap& map)
{
    if (form.frame.size() != map.new_frame.size())
        throw std::invalid_argument("frame dimension changes across the chart map");

    RatFn coeff = form.coeff.substituted(map.new_vars, map.assignments);

    const size_t k = form.frame.size();
    std::vector<std::vector<RatFn>> jac(k, std::vector<RatFn>(k));
    for (size_t r = 0; r < k; ++r) {
        auto it = map.assignments.find(form.frame[r]);
        RatFn image = (it != map.assignments.end())
                          ? it->second
                          : RatFn::variable(form.frame[r]);
        if (it == map.assignments.end() &&
            std::find(map.new_vars.begin(), map.new_vars.end(), form.frame[r]) ==
                map.new_vars.end())
            throw std::invalid_argument("frame variable " + form.frame[r] +
                                        " has no image in the new chart");
        for (size_t c = 0; c < k; ++c)
            jac[r][c] = image.derivative(map.new_frame[c]);
    }
    RatFn det = ratfn_det(jac);
    if (det.is_zero())
        throw std::invalid_argument("degenerate chart map (vanishing Jacobian)");
    return TopForm{coeff * det, map.new_frame};
}

TopForm pullback(const TopForm& form, const std::vector<ChartMap>& chain)
{
    TopForm cur = form;
    for (const auto& m : chain)
        cur = pullback(cur, m);
    return cur;
}

int order_along(const TopForm& form, const std::string& var, const Rat& shift)
{
    RatFn coeff = form.coeff;
    if (shift != 0) {
        // move the locus {var = shift} to the coordinate hyperplane
        std::map<std::string, RatFn> sub;
        sub.emplace(var, RatFn::variable(var) + RatFn::constant(shift));
        std::vector<std::string> vars = coeff.num().vars();
        for (const auto& v : coeff.den().vars())
            if (std::find(vars.begin(), vars.end(), v) == vars.end())
                vars.push_back(v);
        if (std::find(vars.begin(), vars.end(), var) == vars.end())
            vars.push_back(var);
        coeff = coeff.substituted(vars, sub);
    }
    if (coeff.is_zero())
        throw std::invalid_argument("the zero form has no order");
    return coeff.ord(var);
}

// ---------------------------------------------------------------------------
// Hardcoded chart chains
// ---------------------------------------------------------------------------

namespace {

struct PresetRow {
    std::string divisor;
    std::string chart;
    std::vector<ChartMap> chain;
    std::string locus;
    Rat shift;
    int expected; // pole order
};

TopForm ex1_start_form()
{
    // 1/(lam^3 * beta2') dlam ^ dbeta1 ^ dbeta2'
    SparsePoly den = SparsePoly::variable("lam").pow(3) * SparsePoly::variable("beta2'");
    return TopForm{RatFn(SparsePoly::constant(1), den), {"lam", "beta1", "beta2'"}};
}

std::vector<PresetRow> ex1_rows()
{
    std::vector<PresetRow> rows;

    // chart U1: blow up with lam as the scaling coordinate, then eliminate
    // t_beta1 = -t_beta2^2 t_y1 on the strict transform
    std::vector<ChartMap> u1 = {
        ChartMap::make({"lam", "t_beta1", "t_beta2"}, {"lam", "t_beta1", "t_beta2"},
                       {{"beta1", "lam*t_beta1"}, {"beta2'", "lam*t_beta2"}}),
        ChartMap::make({"lam", "t_y1", "t_beta2"}, {"lam", "t_y1", "t_beta2"},
                       {{"t_beta1", "-t_beta2^2*t_y1"}}),
    };
    rows.push_back({"E1++", "U1", u1, "lam", Rat(0), 2});

    // chart U3: beta2' scales, y-coordinates already eliminated
    std::vector<ChartMap> u3 = {
        ChartMap::make({"t_lam", "t_beta1", "beta2'"}, {"t_lam", "t_beta1", "beta2'"},
                       {{"lam", "beta2'*t_lam"}, {"beta1", "beta2'*t_beta1"}}),
    };
    rows.push_back({"D022+++", "U3", u3, "t_lam", Rat(0), 3});

    // chart U5: y2' scales; t_beta2 = t_lam^2 and t_beta1 = -t_lam^2 t_y1
    std::vector<ChartMap> u5 = {
        ChartMap::make({"y2'", "t_y1", "t_lam"}, {"y2'", "t_y1", "t_lam"},
                       {{"lam", "y2'*t_lam"},
                        {"beta1", "-y2'*t_lam^2*t_y1"},
                        {"beta2'", "y2'*t_lam^2"}}),
    };
    rows.push_back({"D210+++", "U5", u5, "t_lam", Rat(0), 1});

    // chart chain U2 -> U22 -> U223: two exceptional divisors appear
    std::vector<ChartMap> u223 = {
        ChartMap::make({"t_lam", "beta1", "t_beta2"}, {"t_lam", "beta1", "t_beta2"},
                       {{"lam", "beta1*t_lam"}, {"beta2'", "beta1*t_beta2"}}),
        ChartMap::make({"tt_lam", "beta1", "t_beta2"}, {"tt_lam", "beta1", "t_beta2"},
                       {{"t_lam", "t_beta2*tt_lam"}}),
        ChartMap::make({"beta1", "tt_y1", "ttt_lam"}, {"beta1", "tt_y1", "ttt_lam"},
                       {{"tt_lam", "tt_y1*ttt_lam"}, {"t_beta2", "-tt_y1*ttt_lam^2"}}),
    };
    rows.push_back({"E3^0", "U223", u223, "tt_y1", Rat(0), 5});
    rows.push_back({"(E2^1)+", "U223", u223, "ttt_lam", Rat(0), 7});

    // chart U422, written with the composite coordinate relations
    std::vector<ChartMap> u422 = {
        ChartMap::make({"y1", "tt_y2", "ttt_lam"}, {"y1", "tt_y2", "ttt_lam"},
                       {{"lam", "-y1*ttt_lam^3*tt_y2"},
                        {"beta1", "-y1*ttt_lam^2"},
                        {"beta2'", "-y1*ttt_lam^4*tt_y2"}}),
    };
    rows.push_back({"E3^1", "U422", u422, "tt_y2", Rat(0), 3});
    rows.push_back({"(E2^2)+", "U422", u422, "ttt_lam", Rat(0), 5});

    // chart U432, composite relations again
    std::vector<ChartMap> u432 = {
        ChartMap::make({"y1", "tt_beta1", "ttt_lam"}, {"y1", "tt_beta1", "ttt_lam"},
                       {{"lam", "-y1*tt_beta1^2*ttt_lam^3"},
                        {"beta1", "-y1*tt_beta1^2*ttt_lam^2"},
                        {"beta2'", "-y1*tt_beta1^3*ttt_lam^4"}}),
    };
    rows.push_back({"E3^2", "U432", u432, "tt_beta1", Rat(0), 3});

    return rows;
}

// Example II: invariant form on the incidence hypersurface <v,a> = 1,
// written in the affine chart, pulled back to the chart at infinity.
TopForm ex2_start_form(unsigned n)
{
    std::vector<std::string> frame;
    for (unsigned i = 2; i <= n + 1; ++i)
        frame.push_back("v" + std::to_string(i));
    for (unsigned i = 1; i <= n + 1; ++i)
        frame.push_back("a" + std::to_string(i));
    SparsePoly den = SparsePoly::variable("a1");
    return TopForm{RatFn(SparsePoly::constant(1), den), frame};
}

ChartMap ex2_chart_map(unsigned n)
{
    // new chart: s = 1/v1 on the first factor, t = 1/a2 on the second
    std::vector<std::string> nv = {"s", "t", "a1'"};
    std::vector<std::string> frame = {"s", "t", "a1'"};
    for (unsigned i = 3; i <= n + 1; ++i) {
        nv.push_back("v" + std::to_string(i) + "'");
        frame.push_back("v" + std::to_string(i) + "'");
    }
    for (unsigned i = 3; i <= n + 1; ++i) {
        nv.push_back("a" + std::to_string(i) + "'");
        frame.push_back("a" + std::to_string(i) + "'");
    }
    std::vector<std::pair<std::string, std::string>> exprs;
    // v2 is pinned by the incidence equation on the new chart
    std::string v2 = "t - a1'/s";
    for (unsigned i = 3; i <= n + 1; ++i)
        v2 += " - v" + std::to_string(i) + "'*a" + std::to_string(i) + "'/s";
    exprs.push_back({"v2", v2});
    for (unsigned i = 3; i <= n + 1; ++i)
        exprs.push_back({"v" + std::to_string(i), "v" + std::to_string(i) + "'/s"});
    exprs.push_back({"a1", "a1'/t"});
    exprs.push_back({"a2", "1/t"});
    for (unsigned i = 3; i <= n + 1; ++i)
        exprs.push_back({"a" + std::to_string(i), "a" + std::to_string(i) + "'/t"});
    return ChartMap::make(nv, frame, exprs);
}

std::vector<PresetRow> ex2_rows(unsigned n)
{
    std::vector<ChartMap> chain = {ex2_chart_map(n)};
    std::vector<PresetRow> rows;
    rows.push_back({"D1", "O1", chain, "s", Rat(0), int(n) + 1});
    rows.push_back({"D2", "O1", chain, "t", Rat(0), int(n) + 1});
    return rows;
}

// Example III: invariant form on the triple-line chart.
TopForm ex3_start_form()
{
    SparsePoly a2p = SparsePoly::variable("a2'");
    SparsePoly b2p = SparsePoly::variable("b2'");
    SparsePoly beta = SparsePoly::variable("beta13'");
    SparsePoly gamma = SparsePoly::variable("gamma13'");
    SparsePoly den = (a2p - b2p).pow(6) * gamma.pow(3) * beta.pow(6) * a2p.pow(4);
    return TopForm{RatFn(SparsePoly::constant(1), den), {"a2'", "b2'", "gamma13'"}};
}

std::vector<PresetRow> ex3_rows()
{
    std::vector<ChartMap> u1 = {
        ChartMap::make({"a2'", "t_b2", "gamma13'"}, {"a2'", "t_b2", "gamma13'"},
                       {{"b2'", "a2'*t_b2"}, {"beta13'", "gamma13'*t_b2"}}),
    };
    std::vector<ChartMap> u2 = {
        ChartMap::make({"b2'", "t_a2", "beta13'"}, {"b2'", "t_a2", "beta13'"},
                       {{"a2'", "b2'*t_a2"}, {"gamma13'", "beta13'*t_a2"}}),
    };
    std::vector<PresetRow> rows;
    rows.push_back({"E", "U1", u1, "a2'", Rat(0), 9});
    rows.push_back({"D12,3", "U1", u1, "t_b2", Rat(1), 6}); // locus t_b2 = 1
    rows.push_back({"D23,1", "U1", u1, "t_b2", Rat(0), 6});
    rows.push_back({"D13,2", "U2", u2, "t_a2", Rat(0), 6});
    rows.push_back({"(D123^2)+", "U1", u1, "gamma13'", Rat(0), 9});
    return rows;
}

PoleReport run_rows(const std::string& example, const TopForm& start,
                    const std::vector<PresetRow>& rows)
{
    PoleReport rep;
    rep.example = example;
    for (const auto& r : rows) {
        TopForm f;
        try {
            f = pullback(start, r.chain);
        } catch (const std::exception& e) {
            throw std::runtime_error("chart " + r.chart + ": " + e.what());
        }
        int ord = order_along(f, r.locus, r.shift);
        PoleRow out;
        out.divisor = r.divisor;
        out.chart = r.chart;
        out.locus = r.shift == 0 ? r.locus : (r.locus + " - " + rat_str(r.shift));
        out.computed = -ord;
        out.expected = r.expected;
        out.match = (out.computed == out.expected);
        rep.all_match = rep.all_match && out.match;
        rep.rows.push_back(std::move(out));
    }
    return rep;
}

} // namespace

PoleReport run_preset(const std::string& example_id, unsigned n)
{
    if (example_id == "ex1")
        return run_rows("ex1", ex1_start_form(), ex1_rows());
    if (example_id == "ex2") {
        if (n == 0) {
            // run the whole small-n family in one report
            PoleReport rep;
            rep.example = "ex2";
            for (unsigned k = 1; k <= 5; ++k) {
                PoleReport sub = run_rows("ex2", ex2_start_form(k), ex2_rows(k));
                for (auto& row : sub.rows) {
                    row.divisor += " (n=" + std::to_string(k) + ")";
                    rep.all_match = rep.all_match && row.match;
                    rep.rows.push_back(std::move(row));
                }
            }
            return rep;
        }
        if (n > 8)
            throw std::invalid_argument("n out of the supported range");
        return run_rows("ex2", ex2_start_form(n), ex2_rows(n));
    }
    if (example_id == "ex3")
        return run_rows("ex3", ex3_start_form(), ex3_rows());
    throw std::invalid_argument("unknown example: " + example_id);
}

std::string pole_report_json(const PoleReport& r)
{
    json j;
    j["example"] = r.example;
    j["all_match"] = r.all_match;
    j["rows"] = json::array();
    for (const auto& row : r.rows)
        j["rows"].push_back({{"divisor", row.divisor},
                             {"chart", row.chart},
                             {"locus", row.locus},
                             {"computed", row.computed},
                             {"expected", row.expected},
                             {"match", row.match}});
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// Chart-chain files
// ---------------------------------------------------------------------------

TopForm run_chain_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("chart chain is not valid JSON: ") + e.what());
    }
    if (!j.contains("vars") || !j.contains("form"))
        throw std::invalid_argument("chart chain needs 'vars' and 'form'");
    std::vector<std::string> vars = j["vars"].get<std::vector<std::string>>();
    const auto& jf = j["form"];
    if (!jf.contains("num") || !jf.contains("den") || !jf.contains("frame"))
        throw std::invalid_argument("'form' needs 'num', 'den' and 'frame'");

    auto parse_decl = [&](const std::string& expr) {
        std::set<std::string> used;
        RatFn f = parse_ratfn(expr, &used);
        for (const auto& u : used)
            if (std::find(vars.begin(), vars.end(), u) == vars.end())
                throw std::invalid_argument("undeclared variable " + u);
        return f;
    };

    RatFn num = parse_decl(jf["num"].get<std::string>());
    RatFn den = parse_decl(jf["den"].get<std::string>());
    TopForm form{num / den, jf["frame"].get<std::vector<std::string>>()};
    for (const auto& fv : form.frame)
        if (std::find(vars.begin(), vars.end(), fv) == vars.end())
            throw std::invalid_argument("frame variable " + fv + " not declared");

    std::vector<std::string> cur_vars = vars;
    if (j.contains("chain"))
        for (const auto& step : j["chain"]) {
            std::string var = step.at("var").get<std::string>();
            std::string expr = step.at("expr").get<std::string>();
            std::set<std::string> used;
            RatFn image = parse_ratfn(expr, &used);

            std::vector<std::string> fresh;
            for (const auto& u : used)
                if (std::find(cur_vars.begin(), cur_vars.end(), u) == cur_vars.end())
                    fresh.push_back(u);

            std::vector<std::string> nv;
            for (const auto& v : cur_vars)
                if (v != var)
                    nv.push_back(v);
            for (const auto& f : fresh)
                nv.push_back(f);
            bool var_survives = used.count(var) > 0;
            if (var_survives)
                nv.push_back(var);

            std::vector<std::string> nframe = form.frame;
            auto it = std::find(nframe.begin(), nframe.end(), var);
            if (it != nframe.end() && !var_survives) {
                // a frame coordinate is being replaced; the expression must
                // single out its successor
                std::string wrt;
                if (step.contains("wrt"))
                    wrt = step["wrt"].get<std::string>();
                else if (fresh.size() == 1)
                    wrt = fresh[0];
                else
                    throw std::invalid_argument(
                        "substitution for frame variable " + var +
                        " must introduce exactly one new variable or name 'wrt'");
                if (!used.count(wrt))
                    throw std::invalid_argument("'wrt' variable " + wrt +
                                                " does not appear in the expression");
                *it = wrt;
            }

            ChartMap m;
            m.new_vars = nv;
            m.new_frame = nframe;
            m.assignments.emplace(var, image);
            form = pullback(form, m);
            cur_vars = std::move(nv);
        }
    return form;
}

std::string chain_result_json(const TopForm& form,
                              const std::vector<std::string>& order_vars)
{
    json j;
    j["coeff_num"] = form.coeff.num().str();
    j["coeff_den"] = form.coeff.den().str();
    j["frame"] = form.frame;
    if (!order_vars.empty()) {
        json orders = json::object();
        for (const auto& v : order_vars)
            orders[v] = order_along(form, v);
        j["orders"] = orders;
    }
    return j.dump(2);
}

} // namespace hc
