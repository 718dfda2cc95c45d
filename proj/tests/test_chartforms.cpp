#include "core/charts.hpp"

#include <doctest.h>

#include <random>

using namespace hc;

namespace {

SparsePoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars,
                       int max_terms = 4)
{
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> expd(0, 3);
    std::uniform_int_distribution<int> coefd(-5, 5);
    SparsePoly p(vars);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        std::vector<unsigned> e(vars.size());
        for (auto& x : e)
            x = unsigned(expd(rng));
        int c = coefd(rng);
        if (c != 0)
            p.add_term(e, Rat(c));
    }
    return p;
}

} // namespace

TEST_CASE("polynomial ring basics")
{
    SparsePoly x = SparsePoly::variable("x");
    SparsePoly y = SparsePoly::variable("y");

    SUBCASE("derivative")
    {
        SparsePoly p = x * x * y; // x^2 y
        SparsePoly d = p.derivative("x");
        CHECK(d == SparsePoly::constant(2) * x * y);
        CHECK(p.derivative("z").is_zero());
    }

    SUBCASE("exact division")
    {
        SparsePoly p = x * x - y * y;
        SparsePoly q = x - y;
        CHECK(exact_divide(p, q) == x + y);
        CHECK_THROWS_AS(exact_divide(x * x + SparsePoly::constant(1), x),
                        InexactDivision);
    }

    SUBCASE("order along a variable")
    {
        SparsePoly p = x * x * y + x * x * x;
        CHECK(p.ord("x") == 2);
        CHECK(p.ord("y") == 0);
        CHECK_THROWS_AS(SparsePoly().ord("x"), std::logic_error);
    }

    SUBCASE("order is additive under products")
    {
        std::mt19937_64 rng(11);
        std::vector<std::string> vars = {"x", "y", "z"};
        for (int i = 0; i < 200; ++i) {
            SparsePoly p = random_poly(rng, vars), q = random_poly(rng, vars);
            if (p.is_zero() || q.is_zero())
                continue;
            for (const auto& v : vars)
                CHECK((p * q).ord(v) == p.ord(v) + q.ord(v));
        }
    }

    SUBCASE("vanishing at x = 0 is equivalent to positive order")
    {
        std::mt19937_64 rng(12);
        std::vector<std::string> vars = {"x", "y"};
        std::uniform_int_distribution<int> val(-6, 6);
        for (int i = 0; i < 100; ++i) {
            SparsePoly p = random_poly(rng, vars);
            if (p.is_zero())
                continue;
            bool vanishes = true;
            for (int k = 0; k < 12 && vanishes; ++k) {
                std::map<std::string, Rat> pt{{"x", Rat(0)}, {"y", Rat(val(rng))}};
                vanishes = (p.eval(pt) == 0);
            }
            // twelve samples exceed the y-degree, so vanishing is exact
            CHECK(vanishes == (p.ord("x") >= 1));
        }
    }
}

TEST_CASE("rational function arithmetic")
{
    RatFn x = RatFn::variable("x");
    RatFn y = RatFn::variable("y");

    SUBCASE("pure power content is cancelled")
    {
        RatFn f = RatFn(SparsePoly::variable("x").pow(3),
                        SparsePoly::variable("x") * SparsePoly::variable("y"));
        CHECK(f.num() == SparsePoly::variable("x").pow(2));
        CHECK(f.den() == SparsePoly::variable("y"));
    }

    SUBCASE("quotient rule")
    {
        RatFn f = x / y;
        RatFn d = f.derivative("y");
        CHECK(d.equals(-x / (y * y)));
    }

    SUBCASE("orders")
    {
        RatFn f = RatFn::constant(1) / (x.pow(3) * y);
        CHECK(f.ord("x") == -3);
        RatFn g = y / x.pow(2);
        CHECK(g.ord("y") == 1);
    }

    SUBCASE("parser")
    {
        std::set<std::string> used;
        RatFn f = parse_ratfn("-1/(x^3*y) + 2", &used);
        CHECK(used == std::set<std::string>{"x", "y"});
        CHECK(f.equals(RatFn::constant(2) - RatFn::constant(1) / (x.pow(3) * y)));
        CHECK(parse_ratfn("x^-2").equals(RatFn::constant(1) / x.pow(2)));
        CHECK(parse_ratfn("3/4").equals(RatFn::constant(Rat(3, 4))));
        CHECK_THROWS_AS(parse_ratfn("x +"), std::invalid_argument);
        CHECK_THROWS_AS(parse_ratfn("(x"), std::invalid_argument);
    }
}

TEST_CASE("pullback of forms")
{
    SUBCASE("identity map")
    {
        TopForm w{RatFn::constant(1) / RatFn::variable("x"), {"x"}};
        ChartMap id = ChartMap::make({"x"}, {"x"}, {});
        TopForm out = pullback(w, id);
        CHECK(out.coeff.equals(w.coeff));
    }

    SUBCASE("logarithmic form is invariant under scaling")
    {
        // (1/x) dx with x = u*v, v a unit parameter: coefficient (1/u)
        TopForm w{RatFn::constant(1) / RatFn::variable("x"), {"x"}};
        ChartMap m = ChartMap::make({"u", "v"}, {"u"}, {{"x", "u*v"}});
        TopForm out = pullback(w, m);
        CHECK(out.coeff.equals(RatFn::constant(1) / RatFn::variable("u")));
    }

    SUBCASE("pullbacks compose (functoriality)")
    {
        TopForm w{RatFn::constant(1) /
                      (RatFn::variable("x").pow(2) * RatFn::variable("y")),
                  {"x", "y"}};
        ChartMap m1 = ChartMap::make({"u", "y"}, {"u", "y"}, {{"x", "u*y"}});
        ChartMap m2 = ChartMap::make({"u", "t"}, {"u", "t"}, {{"y", "u*t^2"}});
        TopForm two_steps = pullback(pullback(w, m1), m2);
        // composite map: x = u * (u t^2) = u^2 t^2, y = u t^2
        ChartMap composed =
            ChartMap::make({"u", "t"}, {"u", "t"}, {{"x", "u^2*t^2"}, {"y", "u*t^2"}});
        TopForm one_step = pullback(w, composed);
        CHECK(two_steps.coeff.equals(one_step.coeff));
    }

    SUBCASE("Jacobian chain rule on monomial maps")
    {
        std::vector<std::vector<RatFn>> j1 = {
            {parse_ratfn("v"), parse_ratfn("u")},
            {RatFn::constant(0), parse_ratfn("2*v")}};
        std::vector<std::vector<RatFn>> j2 = {
            {parse_ratfn("2*s"), RatFn::constant(0)},
            {parse_ratfn("t^2"), parse_ratfn("2*s*t")}};
        RatFn d1 = ratfn_det(j1); // 2 v^2
        RatFn d2 = ratfn_det(j2); // 4 s^2 t
        // substitute (u,v) = (s^2, s t^2) into d1 and multiply by d2
        std::map<std::string, RatFn> sub{{"u", parse_ratfn("s^2")},
                                         {"v", parse_ratfn("s*t^2")}};
        RatFn chained = d1.substituted({"s", "t"}, sub) * d2;
        CHECK(chained.equals(parse_ratfn("8*s^4*t^5")));
    }

    SUBCASE("degenerate maps are rejected")
    {
        TopForm w{RatFn::variable("x"), {"x", "y"}};
        ChartMap bad = ChartMap::make({"u", "v"}, {"u", "v"},
                                      {{"x", "u"}, {"y", "u"}});
        CHECK_THROWS_AS(pullback(w, bad), std::invalid_argument);
    }
}

TEST_CASE("pole order presets")
{
    SUBCASE("quadric pair charts")
    {
        PoleReport rep = run_preset("ex1");
        CHECK(rep.all_match);
        REQUIRE(rep.rows.size() == 8);
        std::vector<int> expect = {2, 3, 1, 5, 7, 3, 5, 3};
        for (size_t i = 0; i < 8; ++i) {
            CHECK(rep.rows[i].computed == expect[i]);
            CHECK(rep.rows[i].match);
        }
    }

    SUBCASE("splitting charts for n = 1..5")
    {
        for (unsigned n = 1; n <= 5; ++n) {
            PoleReport rep = run_preset("ex2", n);
            REQUIRE(rep.rows.size() == 2);
            CHECK(rep.rows[0].computed == int(n) + 1);
            CHECK(rep.rows[1].computed == int(n) + 1);
            CHECK(rep.all_match);
        }
    }

    SUBCASE("triangle space charts")
    {
        PoleReport rep = run_preset("ex3");
        CHECK(rep.all_match);
        REQUIRE(rep.rows.size() == 5);
        std::vector<int> expect = {9, 6, 6, 6, 9};
        for (size_t i = 0; i < 5; ++i)
            CHECK(rep.rows[i].computed == expect[i]);
    }
}

TEST_CASE("intermediate chart coefficients match the hand calculations")
{
    // first blowup chart of the quadric pair: coefficient -t_beta2 / lam^2
    SparsePoly den = SparsePoly::variable("lam").pow(3) * SparsePoly::variable("beta2'");
    TopForm w{RatFn(SparsePoly::constant(1), den), {"lam", "beta1", "beta2'"}};
    std::vector<ChartMap> chain = {
        ChartMap::make({"lam", "t_beta1", "t_beta2"}, {"lam", "t_beta1", "t_beta2"},
                       {{"beta1", "lam*t_beta1"}, {"beta2'", "lam*t_beta2"}}),
        ChartMap::make({"lam", "t_y1", "t_beta2"}, {"lam", "t_y1", "t_beta2"},
                       {{"t_beta1", "-t_beta2^2*t_y1"}}),
    };
    TopForm out = pullback(w, chain);
    CHECK(out.coeff.equals(parse_ratfn("-t_beta2/lam^2")));
    CHECK(order_along(out, "lam") == -2);
    CHECK(order_along(out, "t_beta2") == 1);
}

TEST_CASE("chart chain files")
{
    const char* chain = R"({
      "vars": ["lam", "beta1", "beta2'"],
      "form": {"num": "1", "den": "lam^3*beta2'", "frame": ["lam", "beta1", "beta2'"]},
      "chain": [
        {"var": "beta1", "expr": "lam*t_beta1"},
        {"var": "beta2'", "expr": "lam*t_beta2"},
        {"var": "t_beta1", "expr": "-t_beta2^2*t_y1"}
      ]
    })";
    TopForm out = run_chain_json(chain);
    CHECK(out.coeff.equals(parse_ratfn("-t_beta2/lam^2")));
    CHECK(order_along(out, "lam") == -2);

    SUBCASE("shift loci through an explicit chain entry")
    {
        const char* shifted = R"({
          "vars": ["x"],
          "form": {"num": "1", "den": "(1-x)^3", "frame": ["x"]},
          "chain": [{"var": "x", "expr": "x + 1"}]
        })";
        TopForm f = run_chain_json(shifted);
        CHECK(order_along(f, "x") == -3);
    }

    SUBCASE("bad files are rejected with context")
    {
        CHECK_THROWS_AS(run_chain_json("{\"vars\": []}"), std::invalid_argument);
        CHECK_THROWS_AS(run_chain_json("not json"), std::invalid_argument);
        const char* undeclared = R"({
          "vars": ["x"],
          "form": {"num": "y", "den": "x", "frame": ["x"]}
        })";
        CHECK_THROWS_AS(run_chain_json(undeclared), std::invalid_argument);
    }
}
