// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include "core/census.hpp"
#include "core/charts.hpp"
#include "core/weights.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <thread>

using namespace hc;

namespace {

int g_failures = 0;

struct Criterion {
    const char* name;
    std::chrono::steady_clock::time_point t0;
    explicit Criterion(const char* n) : name(n), t0(std::chrono::steady_clock::now()) {}
    void report(bool pass, const std::string& detail = "")
    {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
        std::printf("[%s] %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", name, secs,
                    detail.empty() ? "" : " : ", detail.c_str());
        std::fflush(stdout);
        if (!pass)
            ++g_failures;
    }
};

Rat frac(long num, long den)
{
    Rat r(num, den);
    r.canonicalize();
    return r;
}

unsigned hw_workers()
{
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 4 : h;
}

TriangleTriple random_unimodular_triple(std::mt19937_64& rng, int ops, long cap)
{
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::array<std::array<long, 3>, 3> col{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (int k = 0; k < ops; ++k) {
        int i = pick(rng), j = pick(rng);
        if (i == j)
            continue;
        long c = coef(rng);
        bool big = false;
        for (int t = 0; t < 3; ++t)
            if (std::abs(col[i][t] + c * col[j][t]) > cap)
                big = true;
        if (big)
            continue;
        for (int t = 0; t < 3; ++t)
            col[i][t] += c * col[j][t];
    }
    return TriangleTriple(IntVector{col[0][0], col[0][1], col[0][2]},
                          IntVector{col[1][0], col[1][1], col[1][2]},
                          IntVector{col[2][0], col[2][1], col[2][2]});
}

// ---------------------------------------------------------------------
// 1. exact growth predictions across the parameter grids
// ---------------------------------------------------------------------
void criterion_1()
{
    Criterion c("1. growth predictor exactness (three examples, parameters 1..10)");
    bool ok = true;
    GrowthPrediction p1 = predict(preset_ex1());
    ok &= (p1.a == 2 && p1.b == 2);
    for (unsigned n = 1; n <= 10 && ok; ++n)
        for (unsigned l1 = 1; l1 <= 10 && ok; ++l1)
            for (unsigned l2 = 1; l2 <= 10 && ok; ++l2) {
                GrowthPrediction p = predict(preset_ex2(n, l1, l2));
                ok &= (p.a == frac(n, std::min(l1, l2)));
                ok &= (p.b == (l1 == l2 ? 2 : 1));
            }
    for (unsigned k1 = 1; k1 <= 10 && ok; ++k1)
        for (unsigned k2 = 1; k2 <= 10 && ok; ++k2) {
            GrowthPrediction p = predict(preset_ex3(k1, k2));
            ok &= (p.a == frac(8, 3 * std::min(k1, k2)));
            ok &= (p.b == (k1 == k2 ? 2 : 1));
        }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - c.t0)
                      .count();
    c.report(ok && secs < 1.0);
}

// ---------------------------------------------------------------------
// 2. the first example's ratio vector
// ---------------------------------------------------------------------
void criterion_2()
{
    Criterion c("2. ratio table of the quadric-pair boundary");
    auto ratios = ratio_vector(preset_ex1());
    std::vector<Rat> expect = {Rat(1), Rat(0), Rat(1), Rat(4, 3),
                               Rat(2), Rat(2), Rat(2), Rat(2)};
    bool ok = ratios.size() == expect.size();
    for (size_t i = 0; ok && i < expect.size(); ++i)
        ok &= ratios[i].has_value() && *ratios[i] == expect[i];
    c.report(ok);
}

// ---------------------------------------------------------------------
// 3. pole orders on the blowup charts
// ---------------------------------------------------------------------
void criterion_3()
{
    Criterion c("3. gauge-form pole orders on all preset charts");
    bool ok = true;
    PoleReport r1 = run_preset("ex1");
    std::vector<int> expect1 = {2, 3, 1, 5, 7, 3, 5, 3};
    ok &= r1.all_match && r1.rows.size() == 8;
    for (size_t i = 0; ok && i < 8; ++i)
        ok &= r1.rows[i].computed == expect1[i];
    for (unsigned n = 1; n <= 5 && ok; ++n) {
        PoleReport r2 = run_preset("ex2", n);
        ok &= r2.all_match && r2.rows.size() == 2;
        ok &= r2.rows[0].computed == int(n) + 1 && r2.rows[1].computed == int(n) + 1;
    }
    PoleReport r3 = run_preset("ex3");
    std::vector<int> expect3 = {9, 6, 6, 6, 9};
    ok &= r3.all_match && r3.rows.size() == 5;
    for (size_t i = 0; ok && i < 5; ++i)
        ok &= r3.rows[i].computed == expect3[i];
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - c.t0)
                      .count();
    c.report(ok && secs < 5.0);
}

// ---------------------------------------------------------------------
// 4. fast enumerators versus the exhaustive oracle, with pinned values
// ---------------------------------------------------------------------

// counts pinned from the first oracle run (re-verified live below)
const long long kFrozenEx1[10] = {0, 24, 40, 104, 168, 360, 408, 504, 680, 808};
const long long kFrozenEx2n1[20] = {4,   20,  36,  68,  84,  116, 132,
                                    180, 212, 244, 260, 292, 324, 388,
                                    404, 436, 452, 516, 564, 596};
const long long kFrozenEx3[8] = {6, 78, 78, 222, 582, 582, 582, 870};

void criterion_4()
{
    Criterion c("4. oracle equivalence (ex1 R<=10, ex2 R<=20, ex3 R<=8)");
    bool ok = true;
    std::string detail;
    unsigned w = hw_workers();

    QuadricPairInstance inst = QuadricPairInstance::preset("default");
    for (long r = 1; r <= 10 && ok; ++r) {
        Int fast = enumerate_ex1(inst, Rat(r), w).count;
        Int slow = oracle_ex1(inst, Rat(r), r, w);
        ok &= (fast == slow);
        if (kFrozenEx1[r - 1] >= 0)
            ok &= (fast == (long)kFrozenEx1[r - 1]);
        if (!ok)
            detail = "ex1 mismatch at R = " + std::to_string(r);
    }

    for (unsigned n = 1; n <= 2 && ok; ++n)
        for (int cfg = 0; cfg < 2 && ok; ++cfg) {
            unsigned l1 = 1, l2 = cfg == 0 ? 1 : 2;
            for (long r = 1; r <= 20 && ok; ++r) {
                Int fast = enumerate_ex2(n, l1, l2, Rat(r), w).count;
                Int slow = oracle_ex2(n, l1, l2, Rat(r), r, w);
                ok &= (fast == slow);
                if (n == 1 && l2 == 1 && kFrozenEx2n1[r - 1] >= 0)
                    ok &= (fast == (long)kFrozenEx2n1[r - 1]);
                if (!ok)
                    detail = "ex2 mismatch at n=" + std::to_string(n) +
                             " lambda2=" + std::to_string(l2) + " R=" + std::to_string(r);
            }
        }
    ok &= (enumerate_ex2(1, 1, 1, Rat(1), 1).count == 4); // hand count

    for (long r = 1; r <= 8 && ok; ++r) {
        Int fast = enumerate_ex3(1, 1, Rat(r), 0.5, w).count;
        // the oracle box sits strictly above the enumerator's search bound
        Int slow = oracle_ex3(1, 1, Rat(r), r + 1, w);
        ok &= (fast == slow);
        if (kFrozenEx3[r - 1] >= 0)
            ok &= (fast == (long)kFrozenEx3[r - 1]);
        if (!ok)
            detail = "ex3 mismatch at R = " + std::to_string(r);
    }
    ok &= (enumerate_ex3(1, 1, Rat(1), 0.5, 1).count == 6); // hand count

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - c.t0)
                      .count();
    if (secs >= 120.0) {
        ok = false;
        detail = "exceeded the 2 minute budget";
    }
    c.report(ok, detail);
}

// ---------------------------------------------------------------------
// 5. duality and Hadamard invariants on random unimodular triples
// ---------------------------------------------------------------------
void criterion_5()
{
    Criterion c("5. cofactor duality, Hadamard bounds, sign invariance (1000 triples)");
    std::mt19937_64 rng(987654321);
    bool ok = true;
    for (int i = 0; i < 1000 && ok; ++i) {
        TriangleTriple t = random_unimodular_triple(rng, 12, 60);
        Rat h1 = ht1_sq(t), h2 = ht2_sq(t);
        ok &= (h1 >= 1) && (h2 >= 1);
        ok &= (h2 == ht1_sq(t.cofactor()));
        TriangleTriple f(t.v(0).negated(), t.v(1).negated(), t.v(2).negated());
        ok &= (ht1_sq(f) == h1) && (ht2_sq(f) == h2);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - c.t0)
                      .count();
    c.report(ok && secs < 10.0);
}

// ---------------------------------------------------------------------
// 6. kernel-covolume identity
// ---------------------------------------------------------------------
void criterion_6()
{
    Criterion c("6. kernel-basis covolume identity (500 primitive covectors)");
    std::mt19937_64 rng(13579);
    std::uniform_int_distribution<int> d(-9, 9);
    bool ok = true;
    for (int i = 0; i < 500 && ok; ++i) {
        size_t dim = 2 + size_t(i % 4); // n <= 4
        std::vector<Int> coords(dim);
        bool zero = true;
        for (auto& x : coords) {
            x = d(rng);
            zero &= (x == 0);
        }
        if (zero)
            coords[0] = 1;
        IntVector raw(coords);
        Int g = gcd_of_coords(raw);
        std::vector<Int> prim;
        for (const auto& x : raw.coords())
            prim.push_back(x / g);
        IntVector wv(prim);
        ok &= (covolume_sq(kernel_basis(wv)).value() == Rat(norm_sq(wv)));
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - c.t0)
                      .count();
    c.report(ok && secs < 5.0);
}

// ---------------------------------------------------------------------
// 7. polygon areas against Monte-Carlo and the closed form
// ---------------------------------------------------------------------
void criterion_7()
{
    Criterion c("7. polygon-area oracle (200 triples, 1e6 samples each)");
    bool ok = true;
    std::string detail;

    // closed form for the standard triple: 3 * ln(1/eta)^2
    TriangleTriple std_t(IntVector{1, 0, 0}, IntVector{0, 1, 0}, IntVector{0, 0, 1});
    for (double eta : {0.5, 0.25, 0.75, 0.1}) {
        double s = std::log(1.0 / eta);
        double area = polygon_area(omega_constraints(std_t, eta));
        if (std::fabs(area - 3 * s * s) > 1e-9) {
            ok = false;
            detail = "closed form mismatch at eta = " + std::to_string(eta);
        }
    }

    std::mt19937_64 rng(24680);
    for (int i = 0; i < 200 && ok; ++i) {
        TriangleTriple t = random_unimodular_triple(rng, 10, 40);
        auto planes = omega_constraints(t, 0.5);
        Polygon poly = clip_polygon(planes);
        double area = poly.area();
        if (area < 1e-9 || poly.vertices.size() < 3)
            continue;
        double xmin = 1e30, xmax = -1e30, ymin = 1e30, ymax = -1e30;
        for (auto [x, y] : poly.vertices) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
        std::uniform_real_distribution<double> ux(xmin, xmax), uy(ymin, ymax);
        size_t inside = 0;
        const size_t samples = 1000000;
        for (size_t k = 0; k < samples; ++k) {
            double x = ux(rng), y = uy(rng);
            bool in = true;
            for (const auto& h : planes)
                if (h.a * x + h.b * y < h.c) {
                    in = false;
                    break;
                }
            inside += in;
        }
        double est = (xmax - xmin) * (ymax - ymin) * double(inside) / double(samples);
        if (std::fabs(est - area) / area >= 0.01) {
            ok = false;
            detail = "MC deviation " + std::to_string(std::fabs(est - area) / area) +
                     " at triple " + std::to_string(i);
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - c.t0)
                      .count();
    if (secs >= 60.0) {
        ok = false;
        detail = "exceeded the 1 minute budget";
    }
    c.report(ok, detail);
}

// ---------------------------------------------------------------------
// 8. empirical growth exponents (statistical)
// ---------------------------------------------------------------------
void criterion_8()
{
    unsigned w = hw_workers();
    {
        Criterion c("8a. ex2 (n=2, lambda=(1,2)) fitted exponent within 0.15 of 2");
        LadderConfig cfg;
        cfg.params.example = "ex2";
        cfg.params.n = 2;
        cfg.params.lambda1 = 1;
        cfg.params.lambda2 = 2;
        cfg.r_min = Rat(50);
        cfg.r_max = Rat(2000);
        cfg.steps = 12;
        cfg.workers = w;
        auto rows = run_ladder(cfg);
        FitReport rep = fit_growth(rows, predict_for(cfg.params), 0.15);
        c.report(rep.verdict == "consistent" && std::fabs(rep.a_hat - 2.0) <= 0.15,
                 "a_hat = " + std::to_string(rep.a_hat));
    }
    {
        Criterion c("8b. ex2 (n=2, lambda=(1,1)) within 0.2 of 2 and log model preferred");
        LadderConfig cfg;
        cfg.params.example = "ex2";
        cfg.params.n = 2;
        cfg.params.lambda1 = 1;
        cfg.params.lambda2 = 1;
        cfg.r_min = Rat(50);
        cfg.r_max = Rat(2000);
        cfg.steps = 12;
        cfg.workers = w;
        auto rows = run_ladder(cfg);
        FitReport rep = fit_growth(rows, predict_for(cfg.params), 0.2);
        bool ok = std::fabs(rep.a_hat - 2.0) <= 0.2 &&
                  rep.rss_with_log <= rep.rss_without_log;
        c.report(ok, "a_hat = " + std::to_string(rep.a_hat) +
                         ", rss log/nolog = " + std::to_string(rep.rss_with_log) + "/" +
                         std::to_string(rep.rss_without_log));
    }
    {
        Criterion c("8c. ex1 default instance fitted exponent within 0.3 of 2");
        LadderConfig cfg;
        cfg.params.example = "ex1";
        cfg.r_min = Rat(10);
        cfg.r_max = Rat(120);
        cfg.steps = 12;
        cfg.workers = w;
        auto rows = run_ladder(cfg);
        FitReport rep = fit_growth(rows, predict_for(cfg.params), 0.3);
        c.report(std::fabs(rep.a_hat - 2.0) <= 0.3, "a_hat = " + std::to_string(rep.a_hat));
    }
}

// ---------------------------------------------------------------------
// 9. worker-count determinism of persisted ladders
// ---------------------------------------------------------------------
void criterion_9()
{
    Criterion c("9. byte-identical ladder CSVs for workers 1, 4, 8");
    bool ok = true;
    for (const char* ex : {"ex1", "ex2", "ex3"}) {
        LadderConfig cfg;
        cfg.params.example = ex;
        cfg.params.n = 2;
        cfg.r_min = Rat(2);
        cfg.r_max = std::string(ex) == "ex1" ? Rat(12) : Rat(10);
        cfg.steps = 5;
        cfg.timing = false;
        std::string csv1, csv4, csv8;
        for (unsigned wk : {1u, 4u, 8u}) {
            cfg.workers = wk;
            std::string csv = rows_to_csv(run_ladder(cfg), cfg.timing);
            if (wk == 1)
                csv1 = csv;
            else if (wk == 4)
                csv4 = csv;
            else
                csv8 = csv;
        }
        ok &= (csv1 == csv4) && (csv1 == csv8);
    }
    c.report(ok);
}

// ---------------------------------------------------------------------
// 10. fitter calibration on synthetic data
// ---------------------------------------------------------------------
void criterion_10()
{
    Criterion c("10. planted exponents recovered within 0.02 (100 draws)");
    std::mt19937_64 rng(1029384756);
    std::uniform_real_distribution<double> ad(0.5, 4.0), cd(0.5, 20.0);
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
        double a = ad(rng), cc = cd(rng);
        std::vector<CensusRow> rows;
        for (int k = 0; k < 10; ++k) {
            double r = 1e3 * std::pow(1e3, double(k) / 9.0);
            CensusRow row;
            row.radius = r;
            row.weighted = true;
            row.weighted_sum = cc * std::pow(r, a);
            rows.push_back(row);
        }
        GrowthPrediction pred;
        pred.a = Rat(1);
        pred.b = 1;
        FitReport rep = fit_growth(rows, pred, 10.0);
        ok &= std::fabs(rep.a_hat - a) <= 0.02;
    }
    c.report(ok);
}

} // namespace

int main()
{
    std::printf("acceptance suite\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
