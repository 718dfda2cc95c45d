#include "core/weights.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hc;

namespace {

TriangleTriple random_unimodular_triple(std::mt19937_64& rng, int ops = 10)
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
            if (std::abs(col[i][t] + c * col[j][t]) > 40)
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

// Monte-Carlo area of the half-plane intersection: uniform samples over the
// bounding box of the clipped polygon's vertices.
double mc_area(const std::vector<HalfPlane>& planes, const Polygon& poly,
               size_t samples, uint64_t seed)
{
    if (poly.vertices.size() < 3)
        return 0.0;
    double xmin = 1e30, xmax = -1e30, ymin = 1e30, ymax = -1e30;
    for (auto [x, y] : poly.vertices) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(xmin, xmax), uy(ymin, ymax);
    size_t inside = 0;
    for (size_t i = 0; i < samples; ++i) {
        double x = ux(rng), y = uy(rng);
        bool ok = true;
        for (const auto& h : planes)
            if (h.a * x + h.b * y < h.c) {
                ok = false;
                break;
            }
        inside += ok;
    }
    return (xmax - xmin) * (ymax - ymin) * double(inside) / double(samples);
}

const TriangleTriple& std_triple()
{
    static TriangleTriple t(IntVector{1, 0, 0}, IntVector{0, 1, 0}, IntVector{0, 0, 1});
    return t;
}

} // namespace

TEST_CASE("constraint construction")
{
    auto planes = omega_constraints(std_triple(), std::exp(-1.0));
    REQUIRE(planes.size() == 6);
    // all right-hand sides are -1 for the standard triple at eta = 1/e
    for (const auto& h : planes)
        CHECK(h.c == doctest::Approx(-1.0));

    CHECK_THROWS_WITH_AS(omega_constraints(std_triple(), 1.5),
                         "weight polytope infeasible by convention",
                         std::invalid_argument);

    SUBCASE("pair constraint picks up the wedge covolume")
    {
        TriangleTriple t(IntVector{1, 0, 0}, IntVector{0, 1, 0}, IntVector{1, 1, 1});
        auto ps = omega_constraints(t, std::exp(-1.0));
        // the I = {1,3} constraint reads -t2 >= -ln(sqrt 2) - 1
        bool found = false;
        for (const auto& h : ps)
            if (h.a == 0.0 && h.b == -1.0) {
                CHECK(h.c == doctest::Approx(-0.5 * std::log(2.0) - 1.0));
                found = true;
            }
        CHECK(found);
    }
}

TEST_CASE("polygon area basics")
{
    SUBCASE("hexagon")
    {
        double s = 1.7;
        std::vector<HalfPlane> planes = {{1, 0, -s},  {-1, 0, -s}, {0, 1, -s},
                                         {0, -1, -s}, {1, 1, -s},  {-1, -1, -s}};
        CHECK(std::fabs(polygon_area(planes) - 3 * s * s) < 1e-9);
    }
    SUBCASE("infeasible pair")
    {
        std::vector<HalfPlane> planes = {{1, 0, 1}, {-1, 0, 0}};
        CHECK(polygon_area(planes) == 0.0);
    }
    SUBCASE("no constraints gives the bounding box sentinel")
    {
        CHECK(polygon_area({}) == doctest::Approx(1e12));
    }
}

TEST_CASE("weights of the standard triple")
{
    CHECK(weight(std_triple(), std::exp(-1.0)) == doctest::Approx(1.0 / 3.0));
    CHECK(weight(std_triple(), 1.0) == 1.0); // degenerate polytope
    double ln2 = std::log(2.0);
    CHECK(weight(std_triple(), 0.5) == doctest::Approx(std::min(1.0 / (3 * ln2 * ln2), 1.0)));
    // closed form for the area at any eta
    for (double eta : {0.9, 0.5, 0.25, 0.1}) {
        double s = std::log(1.0 / eta);
        CHECK(std::fabs(polygon_area(omega_constraints(std_triple(), eta)) - 3 * s * s) <
              1e-9);
    }
}

TEST_CASE("area is monotone in eta and permutation invariant; few vertices")
{
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 60; ++i) {
        TriangleTriple t = random_unimodular_triple(rng);
        double a_small = polygon_area(omega_constraints(t, 0.2));
        double a_big = polygon_area(omega_constraints(t, 0.7));
        CHECK(a_small >= a_big - 1e-9);

        Polygon poly = clip_polygon(omega_constraints(t, 0.5));
        CHECK(poly.vertices.size() <= 6);

        TriangleTriple perm(t.v(2), t.v(0), t.v(1));
        CHECK(polygon_area(omega_constraints(perm, 0.5)) ==
              doctest::Approx(polygon_area(omega_constraints(t, 0.5))).epsilon(1e-9));
    }
}

TEST_CASE("Monte-Carlo agreement (small version)")
{
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 25; ++i) {
        TriangleTriple t = random_unimodular_triple(rng);
        auto planes = omega_constraints(t, 0.5);
        Polygon poly = clip_polygon(planes);
        double area = poly.area();
        if (area < 1e-6)
            continue;
        double est = mc_area(planes, poly, 200000, 1000 + uint64_t(i));
        CHECK(std::fabs(est - area) / area < 0.02);
    }
}
