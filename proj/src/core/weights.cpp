#include "weights.hpp"

#include <cmath>

namespace hc {

namespace {

constexpr double kBoxHalf = 5e5; // clipping square of side 1e6
constexpr double kCollinearTol = 1e-9;

using Pt = std::pair<double, double>;

double side(const HalfPlane& h, const Pt& p)
{
    return h.a * p.first + h.b * p.second - h.c;
}

Pt intersect(const HalfPlane& h, const Pt& p, const Pt& q)
{
    double dp = side(h, p);
    double dq = side(h, q);
    double t = dp / (dp - dq);
    return {p.first + t * (q.first - p.first), p.second + t * (q.second - p.second)};
}

std::vector<Pt> clip(const std::vector<Pt>& poly, const HalfPlane& h)
{
    std::vector<Pt> out;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Pt& cur = poly[i];
        const Pt& nxt = poly[(i + 1) % n];
        bool cin = side(h, cur) >= 0;
        bool nin = side(h, nxt) >= 0;
        if (cin)
            out.push_back(cur);
        if (cin != nin)
            out.push_back(intersect(h, cur, nxt));
    }
    return out;
}

void drop_collinear(std::vector<Pt>& poly)
{
    if (poly.size() < 3)
        return;
    std::vector<Pt> out;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Pt& a = poly[(i + n - 1) % n];
        const Pt& b = poly[i];
        const Pt& c = poly[(i + 1) % n];
        double ux = b.first - a.first, uy = b.second - a.second;
        double vx = c.first - b.first, vy = c.second - b.second;
        double cr = ux * vy - uy * vx;
        double scale = std::max(1.0, std::sqrt((ux * ux + uy * uy) * (vx * vx + vy * vy)));
        if (std::fabs(cr) > kCollinearTol * scale)
            out.push_back(b);
    }
    poly = std::move(out);
}

} // namespace

double Polygon::area() const
{
    const size_t n = vertices.size();
    if (n < 3)
        return 0.0;
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const auto& p = vertices[i];
        const auto& q = vertices[(i + 1) % n];
        s += p.first * q.second - q.first * p.second;
    }
    return 0.5 * s;
}

std::vector<HalfPlane> omega_constraints(const TriangleTriple& t, double eta)
{
    if (!(eta > 0.0))
        throw std::invalid_argument("eta must be positive");
    if (eta > 1.0)
        throw std::invalid_argument("weight polytope infeasible by convention");

    const double log_eta = std::log(eta);
    auto cov_log = [&](const std::vector<int>& idx) {
        // ln|L_I| = (1/2) ln(covolume_sq), covolume_sq an exact integer >= 1
        std::vector<IntVector> gen;
        for (int i : idx)
            gen.push_back(t.v(size_t(i)));
        return 0.5 * std::log(gram_det(gen).get_d());
    };

    // coefficient of t_i in (t1, t2) coordinates after t3 = -t1 - t2
    const double coef[3][2] = {{1, 0}, {0, 1}, {-1, -1}};

    std::vector<HalfPlane> planes;
    for (unsigned mask = 1; mask < 7; ++mask) { // nonempty proper subsets
        std::vector<int> idx;
        for (int i = 0; i < 3; ++i)
            if (mask & (1u << i))
                idx.push_back(i);
        double a = 0, b = 0;
        for (int i : idx) {
            a += coef[i][0];
            b += coef[i][1];
        }
        planes.push_back({a, b, -cov_log(idx) + log_eta});
    }
    return planes;
}

Polygon clip_polygon(const std::vector<HalfPlane>& planes)
{
    std::vector<Pt> poly = {{-kBoxHalf, -kBoxHalf},
                            {kBoxHalf, -kBoxHalf},
                            {kBoxHalf, kBoxHalf},
                            {-kBoxHalf, kBoxHalf}};
    for (const auto& h : planes) {
        poly = clip(poly, h);
        if (poly.empty())
            break;
    }
    drop_collinear(poly);
    return Polygon{std::move(poly)};
}

double polygon_area(const std::vector<HalfPlane>& planes)
{
    return clip_polygon(planes).area();
}

double weight(const TriangleTriple& t, double eta)
{
    double area = polygon_area(omega_constraints(t, eta));
    if (area <= 0.0)
        return 1.0;
    return std::min(1.0 / area, 1.0);
}

} // namespace hc
