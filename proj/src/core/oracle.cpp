#include "enumerate.hpp"
#include "pool.hpp"

#include <cmath>
#include <functional>
#include <numeric>

// Exhaustive counting oracles.  Everything here is re-derived from the raw
// definitions: quadratic forms are evaluated entry by entry, heights are
// recomputed from scratch in arbitrary precision, and the only search bound
// is the caller's box.  None of the candidate-solving machinery of the fast
// enumerators is shared.

namespace hc {

namespace {

using i64 = long long;

void check_box(long box, long cap)
{
    if (box < 1 || box > cap)
        throw std::invalid_argument("oracle limited to desk scale");
}

// h <= R^2 exactly, h given as num/den with positive den
bool height_leq(const Int& num, const Int& den, const Rat& r2)
{
    return num * r2.get_den() <= den * r2.get_num();
}

bool canonical3(const std::array<i64, 3>& v)
{
    for (i64 c : v) {
        if (c != 0)
            return c > 0;
    }
    return false; // the zero vector spans no line
}

} // namespace

Int oracle_ex1(const QuadricPairInstance& inst, const Rat& radius, long box,
               unsigned workers)
{
    check_box(box, 12);
    i64 q[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            q[i][j] = inst.q2()[i][j].get_si();
    const i64 t11 = inst.q1()[0][0].get_si();
    const i64 t22 = inst.q1()[1][1].get_si();
    const i64 t12 = inst.q1()[0][1].get_si();

    // entries are integers, so the norm test reduces to norm <= floor(R^2)
    Rat r2 = radius * radius;
    Int f = r2.get_num() / r2.get_den();
    const i64 norm_cap = 8 * box * box;
    const i64 n2 = (f > long(norm_cap)) ? norm_cap : f.get_si();

    const i64 b = box;
    std::vector<i64> totals(size_t(2 * b + 1), 0);
    parallel_parts(totals.size(), workers, [&](size_t part) {
        i64 m[8];
        m[0] = i64(part) - b;
        i64 cnt = 0;
        auto q_val = [&](const i64* c) {
            i64 s = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    s += c[i] * q[i][j] * c[j];
            return s;
        };
        std::function<void(int, i64)> rec = [&](int k, i64 norm) {
            if (norm > n2)
                return;
            if (k == 4 && q_val(m) != t11)
                return; // first column already fails its equation
            if (k == 8) {
                if (q_val(m + 4) != t22)
                    return;
                i64 qab = 0;
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j)
                        qab += m[i] * q[i][j] * m[4 + j];
                if (qab == t12)
                    ++cnt;
                return;
            }
            for (i64 t = -b; t <= b; ++t) {
                m[k] = t;
                rec(k + 1, norm + t * t);
            }
        };
        rec(1, m[0] * m[0]);
        totals[part] = cnt;
    });

    Int total = 0;
    for (i64 c : totals)
        total += long(c);
    return total;
}

Int oracle_ex2(unsigned n, unsigned lambda1, unsigned lambda2,
               const Rat& radius, long box, unsigned workers)
{
    check_box(box, 24);
    if (n < 1 || n > 3)
        throw std::invalid_argument("oracle limited to desk scale");
    if (lambda1 == 0 || lambda2 == 0 || lambda1 > 12 || lambda2 > 12)
        throw std::invalid_argument("oracle limited to desk scale");
    const size_t dim = n + 1;
    const i64 b = box;

    // every integer vector in the box, in odometer order
    std::vector<std::vector<i64>> pts;
    std::vector<i64> cur(dim, -b);
    for (;;) {
        pts.push_back(cur);
        size_t k = 0;
        while (k < dim && ++cur[k] > b) {
            cur[k] = -b;
            ++k;
        }
        if (k == dim)
            break;
    }

    const Rat r2 = radius * radius;

    // raw consequences of the height bound: both norms are >= 1, so each
    // factor alone already has to fit under R^2
    auto norm_cap = [&](unsigned lam) {
        Int m = floor_root(r2, lam);
        return m.fits_slong_p() ? m.get_si() : i64(3) * box * box;
    };
    const i64 nv_cap = norm_cap(lambda1);
    const i64 nw_cap = norm_cap(lambda2);

    // complement covectors: one sign per subgroup, within the height range
    std::vector<std::vector<i64>> ws;
    for (const auto& w : pts) {
        int lead = 0;
        i64 nw = 0;
        for (i64 c : w) {
            if (c != 0 && lead == 0)
                lead = c > 0 ? 1 : -1;
            nw += c * c;
        }
        if (lead > 0 && nw <= nw_cap)
            ws.push_back(w);
    }

    std::vector<i64> totals(pts.size(), 0);
    parallel_parts(pts.size(), workers, [&](size_t part) {
        const auto& v = pts[part];
        i64 nv = 0;
        for (i64 c : v)
            nv += c * c;
        if (nv == 0 || nv > nv_cap)
            return;
        i64 cnt = 0;
        for (const auto& w : ws) {
            i64 pairing = 0, nw = 0;
            for (size_t i = 0; i < dim; ++i) {
                pairing += v[i] * w[i];
                nw += w[i] * w[i];
            }
            if (pairing != 1 && pairing != -1)
                continue;
            Int h = pow_int(Int((long)nv), lambda1) * pow_int(Int((long)nw), lambda2);
            if (height_leq(h, Int(1), r2))
                ++cnt;
        }
        totals[part] = cnt;
    });

    Int total = 0;
    for (i64 c : totals)
        total += long(c);
    return total;
}

Int oracle_ex3(unsigned kappa1, unsigned kappa2, const Rat& radius, long box,
               unsigned workers)
{
    check_box(box, 12);
    if (kappa1 == 0 || kappa2 == 0 || kappa1 > 12 || kappa2 > 12)
        throw std::invalid_argument("oracle limited to desk scale");
    const i64 b = box;
    const Rat r2 = radius * radius;

    // every box vector spanning a line, one sign representative each
    std::vector<std::array<i64, 3>> pts;
    for (i64 x = -b; x <= b; ++x)
        for (i64 y = -b; y <= b; ++y)
            for (i64 z = -b; z <= b; ++z)
                if (canonical3({x, y, z}))
                    pts.push_back({x, y, z});

    // With unit determinant the height test reduces to an exact integer
    // comparison; at kappa = (1,1) it is np * wp <= R^2.
    Int r2_floor_int = r2.get_num() / r2.get_den();
    const bool unit_kappa = (kappa1 == 1 && kappa2 == 1) && r2_floor_int.fits_slong_p();
    const i64 r2_floor = unit_kappa ? r2_floor_int.get_si() : 0;

    // exact test (Ht1^2)^k1 (Ht2^2)^k2 <= R^2 from the raw definitions
    auto height_ok = [&](const std::array<i64, 3>& u1, const std::array<i64, 3>& u2,
                         const std::array<i64, 3>& u3) {
        auto nrm64 = [](const std::array<i64, 3>& u) {
            return u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
        };
        auto wedge64 = [](const std::array<i64, 3>& u, const std::array<i64, 3>& w) {
            i64 p0 = u[1] * w[2] - u[2] * w[1];
            i64 p1 = u[2] * w[0] - u[0] * w[2];
            i64 p2 = u[0] * w[1] - u[1] * w[0];
            return p0 * p0 + p1 * p1 + p2 * p2;
        };
        __int128 np = (__int128)nrm64(u1) * nrm64(u2) * nrm64(u3);
        __int128 wp = (__int128)wedge64(u1, u2) * wedge64(u1, u3) * wedge64(u2, u3);
        if (unit_kappa)
            return np * wp <= (__int128)r2_floor;
        Int npz{(long)np};
        Int wpz{(long)wp}; // < 2^63 at desk-scale boxes
        // Ht1^2 = np^2/wp and Ht2^2 = wp^2/np since |det| = 1
        Int num = pow_int(npz * npz, kappa1) * pow_int(wpz * wpz, kappa2);
        Int den = pow_int(wpz, kappa1) * pow_int(npz, kappa2);
        return height_leq(num, den, r2);
    };

    auto det3 = [](const std::array<i64, 3>& u1, const std::array<i64, 3>& u2,
                   const std::array<i64, 3>& u3) {
        return u3[0] * (u1[1] * u2[2] - u1[2] * u2[1]) -
               u3[1] * (u1[0] * u2[2] - u1[2] * u2[0]) +
               u3[2] * (u1[0] * u2[1] - u1[1] * u2[0]);
    };

    std::vector<i64> totals(pts.size(), 0);
    parallel_parts(pts.size(), workers, [&](size_t part) {
        const auto& v1 = pts[part];
        i64 cnt = 0;
        for (const auto& v2 : pts) {
            const std::array<i64, 3> c{v1[1] * v2[2] - v1[2] * v2[1],
                                       v1[2] * v2[0] - v1[0] * v2[2],
                                       v1[0] * v2[1] - v1[1] * v2[0]};
            if (c[0] == 0 && c[1] == 0 && c[2] == 0)
                continue;
            if (b <= 5) {
                // small boxes: plain scan over the third column
                for (const auto& v3 : pts) {
                    i64 det = det3(v1, v2, v3);
                    if ((det == 1 || det == -1) && height_ok(v1, v2, v3))
                        ++cnt;
                }
                continue;
            }
            // larger boxes: walk two coordinates of the third column, pin
            // the remaining one from det = +-1, re-verify the determinant
            // from scratch before accepting
            size_t js = 0;
            if (std::llabs(c[1]) > std::llabs(c[js]))
                js = 1;
            if (std::llabs(c[2]) > std::llabs(c[js]))
                js = 2;
            size_t f0 = (js + 1) % 3, f1 = (js + 2) % 3;
            const i64 cjs = c[js];
            std::array<i64, 3> v3{};
            for (i64 t : {1LL, -1LL})
                for (i64 a = -b; a <= b; ++a) {
                    i64 rem = t - c[f0] * a + c[f1] * b; // at a2 = -b
                    for (i64 a2 = -b; a2 <= b; ++a2, rem -= c[f1]) {
                        if (rem % cjs != 0)
                            continue;
                        i64 zc = rem / cjs;
                        if (zc < -b || zc > b)
                            continue;
                        v3[f0] = a;
                        v3[f1] = a2;
                        v3[js] = zc;
                        if (!canonical3(v3))
                            continue;
                        i64 det = det3(v1, v2, v3);
                        if ((det == 1 || det == -1) && height_ok(v1, v2, v3))
                            ++cnt;
                    }
                }
        }
        totals[part] = cnt;
    });

    Int total = 0;
    for (i64 c : totals)
        total += long(c);
    return total;
}

} // namespace hc
