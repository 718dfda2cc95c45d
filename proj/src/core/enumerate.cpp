#include "enumerate.hpp"
#include "pool.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <cmath>
#include <numeric>
#include <sstream>

namespace hc {

namespace {

using i64 = long long;
using i128 = __int128;

i64 isqrt64(i64 x)
{
    if (x < 0)
        return -1;
    i64 r = (i64)std::sqrt((double)x);
    while (r > 0 && r * r > x)
        --r;
    while ((r + 1) * (r + 1) <= x)
        ++r;
    return r;
}

// floor(R^2) as int64, guarded to the range the int64 loops can carry
i64 floor_radius_sq(const Rat& radius, i64 cap = 1'000'000'000'000LL)
{
    if (radius <= 0)
        throw std::invalid_argument("radius must be positive");
    Rat r2 = radius * radius;
    Int n = r2.get_num() / r2.get_den();
    if (!n.fits_slong_p() || n.get_si() > cap)
        throw std::invalid_argument("radius exceeds the desk-scale enumeration range");
    return n.get_si();
}

// largest m >= 0 with m^e <= n
i64 iroot64(i64 n, unsigned e)
{
    if (n < 0)
        return -1;
    if (e == 1)
        return n;
    i64 m = (i64)std::pow((double)n, 1.0 / e) + 1;
    auto pow_le = [&](i64 b) {
        i128 p = 1;
        for (unsigned i = 0; i < e; ++i) {
            p *= b;
            if (p > (i128)n)
                return false;
        }
        return true;
    };
    while (m > 0 && !pow_le(m))
        --m;
    while (pow_le(m + 1))
        ++m;
    return m;
}

// b^e, or cap+1 if it exceeds cap
i128 pow_capped(i64 b, unsigned e, i128 cap)
{
    i128 p = 1;
    for (unsigned i = 0; i < e; ++i) {
        p *= b;
        if (p > cap)
            return cap + 1;
    }
    return p;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

struct PartAcc {
    i64 count = 0;
    double wsum = 0.0;
    i64 scanned = 0;
    std::string stream;
};

CountResult reduce_parts(const std::vector<PartAcc>& parts, const PointSink& sink)
{
    CountResult res;
    i64 count = 0, scanned = 0;
    for (const auto& p : parts) { // fixed order: totals independent of workers
        count += p.count;
        res.weighted_sum += p.wsum;
        scanned += p.scanned;
    }
    res.count = Int((long)count);
    res.points_scanned = scanned;
    if (sink)
        for (const auto& p : parts)
            if (!p.stream.empty()) {
                std::istringstream in(p.stream);
                std::string line;
                while (std::getline(in, line))
                    sink(line);
            }
    return res;
}

std::string json_cols(const std::vector<std::vector<i64>>& cols, const std::string& ht_sq)
{
    std::ostringstream os;
    os << "{\"cols\":[";
    for (size_t i = 0; i < cols.size(); ++i) {
        os << (i ? ",[" : "[");
        for (size_t j = 0; j < cols[i].size(); ++j)
            os << (j ? "," : "") << cols[i][j];
        os << "]";
    }
    os << "],\"ht_sq\":\"" << ht_sq << "\"}";
    return os.str();
}

bool sign_canonical64(const i64* v, size_t dim)
{
    for (size_t i = 0; i < dim; ++i) {
        if (v[i] != 0)
            return v[i] > 0;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Example I
// ---------------------------------------------------------------------------

struct Ex1Col {
    std::array<i64, 4> c;
    i64 norm;
    std::array<i64, 4> q2c; // Q2 * c, for fast bilinear checks
};

std::array<i64, 16> q2_i64(const QuadricPairInstance& inst)
{
    std::array<i64, 16> q{};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            const Int& e = inst.q2()[i][j];
            if (!e.fits_slong_p() || abs(e) > 1000)
                throw std::invalid_argument("instance entries exceed the int64 fast path");
            q[i * 4 + j] = e.get_si();
        }
    return q;
}

// All columns c with Q2(c) = q and |c|^2 <= max_norm, found by iterating
// three coordinates and solving the remaining one.
std::vector<Ex1Col> ex1_columns(const std::array<i64, 16>& q2, i64 qval, i64 max_norm)
{
    std::vector<Ex1Col> out;
    if (max_norm < 0)
        return out;
    i64 bound = isqrt64(max_norm);

    // solve index: prefer the smallest nonzero diagonal entry, otherwise
    // the equation is linear in any coordinate
    size_t k = 4;
    for (size_t i = 0; i < 4; ++i)
        if (q2[i * 4 + i] != 0 &&
            (k == 4 || std::llabs(q2[i * 4 + i]) < std::llabs(q2[k * 4 + k])))
            k = i;
    if (k == 4)
        k = 3;

    std::array<size_t, 3> free{};
    for (size_t i = 0, j = 0; i < 4; ++i)
        if (i != k)
            free[j++] = i;

    std::array<i64, 4> x{};
    auto push = [&](i64 xk) {
        x[k] = xk;
        i64 nrm = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
        if (nrm > max_norm)
            return;
        Ex1Col col;
        col.c = x;
        col.norm = nrm;
        for (size_t i = 0; i < 4; ++i) {
            i64 s = 0;
            for (size_t j = 0; j < 4; ++j)
                s += q2[i * 4 + j] * x[j];
            col.q2c[i] = s;
        }
        out.push_back(col);
    };

    auto solve = [&]() {
        i64 a = q2[k * 4 + k];
        i64 b = 0;
        i64 cc = -qval;
        for (size_t j = 0; j < 4; ++j)
            if (j != k)
                b += 2 * q2[k * 4 + j] * x[j];
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j)
                if (i != k && j != k)
                    cc += q2[i * 4 + j] * x[i] * x[j];
        if (a == 0) {
            if (b == 0) {
                if (cc == 0)
                    for (i64 xk = -bound; xk <= bound; ++xk)
                        push(xk);
                return;
            }
            if (cc % b == 0)
                push(-cc / b);
            return;
        }
        i128 disc = (i128)b * b - (i128)4 * a * cc;
        if (disc < 0)
            return;
        i64 s = (i64)sqrtl((long double)disc);
        while (s > 0 && (i128)s * s > disc)
            --s;
        while ((i128)(s + 1) * (s + 1) <= disc)
            ++s;
        if ((i128)s * s != disc)
            return;
        for (i64 root : {s, -s}) {
            i64 num = -b + root;
            if (num % (2 * a) == 0)
                push(num / (2 * a));
            if (s == 0)
                break;
        }
    };

    for (i64 a0 = -bound; a0 <= bound; ++a0) {
        x[free[0]] = a0;
        i64 n0 = a0 * a0;
        i64 b1 = isqrt64(max_norm - n0);
        for (i64 a1 = -b1; a1 <= b1; ++a1) {
            x[free[1]] = a1;
            i64 n1 = n0 + a1 * a1;
            i64 b2 = isqrt64(max_norm - n1);
            for (i64 a2 = -b2; a2 <= b2; ++a2) {
                x[free[2]] = a2;
                solve();
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Ex1Col& a, const Ex1Col& b) {
        return a.norm < b.norm || (a.norm == b.norm && a.c < b.c);
    });
    return out;
}

} // namespace

CountResult enumerate_ex1(const QuadricPairInstance& inst, const Rat& radius,
                          unsigned workers, const PointSink& sink)
{
    Timer timer;
    i64 n2 = floor_radius_sq(radius, 4'000'000'000'000LL);
    auto q2 = q2_i64(inst);
    i64 q11 = inst.q1()[0][0].get_si();
    i64 q22 = inst.q1()[1][1].get_si();
    i64 q12 = inst.q1()[0][1].get_si();

    // both columns are nonzero (Q1 is nondegenerate), so each gets n2 - 1
    std::vector<Ex1Col> left = ex1_columns(q2, q11, n2 - 1);
    std::vector<Ex1Col> right = ex1_columns(q2, q22, n2 - 1);

    std::vector<PartAcc> parts(left.size());
    parallel_parts(left.size(), workers, [&](size_t p) {
        const Ex1Col& c1 = left[p];
        PartAcc& acc = parts[p];
        for (const Ex1Col& c2 : right) {
            if (c1.norm + c2.norm > n2)
                break; // right is sorted by norm
            ++acc.scanned;
            i64 bil = c1.c[0] * c2.q2c[0] + c1.c[1] * c2.q2c[1] +
                      c1.c[2] * c2.q2c[2] + c1.c[3] * c2.q2c[3];
            if (bil != q12)
                continue;
            ++acc.count;
            if (sink)
                acc.stream += json_cols({{c1.c.begin(), c1.c.end()},
                                         {c2.c.begin(), c2.c.end()}},
                                        std::to_string(c1.norm + c2.norm)) + "\n";
        }
    });

    CountResult res = reduce_parts(parts, sink);
    res.points_scanned += i64(left.size()) + i64(right.size());
    res.seconds = timer.elapsed();
    return res;
}

// ---------------------------------------------------------------------------
// Example II
// ---------------------------------------------------------------------------

namespace {

// Iterates x[idx..] over the ball of squared radius `budget`, reporting the
// full squared norm of the tail at the leaves.
template <typename F>
void ball_iterate(std::vector<i64>& x, size_t idx, i64 budget, i64 used, const F& fn)
{
    if (idx == x.size()) {
        fn(used);
        return;
    }
    i64 b = isqrt64(budget);
    for (i64 t = -b; t <= b; ++t) {
        x[idx] = t;
        ball_iterate(x, idx + 1, budget - t * t, used + t * t, fn);
    }
}

// Arithmetic of a*x = r (mod m), m >= 1: gcd, stride and the inverse used
// to place the solution progression.
struct Congruence {
    i64 modulus = 1;
    i64 g = 1;       // gcd(a, modulus)
    i64 stride = 1;  // modulus / g
    i64 inv = 0;     // inverse of a/g modulo stride

    Congruence(i64 a, i64 m) : modulus(m)
    {
        a %= m;
        if (a < 0)
            a += m;
        i64 r0 = m, r1 = a, x0 = 0, x1 = 1;
        while (r1 != 0) {
            i64 q = r0 / r1;
            r0 -= q * r1;
            std::swap(r0, r1);
            x0 -= q * x1;
            std::swap(x0, x1);
        }
        g = r0;
        stride = m / g;
        inv = x0 % stride;
        if (inv < 0)
            inv += stride;
    }

    // first solution of a*x = r (mod modulus) that is >= lo, or lo - 1 - ...
    // (callers compare against their upper bound)
    bool first_at_least(i64 r, i64 lo, i64& x) const
    {
        r %= modulus;
        if (r < 0)
            r += modulus;
        if (r % g != 0)
            return false;
        i64 base = (i64)(((__int128)inv * ((r / g) % stride)) % stride);
        x = lo + ((base - lo) % stride + stride) % stride;
        return true;
    }
};

// Enumerates every x in the ball |x|^2 <= cap with <x, u> = +-1; the
// coordinate of u with the largest entry is pinned, the last free
// coordinate walks the residue class that keeps it integral.
template <typename Accept>
void scan_pairing_solutions(const std::vector<i64>& u, i64 cap, i64& scanned,
                            const Accept& accept)
{
    const size_t dim = u.size();
    size_t js = 0;
    for (size_t i = 1; i < dim; ++i)
        if (std::llabs(u[i]) > std::llabs(u[js]))
            js = i;
    const i64 ujs = u[js];
    const i64 aujs = std::llabs(ujs);

    std::vector<size_t> free;
    free.reserve(dim - 1);
    for (size_t i = 0; i < dim; ++i)
        if (i != js)
            free.push_back(i);
    const size_t leaf = free.back();
    const Congruence cong(u[leaf], aujs);

    std::vector<i64> x(dim, 0);
    // recursion over the free coordinates before the leaf
    auto rec = [&](auto&& self, size_t level, i64 norm_left, i64 pairing) -> void {
        if (level + 1 == free.size()) {
            const i64 b = isqrt64(norm_left);
            const i64 used = cap - norm_left;
            const i64 uf = u[leaf];
            for (i64 target : {1LL, -1LL}) {
                i64 t;
                if (!cong.first_at_least(target - pairing, -b, t))
                    continue;
                for (; t <= b; t += cong.stride) {
                    ++scanned;
                    i64 pj = (target - pairing - uf * t) / ujs;
                    i64 nx = used + t * t + pj * pj;
                    if (nx > cap)
                        continue;
                    x[leaf] = t;
                    x[js] = pj;
                    accept(x, nx);
                }
            }
            return;
        }
        const size_t fi = free[level];
        const i64 b = isqrt64(norm_left);
        for (i64 t = -b; t <= b; ++t) {
            x[fi] = t;
            self(self, level + 1, norm_left - t * t, pairing + u[fi] * t);
        }
    };
    rec(rec, 0, cap, 0);
}

} // namespace

CountResult enumerate_ex2(unsigned n, unsigned lambda1, unsigned lambda2,
                          const Rat& radius, unsigned workers, const PointSink& sink)
{
    if (n < 1 || n > 7)
        throw std::invalid_argument("n must be in 1..7");
    if (lambda1 == 0 || lambda2 == 0 || lambda1 > 16 || lambda2 > 16)
        throw std::invalid_argument("exponents must be in 1..16");
    Timer timer;
    const size_t dim = n + 1;
    const i64 n2 = floor_radius_sq(radius);
    const i64 mv = iroot64(n2, lambda1); // |v|^2 <= mv throughout
    if (mv < 1) {
        CountResult res;
        res.seconds = timer.elapsed();
        return res;
    }

    // The scan splits at |v|^2 = split2.  Small v iterate directly with the
    // pairing solved inside the w ball; the thin tail of large v is reached
    // from the (much smaller) w ball with the roles of v and w swapped.
    const i64 a_balance = std::max<i64>(1, iroot64(n2, 3 * lambda1));
    const i64 split2 = std::min(mv, a_balance * a_balance);
    const i64 bv_small = isqrt64(split2);

    // large-v regime: covectors small enough to pair with some |v|^2 > split2
    std::vector<std::vector<i64>> ws;
    if (split2 < mv) {
        i64 wcap = 0; // largest |w|^2 compatible with |v|^2 >= split2 + 1
        {
            i128 hv = pow_capped(split2 + 1, lambda1, n2);
            if (hv <= n2)
                wcap = iroot64(i64((i128)n2 / hv), lambda2);
        }
        std::vector<i64> w(dim);
        std::function<void(size_t, i64)> gen = [&](size_t idx, i64 left) {
            if (idx == dim) {
                if (sign_canonical64(w.data(), dim) &&
                    std::any_of(w.begin(), w.end(), [](i64 c) { return c != 0; }))
                    ws.push_back(w);
                return;
            }
            i64 b = isqrt64(left);
            for (i64 t = -b; t <= b; ++t) {
                w[idx] = t;
                gen(idx + 1, left - t * t);
            }
        };
        gen(0, wcap);
    }

    const size_t small_parts = size_t(2 * bv_small + 1);
    std::vector<PartAcc> parts(small_parts + ws.size());
    parallel_parts(parts.size(), workers, [&](size_t p) {
        PartAcc& acc = parts[p];
        if (p < small_parts) {
            // small-v regime: v outer, w solved from the pairing
            std::vector<i64> v(dim);
            v[0] = i64(p) - bv_small;
            const i64 n0 = v[0] * v[0];
            ball_iterate(v, 1, split2 - n0, n0, [&](i64 nv) {
                if (nv == 0)
                    return;
                i128 h1 = pow_capped(nv, lambda1, n2);
                if (h1 > n2)
                    return;
                i64 kw = iroot64(i64((i128)n2 / h1), lambda2);
                while (kw > 0 && h1 * pow_capped(kw, lambda2, n2) > (i128)n2)
                    --kw;
                if (kw < 1)
                    return;
                scan_pairing_solutions(v, kw, acc.scanned,
                                       [&](const std::vector<i64>& w, i64 nw) {
                    if (!sign_canonical64(w.data(), dim))
                        return;
                    ++acc.count;
                    if (sink) {
                        i128 h = h1 * pow_capped(nw, lambda2, n2);
                        acc.stream += json_cols({v, w}, std::to_string((i64)h)) + "\n";
                    }
                });
            });
            return;
        }
        // large-v regime: canonical w outer, v solved from the pairing
        const std::vector<i64>& w = ws[p - small_parts];
        i64 nw = 0;
        for (i64 c : w)
            nw += c * c;
        i128 h2 = pow_capped(nw, lambda2, n2);
        if (h2 > n2)
            return;
        i64 kv = iroot64(i64((i128)n2 / h2), lambda1);
        while (kv > 0 && h2 * pow_capped(kv, lambda1, n2) > (i128)n2)
            --kv;
        if (kv <= split2)
            return;
        scan_pairing_solutions(w, kv, acc.scanned,
                               [&](const std::vector<i64>& v, i64 nv) {
            if (nv <= split2)
                return; // the small-v regime already counted this pair
            ++acc.count;
            if (sink) {
                i128 h = pow_capped(nv, lambda1, n2) * h2;
                acc.stream += json_cols({v, w}, std::to_string((i64)h)) + "\n";
            }
        });
    });

    CountResult res = reduce_parts(parts, sink);
    res.seconds = timer.elapsed();
    return res;
}

// ---------------------------------------------------------------------------
// Example III
// ---------------------------------------------------------------------------

namespace {

struct Ex3Cand {
    std::array<i64, 3> v;
    i64 norm;
};

// canonical (first nonzero positive) primitive vectors with |v|^2 <= max_norm
std::vector<Ex3Cand> ex3_candidates(i64 max_norm)
{
    std::vector<Ex3Cand> out;
    i64 b = isqrt64(max_norm);
    for (i64 x = 0; x <= b; ++x) {
        i64 ylo = (x == 0) ? 0 : -b;
        for (i64 y = ylo; y <= b; ++y) {
            i64 zlo = (x == 0 && y == 0) ? 1 : -b;
            for (i64 z = zlo; z <= b; ++z) {
                i64 nrm = x * x + y * y + z * z;
                if (nrm == 0 || nrm > max_norm)
                    continue;
                if (x == 0 && y == 0 && z < 0)
                    continue;
                if (x == 0 && y < 0)
                    continue;
                if (std::gcd(std::gcd(std::llabs(x), std::llabs(y)), std::llabs(z)) != 1)
                    continue;
                out.push_back({{x, y, z}, nrm});
            }
        }
    }
    return out;
}

} // namespace

CountResult enumerate_ex3(unsigned kappa1, unsigned kappa2, const Rat& radius,
                          double eta, unsigned workers, const PointSink& sink)
{
    if (kappa1 == 0 || kappa2 == 0 || kappa1 > 16 || kappa2 > 16)
        throw std::invalid_argument("exponents must be in 1..16");
    if (!(eta > 0.0) || eta > 1.0)
        throw std::invalid_argument("eta must lie in (0,1]");
    Timer timer;
    unsigned kmin = std::min(kappa1, kappa2);
    i64 n2 = floor_radius_sq(radius);
    // every |v_i|^2, and the product of all norms and wedge norms, stays
    // within this bound for points of height <= R
    i64 max_prod = iroot64(n2, kmin);
    if (max_prod < 1) {
        CountResult res;
        res.seconds = timer.elapsed();
        return res;
    }

    std::vector<Ex3Cand> cands = ex3_candidates(max_prod);
    std::vector<PartAcc> parts(cands.size());
    parallel_parts(cands.size(), workers, [&](size_t p) {
        PartAcc& acc = parts[p];
        const Ex3Cand& c1 = cands[p];
        for (const Ex3Cand& c2 : cands) {
            i64 cx = c1.v[1] * c2.v[2] - c1.v[2] * c2.v[1];
            i64 cy = c1.v[2] * c2.v[0] - c1.v[0] * c2.v[2];
            i64 cz = c1.v[0] * c2.v[1] - c1.v[1] * c2.v[0];
            i64 w12 = cx * cx + cy * cy + cz * cz;
            if (w12 == 0)
                continue;
            i128 prod = (i128)c1.norm * c2.norm * w12;
            if (prod > max_prod)
                continue;
            i64 b3 = i64((i128)max_prod / prod); // |v3|^2 bound
            std::array<i64, 3> c{cx, cy, cz};
            size_t js = 0;
            if (std::llabs(c[1]) > std::llabs(c[js]))
                js = 1;
            if (std::llabs(c[2]) > std::llabs(c[js]))
                js = 2;
            size_t f0 = (js + 1) % 3, f1 = (js + 2) % 3;
            i64 bf = isqrt64(b3);
            std::array<i64, 3> v3{};
            for (i64 a = -bf; a <= bf; ++a) {
                i64 bb = isqrt64(b3 - a * a);
                for (i64 b = -bb; b <= bb; ++b) {
                    ++acc.scanned;
                    i64 partial = c[f0] * a + c[f1] * b;
                    for (i64 t : {1LL, -1LL}) {
                        i64 s = t - partial;
                        if (s % c[js] != 0)
                            continue;
                        i64 zc = s / c[js];
                        if (a * a + b * b + zc * zc > b3)
                            continue;
                        v3[f0] = a;
                        v3[f1] = b;
                        v3[js] = zc;
                        if (!sign_canonical64(v3.data(), 3))
                            continue;
                        auto iv = [](const i64* a) {
                            return IntVector(std::vector<Int>{
                                Int((long)a[0]), Int((long)a[1]), Int((long)a[2])});
                        };
                        TriangleTriple tt(iv(c1.v.data()), iv(c2.v.data()),
                                          iv(v3.data()));
                        if (!ht_ex3_leq(tt, kappa1, kappa2, radius))
                            continue;
                        ++acc.count;
                        acc.wsum += weight(tt, eta);
                        if (sink) {
                            Rat h = pow_rat(ht1_sq(tt), kappa1) * pow_rat(ht2_sq(tt), kappa2);
                            acc.stream += json_cols({{c1.v.begin(), c1.v.end()},
                                                     {c2.v.begin(), c2.v.end()},
                                                     {v3.begin(), v3.end()}},
                                                    rat_str(h)) + "\n";
                        }
                    }
                }
            }
        }
    });

    CountResult res = reduce_parts(parts, sink);
    res.seconds = timer.elapsed();
    return res;
}

} // namespace hc
